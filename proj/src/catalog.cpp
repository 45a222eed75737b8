#include "powerclaw/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "powerclaw/group_spec.hpp"

namespace powerclaw {

const std::vector<std::string>& default_catalog() {
  static const std::vector<std::string> specs = {
      // cyclic
      "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)", "C(9)", "C(12)", "C(16)", "C(18)", "C(20)", "C(27)",
      "C(30)", "C(36)", "C(60)", "C(64)", "C(105)", "C(210)", "C(2310)",
      // abelian, not cyclic
      "C(2)xC(2)", "C(4)xC(2)", "C(4)xC(4)", "C(2)xC(8)", "C(4)xC(8)", "C(2)xC(2)xC(2)", "C(2)xC(2)xC(3)",
      "C(3)xC(3)", "C(3)xC(9)", "C(9)xC(9)", "C(2)xC(6)", "C(6)xC(6)", "C(5)xC(5)", "C(5)xC(25)", "C(2)xC(4)xC(4)",
      "C(3)xC(3)xC(3)", "E(2,3)", "E(2,4)", "E(2,5)", "E(3,2)", "E(3,3)", "E(5,2)", "E(5,3)", "E(7,2)",
      // dihedral and other 2-groups
      "D(4)", "D(6)", "D(8)", "D(10)", "D(12)", "D(14)", "D(16)", "D(18)", "D(20)", "D(24)", "D(30)", "D(32)",
      "D(64)", "D(128)", "Q(8)", "Q(16)", "Q(32)", "Q(64)", "SD(16)", "SD(32)", "SD(64)", "Mod16", "C(2)xD(8)",
      "C(2)xQ(8)", "C(4)xD(8)", "D(8)xD(8)", "Q(8)xQ(8)", "C(2)xC(2)xD(8)", "Sz2(8)", "Sz2(32)",
      // odd p-groups
      "X(3,1)", "X(3,2)", "X(5,1)", "X(5,2)", "X(7,1)", "X(7,2)", "X(3,1)xC(3)", "X(3,2)xC(3)", "X(3,1)xC(2)",
      "Semi(9,3,4)",
      // semidirect products of cyclic groups
      "Semi(3,2,2)", "Semi(7,3,2)", "Semi(5,4,2)", "Semi(9,2,8)", "Semi(13,3,3)", "Semi(13,4,5)", "Semi(31,5,2)",
      "Semi(7,6,3)", "Semi(21,2,20)", "Semi(9,2,1)", "Semi(3,4,2)", "Semi(7,9,2)", "Semi(19,9,auto)",
      "Semi(11,5,3)", "Semi(11,10,2)", "Semi(25,4,7)", "Semi(91,6,auto)", "Semi(91,6,43)", "Semi(91,6,3)",
      "Semi(341,10,auto)", "Semi(1891,15,auto)",
      // decomposable, not nilpotent
      "C(2)xD(6)", "C(3)xD(6)", "C(5)xD(6)", "C(4)xD(6)", "D(6)xD(6)", "C(2)xD(10)", "C(2)xSemi(9,2,8)",
      "C(3)xSemi(7,3,2)", "C(2)xSemi(7,3,2)", "C(2)xSemi(5,4,2)", "C(2)xSemi(3,4,2)", "C(2)xSemi(13,4,5)",
      "C(5)xSemi(11,5,3)",
      // linear and sporadic
      "SL(2,3)", "SL(2,5)", "SL(2,7)", "SL(2,9)", "PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)",
      "PSL(2,11)", "PSL(2,13)", "PSL(2,16)", "PSL(2,17)", "PSL(2,19)", "PSL(2,23)", "PSL(2,25)", "PSL(2,27)",
      "PSL(2,29)", "PSL(2,31)", "PSL(2,32)", "PSL(2,37)", "PSL(2,49)", "PSL(2,59)", "PSL(2,64)", "PSL(3,3)",
      "PSL(3,4)", "PSU(3,3)", "M11", "AGL(3,2)", "PSL(2,4)xC(2)", "PSL(2,4)xC(3)", "PSL(2,7)xC(2)",
  };
  return specs;
}

std::vector<std::string> parse_catalog(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_group_spec(line).text());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<std::string> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace powerclaw
