#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace powerclaw {

/// Built-in list of group specs used as the domain of the sweep checks.
const std::vector<std::string>& default_catalog();

/// One spec per line; blank lines and "#" comments skipped. Every line is
/// parsed; a bad line raises std::invalid_argument naming its line number.
std::vector<std::string> load_catalog(const std::filesystem::path& path);
std::vector<std::string> parse_catalog(const std::string& text);

}  // namespace powerclaw
