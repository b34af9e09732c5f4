#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nestkg {

// Parses a flat "key = value" config file. '#' starts a comment; blank lines
// are skipped. Later duplicates override earlier ones at lookup time.
std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path);

std::string trim_copy(const std::string& s);

}  // namespace nestkg
