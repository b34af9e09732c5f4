#include "nestkg/config.hpp"

#include <fstream>
#include <stdexcept>

namespace nestkg {

std::string trim_copy(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = trim_copy(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value' line");
    std::string key = trim_copy(body.substr(0, eq));
    std::string value = trim_copy(body.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

}  // namespace nestkg
