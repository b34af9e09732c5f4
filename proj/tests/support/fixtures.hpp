#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace testsupport {

// Scratch directory removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    std::mt19937_64 rng(std::random_device{}());
    path = base / ("nestkg_test_" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name, const std::string& contents) const {
    auto p = path / name;
    std::ofstream out(p);
    out << contents;
    return p.string();
  }
  std::string name(const std::string& n) const { return (path / n).string(); }
};

}  // namespace testsupport
