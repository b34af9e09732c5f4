#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nestkg {

std::string sha1_hex(const void* data, std::size_t len);

// Hash of a file's contents with the git blob convention:
// sha1("blob <size>\0" + contents).
std::string git_blob_hash(const std::string& path);

// Writes a JSON manifest with the resolved configuration and a content hash
// per input file.
void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& resolved_config,
                    const std::vector<std::string>& input_files);

}  // namespace nestkg
