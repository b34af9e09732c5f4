#include "nestkg/manifest.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nestkg {

namespace {

inline std::uint32_t rotl(std::uint32_t v, int n) { return (v << n) | (v >> (32 - n)); }

struct Sha1 {
  std::array<std::uint32_t, 5> h{0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
  std::array<std::uint8_t, 64> block{};
  std::size_t block_len = 0;
  std::uint64_t total_bits = 0;

  void process(const std::uint8_t* p) {
    std::uint32_t w[80];
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
             (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 80; ++i) w[i] = rotl(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | ((~b) & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      std::uint32_t tmp = rotl(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rotl(b, 30);
      b = a;
      a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    total_bits += std::uint64_t(len) * 8;
    while (len > 0) {
      std::size_t take = std::min(len, block.size() - block_len);
      std::memcpy(block.data() + block_len, p, take);
      block_len += take;
      p += take;
      len -= take;
      if (block_len == block.size()) {
        process(block.data());
        block_len = 0;
      }
    }
  }

  std::string finish() {
    std::uint64_t bits = total_bits;
    std::uint8_t pad = 0x80;
    update(&pad, 1);
    std::uint8_t zero = 0;
    while (block_len != 56) update(&zero, 1);
    std::uint8_t len_be[8];
    for (int i = 0; i < 8; ++i) len_be[i] = std::uint8_t(bits >> (56 - 8 * i));
    update(len_be, 8);
    std::ostringstream out;
    out << std::hex;
    for (std::uint32_t v : h)
      for (int i = 3; i >= 0; --i) {
        out.width(2);
        out.fill('0');
        out << ((v >> (8 * i)) & 0xFFu);
      }
    return out.str();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string sha1_hex(const void* data, std::size_t len) {
  Sha1 s;
  s.update(data, len);
  return s.finish();
}

std::string git_blob_hash(const std::string& path) {
  std::string contents = read_file(path);
  std::string header = "blob " + std::to_string(contents.size());
  Sha1 s;
  s.update(header.data(), header.size() + 1);  // include the trailing NUL
  s.update(contents.data(), contents.size());
  return s.finish();
}

void write_manifest(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& resolved_config,
                    const std::vector<std::string>& input_files) {
  nlohmann::json j;
  auto& cfg = j["config"] = nlohmann::json::object();
  for (const auto& [k, v] : resolved_config) cfg[k] = v;
  auto& inputs = j["inputs"] = nlohmann::json::object();
  for (const auto& f : input_files) inputs[f] = git_blob_hash(f);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace nestkg
