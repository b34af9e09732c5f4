#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestkg/embedding.hpp"
#include "nestkg/graph.hpp"

namespace nestkg {

// Checkpoint layout (little-endian, version 1):
//   magic "NKGEMB", u16 version, u8 scalar size, u8 algebra, u64 d,
//   three symbol tables (u64 count, then u32-length-prefixed names),
//   then the raw channel arrays: entities, atomic relations (rot, trans),
//   nested relations (9 rot cells, 3 trans cells), channels s,x,y,z each.
struct CheckpointTables {
  std::vector<std::string> entities;
  std::vector<std::string> atomic_relations;
  std::vector<std::string> nested_relations;
};

template <typename Scalar>
struct LoadedCheckpoint {
  EmbeddingStore<Scalar> store;
  CheckpointTables tables;
};

namespace ckpt_detail {

constexpr char kMagic[6] = {'N', 'K', 'G', 'E', 'M', 'B'};
constexpr std::uint16_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("checkpoint truncated");
  return v;
}

inline void write_string(std::ostream& out, const std::string& s) {
  write_pod(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream& in) {
  auto len = read_pod<std::uint32_t>(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw std::runtime_error("checkpoint truncated");
  return s;
}

inline void write_table(std::ostream& out, const std::vector<std::string>& names) {
  write_pod(out, static_cast<std::uint64_t>(names.size()));
  for (const auto& n : names) write_string(out, n);
}

inline std::vector<std::string> read_table(std::istream& in) {
  auto count = read_pod<std::uint64_t>(in);
  std::vector<std::string> names(count);
  for (auto& n : names) n = read_string(in);
  return names;
}

template <typename Scalar>
void write_h4(std::ostream& out, const Hyper4<Scalar>& v) {
  for (int c = 0; c < 4; ++c)
    out.write(reinterpret_cast<const char*>(v.ch[c].data()),
              static_cast<std::streamsize>(sizeof(Scalar) * v.ch[c].size()));
}

template <typename FileScalar, typename Scalar>
void read_h4(std::istream& in, Hyper4<Scalar>& v, Eigen::Index d) {
  v.resize(d);
  std::vector<FileScalar> buf(static_cast<size_t>(d));
  for (int c = 0; c < 4; ++c) {
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(sizeof(FileScalar) * buf.size()));
    if (!in) throw std::runtime_error("checkpoint truncated");
    for (Eigen::Index e = 0; e < d; ++e) v.ch[c](e) = static_cast<Scalar>(buf[e]);
  }
}

}  // namespace ckpt_detail

template <typename Scalar>
void save_checkpoint(const std::string& path, const EmbeddingStore<Scalar>& store,
                     const CheckpointTables& tables) {
  using namespace ckpt_detail;
  if (static_cast<int>(tables.entities.size()) != static_cast<int>(store.entities.size()) ||
      static_cast<int>(tables.atomic_relations.size()) !=
          static_cast<int>(store.atomic_rels.size()) ||
      static_cast<int>(tables.nested_relations.size()) !=
          static_cast<int>(store.nested_rels.size()))
    throw std::invalid_argument("symbol table sizes do not match the store");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out.write(kMagic, sizeof(kMagic));
  write_pod(out, kVersion);
  write_pod(out, static_cast<std::uint8_t>(sizeof(Scalar)));
  write_pod(out, static_cast<std::uint8_t>(store.alg));
  write_pod(out, static_cast<std::uint64_t>(store.d));
  write_table(out, tables.entities);
  write_table(out, tables.atomic_relations);
  write_table(out, tables.nested_relations);
  for (const auto& e : store.entities) write_h4(out, e);
  for (const auto& r : store.atomic_rels) {
    write_h4(out, r.rot);
    write_h4(out, r.trans);
  }
  for (const auto& nr : store.nested_rels) {
    for (const auto& cell : nr.rot) write_h4(out, cell);
    for (const auto& cell : nr.trans) write_h4(out, cell);
  }
  if (!out) throw std::runtime_error("short write on checkpoint: " + path);
}

template <typename Scalar>
void save_checkpoint(const std::string& path, const EmbeddingStore<Scalar>& store,
                     const NestedGraph& g) {
  save_checkpoint(path, store,
                  CheckpointTables{g.entities.names, g.atomic_relations.names,
                                   g.nested_relations.names});
}

// Loads a checkpoint into Scalar precision. Accepts files written in either
// precision; float values widen exactly, doubles narrow only when Scalar is
// float (lossy, used only for explicit f32 workflows).
template <typename Scalar>
LoadedCheckpoint<Scalar> load_checkpoint(const std::string& path) {
  using namespace ckpt_detail;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
  char magic[6];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not a checkpoint file: " + path);
  auto version = read_pod<std::uint16_t>(in);
  if (version != kVersion)
    throw std::runtime_error("unsupported checkpoint version " + std::to_string(version));
  auto scalar_size = read_pod<std::uint8_t>(in);
  if (scalar_size != 4 && scalar_size != 8)
    throw std::runtime_error("unsupported checkpoint scalar size");
  auto alg = static_cast<Algebra>(read_pod<std::uint8_t>(in));
  auto d = static_cast<Eigen::Index>(read_pod<std::uint64_t>(in));

  LoadedCheckpoint<Scalar> ck;
  ck.store.alg = alg;
  ck.store.d = d;
  ck.tables.entities = read_table(in);
  ck.tables.atomic_relations = read_table(in);
  ck.tables.nested_relations = read_table(in);

  auto read_any = [&](Hyper4<Scalar>& v) {
    if (scalar_size == 8)
      read_h4<double>(in, v, d);
    else
      read_h4<float>(in, v, d);
  };
  ck.store.entities.resize(ck.tables.entities.size());
  for (auto& e : ck.store.entities) read_any(e);
  ck.store.atomic_rels.resize(ck.tables.atomic_relations.size());
  for (auto& r : ck.store.atomic_rels) {
    read_any(r.rot);
    read_any(r.trans);
  }
  ck.store.nested_rels.resize(ck.tables.nested_relations.size());
  for (auto& nr : ck.store.nested_rels) {
    for (auto& cell : nr.rot) read_any(cell);
    for (auto& cell : nr.trans) read_any(cell);
  }
  return ck;
}

// A checkpoint only evaluates against the graph it was trained on.
inline void require_tables_match(const CheckpointTables& tables, const NestedGraph& g) {
  if (tables.entities != g.entities.names ||
      tables.atomic_relations != g.atomic_relations.names ||
      tables.nested_relations != g.nested_relations.names)
    throw std::runtime_error("checkpoint symbol tables do not match the loaded graph");
}

}  // namespace nestkg
