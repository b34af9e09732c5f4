#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace nestkg {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense 0-based ids with a name <-> index mapping.
struct SymbolTable {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  int add(const std::string& name);
  int at(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;
  bool contains(const std::string& name) const { return index.count(name) > 0; }
  int size() const { return static_cast<int>(names.size()); }
};

struct AtomicTriple {
  int h = 0;
  int r = 0;
  int t = 0;
  friend bool operator==(const AtomicTriple&, const AtomicTriple&) = default;
};

struct NestedTriple {
  AtomicTriple head;
  int rel = 0;
  AtomicTriple tail;
  friend bool operator==(const NestedTriple&, const NestedTriple&) = default;
};

struct AtomicTripleHash {
  std::size_t operator()(const AtomicTriple& a) const {
    std::uint64_t x = static_cast<std::uint32_t>(a.h);
    x = x * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(a.r);
    x = x * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(a.t);
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

struct NestedTripleHash {
  std::size_t operator()(const NestedTriple& n) const {
    AtomicTripleHash h;
    std::uint64_t x = h(n.head);
    x = x * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(n.rel);
    x = x * 0x9e3779b97f4a7c15ULL + h(n.tail);
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

enum class Split { Train = 0, Valid = 1, Test = 2 };
constexpr std::array<Split, 3> kAllSplits{Split::Train, Split::Valid, Split::Test};

using AtomicSet = std::unordered_set<AtomicTriple, AtomicTripleHash>;
using NestedSet = std::unordered_set<NestedTriple, NestedTripleHash>;

// In-memory nested factual KG: atomic triples, nested triples (facts about
// facts), optional augmented triples, and the derived indexes used by
// negative sampling and filtered ranking. Immutable after load.
struct NestedGraph {
  SymbolTable entities;
  SymbolTable atomic_relations;
  SymbolTable nested_relations;

  std::array<std::vector<AtomicTriple>, 3> atomic;  // train/valid/test
  std::array<std::vector<NestedTriple>, 3> nested;
  std::vector<AtomicTriple> augmented;

  // Deduplicated union of all atomic triples appearing on either side of any
  // nested triple, in first-appearance order over train, valid, test.
  std::vector<AtomicTriple> involved;
  std::unordered_map<AtomicTriple, int, AtomicTripleHash> involved_index;

  AtomicSet atomic_known;     // train + valid + test (excludes augmented)
  AtomicSet augmented_known;  // atomic_known + augmented
  NestedSet nested_known;     // all nested splits

  const std::vector<AtomicTriple>& atomic_split(Split s) const {
    return atomic[static_cast<int>(s)];
  }
  const std::vector<NestedTriple>& nested_split(Split s) const {
    return nested[static_cast<int>(s)];
  }
  std::vector<AtomicTriple>& atomic_split(Split s) { return atomic[static_cast<int>(s)]; }
  std::vector<NestedTriple>& nested_split(Split s) { return nested[static_cast<int>(s)]; }

  // Rebuilds involved triples and membership sets from the split lists.
  void rebuild_indexes();
};

struct GraphPaths {
  std::array<std::string, 3> atomic;  // train, valid, test
  std::array<std::string, 3> nested;
  std::optional<std::string> augmented;
};

// Loads a nested KG from whitespace-separated text files: 3 fields per atomic
// line (head rel tail), 7 per nested line (h1 r1 t1 rel h2 r2 t2), 3 per
// augmented line. Duplicate records are dropped (first split wins). With
// strict_names, nested/augmented files may not introduce names absent from
// the atomic files, and nested sides must be triples of the atomic union.
NestedGraph load_graph(const GraphPaths& paths, bool strict_names = false);

// Length-2 random walks over the atomic train split. Emits deduplicated
// (e1, r1::r2, e3) triples with composite relation ids appended to
// g.atomic_relations. Deterministic for a fixed seed.
std::vector<AtomicTriple> augment_by_random_walk(NestedGraph& g, int walk_length,
                                                 int samples_per_entity, std::uint64_t seed);

std::string format_atomic(const NestedGraph& g, const AtomicTriple& t);
std::string format_nested(const NestedGraph& g, const NestedTriple& n);

void write_atomic_file(const std::string& path, const NestedGraph& g,
                       const std::vector<AtomicTriple>& triples);
void write_nested_file(const std::string& path, const NestedGraph& g,
                       const std::vector<NestedTriple>& triples);

// Shuffles the lines of a record file and writes an 8:1:1 train/valid/test split.
void split_lines_file(const std::string& in_path, const std::array<std::string, 3>& out_paths,
                      std::uint64_t seed);

}  // namespace nestkg
