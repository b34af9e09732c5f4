#include "nestkg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace nestkg {

int SymbolTable::add(const std::string& name) {
  auto it = index.find(name);
  if (it != index.end()) return it->second;
  int id = static_cast<int>(names.size());
  names.push_back(name);
  index.emplace(name, id);
  return id;
}

int SymbolTable::at(const std::string& name) const {
  auto it = index.find(name);
  if (it == index.end()) throw std::out_of_range("unknown name: " + name);
  return it->second;
}

std::optional<int> SymbolTable::find(const std::string& name) const {
  auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::vector<std::vector<std::string>> read_records(const std::string& path, size_t fields) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::vector<std::vector<std::string>> records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    auto toks = tokenize(line);
    if (toks.size() != fields)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(fields) + " fields, got " + std::to_string(toks.size()));
    records.push_back(std::move(toks));
  }
  return records;
}

int resolve(SymbolTable& table, const std::string& name, bool strict, const char* kind,
            const std::string& path) {
  if (strict) {
    auto id = table.find(name);
    if (!id) throw ParseError(path + ": unknown " + kind + " name '" + name + "' in strict mode");
    return *id;
  }
  return table.add(name);
}

}  // namespace

void NestedGraph::rebuild_indexes() {
  involved.clear();
  involved_index.clear();
  atomic_known.clear();
  augmented_known.clear();
  nested_known.clear();

  for (const auto& split : atomic)
    for (const auto& t : split) atomic_known.insert(t);
  augmented_known = atomic_known;
  for (const auto& t : augmented) augmented_known.insert(t);

  auto note_involved = [&](const AtomicTriple& t) {
    if (involved_index.emplace(t, static_cast<int>(involved.size())).second)
      involved.push_back(t);
  };
  for (const auto& split : nested) {
    for (const auto& n : split) {
      nested_known.insert(n);
      note_involved(n.head);
      note_involved(n.tail);
    }
  }
}

NestedGraph load_graph(const GraphPaths& paths, bool strict_names) {
  NestedGraph g;

  // Atomic files define the base symbol tables. Duplicates are dropped; a
  // triple seen in an earlier split is skipped in later ones so splits stay
  // disjoint.
  AtomicSet seen_atomic;
  for (int s = 0; s < 3; ++s) {
    for (const auto& rec : read_records(paths.atomic[s], 3)) {
      AtomicTriple t{g.entities.add(rec[0]), g.atomic_relations.add(rec[1]),
                     g.entities.add(rec[2])};
      if (seen_atomic.insert(t).second) g.atomic[s].push_back(t);
    }
  }

  NestedSet seen_nested;
  for (int s = 0; s < 3; ++s) {
    for (const auto& rec : read_records(paths.nested[s], 7)) {
      const std::string& path = paths.nested[s];
      AtomicTriple head{resolve(g.entities, rec[0], strict_names, "entity", path),
                        resolve(g.atomic_relations, rec[1], strict_names, "relation", path),
                        resolve(g.entities, rec[2], strict_names, "entity", path)};
      int rel = g.nested_relations.add(rec[3]);
      AtomicTriple tail{resolve(g.entities, rec[4], strict_names, "entity", path),
                        resolve(g.atomic_relations, rec[5], strict_names, "relation", path),
                        resolve(g.entities, rec[6], strict_names, "entity", path)};
      if (strict_names) {
        if (!seen_atomic.count(head))
          throw ParseError(path + ": nested head triple not in the atomic union: " + rec[0] +
                           " " + rec[1] + " " + rec[2]);
        if (!seen_atomic.count(tail))
          throw ParseError(path + ": nested tail triple not in the atomic union: " + rec[4] +
                           " " + rec[5] + " " + rec[6]);
      }
      NestedTriple n{head, rel, tail};
      if (seen_nested.insert(n).second) g.nested[s].push_back(n);
    }
  }

  if (paths.augmented) {
    AtomicSet seen_aug;
    for (const auto& rec : read_records(*paths.augmented, 3)) {
      AtomicTriple t{resolve(g.entities, rec[0], strict_names, "entity", *paths.augmented),
                     g.atomic_relations.add(rec[1]),
                     resolve(g.entities, rec[2], strict_names, "entity", *paths.augmented)};
      if (seen_aug.insert(t).second) g.augmented.push_back(t);
    }
  }

  g.rebuild_indexes();
  return g;
}

std::vector<AtomicTriple> augment_by_random_walk(NestedGraph& g, int walk_length,
                                                 int samples_per_entity, std::uint64_t seed) {
  if (walk_length != 2)
    throw std::invalid_argument("only length-2 walks are supported");
  if (samples_per_entity < 0) throw std::invalid_argument("samples_per_entity must be >= 0");

  std::vector<std::vector<std::pair<int, int>>> out_edges(g.entities.size());
  for (const auto& t : g.atomic_split(Split::Train)) out_edges[t.h].emplace_back(t.r, t.t);

  std::mt19937_64 rng(seed);
  std::vector<AtomicTriple> result;
  AtomicSet seen;
  for (int e1 = 0; e1 < g.entities.size(); ++e1) {
    if (out_edges[e1].empty()) continue;
    for (int s = 0; s < samples_per_entity; ++s) {
      const auto& first = out_edges[e1][std::uniform_int_distribution<size_t>(
          0, out_edges[e1].size() - 1)(rng)];
      int e2 = first.second;
      if (out_edges[e2].empty()) continue;
      const auto& second = out_edges[e2][std::uniform_int_distribution<size_t>(
          0, out_edges[e2].size() - 1)(rng)];
      std::string name =
          g.atomic_relations.names[first.first] + "::" + g.atomic_relations.names[second.first];
      AtomicTriple t{e1, g.atomic_relations.add(name), second.second};
      if (seen.insert(t).second) result.push_back(t);
    }
  }
  return result;
}

std::string format_atomic(const NestedGraph& g, const AtomicTriple& t) {
  return g.entities.names[t.h] + "\t" + g.atomic_relations.names[t.r] + "\t" +
         g.entities.names[t.t];
}

std::string format_nested(const NestedGraph& g, const NestedTriple& n) {
  return format_atomic(g, n.head) + "\t" + g.nested_relations.names[n.rel] + "\t" +
         format_atomic(g, n.tail);
}

void write_atomic_file(const std::string& path, const NestedGraph& g,
                       const std::vector<AtomicTriple>& triples) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& t : triples) out << format_atomic(g, t) << "\n";
}

void write_nested_file(const std::string& path, const NestedGraph& g,
                       const std::vector<NestedTriple>& triples) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  for (const auto& n : triples) out << format_nested(g, n) << "\n";
}

void split_lines_file(const std::string& in_path, const std::array<std::string, 3>& out_paths,
                      std::uint64_t seed) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open file: " + in_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!blank(line)) lines.push_back(line);

  std::mt19937_64 rng(seed);
  std::shuffle(lines.begin(), lines.end(), rng);

  size_t n = lines.size();
  size_t n_train = n * 8 / 10;
  size_t n_valid = n / 10;
  std::array<std::pair<size_t, size_t>, 3> ranges{{{0, n_train},
                                                   {n_train, n_train + n_valid},
                                                   {n_train + n_valid, n}}};
  for (int s = 0; s < 3; ++s) {
    std::ofstream out(out_paths[s]);
    if (!out) throw std::runtime_error("cannot write file: " + out_paths[s]);
    for (size_t i = ranges[s].first; i < ranges[s].second; ++i) out << lines[i] << "\n";
  }
}

}  // namespace nestkg
