#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "nestkg/graph.hpp"
#include "support/fixtures.hpp"

using namespace nestkg;
using testsupport::TempDir;

namespace {

GraphPaths small_graph_paths(const TempDir& dir) {
  GraphPaths p;
  p.atomic[0] = dir.file("atomic_train.txt",
                         "a r1 b\n"
                         "b r2 c\n"
                         "a r2 c\n"
                         "c r1 a\n");
  p.atomic[1] = dir.file("atomic_valid.txt", "a r1 c\n");
  p.atomic[2] = dir.file("atomic_test.txt", "b r1 c\n");
  p.nested[0] = dir.file("nested_train.txt",
                         "a r1 b n1 b r2 c\n"
                         "a r2 c n1 c r1 a\n");
  p.nested[1] = dir.file("nested_valid.txt", "a r1 b n2 a r2 c\n");
  p.nested[2] = dir.file("nested_test.txt", "c r1 a n2 a r1 b\n");
  return p;
}

}  // namespace

TEST_CASE("load_graph builds tables, splits, and involved triples") {
  TempDir dir;
  auto g = load_graph(small_graph_paths(dir));

  CHECK(g.entities.size() == 3);
  CHECK(g.atomic_relations.size() == 2);
  CHECK(g.nested_relations.size() == 2);
  CHECK(g.atomic_split(Split::Train).size() == 4);
  CHECK(g.atomic_split(Split::Valid).size() == 1);
  CHECK(g.atomic_split(Split::Test).size() == 1);
  CHECK(g.nested_split(Split::Train).size() == 2);

  // involved = union of sides, in first-appearance order
  CHECK(g.involved.size() == 4);
  AtomicTriple first{g.entities.at("a"), g.atomic_relations.at("r1"), g.entities.at("b")};
  CHECK(g.involved.front() == first);
  for (const auto& split : g.nested)
    for (const auto& n : split) {
      CHECK(g.involved_index.count(n.head) == 1);
      CHECK(g.involved_index.count(n.tail) == 1);
    }

  // brute-force recomputation of involved as a set
  std::set<std::tuple<int, int, int>> expect, got;
  for (const auto& split : g.nested)
    for (const auto& n : split) {
      expect.insert({n.head.h, n.head.r, n.head.t});
      expect.insert({n.tail.h, n.tail.r, n.tail.t});
    }
  for (const auto& t : g.involved) got.insert({t.h, t.r, t.t});
  CHECK(expect == got);

  CHECK(g.atomic_known.size() == 6);
  CHECK(g.nested_known.size() == 4);
}

TEST_CASE("load_graph: empty nested files give empty involved set") {
  TempDir dir;
  auto p = small_graph_paths(dir);
  p.nested[0] = dir.file("en0.txt", "");
  p.nested[1] = dir.file("en1.txt", "\n\n");
  p.nested[2] = dir.file("en2.txt", "");
  auto g = load_graph(p);
  CHECK(g.involved.empty());
  CHECK(g.nested_known.empty());
}

TEST_CASE("load_graph deduplicates repeated lines") {
  TempDir dir;
  auto p = small_graph_paths(dir);
  p.nested[0] = dir.file("dup.txt",
                         "a r1 b n1 b r2 c\n"
                         "a r1 b n1 b r2 c\n");
  p.nested[1] = dir.file("dup_v.txt", "");
  p.nested[2] = dir.file("dup_t.txt", "");
  auto g = load_graph(p);
  CHECK(g.nested_split(Split::Train).size() == 1);
  CHECK(g.involved.size() <= 2);
}

TEST_CASE("load_graph keeps splits disjoint when files overlap") {
  TempDir dir;
  auto p = small_graph_paths(dir);
  p.atomic[1] = dir.file("overlap.txt", "a r1 b\na r1 c\n");  // first line is in train
  auto g = load_graph(p);
  CHECK(g.atomic_split(Split::Valid).size() == 1);
  AtomicSet seen;
  for (const auto& split : g.atomic)
    for (const auto& t : split) CHECK(seen.insert(t).second);
}

TEST_CASE("load_graph reports malformed lines with location") {
  TempDir dir;
  auto p = small_graph_paths(dir);
  p.atomic[0] = dir.file("bad.txt", "a r1 b\na r1\n");
  CHECK_THROWS_WITH_AS(load_graph(p), doctest::Contains("bad.txt:2"), ParseError);

  auto p2 = small_graph_paths(dir);
  p2.nested[2] = dir.file("bad7.txt", "a r1 b n1 b r2 c extra\n");
  CHECK_THROWS_AS(load_graph(p2), ParseError);

  auto p3 = small_graph_paths(dir);
  p3.atomic[0] = dir.name("missing.txt");
  CHECK_THROWS_AS(load_graph(p3), ParseError);
}

TEST_CASE("strict mode rejects new names and non-atomic sides") {
  TempDir dir;
  auto p = small_graph_paths(dir);
  p.nested[0] = dir.file("newname.txt", "a r1 b n1 b r2 zz\n");
  CHECK_NOTHROW(load_graph(p, false));
  CHECK_THROWS_WITH_AS(load_graph(p, true), doctest::Contains("zz"), ParseError);

  auto p2 = small_graph_paths(dir);
  // names resolve but (b, r1, a) is not a triple of the atomic union
  p2.nested[0] = dir.file("notintau.txt", "b r1 a n1 b r2 c\n");
  CHECK_NOTHROW(load_graph(p2, false));
  CHECK_THROWS_AS(load_graph(p2, true), ParseError);
}

TEST_CASE("augment_by_random_walk finds length-2 compositions") {
  TempDir dir;
  GraphPaths p;
  p.atomic[0] = dir.file("t.txt", "a r1 b\nb r2 c\n");
  p.atomic[1] = dir.file("v.txt", "");
  p.atomic[2] = dir.file("s.txt", "");
  p.nested[0] = dir.file("n0.txt", "");
  p.nested[1] = dir.file("n1.txt", "");
  p.nested[2] = dir.file("n2.txt", "");
  auto g = load_graph(p);

  auto triples = augment_by_random_walk(g, 2, 50, 123);
  REQUIRE(!triples.empty());
  int composite = g.atomic_relations.at("r1::r2");
  AtomicTriple want{g.entities.at("a"), composite, g.entities.at("c")};
  CHECK(std::count(triples.begin(), triples.end(), want) == 1);
  // composite ids are appended after the original relations
  CHECK(composite >= 2);
  for (const auto& t : triples) {
    CHECK(t.h < g.entities.size());
    CHECK(t.t < g.entities.size());
    CHECK(t.r < g.atomic_relations.size());
  }

  // determinism
  auto g2 = load_graph(p);
  auto again = augment_by_random_walk(g2, 2, 50, 123);
  CHECK(triples == again);

  // a single triple admits no length-2 path
  GraphPaths p1 = p;
  p1.atomic[0] = dir.file("single.txt", "a r1 b\n");
  auto g3 = load_graph(p1);
  CHECK(augment_by_random_walk(g3, 2, 50, 123).empty());

  CHECK_THROWS_AS(augment_by_random_walk(g, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("serialize/load round-trip preserves the graph up to order") {
  TempDir dir;
  auto g = load_graph(small_graph_paths(dir));

  GraphPaths out;
  out.atomic = {dir.name("o_at.txt"), dir.name("o_av.txt"), dir.name("o_as.txt")};
  out.nested = {dir.name("o_nt.txt"), dir.name("o_nv.txt"), dir.name("o_ns.txt")};
  for (int s = 0; s < 3; ++s) {
    write_atomic_file(out.atomic[s], g, g.atomic[s]);
    write_nested_file(out.nested[s], g, g.nested[s]);
  }
  auto g2 = load_graph(out);
  CHECK(g2.entities.size() == g.entities.size());
  CHECK(g2.atomic_relations.size() == g.atomic_relations.size());
  for (int s = 0; s < 3; ++s) {
    CHECK(g2.atomic[s].size() == g.atomic[s].size());
    CHECK(g2.nested[s].size() == g.nested[s].size());
  }
  // same facts as name-level sets
  std::set<std::string> a1, a2;
  for (int s = 0; s < 3; ++s)
    for (const auto& t : g.atomic[s]) a1.insert(format_atomic(g, t));
  for (int s = 0; s < 3; ++s)
    for (const auto& t : g2.atomic[s]) a2.insert(format_atomic(g2, t));
  CHECK(a1 == a2);
}

TEST_CASE("split_lines_file writes a disjoint 8:1:1 split") {
  TempDir dir;
  std::string contents;
  for (int i = 0; i < 100; ++i) contents += "e" + std::to_string(i) + " r e" + std::to_string(i + 1) + "\n";
  auto in = dir.file("all.txt", contents);
  std::array<std::string, 3> outs{dir.name("tr.txt"), dir.name("va.txt"), dir.name("te.txt")};
  split_lines_file(in, outs, 7);

  auto read_lines = [](const std::string& path) {
    std::ifstream f(path);
    std::vector<std::string> ls;
    std::string l;
    while (std::getline(f, l)) ls.push_back(l);
    return ls;
  };
  auto tr = read_lines(outs[0]), va = read_lines(outs[1]), te = read_lines(outs[2]);
  CHECK(tr.size() == 80);
  CHECK(va.size() == 10);
  CHECK(te.size() == 10);
  std::set<std::string> all(tr.begin(), tr.end());
  all.insert(va.begin(), va.end());
  all.insert(te.begin(), te.end());
  CHECK(all.size() == 100);
}
