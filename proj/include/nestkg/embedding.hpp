#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nestkg/algebra.hpp"
#include "nestkg/graph.hpp"
#include "nestkg/hyper4.hpp"

namespace nestkg {

// Per-relation parameters of the atomic model: a rotation vector (stored
// unnormalized, normalized on use) and a translation vector.
template <typename Scalar>
struct AtomicRelationEmbedding {
  Hyper4<Scalar> rot;
  Hyper4<Scalar> trans;
};

// Per-nested-relation parameters: a 3x3 rotation matrix and a 1x3 translation,
// every cell a hypercomplex vector of the shared dimension d.
template <typename Scalar>
struct NestedRelationEmbedding {
  std::array<Hyper4<Scalar>, 9> rot;  // row-major, rot_cell(i, j) = rot[3*i + j]
  std::array<Hyper4<Scalar>, 3> trans;

  Hyper4<Scalar>& rot_cell(int i, int j) { return rot[3 * i + j]; }
  const Hyper4<Scalar>& rot_cell(int i, int j) const { return rot[3 * i + j]; }
};

// An atomic fact as a 1x3 matrix [head, relation, tail].
template <typename Scalar>
struct TripleEmbedding {
  std::array<Hyper4<Scalar>, 3> cols;
};

template <typename Scalar>
struct EmbeddingStore {
  Algebra alg = Algebra::Q;
  Eigen::Index d = 0;
  Scalar eps = Scalar(1e-12);

  std::vector<Hyper4<Scalar>> entities;
  std::vector<AtomicRelationEmbedding<Scalar>> atomic_rels;
  std::vector<NestedRelationEmbedding<Scalar>> nested_rels;

  static EmbeddingStore random_init(Algebra alg, Eigen::Index d, int n_entities,
                                    int n_atomic_rels, int n_nested_rels, std::uint64_t seed);
  static EmbeddingStore random_init(Algebra alg, Eigen::Index d, const NestedGraph& g,
                                    std::uint64_t seed) {
    return random_init(alg, d, g.entities.size(), g.atomic_relations.size(),
                       g.nested_relations.size(), seed);
  }
};

template <typename Scalar>
EmbeddingStore<Scalar> EmbeddingStore<Scalar>::random_init(Algebra alg, Eigen::Index d,
                                                           int n_entities, int n_atomic_rels,
                                                           int n_nested_rels,
                                                           std::uint64_t seed) {
  EmbeddingStore store;
  store.alg = alg;
  store.d = d;
  std::mt19937_64 rng(seed);
  const Scalar bound = Scalar(0.5) / std::sqrt(Scalar(d));
  std::uniform_real_distribution<Scalar> unif(-bound, bound);
  // Nested rotation matrices start near the identity so early nested scores
  // track column similarity.
  std::uniform_real_distribution<Scalar> noise(-bound / 10, bound / 10);

  auto fill = [&](Hyper4<Scalar>& v, auto& dist) {
    v.resize(d);
    for (int c = 0; c < 4; ++c)
      for (Eigen::Index e = 0; e < d; ++e) v.ch[c](e) = dist(rng);
  };

  store.entities.resize(n_entities);
  for (auto& e : store.entities) fill(e, unif);
  store.atomic_rels.resize(n_atomic_rels);
  for (auto& r : store.atomic_rels) {
    fill(r.rot, unif);
    fill(r.trans, unif);
  }
  store.nested_rels.resize(n_nested_rels);
  for (auto& nr : store.nested_rels) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        auto& cell = nr.rot_cell(i, j);
        fill(cell, noise);
        if (i == j) cell.ch[0] += Scalar(1);
      }
    }
    for (auto& t : nr.trans) fill(t, unif);
  }
  return store;
}

}  // namespace nestkg
