#pragma once

#include "nestkg/embedding.hpp"
#include "nestkg/graph.hpp"
#include "nestkg/hyper4.hpp"

namespace nestkg {

// phi(h, r, t) = <(h (+) r_b) (x) normalize(r_theta), t>
template <typename Scalar>
Scalar score_atomic(const EmbeddingStore<Scalar>& store, const AtomicTriple& triple) {
  const auto& h = store.entities[triple.h];
  const auto& rel = store.atomic_rels[triple.r];
  const auto& t = store.entities[triple.t];
  auto rotated = hamilton_product(add(h, rel.trans), normalize(rel.rot, store.eps), store.alg);
  return inner(rotated, t);
}

// T = [h, r_theta, t]; the relation column is the raw rotation vector.
template <typename Scalar>
TripleEmbedding<Scalar> triple_embedding(const EmbeddingStore<Scalar>& store,
                                         const AtomicTriple& triple) {
  return TripleEmbedding<Scalar>{{store.entities[triple.h], store.atomic_rels[triple.r].rot,
                                  store.entities[triple.t]}};
}

// T' = (T (+) R_b) (x)_3x3 R_theta: translate each column, then the 1x3 * 3x3
// product with Hamilton products as scalar multiplication. Rotation cells are
// normalized element-wise; cells with norm < eps are used as stored, so an
// exact-zero cell annihilates its term.
template <typename Scalar>
TripleEmbedding<Scalar> rotate_triple(const TripleEmbedding<Scalar>& T,
                                      const NestedRelationEmbedding<Scalar>& nrel, Algebra alg,
                                      Scalar eps = Scalar(1e-12)) {
  const Eigen::Index d = T.cols[0].dim();
  std::array<Hyper4<Scalar>, 3> translated;
  for (int i = 0; i < 3; ++i) translated[i] = add(T.cols[i], nrel.trans[i]);
  TripleEmbedding<Scalar> out;
  for (int j = 0; j < 3; ++j) {
    out.cols[j] = Hyper4<Scalar>::zero(d);
    for (int i = 0; i < 3; ++i)
      hamilton_accum(out.cols[j], translated[i], normalize_cell(nrel.rot_cell(i, j), eps), alg);
  }
  return out;
}

// Matrix inner product <A, B> = sum over the three columns.
template <typename Scalar>
Scalar triple_inner(const TripleEmbedding<Scalar>& a, const TripleEmbedding<Scalar>& b) {
  Scalar acc = 0;
  for (int c = 0; c < 3; ++c) acc += inner(a.cols[c], b.cols[c]);
  return acc;
}

// rho(T_i, r^, T_j) = <rotate(T_i), T_j>
template <typename Scalar>
Scalar score_nested(const EmbeddingStore<Scalar>& store, const NestedTriple& nt) {
  auto rotated = rotate_triple(triple_embedding(store, nt.head), store.nested_rels[nt.rel],
                               store.alg, store.eps);
  return triple_inner(rotated, triple_embedding(store, nt.tail));
}

}  // namespace nestkg
