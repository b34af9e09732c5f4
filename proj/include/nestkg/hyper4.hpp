#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <stdexcept>

#include "nestkg/algebra.hpp"

namespace nestkg {

// A length-d vector of 4D hypercomplex numbers, stored channel-wise:
// ch[0] = real part s, ch[1..3] = imaginary parts x, y, z. All algebra
// operations are element-wise over the d entries.
template <typename Scalar>
struct Hyper4 {
  using Channel = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;

  std::array<Channel, 4> ch;

  Hyper4() = default;
  explicit Hyper4(Index d) { resize(d); }
  Hyper4(Channel s, Channel x, Channel y, Channel z)
      : ch{std::move(s), std::move(x), std::move(y), std::move(z)} {}

  Index dim() const { return ch[0].size(); }

  void resize(Index d) {
    for (auto& c : ch) c.resize(d);
  }
  void set_zero() {
    for (auto& c : ch) c.setZero();
  }
  void set_zero(Index d) {
    for (auto& c : ch) c = Channel::Zero(d);
  }

  static Hyper4 zero(Index d) {
    Hyper4 out;
    out.set_zero(d);
    return out;
  }

  // The multiplicative identity (1, 0, 0, 0) in every element.
  static Hyper4 identity(Index d) {
    Hyper4 out = zero(d);
    out.ch[0] = Channel::Ones(d);
    return out;
  }

  // Single-element constructor, handy in tests and d=1 pattern solving.
  static Hyper4 element(Scalar s, Scalar x, Scalar y, Scalar z) {
    Hyper4 out(1);
    out.ch[0](0) = s;
    out.ch[1](0) = x;
    out.ch[2](0) = y;
    out.ch[3](0) = z;
    return out;
  }

  Hyper4& operator+=(const Hyper4& o) {
    for (int c = 0; c < 4; ++c) ch[c] += o.ch[c];
    return *this;
  }
  Hyper4& operator-=(const Hyper4& o) {
    for (int c = 0; c < 4; ++c) ch[c] -= o.ch[c];
    return *this;
  }
  Hyper4& operator*=(Scalar a) {
    for (int c = 0; c < 4; ++c) ch[c] *= a;
    return *this;
  }
};

namespace detail {
template <typename Scalar>
inline void check_same_dim(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("hypercomplex dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}
}  // namespace detail

template <typename Scalar>
Hyper4<Scalar> add(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b) {
  detail::check_same_dim(a, b);
  Hyper4<Scalar> out;
  for (int c = 0; c < 4; ++c) out.ch[c] = a.ch[c] + b.ch[c];
  return out;
}

template <typename Scalar>
Hyper4<Scalar> sub(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b) {
  detail::check_same_dim(a, b);
  Hyper4<Scalar> out;
  for (int c = 0; c < 4; ++c) out.ch[c] = a.ch[c] - b.ch[c];
  return out;
}

// out += a (x) b, expanded over the 16 signed channel pairs of the algebra.
// The unit of e_u * e_v is e_(u^v); only the signs depend on the algebra.
template <typename Scalar>
void hamilton_accum(Hyper4<Scalar>& out, const Hyper4<Scalar>& a, const Hyper4<Scalar>& b,
                    Algebra alg) {
  detail::check_same_dim(a, b);
  detail::check_same_dim(a, out);
  const SignTable& t = sign_table(alg);
  const auto s = [&](int u, int v) { return static_cast<Scalar>(t[u][v]); };
  const auto& a0 = a.ch[0];
  const auto& a1 = a.ch[1];
  const auto& a2 = a.ch[2];
  const auto& a3 = a.ch[3];
  const auto& b0 = b.ch[0];
  const auto& b1 = b.ch[1];
  const auto& b2 = b.ch[2];
  const auto& b3 = b.ch[3];
  out.ch[0] += a0 * b0 + s(1, 1) * a1 * b1 + s(2, 2) * a2 * b2 + s(3, 3) * a3 * b3;
  out.ch[1] += a0 * b1 + a1 * b0 + s(2, 3) * a2 * b3 + s(3, 2) * a3 * b2;
  out.ch[2] += a0 * b2 + a2 * b0 + s(1, 3) * a1 * b3 + s(3, 1) * a3 * b1;
  out.ch[3] += a0 * b3 + a3 * b0 + s(1, 2) * a1 * b2 + s(2, 1) * a2 * b1;
}

template <typename Scalar>
Hyper4<Scalar> hamilton_product(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b, Algebra alg) {
  Hyper4<Scalar> out = Hyper4<Scalar>::zero(a.dim());
  hamilton_accum(out, a, b, alg);
  return out;
}

// Sum over the four channel-wise dot products.
template <typename Scalar>
Scalar inner(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b) {
  detail::check_same_dim(a, b);
  Scalar acc = 0;
  for (int c = 0; c < 4; ++c) acc += (a.ch[c] * b.ch[c]).sum();
  return acc;
}

template <typename Scalar>
typename Hyper4<Scalar>::Channel element_norms(const Hyper4<Scalar>& a) {
  return (a.ch[0].square() + a.ch[1].square() + a.ch[2].square() + a.ch[3].square()).sqrt();
}

// Scale every element to unit Euclidean 4-norm. Elements with norm < eps are
// replaced by the identity element (1, 0, 0, 0).
template <typename Scalar>
Hyper4<Scalar> normalize(const Hyper4<Scalar>& a, Scalar eps = Scalar(1e-12)) {
  const auto norms = element_norms(a);
  const auto degenerate = norms < eps;
  const auto safe = norms.max(eps);
  Hyper4<Scalar> out;
  out.ch[0] = degenerate.select(Scalar(1), a.ch[0] / safe);
  for (int c = 1; c < 4; ++c) out.ch[c] = degenerate.select(Scalar(0), a.ch[c] / safe);
  return out;
}

// Rotation-cell variant: elements with norm < eps are left unscaled, so an
// exact-zero cell contributes nothing when used multiplicatively.
template <typename Scalar>
Hyper4<Scalar> normalize_cell(const Hyper4<Scalar>& a, Scalar eps = Scalar(1e-12)) {
  const auto norms = element_norms(a);
  const auto scale = (norms < eps).select(Scalar(1), norms.inverse());
  Hyper4<Scalar> out;
  for (int c = 0; c < 4; ++c) out.ch[c] = a.ch[c] * scale;
  return out;
}

// --- backward helpers -------------------------------------------------------
//
// All gradient functions accumulate into their first argument. `g` is the
// upstream gradient with respect to the op's output.

// ga += d<g, a (x) b>/da, i.e. ga[u] += sum_v sign(u,v) g[u^v] b[v].
template <typename Scalar>
void hamilton_grad_left(Hyper4<Scalar>& ga, const Hyper4<Scalar>& g, const Hyper4<Scalar>& b,
                        Algebra alg) {
  const SignTable& t = sign_table(alg);
  const auto s = [&](int u, int v) { return static_cast<Scalar>(t[u][v]); };
  const auto& g0 = g.ch[0];
  const auto& g1 = g.ch[1];
  const auto& g2 = g.ch[2];
  const auto& g3 = g.ch[3];
  const auto& b0 = b.ch[0];
  const auto& b1 = b.ch[1];
  const auto& b2 = b.ch[2];
  const auto& b3 = b.ch[3];
  ga.ch[0] += g0 * b0 + g1 * b1 + g2 * b2 + g3 * b3;
  ga.ch[1] += g1 * b0 + s(1, 1) * g0 * b1 + s(1, 2) * g3 * b2 + s(1, 3) * g2 * b3;
  ga.ch[2] += g2 * b0 + s(2, 1) * g3 * b1 + s(2, 2) * g0 * b2 + s(2, 3) * g1 * b3;
  ga.ch[3] += g3 * b0 + s(3, 1) * g2 * b1 + s(3, 2) * g1 * b2 + s(3, 3) * g0 * b3;
}

// gb += d<g, a (x) b>/db, i.e. gb[v] += sum_u sign(u,v) g[u^v] a[u].
template <typename Scalar>
void hamilton_grad_right(Hyper4<Scalar>& gb, const Hyper4<Scalar>& g, const Hyper4<Scalar>& a,
                         Algebra alg) {
  const SignTable& t = sign_table(alg);
  const auto s = [&](int u, int v) { return static_cast<Scalar>(t[u][v]); };
  const auto& g0 = g.ch[0];
  const auto& g1 = g.ch[1];
  const auto& g2 = g.ch[2];
  const auto& g3 = g.ch[3];
  const auto& a0 = a.ch[0];
  const auto& a1 = a.ch[1];
  const auto& a2 = a.ch[2];
  const auto& a3 = a.ch[3];
  gb.ch[0] += g0 * a0 + g1 * a1 + g2 * a2 + g3 * a3;
  gb.ch[1] += g1 * a0 + s(1, 1) * g0 * a1 + s(2, 1) * g3 * a2 + s(3, 1) * g2 * a3;
  gb.ch[2] += g2 * a0 + s(1, 2) * g3 * a1 + s(2, 2) * g0 * a2 + s(3, 2) * g1 * a3;
  gb.ch[3] += g3 * a0 + s(1, 3) * g2 * a1 + s(2, 3) * g1 * a2 + s(3, 3) * g0 * a3;
}

// ga += gradient of normalize(a) applied to upstream g. Degenerate elements
// were mapped to a constant, so they pass no gradient.
template <typename Scalar>
void normalize_grad(Hyper4<Scalar>& ga, const Hyper4<Scalar>& g, const Hyper4<Scalar>& a,
                    Scalar eps = Scalar(1e-12)) {
  const auto norms = element_norms(a);
  const auto safe = norms.max(eps);
  // coef = 1/|a| for live elements, 0 for degenerate ones
  typename Hyper4<Scalar>::Channel coef = (norms < eps).select(Scalar(0), safe.inverse());
  // dot = <g, n>/|a| per element, with n = a/|a|
  typename Hyper4<Scalar>::Channel dot =
      (g.ch[0] * a.ch[0] + g.ch[1] * a.ch[1] + g.ch[2] * a.ch[2] + g.ch[3] * a.ch[3]) /
      (safe * safe);
  for (int c = 0; c < 4; ++c) ga.ch[c] += (g.ch[c] - dot * a.ch[c]) * coef;
}

// Backward of normalize_cell: degenerate elements were passed through
// unscaled, so they pass the gradient through unchanged.
template <typename Scalar>
void normalize_cell_grad(Hyper4<Scalar>& ga, const Hyper4<Scalar>& g, const Hyper4<Scalar>& a,
                         Scalar eps = Scalar(1e-12)) {
  const auto norms = element_norms(a);
  const auto safe = norms.max(eps);
  const auto degenerate = norms < eps;
  typename Hyper4<Scalar>::Channel dot =
      (g.ch[0] * a.ch[0] + g.ch[1] * a.ch[1] + g.ch[2] * a.ch[2] + g.ch[3] * a.ch[3]) /
      (safe * safe);
  for (int c = 0; c < 4; ++c)
    ga.ch[c] += degenerate.select(g.ch[c], (g.ch[c] - dot * a.ch[c]) / safe);
}

// out += coef * v
template <typename Scalar>
void accum_scaled(Hyper4<Scalar>& out, Scalar coef, const Hyper4<Scalar>& v) {
  for (int c = 0; c < 4; ++c) out.ch[c] += coef * v.ch[c];
}

template <typename Scalar>
bool all_finite(const Hyper4<Scalar>& a) {
  for (int c = 0; c < 4; ++c)
    if (!a.ch[c].isFinite().all()) return false;
  return true;
}

template <typename Scalar>
Scalar max_abs_diff(const Hyper4<Scalar>& a, const Hyper4<Scalar>& b) {
  Scalar m = 0;
  for (int c = 0; c < 4; ++c) m = std::max(m, (a.ch[c] - b.ch[c]).abs().maxCoeff());
  return m;
}

template <typename Scalar>
Scalar max_abs(const Hyper4<Scalar>& a) {
  Scalar m = 0;
  for (int c = 0; c < 4; ++c) m = std::max(m, a.ch[c].abs().maxCoeff());
  return m;
}

}  // namespace nestkg
