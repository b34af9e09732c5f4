#pragma once

// Test-only oracles, kept independent of the library's sign tables and
// vectorized kernels. The basis products are transcribed one by one from the
// defining relations of each algebra.

#include <random>
#include <stdexcept>

#include "nestkg/algebra.hpp"
#include "nestkg/hyper4.hpp"

namespace testsupport {

// sign/unit of e_u * e_v, written out case by case. unit indices: 0=1, 1=i, 2=j, 3=k.
inline void basis_product_oracle(nestkg::Algebra alg, int u, int v, int& sign, int& unit) {
  using nestkg::Algebra;
  if (u == 0) {
    sign = 1;
    unit = v;
    return;
  }
  if (v == 0) {
    sign = 1;
    unit = u;
    return;
  }
  if (u == v) {
    unit = 0;
    switch (alg) {
      case Algebra::Q: sign = -1; return;                  // i2 = j2 = k2 = -1
      case Algebra::H: sign = +1; return;                  // i2 = j2 = k2 = +1
      case Algebra::S: sign = (u == 1) ? -1 : +1; return;  // i2 = -1, j2 = k2 = +1
    }
  }
  // mixed imaginary products
  const bool split = alg == Algebra::S;
  if (u == 1 && v == 2) { sign = +1; unit = 3; return; }             // ij = k
  if (u == 2 && v == 1) { sign = -1; unit = 3; return; }             // ji = -k
  if (u == 2 && v == 3) { sign = split ? -1 : +1; unit = 1; return; }  // jk = i (S: -i)
  if (u == 3 && v == 2) { sign = split ? +1 : -1; unit = 1; return; }  // kj = -i (S: +i)
  if (u == 3 && v == 1) { sign = +1; unit = 2; return; }             // ki = j
  if (u == 1 && v == 3) { sign = -1; unit = 2; return; }             // ik = -j
  throw std::logic_error("unreachable basis pair");
}

// Brute-force 16-term expansion per element.
template <typename Scalar>
nestkg::Hyper4<Scalar> hamilton_oracle(const nestkg::Hyper4<Scalar>& a,
                                       const nestkg::Hyper4<Scalar>& b, nestkg::Algebra alg) {
  nestkg::Hyper4<Scalar> out = nestkg::Hyper4<Scalar>::zero(a.dim());
  for (Eigen::Index e = 0; e < a.dim(); ++e) {
    for (int u = 0; u < 4; ++u) {
      for (int v = 0; v < 4; ++v) {
        int sign, unit;
        basis_product_oracle(alg, u, v, sign, unit);
        out.ch[unit](e) += Scalar(sign) * a.ch[u](e) * b.ch[v](e);
      }
    }
  }
  return out;
}

template <typename Scalar = double>
nestkg::Hyper4<Scalar> random_h4(std::mt19937_64& rng, Eigen::Index d, Scalar lo = Scalar(-2),
                                 Scalar hi = Scalar(2)) {
  std::uniform_real_distribution<Scalar> u(lo, hi);
  nestkg::Hyper4<Scalar> out(d);
  for (int c = 0; c < 4; ++c)
    for (Eigen::Index e = 0; e < d; ++e) out.ch[c](e) = u(rng);
  return out;
}

}  // namespace testsupport
