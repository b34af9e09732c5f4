#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nestkg {

// The three 4D hypercomplex number systems. They share the basis {1, i, j, k}
// and the group structure of basis products (unit index of e_u * e_v is u ^ v);
// they differ only in the signs of imaginary-unit products.
enum class Algebra : std::uint8_t {
  Q = 0,  // quaternions:            i2 = j2 = k2 = -1, ij = k = -ji
  H = 1,  // hyperbolic quaternions: i2 = j2 = k2 = +1, ij = k = -ji
  S = 2,  // split quaternions:      i2 = -1, j2 = k2 = +1, jk = -i = -kj
};

using SignTable = std::array<std::array<std::int8_t, 4>, 4>;

// sign_table(alg)[u][v] is the sign of e_u * e_v; the resulting unit is e_(u^v).
inline const SignTable& sign_table(Algebra alg) {
  static constexpr SignTable q{{{+1, +1, +1, +1},
                                {+1, -1, +1, -1},
                                {+1, -1, -1, +1},
                                {+1, +1, -1, -1}}};
  static constexpr SignTable h{{{+1, +1, +1, +1},
                                {+1, +1, +1, -1},
                                {+1, -1, +1, +1},
                                {+1, +1, -1, +1}}};
  static constexpr SignTable s{{{+1, +1, +1, +1},
                                {+1, -1, +1, -1},
                                {+1, -1, +1, -1},
                                {+1, +1, +1, +1}}};
  switch (alg) {
    case Algebra::Q: return q;
    case Algebra::H: return h;
    case Algebra::S: return s;
  }
  throw std::invalid_argument("unknown algebra");
}

inline constexpr int product_unit(int u, int v) { return u ^ v; }

inline std::string algebra_name(Algebra alg) {
  switch (alg) {
    case Algebra::Q: return "Q";
    case Algebra::H: return "H";
    case Algebra::S: return "S";
  }
  return "?";
}

inline Algebra parse_algebra(const std::string& name) {
  if (name == "Q" || name == "q") return Algebra::Q;
  if (name == "H" || name == "h") return Algebra::H;
  if (name == "S" || name == "s") return Algebra::S;
  throw std::invalid_argument("unknown algebra '" + name + "' (expected Q, H, or S)");
}

constexpr std::array<Algebra, 3> kAllAlgebras{Algebra::Q, Algebra::H, Algebra::S};

}  // namespace nestkg
