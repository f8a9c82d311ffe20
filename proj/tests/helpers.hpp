#pragma once

#include <random>
#include <vector>

#include "iex/iet.hpp"
#include "iex/qfield.hpp"

namespace iex::testing {

inline Rational frac(long n, long d) { return make_rational(n, d); }

// alpha = (3 - sqrt(5))/2, the golden rotation angle.
inline QuadNum golden_alpha() { return QuadNum(frac(3, 2), frac(-1, 2), 5); }

// The running 3-interval example: T = R^2 on [0,1) with lengths
// (1-2a, a, a), top order (a, b, c), bottom order (b, c, a).
inline Iet example_T() {
  QuadNum a = golden_alpha();
  QuadNum one(1);
  return Iet({'a', 'b', 'c'}, {'b', 'c', 'a'}, {one - a - a, a, a}, QuadNum(0));
}

// The golden rotation as a 2-interval exchange on [0,1).
inline Iet example_R() {
  QuadNum a = golden_alpha();
  return Iet({'a', 'b'}, {'b', 'a'}, {QuadNum(1) - a, a}, QuadNum(0));
}

// The rotation written as a 3-interval exchange; minimal but not regular.
inline Iet example_rot3() {
  QuadNum a = golden_alpha();
  QuadNum one(1);
  return Iet({'a', 'b', 'c'}, {'c', 'a', 'b'}, {one - a - a, a, a}, QuadNum(0));
}

// n-th convenient linear combination c0 + c1*alpha with small rationals.
inline QuadNum affine_alpha(long c0n, long c0d, long c1n, long c1d) {
  return QuadNum(frac(c0n, c0d)) + QuadNum(frac(c1n, c1d)) * golden_alpha();
}

// Deterministic sample points strictly inside an interval.
inline std::vector<QuadNum> grid_points(const SemiInterval& I, size_t count) {
  std::vector<QuadNum> out;
  QuadNum span = I.length();
  for (size_t k = 0; k < count; ++k)
    out.push_back(I.lo + span * QuadNum(frac(2 * static_cast<long>(k) + 1,
                                             2 * static_cast<long>(count))));
  return out;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline QuadNum random_quad(long d, long coeff_bound = 20, long den_bound = 6) {
  std::uniform_int_distribution<long> num(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return QuadNum(frac(num(rng()), den(rng())), frac(num(rng()), den(rng())), d);
}

}  // namespace iex::testing
