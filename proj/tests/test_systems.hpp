#pragma once

// Shared builders for the reference systems exercised across the test suites.

#include "lni/transfer_matrix.hpp"

namespace lni::testing {

inline Poly poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

inline RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return {poly(num), poly(den)};
}

/// Nonproper 2x2 lossless negative imaginary system with a simple pole at
/// infinity and at +-j: [[1/(s^2+1), -s], [s, 1/(s^2+1)]].
inline TransferMatrix lni_nonproper_2x2() {
  const RationalFunction osc = rf({1}, {1, 0, 1});
  const RationalFunction s = RationalFunction::variable();
  return make_transfer_matrix({{osc, -s}, {s, osc}});
}

/// Proper 2x2 lossless negative imaginary system with a simple pole at zero:
/// [[-s^2/(s^2+1), 1/s + 1], [-1/s + 1, -s^2/(s^2+1)]].
inline TransferMatrix lni_proper_2x2() {
  const RationalFunction diag = rf({0, 0, -1}, {1, 0, 1});
  const RationalFunction upper = rf({1, 1}, {0, 1});
  const RationalFunction lower = rf({-1, 1}, {0, 1});
  return make_transfer_matrix({{diag, upper}, {lower, diag}});
}

/// Scalar (1 - 2s^4) / (s^2 (s^2 + 1)): double pole at zero, pair at +-j,
/// value -2 at infinity.
inline TransferMatrix lni_scalar_biproper() {
  return make_transfer_matrix({{rf({1, 0, 0, 0, -2}, {0, 0, 1, 0, 1})}});
}

/// The lossless positive real image [[s/(s^2+1), 1], [-1, s/(s^2+1)]] shared
/// by both bridge routes on the 2x2 reference systems.
inline TransferMatrix lpr_bridge_image_2x2() {
  const RationalFunction diag = rf({0, 1}, {1, 0, 1});
  return make_transfer_matrix({{diag, rf({1}, {1})}, {rf({-1}, {1}), diag}});
}

inline TransferMatrix scalar_tm(const RationalFunction& f) { return make_transfer_matrix({{f}}); }

}  // namespace lni::testing
