#pragma once

#include <cstdint>
#include <vector>

#include "lni/transfer_matrix.hpp"

namespace lni {

// The five limit matrices of the expansion
//   G(s) = sum_i (s*Qs_i + T_i)/(s^2 + w_i^2)
//        + inv_s/s + inv_s2/s^2 + s*s_coeff + s^2*s2_coeff + value_at_inf.
struct ExtremeLimits {
  MatQ s2_coeff;      // limit of G(jw)/(jw)^2 as w -> inf
  MatQ s_coeff;       // next coefficient of the polynomial part
  MatQ inv_s_coeff;   // limit of s (G - inv_s2/s^2) at s -> 0
  MatQ inv_s2_coeff;  // limit of s^2 G(s) at s -> 0
  MatQ value_at_inf;  // constant term of the polynomial part
};

struct ResidueOptions {
  long precision_bits = 256;  // numeric path working precision
  double tolerance = 1e-9;    // Hermitian-defect acceptance bound
};

// Residue matrix K of jG(s) at s = j*omega. Exact complex rationals when
// omega is rational; otherwise evaluated numerically at the declared
// precision with the Hermitian defect disclosed.
struct ResidueMatrix {
  Rational omega_squared;
  bool exact = true;
  ComplexMatQ value;                    // exact path
  Eigen::MatrixXd value_re, value_im;   // both paths (numeric rendering)
  long precision_bits = 0;              // numeric path only
  double hermitian_defect = 0.0;
  double tolerance = 0.0;
  bool hermitian = true;

  Eigen::Index dim() const { return exact ? value.rows() : value_re.rows(); }
};

struct SpectralMode {
  Rational omega_squared;
  // Exact rational numerator of the mode term (s*num_s + num_const)/(s^2+w^2).
  // num_s = j(conj(K) - K) vanishes exactly when K is real; num_const is the
  // mode strength T = w(K + conj(K)).
  MatQ num_s;
  MatQ num_const;
  ResidueMatrix residue;
};

struct SpectralData {
  Eigen::Index m = 0;
  MatQ s2_coeff, s_coeff, inv_s_coeff, inv_s2_coeff, value_at_inf;
  std::vector<SpectralMode> modes;  // sorted by omega_squared, no duplicates

  static SpectralData zero(Eigen::Index m);
};

/// Exact limit matrices by coefficient extraction; throws when the pole
/// order at zero or infinity exceeds two.
ExtremeLimits limits_at_extremes(const TransferMatrix& g);

// Exact numerator (s_coeff * s + constant) of the (s^2 + omega^2) term of the
// entrywise partial fraction. Defined for every rational omega^2, whether or
// not omega itself is rational; the residue of jG is
// constant/(2w) + j*s_coeff/2.
struct ModeNumerator {
  MatQ s_coeff;
  MatQ constant;
};
ModeNumerator mode_numerator_at(const TransferMatrix& g, const Rational& omega_squared);

/// Residue of jG at the simple pole pair s = +-j*sqrt(omega_squared).
ResidueMatrix residue_at(const TransferMatrix& g, const Rational& omega_squared,
                         const ResidueOptions& options = {});

/// Full partial-fraction data; preconditions: all poles purely imaginary
/// with rational omega^2, finite pairs simple, zero/infinity orders <= 2.
SpectralData partial_fraction_expand(const TransferMatrix& g, const ResidueOptions& options = {});

/// Exact reassembly; reconstruct(partial_fraction_expand(G)) == G.
TransferMatrix reconstruct(const SpectralData& data);

struct GenerateSpec {
  Eigen::Index m = 1;
  int num_modes = 1;
  int zero_pole_order = 0;      // 0, 1 (skew 1/s term), or 2 (PSD 1/s^2 term)
  int infinity_pole_order = 0;  // 0, 1 (skew s term), or 2 (NSD s^2 term)
  std::uint64_t seed = 1;
};

/// Draws a random lossless negative imaginary system: PSD mode strengths,
/// PSD inv_s2 / NSD s2 coefficients, skew odd coefficients, symmetric value
/// at infinity, distinct rational pole frequencies.
TransferMatrix generate_lni(const GenerateSpec& spec);

nlohmann::json spectral_to_json(const SpectralData& data);

}  // namespace lni
