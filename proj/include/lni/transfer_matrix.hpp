#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lni/linalg.hpp"
#include "lni/rational_function.hpp"

namespace lni {

// Square matrix of rational functions of s. Dense Eigen storage keeps the
// usual expression arithmetic (+, -, *, scalar ops) available.
using TransferMatrix = Eigen::Matrix<RationalFunction, Eigen::Dynamic, Eigen::Dynamic>;

/// Builds an m x m transfer matrix from a row-major grid; rejects non-square input.
TransferMatrix make_transfer_matrix(const std::vector<std::vector<RationalFunction>>& rows);
TransferMatrix tm_zero(Eigen::Index m);
TransferMatrix tm_constant(const MatQ& value);
/// c(s) * value for a scalar rational function c.
TransferMatrix tm_scaled(const RationalFunction& c, const MatQ& value);

bool tm_equal(const TransferMatrix& a, const TransferMatrix& b);
bool tm_is_zero(const TransferMatrix& g);
void require_square(const TransferMatrix& g, const char* where);

/// G^T(-s): transpose and substitute s -> -s.
TransferMatrix para_conjugate(const TransferMatrix& g);

/// Exact value of G at a non-pole complex rational point.
ComplexMatQ evaluate(const TransferMatrix& g, const ComplexRational& s0);

/// Largest pole order at s = infinity over all entries (0 for proper G).
int infinity_pole_order(const TransferMatrix& g);
/// Pole order at s = 0 of the denominator lcm.
int zero_pole_order(const TransferMatrix& g);
bool is_proper(const TransferMatrix& g);

struct PoleRecord {
  enum class Kind { kZero, kFinitePair, kInfinity };
  Kind kind = Kind::kFinitePair;
  // For finite pairs: the squarefree factor f(u) of the lcm denominator
  // written in u = s^2 whose roots u = -omega^2 locate the pole pair. A
  // rational omega_squared is extracted whenever the factor splits.
  Poly factor_u;
  std::optional<Rational> omega_squared;
  int order = 1;
};

struct PoleTable {
  std::vector<PoleRecord> records;
  bool all_imaginary = false;
  Poly denominator_lcm;
  // When all_imaginary fails, a short description of the offending factor.
  std::string violation;

  bool finite_pairs_all_rational() const;
  int max_finite_order() const;
};

/// Enumerates system poles from the monic lcm of entry denominators and
/// decides exactly whether every pole is purely imaginary.
PoleTable pole_table(const TransferMatrix& g);

/// Monic lcm of all entry denominators.
Poly denominator_lcm(const TransferMatrix& g);

// Canonical JSON form:
//   {"m": int, "entries": [[{"num": [c0, c1, ...], "den": [...]}, ...], ...]}
// with coefficients as exact "p/q" / integer / decimal strings, ascending
// degree. Integers may also appear as JSON numbers.
TransferMatrix transfer_matrix_from_json(const nlohmann::json& j);
nlohmann::json transfer_matrix_to_json(const TransferMatrix& g);

MatQ mat_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const MatQ& m);

std::string tm_str(const TransferMatrix& g);

}  // namespace lni
