#pragma once

#include <optional>
#include <vector>

#include "lni/rational.hpp"

namespace lni {

bool is_symmetric(const MatQ& m);
bool is_skew_symmetric(const MatQ& m);
bool is_zero(const MatQ& m);
Rational max_abs_entry(const MatQ& m);

int rank(MatQ m);

/// Exact basis of { x : M x = 0 }; empty when M is injective.
std::vector<VecQ> nullspace(const MatQ& m);

struct LinearSolution {
  bool consistent = false;
  VecQ particular;               // one solution of M x = b when consistent
  std::vector<VecQ> kernel;      // basis of the homogeneous solution set
};

/// Gauss-Jordan solve of M x = b over the rationals.
LinearSolution solve_linear(const MatQ& m, const VecQ& b);

/// Solves A X = Rhs for square invertible A; throws when singular.
MatQ solve_square(const MatQ& a, const MatQ& rhs);

/// Basis completion: extends the full-column-rank block V to an invertible
/// [V | E] using standard basis vectors.
MatQ complete_basis(const MatQ& v);

struct PsdResult {
  bool psd = false;
  VecQ witness;                  // x with x^T S x < 0 when not PSD
  std::vector<Rational> pivots;  // LDL^T diagonal when PSD
};

/// Exact positive-semidefiniteness decision for a symmetric rational matrix
/// via pivoted LDL^T; a failing matrix comes with a rational witness vector.
PsdResult psd_check_exact(const MatQ& s);

Rational quadratic_form(const MatQ& s, const VecQ& x);

// Real-pair representation of a complex rational matrix.
struct ComplexMatQ {
  MatQ re, im;

  ComplexMatQ() = default;
  ComplexMatQ(MatQ r, MatQ i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexMatQ zero(Eigen::Index rows, Eigen::Index cols) {
    return {MatQ::Zero(rows, cols), MatQ::Zero(rows, cols)};
  }

  Eigen::Index rows() const { return re.rows(); }
  Eigen::Index cols() const { return re.cols(); }
  ComplexMatQ adjoint() const { return {re.transpose(), MatQ(-im.transpose())}; }
  ComplexMatQ operator+(const ComplexMatQ& o) const { return {re + o.re, im + o.im}; }
  ComplexMatQ operator-(const ComplexMatQ& o) const { return {re - o.re, im - o.im}; }
  bool operator==(const ComplexMatQ& o) const { return re == o.re && im == o.im; }

  bool is_hermitian() const { return is_symmetric(re) && is_skew_symmetric(im); }
  /// Largest absolute entry of K - K^*.
  Rational hermitian_defect() const;
};

/// Exact PSD test for a Hermitian complex rational matrix via the real
/// embedding [[Re, -Im], [Im, Re]].
PsdResult psd_check_hermitian(const ComplexMatQ& k);

}  // namespace lni
