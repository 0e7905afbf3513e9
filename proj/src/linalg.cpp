#include "lni/linalg.hpp"

#include <stdexcept>

namespace lni {

bool is_symmetric(const MatQ& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const MatQ& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_zero(const MatQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

Rational max_abs_entry(const MatQ& m) {
  Rational best(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Rational a = abs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

namespace {

// Row echelon with full row reduction; returns pivot columns.
std::vector<Eigen::Index> reduce(MatQ& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      m.row(r) -= m(r, col) * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(MatQ m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(reduce(m).size());
}

std::vector<VecQ> nullspace(const MatQ& m) {
  MatQ r = m;
  std::vector<Eigen::Index> pivots;
  if (r.rows() > 0 && r.cols() > 0) pivots = reduce(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<VecQ> basis;
  for (Eigen::Index free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    VecQ v = VecQ::Zero(m.cols());
    v(free_col) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v(pivots[k]) = -r(static_cast<Eigen::Index>(k), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const MatQ& m, const VecQ& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  LinearSolution sol;
  MatQ aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const std::vector<Eigen::Index> pivots = (aug.rows() > 0) ? reduce(aug) : std::vector<Eigen::Index>{};
  for (Eigen::Index c : pivots)
    if (c == m.cols()) return sol;  // row [0 ... 0 | 1]: inconsistent

  sol.consistent = true;
  sol.particular = VecQ::Zero(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    sol.particular(pivots[k]) = aug(static_cast<Eigen::Index>(k), m.cols());
  sol.kernel = nullspace(m);
  return sol;
}

Rational quadratic_form(const MatQ& s, const VecQ& x) {
  return (x.transpose() * s * x)(0, 0);
}

MatQ solve_square(const MatQ& a, const MatQ& rhs) {
  if (a.rows() != a.cols() || a.rows() != rhs.rows())
    throw std::invalid_argument("solve_square: dimension mismatch");
  const Eigen::Index n = a.rows();
  if (n == 0) return MatQ(0, rhs.cols());
  MatQ aug(n, n + rhs.cols());
  aug.leftCols(n) = a;
  aug.rightCols(rhs.cols()) = rhs;
  const auto pivots = reduce(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() >= n)
    throw std::invalid_argument("solve_square: singular matrix");
  return aug.rightCols(rhs.cols());
}

MatQ complete_basis(const MatQ& v) {
  const Eigen::Index n = v.rows();
  MatQ t(n, n);
  Eigen::Index cols = v.cols();
  t.leftCols(cols) = v;
  for (Eigen::Index e = 0; e < n && cols < n; ++e) {
    MatQ candidate(n, cols + 1);
    candidate.leftCols(cols) = t.leftCols(cols);
    candidate.col(cols) = MatQ::Zero(n, 1);
    candidate(e, cols) = 1;
    if (rank(candidate) == static_cast<int>(cols) + 1) {
      t.col(cols) = candidate.col(cols);
      ++cols;
    }
  }
  if (cols != n) throw std::logic_error("complete_basis: input not full column rank");
  return t;
}

PsdResult psd_check_exact(const MatQ& s) {
  if (!is_symmetric(s)) throw std::invalid_argument("psd_check_exact: matrix not symmetric");
  const Eigen::Index n = s.rows();
  PsdResult result;

  MatQ work = s;
  // Accumulates the congruence: work = E * s * E^T with E invertible, so a
  // bad vector y for `work` pulls back to x = E^T y for s.
  MatQ e = MatQ::Identity(n, n);
  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);

  auto fail_with = [&](const VecQ& y) {
    result.psd = false;
    result.witness = e.transpose() * y;
    return result;
  };

  for (Eigen::Index step = 0; step < n; ++step) {
    // Any remaining negative diagonal entry refutes PSD immediately.
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (eliminated[static_cast<std::size_t>(i)]) continue;
      if (work(i, i) < 0) {
        VecQ y = VecQ::Zero(n);
        y(i) = 1;
        return fail_with(y);
      }
      if (pivot < 0 && work(i, i) > 0) pivot = i;
    }
    if (pivot < 0) {
      // All remaining diagonal entries are zero: PSD forces the remaining
      // block to vanish entirely.
      for (Eigen::Index i = 0; i < n; ++i) {
        if (eliminated[static_cast<std::size_t>(i)]) continue;
        for (Eigen::Index j = 0; j < n; ++j) {
          if (eliminated[static_cast<std::size_t>(j)] || i == j) continue;
          if (work(i, j) != 0) {
            // 2x2 block [[0, a], [a, d]] with a != 0: pick t with
            // 2 t a + d < 0.
            const Rational a = work(i, j);
            const Rational d = work(j, j);
            VecQ y = VecQ::Zero(n);
            y(i) = -(d + 1) / (2 * a);
            y(j) = 1;
            return fail_with(y);
          }
        }
      }
      result.psd = true;
      return result;
    }

    const Rational d = work(pivot, pivot);
    result.pivots.push_back(d);
    eliminated[static_cast<std::size_t>(pivot)] = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (eliminated[static_cast<std::size_t>(i)] || work(i, pivot) == 0) continue;
      const Rational factor = work(i, pivot) / d;
      work.row(i) -= factor * work.row(pivot);
      work.col(i) -= factor * work.col(pivot);
      e.row(i) -= factor * e.row(pivot);
    }
  }
  result.psd = true;
  return result;
}

Rational ComplexMatQ::hermitian_defect() const {
  const ComplexMatQ d = *this - adjoint();
  Rational best = max_abs_entry(d.re);
  Rational bi = max_abs_entry(d.im);
  return best > bi ? best : bi;
}

PsdResult psd_check_hermitian(const ComplexMatQ& k) {
  if (!k.is_hermitian()) throw std::invalid_argument("psd_check_hermitian: matrix not Hermitian");
  const Eigen::Index n = k.rows();
  MatQ embed(2 * n, 2 * n);
  embed.topLeftCorner(n, n) = k.re;
  embed.topRightCorner(n, n) = -k.im;
  embed.bottomLeftCorner(n, n) = k.im;
  embed.bottomRightCorner(n, n) = k.re;
  return psd_check_exact(embed);
}

}  // namespace lni
