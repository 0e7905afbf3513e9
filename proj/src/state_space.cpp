#include "lni/state_space.hpp"

#include <sstream>
#include <stdexcept>

namespace lni {

namespace {

MatQ reachability_matrix(const StateSpace& ss) {
  const Eigen::Index n = ss.n(), m = ss.m();
  MatQ r(n, n * m);
  MatQ block = ss.B;
  for (Eigen::Index k = 0; k < n; ++k) {
    r.middleCols(k * m, m) = block;
    if (k + 1 < n) block = ss.A * block;
  }
  return r;
}

MatQ observability_matrix(const StateSpace& ss) {
  const Eigen::Index n = ss.n(), m = ss.m();
  MatQ o(n * m, n);
  MatQ block = ss.C;
  for (Eigen::Index k = 0; k < n; ++k) {
    o.middleRows(k * m, m) = block;
    if (k + 1 < n) block = block * ss.A;
  }
  return o;
}

// Basis of the column space, read off the pivot columns.
MatQ column_space_basis(const MatQ& m) {
  MatQ work = m;
  std::vector<Eigen::Index> pivot_cols;
  {
    // re-reduce locally to find pivot columns
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < work.cols() && row < work.rows(); ++col) {
      Eigen::Index sel = -1;
      for (Eigen::Index r = row; r < work.rows(); ++r)
        if (work(r, col) != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      work.row(sel).swap(work.row(row));
      work.row(row) /= work(row, col);
      for (Eigen::Index r = 0; r < work.rows(); ++r) {
        if (r == row || work(r, col) == 0) continue;
        work.row(r) -= work(r, col) * work.row(row);
      }
      pivot_cols.push_back(col);
      ++row;
    }
  }
  MatQ basis(m.rows(), static_cast<Eigen::Index>(pivot_cols.size()));
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = m.col(pivot_cols[k]);
  return basis;
}

// Restrict to the controllable subspace (A-invariant, contains im B).
StateSpace restrict_controllable(const StateSpace& ss, Eigen::Index& removed) {
  const MatQ basis = column_space_basis(reachability_matrix(ss));
  const Eigen::Index r = basis.cols();
  removed = ss.n() - r;
  if (removed == 0) return ss;
  const MatQ t = complete_basis(basis);
  const MatQ a_t = solve_square(t, MatQ(ss.A * t));
  const MatQ b_t = solve_square(t, ss.B);
  const MatQ c_t = ss.C * t;
  StateSpace out;
  out.A = a_t.topLeftCorner(r, r);
  out.B = b_t.topRows(r);
  out.C = c_t.leftCols(r);
  out.D = ss.D;
  return out;
}

// Quotient by the unobservable subspace (A-invariant, inside ker C).
StateSpace restrict_observable(const StateSpace& ss, Eigen::Index& removed) {
  const auto kernel = nullspace(observability_matrix(ss));
  removed = static_cast<Eigen::Index>(kernel.size());
  if (removed == 0) return ss;
  const Eigen::Index n = ss.n(), q = removed, r = n - q;
  MatQ w(n, q);
  for (Eigen::Index k = 0; k < q; ++k) w.col(k) = kernel[static_cast<std::size_t>(k)];
  // T = [V W] with the unobservable directions last.
  MatQ vw = complete_basis(w);
  MatQ t(n, n);
  t.leftCols(r) = vw.rightCols(r);
  t.rightCols(q) = vw.leftCols(q);
  const MatQ a_t = solve_square(t, MatQ(ss.A * t));
  const MatQ b_t = solve_square(t, ss.B);
  const MatQ c_t = ss.C * t;
  StateSpace out;
  out.A = a_t.topLeftCorner(r, r);
  out.B = b_t.topRows(r);
  out.C = c_t.leftCols(r);
  out.D = ss.D;
  return out;
}

}  // namespace

void StateSpace::validate() const {
  if (A.rows() != A.cols()) throw std::invalid_argument("state space: A must be square");
  if (D.rows() != D.cols() || D.rows() < 1)
    throw std::invalid_argument("state space: D must be square and nonempty");
  if (B.rows() != A.rows() || B.cols() != D.cols())
    throw std::invalid_argument("state space: B must be n x m");
  if (C.rows() != D.rows() || C.cols() != A.rows())
    throw std::invalid_argument("state space: C must be m x n");
}

std::pair<StateSpace, RealizationMeta> realize(const TransferMatrix& g) {
  require_square(g, "realize");
  if (!is_proper(g))
    throw std::invalid_argument(
        "realize requires a proper transfer matrix; decompose non-proper systems through the "
        "partial-fraction path first");
  const Eigen::Index m = g.rows();

  StateSpace ss;
  ss.D = MatQ(m, m);
  TransferMatrix strictly(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      ss.D(i, j) = g(i, j).value_at_infinity();
      strictly(i, j) = g(i, j) - RationalFunction(ss.D(i, j));
    }

  // Controllable canonical block per input column.
  std::vector<Poly> column_den(static_cast<std::size_t>(m));
  std::vector<Eigen::Index> sizes(static_cast<std::size_t>(m));
  Eigen::Index total = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    Poly lcm = Poly::one();
    for (Eigen::Index i = 0; i < m; ++i) lcm = poly_lcm(lcm, strictly(i, j).den());
    column_den[static_cast<std::size_t>(j)] = lcm;
    sizes[static_cast<std::size_t>(j)] = lcm.degree();
    total += lcm.degree();
  }

  ss.A = MatQ::Zero(total, total);
  ss.B = MatQ::Zero(total, m);
  ss.C = MatQ::Zero(m, total);
  Eigen::Index offset = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    const Poly& den = column_den[static_cast<std::size_t>(j)];
    const Eigen::Index nj = sizes[static_cast<std::size_t>(j)];
    if (nj == 0) continue;
    for (Eigen::Index k = 0; k + 1 < nj; ++k) ss.A(offset + k, offset + k + 1) = 1;
    for (Eigen::Index k = 0; k < nj; ++k)
      ss.A(offset + nj - 1, offset + k) = -den.coeff(static_cast<int>(k));
    ss.B(offset + nj - 1, j) = 1;
    for (Eigen::Index i = 0; i < m; ++i) {
      const auto& entry = strictly(i, j);
      if (entry.is_zero()) continue;
      const Poly scaled = entry.num() * divide_exact(den, entry.den());
      for (Eigen::Index k = 0; k < nj; ++k) ss.C(i, offset + k) = scaled.coeff(static_cast<int>(k));
    }
    offset += nj;
  }

  auto [minimal, meta] = minimal_realization(ss);
  if (!tm_equal(transfer_of(minimal), g))
    throw std::logic_error("realization failed to reproduce its transfer matrix");
  return {std::move(minimal), std::move(meta)};
}

TransferMatrix transfer_of(const StateSpace& ss) {
  ss.validate();
  const Eigen::Index n = ss.n(), m = ss.m();
  if (n == 0) return tm_constant(ss.D);

  // Faddeev-LeVerrier: char(s) = sum c_k s^k and
  // adj(sI - A) = sum_k M_k s^(n-1-k) with M_0 = I.
  std::vector<Rational> char_coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  char_coeffs[static_cast<std::size_t>(n)] = 1;
  std::vector<MatQ> adjugate;
  adjugate.reserve(static_cast<std::size_t>(n));
  MatQ mk = MatQ::Identity(n, n);
  adjugate.push_back(mk);
  for (Eigen::Index k = 1; k <= n; ++k) {
    const MatQ am = ss.A * mk;
    Rational trace(0);
    for (Eigen::Index i = 0; i < n; ++i) trace += am(i, i);
    const Rational ck = -trace / Rational(static_cast<long>(k));
    char_coeffs[static_cast<std::size_t>(n - k)] = ck;
    mk = am + MatQ(MatQ::Identity(n, n) * ck);
    if (k < n) adjugate.push_back(mk);
  }
  if (!is_zero(mk)) throw std::logic_error("Faddeev-LeVerrier recursion failed to terminate");

  const Poly char_poly{std::vector<Rational>(char_coeffs)};
  TransferMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      std::vector<Rational> num_coeffs(static_cast<std::size_t>(n), Rational(0));
      for (std::size_t k = 0; k < adjugate.size(); ++k) {
        const Rational v = (ss.C.row(i) * adjugate[k] * ss.B.col(j))(0, 0);
        num_coeffs[static_cast<std::size_t>(n) - 1 - k] = v;
      }
      g(i, j) = RationalFunction(Poly(std::move(num_coeffs)), char_poly) +
                RationalFunction(ss.D(i, j));
    }
  return g;
}

std::pair<int, int> ctrb_obsv_ranks(const StateSpace& ss) {
  ss.validate();
  if (ss.n() == 0) return {0, 0};
  return {rank(reachability_matrix(ss)), rank(observability_matrix(ss))};
}

std::pair<StateSpace, RealizationMeta> minimal_realization(const StateSpace& ss) {
  ss.validate();
  Eigen::Index removed_c = 0, removed_o = 0;
  StateSpace stage1 = ss.n() == 0 ? ss : restrict_controllable(ss, removed_c);
  StateSpace stage2 = stage1.n() == 0 ? stage1 : restrict_observable(stage1, removed_o);

  RealizationMeta meta;
  meta.n = stage2.n();
  const auto [rc, ro] = ctrb_obsv_ranks(stage2);
  meta.controllable = (rc == stage2.n());
  meta.observable = (ro == stage2.n());
  std::ostringstream trace;
  trace << "removed " << removed_c << " uncontrollable and " << removed_o
        << " unobservable dimensions";
  meta.reduction_trace = trace.str();
  return {std::move(stage2), std::move(meta)};
}

StateSpace state_space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("C") ||
      !j.contains("D"))
    throw std::invalid_argument("state space JSON requires fields \"A\", \"B\", \"C\", \"D\"");
  StateSpace ss;
  ss.A = mat_from_json(j.at("A"));
  ss.B = mat_from_json(j.at("B"));
  ss.C = mat_from_json(j.at("C"));
  ss.D = mat_from_json(j.at("D"));
  const Eigen::Index m = ss.D.rows();
  // Normalize the empty blocks of a zero-state system.
  if (ss.A.rows() == 0 && ss.B.size() == 0 && ss.C.size() == 0) {
    ss.A = MatQ(0, 0);
    ss.B = MatQ(0, m);
    ss.C = MatQ(m, 0);
  }
  ss.validate();
  return ss;
}

nlohmann::json state_space_to_json(const StateSpace& ss) {
  nlohmann::json j;
  j["A"] = mat_to_json(ss.A);
  j["B"] = mat_to_json(ss.B);
  j["C"] = mat_to_json(ss.C);
  j["D"] = mat_to_json(ss.D);
  return j;
}

}  // namespace lni
