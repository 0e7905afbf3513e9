#include "lni/transfer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace lni {

TransferMatrix make_transfer_matrix(const std::vector<std::vector<RationalFunction>>& rows) {
  const auto m = rows.size();
  if (m == 0) throw std::invalid_argument("transfer matrix must be nonempty");
  TransferMatrix g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m)
      throw std::invalid_argument("transfer matrix must be square");
    for (std::size_t j = 0; j < m; ++j)
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return g;
}

TransferMatrix tm_zero(Eigen::Index m) {
  TransferMatrix g(m, m);
  g.setConstant(RationalFunction());
  return g;
}

TransferMatrix tm_constant(const MatQ& value) {
  TransferMatrix g(value.rows(), value.cols());
  for (Eigen::Index i = 0; i < value.rows(); ++i)
    for (Eigen::Index j = 0; j < value.cols(); ++j) g(i, j) = RationalFunction(value(i, j));
  return g;
}

TransferMatrix tm_scaled(const RationalFunction& c, const MatQ& value) {
  TransferMatrix g(value.rows(), value.cols());
  for (Eigen::Index i = 0; i < value.rows(); ++i)
    for (Eigen::Index j = 0; j < value.cols(); ++j) g(i, j) = RationalFunction(value(i, j)) * c;
  return g;
}

bool tm_equal(const TransferMatrix& a, const TransferMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool tm_is_zero(const TransferMatrix& g) {
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_zero()) return false;
  return true;
}

void require_square(const TransferMatrix& g, const char* where) {
  if (g.rows() != g.cols() || g.rows() == 0)
    throw std::invalid_argument(std::string(where) + ": transfer matrix must be square and nonempty");
}

TransferMatrix para_conjugate(const TransferMatrix& g) {
  TransferMatrix r(g.cols(), g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) r(j, i) = g(i, j).negate_argument();
  return r;
}

ComplexMatQ evaluate(const TransferMatrix& g, const ComplexRational& s0) {
  ComplexMatQ value = ComplexMatQ::zero(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const ComplexRational v = g(i, j).eval(s0);  // throws at poles
      value.re(i, j) = v.re;
      value.im(i, j) = v.im;
    }
  return value;
}

int infinity_pole_order(const TransferMatrix& g) {
  int order = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const auto& f = g(i, j);
      if (f.is_zero()) continue;
      order = std::max(order, f.num().degree() - f.den().degree());
    }
  return order;
}

Poly denominator_lcm(const TransferMatrix& g) {
  Poly l = Poly::one();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) l = poly_lcm(l, g(i, j).den());
  return l;
}

int zero_pole_order(const TransferMatrix& g) {
  int order = 0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      order = std::max(order, g(i, j).pole_order_at_zero());
  return order;
}

bool is_proper(const TransferMatrix& g) { return infinity_pole_order(g) == 0; }

bool PoleTable::finite_pairs_all_rational() const {
  for (const auto& r : records)
    if (r.kind == PoleRecord::Kind::kFinitePair && !r.omega_squared) return false;
  return true;
}

int PoleTable::max_finite_order() const {
  int order = 0;
  for (const auto& r : records)
    if (r.kind == PoleRecord::Kind::kFinitePair) order = std::max(order, r.order);
  return order;
}

PoleTable pole_table(const TransferMatrix& g) {
  PoleTable table;
  table.denominator_lcm = denominator_lcm(g);
  const Poly& lcm = table.denominator_lcm;
  table.all_imaginary = true;

  const int zero_order = lcm.order_at_zero();
  if (zero_order > 0) {
    PoleRecord rec;
    rec.kind = PoleRecord::Kind::kZero;
    rec.factor_u = Poly::variable();
    rec.omega_squared = Rational(0);
    rec.order = zero_order;
    table.records.push_back(std::move(rec));
  }

  // All poles purely imaginary iff lcm = c * s^k * e(s^2) with every root of
  // e(u) real and strictly negative.
  const Poly h = lcm.shift_down(zero_order);
  bool even = true;
  for (int k = 1; k <= h.degree(); k += 2)
    if (h.coeff(k) != 0) even = false;

  if (!even) {
    table.all_imaginary = false;
    table.violation = "denominator " + lcm.str() + " is not of the form s^k * e(s^2)";
  } else if (h.degree() > 0) {
    std::vector<Rational> ecoeffs;
    for (int k = 0; k <= h.degree(); k += 2) ecoeffs.push_back(h.coeff(k));
    const Poly e = Poly(std::move(ecoeffs));

    for (const auto& [factor, mult] : squarefree_decomposition(e)) {
      const int negative_roots = count_real_roots_in(factor, RationalInterval::negative());
      if (negative_roots != factor.degree()) {
        table.all_imaginary = false;
        table.violation = "denominator factor " + factor.str('u') +
                          " (u = s^2) has roots off the negative real axis";
      }
      // Record the pole pairs regardless, splitting off rational omega^2.
      RationalRootSplit split = rational_roots(factor);
      for (const Rational& root : split.roots) {
        PoleRecord rec;
        rec.kind = PoleRecord::Kind::kFinitePair;
        rec.factor_u = Poly{-root, Rational(1)};
        if (-root > 0) rec.omega_squared = -root;
        rec.order = mult;
        table.records.push_back(std::move(rec));
      }
      if (split.leftover.degree() > 0) {
        PoleRecord rec;
        rec.kind = PoleRecord::Kind::kFinitePair;
        rec.factor_u = split.leftover;
        rec.order = mult;
        table.records.push_back(std::move(rec));
      }
    }
  }

  const int inf_order = infinity_pole_order(g);
  if (inf_order > 0) {
    PoleRecord rec;
    rec.kind = PoleRecord::Kind::kInfinity;
    rec.order = inf_order;
    table.records.push_back(std::move(rec));
  }

  // Sort finite pairs by omega^2 where known, keeping zero first and
  // infinity last for stable reports.
  std::stable_sort(table.records.begin(), table.records.end(),
                   [](const PoleRecord& a, const PoleRecord& b) {
                     auto key = [](const PoleRecord& r) {
                       switch (r.kind) {
                         case PoleRecord::Kind::kZero: return 0;
                         case PoleRecord::Kind::kFinitePair: return 1;
                         default: return 2;
                       }
                     };
                     if (key(a) != key(b)) return key(a) < key(b);
                     if (a.omega_squared && b.omega_squared) return *a.omega_squared < *b.omega_squared;
                     return false;
                   });
  return table;
}

namespace {

Rational scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rational(static_cast<unsigned long>(j.get<std::uint64_t>()));
  throw std::invalid_argument(
      "coefficients must be exact strings (\"p/q\", integer, or decimal) or JSON integers");
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial coefficients must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
  return Poly(std::move(coeffs));
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(to_string(p.coeff(k)));
  return arr;
}

}  // namespace

TransferMatrix transfer_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("entries"))
    throw std::invalid_argument("transfer matrix JSON requires fields \"m\" and \"entries\"");
  const auto m = j.at("m").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != m)
    throw std::invalid_argument("\"entries\" must be an m x m grid");
  std::vector<std::vector<RationalFunction>> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = entries.at(i);
    if (!row.is_array() || row.size() != m)
      throw std::invalid_argument("\"entries\" must be an m x m grid");
    for (std::size_t jcol = 0; jcol < m; ++jcol) {
      const auto& cell = row.at(jcol);
      if (!cell.is_object() || !cell.contains("num") || !cell.contains("den"))
        throw std::invalid_argument("each entry must be {\"num\": [...], \"den\": [...]}");
      Poly num = poly_from_json(cell.at("num"));
      Poly den = poly_from_json(cell.at("den"));
      rows[i].emplace_back(std::move(num), std::move(den));
    }
  }
  return make_transfer_matrix(rows);
}

nlohmann::json transfer_matrix_to_json(const TransferMatrix& g) {
  nlohmann::json j;
  j["m"] = g.rows();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index jcol = 0; jcol < g.cols(); ++jcol) {
      nlohmann::json cell;
      cell["num"] = poly_to_json(g(i, jcol).num());
      cell["den"] = poly_to_json(g(i, jcol).den());
      row.push_back(std::move(cell));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

MatQ mat_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  const auto rows = j.size();
  if (rows == 0) return MatQ(0, 0);
  const auto cols = j.at(0).size();
  MatQ m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("matrix JSON rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = scalar_from_json(row.at(c));
  }
  return m;
}

nlohmann::json mat_to_json(const MatQ& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string tm_str(const TransferMatrix& g) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    out << (i == 0 ? "[" : " ");
    for (Eigen::Index j = 0; j < g.cols(); ++j) out << (j ? ", " : "[") << g(i, j).str();
    out << "]";
    if (i + 1 < g.rows()) out << "\n";
  }
  out << "]";
  return out.str();
}

}  // namespace lni
