#include "cellua/algebra.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cellua {

SparseVec sparse_normalize(SparseVec terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [pos, coeff] : terms) {
    if (!out.empty() && out.back().first == pos)
      out.back().second += coeff;
    else
      out.emplace_back(pos, coeff);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second.is_zero(); }),
            out.end());
  return out;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  return sparse_normalize(std::move(merged));
}

SparseVec sparse_sub(const SparseVec& a, const SparseVec& b) {
  SparseVec merged = a;
  for (const auto& [pos, coeff] : b) merged.emplace_back(pos, -coeff);
  return sparse_normalize(std::move(merged));
}

SparseVec sparse_scaled(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out = a;
  for (auto& t : out) t.second *= c;
  return out;
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  return true;
}

Vec sparse_to_dense(const Field& f, std::size_t dim, const SparseVec& a) {
  Vec out = vec_zero(f, dim);
  for (const auto& [pos, coeff] : a) out[pos] = coeff;
  return out;
}

SparseVec dense_to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

std::string sparse_str(const SparseVec& a, const std::vector<std::string>& names) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pos, coeff] : a) {
    if (!first) os << " + ";
    first = false;
    if (!coeff.is_one()) os << coeff.str() << "*";
    os << (pos < names.size() ? names[pos] : "#" + std::to_string(pos));
  }
  return os.str();
}

SparseVec AssocAlgebra::multiply(const SparseVec& a, const SparseVec& b) const {
  SparseVec acc;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      const Scalar c = ci * cj;
      for (const auto& [k, m] : basis_product(i, j)) acc.emplace_back(k, c * m);
    }
  return sparse_normalize(std::move(acc));
}

ExactMatrix AssocAlgebra::left_regular(std::size_t i) const {
  ExactMatrix out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (const auto& [k, c] : basis_product(i, j)) out.at(k, j) = c;
  return out;
}

ExactMatrix AssocAlgebra::left_regular_elem(const SparseVec& a) const {
  ExactMatrix out(field, dim, dim);
  for (const auto& [i, ci] : a)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, c] : basis_product(i, j)) out.at(k, j) += ci * c;
  return out;
}

std::optional<std::array<std::size_t, 3>> AssocAlgebra::associativity_witness() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const SparseVec& ij = basis_product(i, j);
      for (std::size_t k = 0; k < dim; ++k) {
        SparseVec left;
        for (const auto& [m, c] : ij)
          for (const auto& [x, d] : basis_product(m, k)) left.emplace_back(x, c * d);
        SparseVec right;
        for (const auto& [m, c] : basis_product(j, k))
          for (const auto& [x, d] : basis_product(i, m)) right.emplace_back(x, c * d);
        if (!sparse_equal(sparse_normalize(std::move(left)),
                          sparse_normalize(std::move(right))))
          return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

std::optional<std::size_t> AssocAlgebra::unit_witness() const {
  for (std::size_t i = 0; i < dim; ++i) {
    const SparseVec e = {{i, Scalar::one(field)}};
    if (!sparse_equal(multiply(unit, e), e)) return i;
    if (!sparse_equal(multiply(e, unit), e)) return i;
  }
  return std::nullopt;
}

CellularDatum CellularDatum::build(Poset lambda_plus,
                                   std::vector<std::vector<std::string>> t_sets) {
  if (t_sets.size() != lambda_plus.size())
    fail(ErrorKind::Schema, "t_sets size does not match lambda_plus");
  CellularDatum d;
  d.lambda_plus = std::move(lambda_plus);
  d.t_sets = std::move(t_sets);
  for (std::size_t l = 0; l < d.t_sets.size(); ++l)
    if (d.t_sets[l].empty())
      fail(ErrorKind::Schema, "empty index set T(" + d.lambda_plus.label(l) + ")");
  d.topo = d.lambda_plus.topo_desc();
  d.offset.assign(d.t_sets.size(), 0);
  std::size_t pos = 0;
  for (const std::size_t l : d.topo) {
    d.offset[l] = pos;
    const std::size_t k = d.t_sets[l].size();
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < k; ++t) {
        d.cell.push_back({l, s, t});
        ++pos;
      }
  }
  d.dim = pos;
  return d;
}

CellularAlgebra CellularAlgebra::assemble(AssocAlgebra a, CellularDatum d) {
  if (a.dim != d.dim)
    fail(ErrorKind::Schema, "algebra dimension does not match cellular datum");
  CellularAlgebra ca;
  ca.A = std::move(a);
  ca.datum = std::move(d);
  ca.star.resize(ca.datum.dim);
  for (std::size_t p = 0; p < ca.datum.dim; ++p) {
    const CellIndex& c = ca.datum.cell[p];
    ca.star[p] = ca.datum.position(c.lambda, c.t, c.s);
  }
  if (ca.A.basis_names.empty()) {
    for (std::size_t p = 0; p < ca.datum.dim; ++p)
      ca.A.basis_names.push_back(ca.cell_name(p));
  }
  return ca;
}

SparseVec CellularAlgebra::apply_star(const SparseVec& a) const {
  SparseVec out;
  for (const auto& [pos, coeff] : a) out.emplace_back(star[pos], coeff);
  return sparse_normalize(std::move(out));
}

std::vector<std::size_t> CellularAlgebra::ideal_above(std::size_t lambda) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < dim(); ++p)
    if (datum.lambda_plus.greater(datum.cell[p].lambda, lambda)) out.push_back(p);
  return out;
}

bool CellularAlgebra::supported_above(const SparseVec& a, std::size_t lambda) const {
  for (const auto& [pos, coeff] : a)
    if (!datum.lambda_plus.greater(datum.cell[pos].lambda, lambda)) return false;
  return true;
}

std::optional<Vec> CellularAlgebra::cell_coefficients_at(std::size_t lambda,
                                                         std::size_t s,
                                                         std::size_t t,
                                                         const SparseVec& a) const {
  const std::size_t k = datum.t_size(lambda);
  const SparseVec basis = {{datum.position(lambda, s, t), Scalar::one(field())}};
  SparseVec prod = A.multiply(basis, a);
  Vec r = vec_zero(field(), k);
  SparseVec residual;
  for (const auto& [pos, coeff] : prod) {
    const CellIndex& c = datum.cell[pos];
    if (c.lambda == lambda && c.s == s)
      r[c.t] = coeff;
    else
      residual.emplace_back(pos, coeff);
  }
  if (!supported_above(residual, lambda)) return std::nullopt;
  return r;
}

Vec CellularAlgebra::cell_coefficients(std::size_t lambda, std::size_t t,
                                       const SparseVec& a) const {
  const std::size_t k = datum.t_size(lambda);
  std::optional<Vec> first;
  for (std::size_t s = 0; s < k; ++s) {
    const auto r = cell_coefficients_at(lambda, s, t, a);
    if (!r)
      fail(ErrorKind::NotCellular,
           "product leaves the triangular span at cell " + lambda_label(lambda) +
               ", row " + datum.t_label(lambda, s));
    if (!first)
      first = r;
    else if (*r != *first)
      fail(ErrorKind::NotCellular,
           "coefficients depend on the row index at cell " + lambda_label(lambda));
  }
  return *first;
}

std::string CellularAlgebra::cell_name(std::size_t pos) const {
  const CellIndex& c = datum.cell[pos];
  return "c[" + lambda_label(c.lambda) + ";" + datum.t_label(c.lambda, c.s) +
         "," + datum.t_label(c.lambda, c.t) + "]";
}

CheckReport CellularAlgebra::verify_cellular() const {
  CheckReport rep;
  const auto& names = A.basis_names;

  if (const auto w = A.associativity_witness()) {
    rep.fail("associativity", "-",
             "(" + names[(*w)[0]] + "*" + names[(*w)[1]] + ")*" + names[(*w)[2]] +
                 " != " + names[(*w)[0]] + "*(" + names[(*w)[1]] + "*" +
                 names[(*w)[2]] + ")");
  } else {
    rep.pass("associativity", "-");
  }

  if (const auto w = A.unit_witness()) {
    rep.fail("unit", names[*w], "unit does not fix " + names[*w]);
  } else {
    rep.pass("unit", "-");
  }

  // The involution reverses every basis product.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < dim() && ok; ++i)
      for (std::size_t j = 0; j < dim() && ok; ++j) {
        const SparseVec lhs = apply_star(A.basis_product(i, j));
        const SparseVec rhs =
            A.multiply({{star[j], Scalar::one(field())}},
                       {{star[i], Scalar::one(field())}});
        if (!sparse_equal(lhs, rhs)) {
          ok = false;
          detail = "star(" + names[i] + "*" + names[j] + ") != star(" +
                   names[j] + ")*star(" + names[i] + ")";
        }
      }
    rep.add("anti-automorphism", "-", ok, detail);
  }

  // Triangular right multiplication with row-independent coefficients.
  for (std::size_t l = 0; l < lambda_count(); ++l) {
    const std::size_t k = datum.t_size(l);
    bool ok = true;
    std::string detail;
    for (std::size_t t = 0; t < k && ok; ++t)
      for (std::size_t j = 0; j < dim() && ok; ++j) {
        const SparseVec a = {{j, Scalar::one(field())}};
        std::optional<Vec> first;
        for (std::size_t s = 0; s < k; ++s) {
          const auto r = cell_coefficients_at(l, s, t, a);
          if (!r) {
            ok = false;
            detail = "product " + cell_name(datum.position(l, s, t)) + "*" +
                     names[j] + " leaves the triangular span";
            break;
          }
          if (!first) {
            first = r;
          } else if (*r != *first) {
            ok = false;
            detail = "coefficients for column " + datum.t_label(l, t) + ", a=" +
                     names[j] + " depend on the row index";
            break;
          }
        }
      }
    rep.add("cell-relation", lambda_label(l), ok, detail);
  }

  // Each span above lambda is a two-sided ideal.
  for (std::size_t l = 0; l < lambda_count(); ++l) {
    bool ok = true;
    std::string detail;
    const auto above = ideal_above(l);
    for (const std::size_t b : above) {
      if (!ok) break;
      for (std::size_t j = 0; j < dim(); ++j) {
        const SparseVec eb = {{b, Scalar::one(field())}};
        const SparseVec ej = {{j, Scalar::one(field())}};
        if (!supported_above(A.multiply(eb, ej), l) ||
            !supported_above(A.multiply(ej, eb), l)) {
          ok = false;
          detail = "product with " + names[b] + " and " + names[j] +
                   " leaves the span above " + lambda_label(l);
          break;
        }
      }
    }
    rep.add("ideal-above", lambda_label(l), ok, detail);
  }

  return rep;
}

} // namespace cellua
