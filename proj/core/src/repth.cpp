#include "cellua/repth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "cellua/parallel.hpp"

namespace cellua {

namespace {

void require_radical_field(const AssocAlgebra& A) {
  if (A.field.is_rational()) return;
  if (A.field.prime() > A.dim) return;
  fail(ErrorKind::UnsupportedCharacteristic,
       "radical computation needs characteristic 0 or p > dim; got p=" +
           std::to_string(A.field.prime()) + " with dim=" +
           std::to_string(A.dim));
}

/// Gram matrix of the trace form (a, b) -> tr(L_a L_b) on the given algebra.
ExactMatrix trace_form(const AssocAlgebra& A) {
  std::vector<ExactMatrix> reg;
  reg.reserve(A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) reg.push_back(A.left_regular(i));
  ExactMatrix g(A.field, A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = i; j < A.dim; ++j) {
      Scalar tr = Scalar::zero(A.field);
      for (std::size_t r = 0; r < A.dim; ++r)
        for (std::size_t c = 0; c < A.dim; ++c)
          tr += reg[i].at(r, c) * reg[j].at(c, r);
      g.at(i, j) = tr;
      g.at(j, i) = tr;
    }
  return g;
}

RowSpace product_span(const AssocAlgebra& A, const RowSpace& u,
                      const RowSpace& v) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      const SparseVec p = A.multiply(dense_to_sparse(u.basis().row(i)),
                                     dense_to_sparse(v.basis().row(j)));
      rows.push_back(sparse_to_dense(A.field, A.dim, p));
    }
  return RowSpace::span(A.field, A.dim, rows);
}

} // namespace

Radical jacobson_radical(const AssocAlgebra& A) {
  require_radical_field(A);
  Radical out;
  out.space = RowSpace::span(A.field, A.dim, kernel_rows(trace_form(A)));
  for (std::size_t r = 0; r < out.space.dim(); ++r)
    out.elements.push_back(dense_to_sparse(out.space.basis().row(r)));

  // Two-sided ideal.
  for (const auto& j : out.elements)
    for (std::size_t i = 0; i < A.dim; ++i) {
      const SparseVec e = {{i, Scalar::one(A.field)}};
      if (!out.space.contains(sparse_to_dense(A.field, A.dim, A.multiply(j, e))) ||
          !out.space.contains(sparse_to_dense(A.field, A.dim, A.multiply(e, j))))
        fail(ErrorKind::Internal, "radical candidate is not a two-sided ideal");
    }

  // Nilpotency, and the nilpotency degree.
  RowSpace power = out.space;
  out.nilpotency = 1;
  while (power.dim() > 0) {
    const RowSpace next = product_span(A, power, out.space);
    if (next.dim() >= power.dim())
      fail(ErrorKind::Internal, "radical candidate is not nilpotent");
    power = next;
    ++out.nilpotency;
    if (out.nilpotency > A.dim + 1)
      fail(ErrorKind::Internal, "radical nilpotency exceeds the dimension");
  }

  // The quotient by the candidate must be semisimple.
  if (out.space.dim() > 0) {
    const QuotientAlgebra q = quotient_algebra(A, out.space);
    if (rank(trace_form(q.alg)) != q.alg.dim)
      fail(ErrorKind::Internal, "quotient by the radical is not semisimple");
  }
  return out;
}

QuotientAlgebra quotient_algebra(const AssocAlgebra& A, const RowSpace& ideal) {
  QuotientAlgebra out;
  out.coords = ideal.complement_coords();
  const std::size_t n = out.coords.size();
  out.alg.field = A.field;
  out.alg.dim = n;
  for (const std::size_t c : out.coords)
    out.alg.basis_names.push_back(A.basis_names[c] + "~");

  std::vector<Vec> lift_rows;
  for (const std::size_t c : out.coords) {
    Vec e = vec_zero(A.field, A.dim);
    e[c] = Scalar::one(A.field);
    lift_rows.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < ideal.basis().rows(); ++r)
    lift_rows.push_back(ideal.basis().row(r));
  const ExactMatrix basis_mat =
      ExactMatrix::from_rows(A.field, A.dim, lift_rows).transpose();
  auto project = [&](const SparseVec& v) {
    const auto sol = solve(basis_mat, sparse_to_dense(A.field, A.dim, v));
    if (!sol) fail(ErrorKind::Internal, "quotient_algebra projection failed");
    SparseVec img;
    for (std::size_t i = 0; i < n; ++i)
      if (!(*sol)[i].is_zero()) img.emplace_back(i, (*sol)[i]);
    return img;
  };

  out.alg.mult.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec ei = {{out.coords[i], Scalar::one(A.field)}};
      const SparseVec ej = {{out.coords[j], Scalar::one(A.field)}};
      out.alg.basis_product(i, j) = project(A.multiply(ei, ej));
    }
  out.alg.unit = project(A.unit);
  if (A.unit.empty() || out.alg.unit.empty())
    fail(ErrorKind::Internal, "quotient algebra lost the unit");
  return out;
}

std::vector<CellModule> radical_filtration(const AssocAlgebra& A,
                                           const CellModule& m,
                                           const Radical& j) {
  std::vector<CellModule> layers;
  if (m.dim == 0) return layers;

  // Row-view matrices of the radical basis elements.
  std::vector<ExactMatrix> jmats;
  for (const auto& e : j.elements) jmats.push_back(m.row_act_elem(A.field, e));

  std::vector<Vec> full;
  for (std::size_t i = 0; i < m.dim; ++i) {
    Vec e = vec_zero(A.field, m.dim);
    e[i] = Scalar::one(A.field);
    full.push_back(std::move(e));
  }
  RowSpace current = RowSpace::span(A.field, m.dim, full);
  std::size_t level = 0;
  while (current.dim() > 0) {
    std::vector<Vec> next_rows;
    for (const auto& jm : jmats)
      for (std::size_t r = 0; r < current.basis().rows(); ++r)
        next_rows.push_back(vec_mul(current.basis().row(r), jm));
    const RowSpace next = RowSpace::span(A.field, m.dim, next_rows);
    if (next.dim() >= current.dim())
      fail(ErrorKind::Internal, "radical filtration does not descend");
    // Layer = current / next, as a module over A.
    const CellModule cur_mod = submodule(m, current, m.label + "|layer");
    RowSpace next_in_cur(A.field, cur_mod.dim);
    {
      std::vector<Vec> coords;
      for (std::size_t r = 0; r < next.basis().rows(); ++r) {
        const auto c = current.coordinates(next.basis().row(r));
        if (!c) fail(ErrorKind::Internal, "filtration step escapes the layer");
        coords.push_back(*c);
      }
      next_in_cur = RowSpace::span(A.field, cur_mod.dim, coords);
    }
    auto q = quotient_module(cur_mod, next_in_cur,
                             m.label + "/rad^" + std::to_string(level + 1));
    layers.push_back(std::move(q.mod));
    current = next;
    ++level;
  }
  return layers;
}

std::size_t hom_dimension(const AssocAlgebra& A, const CellModule& m,
                          const CellModule& n) {
  if (m.side != n.side)
    fail(ErrorKind::Input, "hom_dimension: modules on different sides");
  if (m.dim == 0 || n.dim == 0) return 0;
  // Row view: F with rowact_m(i) F = F rowact_n(i) for all i.
  const std::size_t vars = m.dim * n.dim;
  std::vector<Vec> eqs;
  for (std::size_t i = 0; i < A.dim; ++i) {
    const ExactMatrix am = m.row_act(i);
    const ExactMatrix an = n.row_act(i);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) {
        Vec eq = vec_zero(A.field, vars);
        for (std::size_t k = 0; k < m.dim; ++k)
          eq[k * n.dim + c] += am.at(r, k);
        for (std::size_t k = 0; k < n.dim; ++k)
          eq[r * n.dim + k] -= an.at(k, c);
        eqs.push_back(std::move(eq));
      }
  }
  const ExactMatrix sys = ExactMatrix::from_rows(A.field, vars, eqs);
  return vars - rank(sys);
}

std::vector<long long> composition_multiplicities(
    const AssocAlgebra& A, const CellModule& m,
    const std::vector<CellModule>& simples, const Radical& j) {
  std::vector<long long> mult(simples.size(), 0);
  for (const CellModule& layer : radical_filtration(A, m, j))
    for (std::size_t k = 0; k < simples.size(); ++k)
      mult[k] += static_cast<long long>(hom_dimension(A, layer, simples[k]));
  long long total = 0;
  for (std::size_t k = 0; k < simples.size(); ++k)
    total += mult[k] * static_cast<long long>(simples[k].dim);
  if (total != static_cast<long long>(m.dim))
    fail(ErrorKind::Internal,
         "composition multiplicities do not account for dim " + m.label);
  return mult;
}

long long DecompositionMatrix::get(const std::string& row,
                                   const std::string& col) const {
  const auto r = std::find(row_labels.begin(), row_labels.end(), row);
  const auto c = std::find(col_labels.begin(), col_labels.end(), col);
  if (r == row_labels.end() || c == col_labels.end()) return 0;
  return entries[r - row_labels.begin()][c - col_labels.begin()];
}

bool DecompositionMatrix::has_row(const std::string& row) const {
  return std::find(row_labels.begin(), row_labels.end(), row) != row_labels.end();
}

void DecompositionMatrix::to_csv(std::ostream& os) const {
  os << "row";
  for (const auto& c : col_labels) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    os << row_labels[r];
    for (std::size_t c = 0; c < col_labels.size(); ++c) os << ',' << entries[r][c];
    os << '\n';
  }
}

bool DecompositionMatrix::operator==(const DecompositionMatrix& o) const {
  return row_labels == o.row_labels && col_labels == o.col_labels &&
         entries == o.entries;
}

DecompositionMatrix decomposition_table(const AssocAlgebra& A,
                                        const std::vector<CellModule>& standards,
                                        const std::vector<std::string>& row_labels,
                                        const std::vector<CellModule>& simples,
                                        const std::vector<std::string>& col_labels,
                                        const Radical& j) {
  for (const CellModule& s : simples)
    if (hom_dimension(A, s, s) != 1)
      fail(ErrorKind::Internal, "non-split simple module " + s.label);
  DecompositionMatrix d;
  d.row_labels = row_labels;
  d.col_labels = col_labels;
  d.entries.assign(standards.size(), {});
  parallel_for(standards.size(), [&](std::size_t r) {
    d.entries[r] = composition_multiplicities(A, standards[r], simples, j);
  });
  return d;
}

DecompositionMatrix decomposition_matrix(const CellularAlgebra& ca, Side side) {
  const Radical j = jacobson_radical(ca.A);
  std::vector<CellModule> standards;
  std::vector<std::string> row_labels;
  for (std::size_t l = 0; l < ca.lambda_count(); ++l) {
    standards.push_back(standard_module(ca, l, side));
    row_labels.push_back(ca.lambda_label(l));
  }
  std::vector<CellModule> simples;
  std::vector<std::string> col_labels;
  for (std::size_t l = 0; l < ca.lambda_count(); ++l)
    if (simple_dimension(ca, l) > 0) {
      simples.push_back(simple_module(ca, l, side));
      col_labels.push_back(ca.lambda_label(l));
    }
  return decomposition_table(ca.A, standards, row_labels, simples, col_labels, j);
}

bool LinkagePartition::same_block(const std::string& a,
                                  const std::string& b) const {
  for (const auto& blk : blocks) {
    const bool ha = std::find(blk.begin(), blk.end(), a) != blk.end();
    const bool hb = std::find(blk.begin(), blk.end(), b) != blk.end();
    if (ha || hb) return ha && hb;
  }
  return false;
}

LinkagePartition linkage_partition(const DecompositionMatrix& d) {
  const std::size_t n = d.row_labels.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < d.col_labels.size(); ++c) {
    std::size_t first = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (d.entries[r][c] == 0) continue;
      if (first == n)
        first = r;
      else
        parent[find(r)] = find(first);
    }
  }
  std::map<std::size_t, std::vector<std::string>> groups;
  for (std::size_t r = 0; r < n; ++r) groups[find(r)].push_back(d.row_labels[r]);
  LinkagePartition out;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> ordered;
  for (auto& [root, labels] : groups) {
    std::size_t smallest = n;
    for (const auto& lab : labels)
      smallest = std::min(smallest,
                          static_cast<std::size_t>(
                              std::find(d.row_labels.begin(), d.row_labels.end(),
                                        lab) -
                              d.row_labels.begin()));
    ordered.emplace_back(smallest, labels);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [_, labels] : ordered) out.blocks.push_back(labels);
  return out;
}

DecompositionMatrix cartan_via_formula(const DecompositionMatrix& left,
                                       const DecompositionMatrix& right) {
  if (left.row_labels != right.row_labels)
    fail(ErrorKind::Input, "cartan_via_formula: row label mismatch");
  DecompositionMatrix c;
  c.row_labels = left.col_labels;
  c.col_labels = right.col_labels;
  c.entries.assign(left.col_labels.size(),
                   std::vector<long long>(right.col_labels.size(), 0));
  for (std::size_t x = 0; x < left.col_labels.size(); ++x)
    for (std::size_t y = 0; y < right.col_labels.size(); ++y) {
      long long sum = 0;
      for (std::size_t r = 0; r < left.row_labels.size(); ++r)
        sum += left.entries[r][x] * right.entries[r][y];
      c.entries[x][y] = sum;
    }
  return c;
}

} // namespace cellua
