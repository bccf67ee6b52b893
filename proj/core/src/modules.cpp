#include "cellua/modules.hpp"

#include <algorithm>

namespace cellua {

ExactMatrix CellModule::row_act_elem(const Field& f, const SparseVec& a) const {
  ExactMatrix out(f, dim, dim);
  for (const auto& [i, c] : a) out = out + row_act(i).scaled(c);
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>>
CellModule::representation_witness(const AssocAlgebra& A) const {
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j) {
      ExactMatrix expect(A.field, dim, dim);
      for (const auto& [k, c] : A.basis_product(i, j))
        expect = expect + act[k].scaled(c);
      if (act[i] * act[j] != expect) return std::make_pair(i, j);
    }
  return std::nullopt;
}

CellModule direct_sum(const CellModule& m, const CellModule& n,
                      const std::string& label) {
  if (m.side != n.side)
    fail(ErrorKind::DimensionMismatch, "direct_sum: side mismatch");
  CellModule out;
  out.label = label;
  out.side = m.side;
  out.dim = m.dim + n.dim;
  out.basis_labels = m.basis_labels;
  out.basis_labels.insert(out.basis_labels.end(), n.basis_labels.begin(),
                          n.basis_labels.end());
  for (std::size_t i = 0; i < m.act.size(); ++i) {
    ExactMatrix blk(m.act[i].field(), out.dim, out.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) blk.at(r, c) = m.act[i].at(r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c)
        blk.at(m.dim + r, m.dim + c) = n.act[i].at(r, c);
    out.act.push_back(std::move(blk));
  }
  return out;
}

RowSpace spin(const CellModule& m, const std::vector<Vec>& seed) {
  if (m.act.empty()) fail(ErrorKind::Internal, "spin: module without actions");
  const Field& f = m.act[0].field();
  RowSpace space = RowSpace::span(f, m.dim, seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < m.act.size() && !grew; ++i) {
      const ExactMatrix a = m.row_act(i);
      for (std::size_t r = 0; r < space.basis().rows(); ++r) {
        const Vec img = vec_mul(space.basis().row(r), a);
        if (!space.contains(img)) {
          space = space.sum(RowSpace::span(f, m.dim, {img}));
          grew = true;
          break;
        }
      }
    }
  }
  return space;
}

bool is_invariant(const CellModule& m, const RowSpace& s) {
  for (std::size_t i = 0; i < m.act.size(); ++i) {
    const ExactMatrix a = m.row_act(i);
    for (std::size_t r = 0; r < s.basis().rows(); ++r)
      if (!s.contains(vec_mul(s.basis().row(r), a))) return false;
  }
  return true;
}

QuotientModule quotient_module(const CellModule& m, const RowSpace& s,
                               const std::string& label) {
  if (!is_invariant(m, s))
    fail(ErrorKind::Internal, "quotient_module: subspace not invariant");
  const Field& f = m.act.empty() ? Field() : m.act[0].field();
  QuotientModule q;
  q.killed = s;
  q.coords = s.complement_coords();
  q.mod.label = label;
  q.mod.side = m.side;
  q.mod.dim = q.coords.size();
  for (const std::size_t c : q.coords)
    q.mod.basis_labels.push_back(c < m.basis_labels.size() ? m.basis_labels[c]
                                                           : std::to_string(c));
  // Solve images against [complement; killed] to read induced actions.
  std::vector<Vec> lift_rows;
  for (const std::size_t c : q.coords) {
    Vec e = vec_zero(f, m.dim);
    e[c] = Scalar::one(f);
    lift_rows.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < s.basis().rows(); ++r)
    lift_rows.push_back(s.basis().row(r));
  const ExactMatrix basis_mat =
      ExactMatrix::from_rows(f, m.dim, lift_rows).transpose();
  auto express = [&](const Vec& v) {
    const auto sol = solve(basis_mat, v);
    if (!sol) fail(ErrorKind::Internal, "quotient_module: projection failed");
    Vec head(sol->begin(), sol->begin() + static_cast<long>(q.coords.size()));
    return head;
  };
  for (std::size_t i = 0; i < m.act.size(); ++i) {
    const ExactMatrix a = m.row_act(i);
    ExactMatrix qa(f, q.mod.dim, q.mod.dim);
    for (std::size_t r = 0; r < q.coords.size(); ++r)
      qa.set_row(r, express(vec_mul(lift_rows[r], a)));
    q.mod.act.push_back(m.side == Side::Right ? qa : qa.transpose());
  }
  return q;
}

Vec QuotientModule::project(const Vec& v) const {
  // Express v in the [complement; killed] basis; the head is the image.
  const Field f = v.empty() ? Field() : v[0].field();
  std::vector<Vec> lift_rows;
  for (const std::size_t c : coords) {
    Vec e = vec_zero(f, v.size());
    e[c] = Scalar::one(f);
    lift_rows.push_back(std::move(e));
  }
  const ExactMatrix& kb = killed.basis();
  for (std::size_t i = 0; i < kb.rows(); ++i) lift_rows.push_back(kb.row(i));
  const ExactMatrix basis_mat =
      ExactMatrix::from_rows(f, v.size(), lift_rows).transpose();
  const auto sol = solve(basis_mat, v);
  if (!sol) fail(ErrorKind::Internal, "QuotientModule::project failed");
  return Vec(sol->begin(), sol->begin() + static_cast<long>(coords.size()));
}

CellModule submodule(const CellModule& m, const RowSpace& s,
                     const std::string& label) {
  if (!is_invariant(m, s))
    fail(ErrorKind::Internal, "submodule: subspace not invariant");
  const Field& f = m.act.empty() ? Field() : m.act[0].field();
  CellModule out;
  out.label = label;
  out.side = m.side;
  out.dim = s.dim();
  for (std::size_t i = 0; i < out.dim; ++i)
    out.basis_labels.push_back("b" + std::to_string(i));
  const ExactMatrix bt = s.basis().transpose();
  for (std::size_t i = 0; i < m.act.size(); ++i) {
    const ExactMatrix a = m.row_act(i);
    ExactMatrix sub(f, out.dim, out.dim);
    for (std::size_t r = 0; r < out.dim; ++r) {
      const auto coords = s.coordinates(vec_mul(s.basis().row(r), a));
      if (!coords) fail(ErrorKind::Internal, "submodule: image escapes span");
      sub.set_row(r, *coords);
    }
    out.act.push_back(m.side == Side::Right ? sub : sub.transpose());
  }
  return out;
}

CellModule standard_module(const CellularAlgebra& ca, std::size_t lambda,
                           Side side) {
  const std::size_t k = ca.datum.t_size(lambda);
  CellModule m;
  m.label = (side == Side::Right ? "W(" : "#W(") + ca.lambda_label(lambda) + ")";
  m.side = side;
  m.dim = k;
  m.basis_labels = ca.datum.t_sets[lambda];
  for (std::size_t i = 0; i < ca.dim(); ++i) {
    const SparseVec a = {{side == Side::Right ? i : ca.star[i],
                          Scalar::one(ca.field())}};
    ExactMatrix mat(ca.field(), k, k);
    for (std::size_t t = 0; t < k; ++t) {
      const Vec r = ca.cell_coefficients(lambda, t, a);
      if (side == Side::Right)
        mat.set_row(t, r);
      else
        for (std::size_t v = 0; v < k; ++v) mat.at(v, t) = r[v];
    }
    m.act.push_back(std::move(mat));
  }
  if (const auto w = m.representation_witness(ca.A))
    fail(ErrorKind::NotCellular,
         "standard module action is not a representation at (" +
             ca.A.basis_names[w->first] + ", " + ca.A.basis_names[w->second] + ")");
  return m;
}

namespace {

// Entry (s,t) of the form at (u,v): coefficient of c_{uv} in c_{us} c_{tv},
// with the remainder required to sit above lambda. nullopt on violation.
std::optional<Scalar> form_entry_at(const CellularAlgebra& ca, std::size_t lambda,
                                    std::size_t s, std::size_t t, std::size_t u,
                                    std::size_t v) {
  const Field& f = ca.field();
  const SparseVec prod =
      ca.A.multiply({{ca.datum.position(lambda, u, s), Scalar::one(f)}},
                    {{ca.datum.position(lambda, t, v), Scalar::one(f)}});
  Scalar entry = Scalar::zero(f);
  SparseVec residual;
  for (const auto& [pos, coeff] : prod) {
    const CellIndex& c = ca.datum.cell[pos];
    if (c.lambda == lambda && c.s == u && c.t == v)
      entry = coeff;
    else
      residual.emplace_back(pos, coeff);
  }
  if (!ca.supported_above(residual, lambda)) return std::nullopt;
  return entry;
}

} // namespace

GramForm gram(const CellularAlgebra& ca, std::size_t lambda) {
  const std::size_t k = ca.datum.t_size(lambda);
  GramForm g{ca.lambda_label(lambda), ExactMatrix(ca.field(), k, k)};
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      std::optional<Scalar> first;
      for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
          const auto e = form_entry_at(ca, lambda, s, t, u, v);
          if (!e)
            fail(ErrorKind::NotCellular,
                 "form product escapes the span above " + g.lambda);
          if (!first)
            first = *e;
          else if (*first != *e)
            fail(ErrorKind::NotCellular,
                 "form entry at " + g.lambda + " depends on the auxiliary pair");
        }
      g.matrix.at(s, t) = *first;
    }
  return g;
}

GramForm left_gram(const CellularAlgebra& ca, std::size_t lambda) {
  const std::size_t k = ca.datum.t_size(lambda);
  const Field& f = ca.field();
  GramForm g{ca.lambda_label(lambda), ExactMatrix(f, k, k)};
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      std::optional<Scalar> first;
      for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
          // Starred route: coefficient of c_{vu} in c_{vt} c_{su}.
          const SparseVec prod =
              ca.A.multiply({{ca.datum.position(lambda, v, t), Scalar::one(f)}},
                            {{ca.datum.position(lambda, s, u), Scalar::one(f)}});
          Scalar entry = Scalar::zero(f);
          SparseVec residual;
          for (const auto& [pos, coeff] : prod) {
            const CellIndex& c = ca.datum.cell[pos];
            if (c.lambda == lambda && c.s == v && c.t == u)
              entry = coeff;
            else
              residual.emplace_back(pos, coeff);
          }
          if (!ca.supported_above(residual, lambda))
            fail(ErrorKind::NotCellular,
                 "left form product escapes the span above " + g.lambda);
          if (!first)
            first = entry;
          else if (*first != entry)
            fail(ErrorKind::NotCellular,
                 "left form entry at " + g.lambda + " depends on the auxiliary pair");
        }
      g.matrix.at(s, t) = *first;
    }
  return g;
}

RowSpace gram_radical(const CellularAlgebra& ca, const GramForm& g,
                      const CellModule& w) {
  RowSpace rad = RowSpace::span(ca.field(), w.dim, kernel_rows(g.matrix));
  if (!is_invariant(w, rad))
    fail(ErrorKind::NotCellular,
         "form radical is not action-invariant at " + g.lambda);
  return rad;
}

std::size_t simple_dimension(const CellularAlgebra& ca, std::size_t lambda) {
  return rank(gram(ca, lambda).matrix);
}

std::vector<std::string> lambda_plus_zero(const CellularAlgebra& ca) {
  std::vector<std::string> out;
  for (std::size_t l = 0; l < ca.lambda_count(); ++l)
    if (simple_dimension(ca, l) > 0) out.push_back(ca.lambda_label(l));
  return out;
}

CellModule simple_module(const CellularAlgebra& ca, std::size_t lambda,
                         Side side) {
  const CellModule w = standard_module(ca, lambda, side);
  const GramForm g = gram(ca, lambda);
  const RowSpace rad = gram_radical(ca, g, w);
  if (rad.dim() == w.dim)
    fail(ErrorKind::Input, "zero simple module at " + g.lambda);
  auto q = quotient_module(
      w, rad, (side == Side::Right ? "L(" : "#L(") + g.lambda + ")");
  return q.mod;
}

CheckReport embed_standard(const CellularAlgebra& ca, std::size_t lambda) {
  CheckReport rep;
  const Field& f = ca.field();
  const std::size_t k = ca.datum.t_size(lambda);
  const std::string label = ca.lambda_label(lambda);
  const CellModule w = standard_module(ca, lambda, Side::Right);
  // Quotient coordinates: everything not above lambda.
  std::vector<std::size_t> alive;
  for (std::size_t p = 0; p < ca.dim(); ++p)
    if (!ca.datum.lambda_plus.greater(ca.datum.cell[p].lambda, lambda))
      alive.push_back(p);
  std::vector<std::size_t> img(ca.dim(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < alive.size(); ++i) img[alive[i]] = i;

  // Images of the basis under t -> c_{st} for the fixed first s.
  const std::size_t s = 0;
  std::vector<Vec> images;
  for (std::size_t t = 0; t < k; ++t) {
    Vec v = vec_zero(f, alive.size());
    v[img[ca.datum.position(lambda, s, t)]] = Scalar::one(f);
    images.push_back(std::move(v));
  }
  const bool injective =
      RowSpace::span(f, alive.size(), images).dim() == k;
  rep.add("standard-embedding-injective", label, injective,
          injective ? "" : "images are dependent modulo higher cells");

  bool equivariant = true;
  std::string detail;
  for (std::size_t j = 0; j < ca.dim() && equivariant; ++j) {
    const SparseVec a = {{j, Scalar::one(f)}};
    for (std::size_t t = 0; t < k; ++t) {
      // phi(c_t * a): push the module action through phi.
      const Vec r = w.act[j].row(t);
      Vec lhs = vec_zero(f, alive.size());
      for (std::size_t v = 0; v < k; ++v)
        if (!r[v].is_zero())
          lhs[img[ca.datum.position(lambda, s, v)]] += r[v];
      // phi(c_t) * a, reduced modulo higher cells.
      const SparseVec prod = ca.A.multiply(
          {{ca.datum.position(lambda, s, t), Scalar::one(f)}}, a);
      Vec rhs = vec_zero(f, alive.size());
      for (const auto& [pos, coeff] : prod)
        if (img[pos] != static_cast<std::size_t>(-1)) rhs[img[pos]] += coeff;
      if (lhs != rhs) {
        equivariant = false;
        detail = "fails at t=" + ca.datum.t_label(lambda, t) + ", a=" +
                 ca.A.basis_names[j];
        break;
      }
    }
  }
  rep.add("standard-embedding-equivariant", label, equivariant, detail);
  return rep;
}

QuotientCellular quotient_cellular(const CellularAlgebra& ca,
                                   const SaturatedSubset& s) {
  const Poset& lp = ca.datum.lambda_plus;
  std::vector<bool> in_s(lp.size(), false);
  for (const auto& lab : s.labels) in_s[lp.index_or_fail(lab)] = true;
  // Saturation: anything above a member is a member.
  for (std::size_t b = 0; b < lp.size(); ++b) {
    if (!in_s[b]) continue;
    for (std::size_t a = 0; a < lp.size(); ++a)
      if (lp.greater(a, b) && !in_s[a])
        fail(ErrorKind::NotSaturated, "subset is not upward closed: " +
                                          lp.label(a) + " > " + lp.label(b) +
                                          " but " + lp.label(a) + " is missing");
  }
  std::size_t kept_lambdas = 0;
  for (std::size_t l = 0; l < lp.size(); ++l)
    if (!in_s[l]) ++kept_lambdas;
  if (kept_lambdas == 0)
    fail(ErrorKind::Input, "quotient by the full label set is not allowed");

  QuotientCellular out;
  out.image_pos.assign(ca.dim(), QuotientCellular::npos);

  std::vector<std::string> kept_labels;
  std::vector<std::vector<std::string>> kept_tsets;
  for (std::size_t l = 0; l < lp.size(); ++l) {
    if (in_s[l]) continue;
    kept_labels.push_back(lp.label(l));
    kept_tsets.push_back(ca.datum.t_sets[l]);
  }
  CellularDatum datum =
      CellularDatum::build(lp.restrict(kept_labels), std::move(kept_tsets));

  // Parent position for each quotient position.
  out.parent_pos.resize(datum.dim);
  for (std::size_t p = 0; p < datum.dim; ++p) {
    const CellIndex& c = datum.cell[p];
    const std::size_t parent_lambda =
        lp.index_or_fail(datum.lambda_plus.label(c.lambda));
    out.parent_pos[p] = ca.datum.position(parent_lambda, c.s, c.t);
    out.image_pos[out.parent_pos[p]] = p;
  }

  // The span of the dropped cells must be a two-sided ideal.
  for (std::size_t p = 0; p < ca.dim(); ++p) {
    if (out.image_pos[p] != QuotientCellular::npos) continue;
    for (std::size_t j = 0; j < ca.dim(); ++j)
      for (const SparseVec& prod :
           {ca.A.basis_product(p, j), ca.A.basis_product(j, p)})
        for (const auto& [pos, coeff] : prod)
          if (out.image_pos[pos] != QuotientCellular::npos)
            fail(ErrorKind::Internal,
                 "dropped cells do not span an ideal (product with " +
                     ca.A.basis_names[j] + ")");
  }

  AssocAlgebra qa;
  qa.field = ca.field();
  qa.dim = datum.dim;
  for (std::size_t p = 0; p < datum.dim; ++p)
    qa.basis_names.push_back(ca.A.basis_names[out.parent_pos[p]]);
  qa.mult.assign(datum.dim * datum.dim, {});
  auto project = [&](const SparseVec& v) {
    SparseVec img;
    for (const auto& [pos, coeff] : v)
      if (out.image_pos[pos] != QuotientCellular::npos)
        img.emplace_back(out.image_pos[pos], coeff);
    return sparse_normalize(std::move(img));
  };
  for (std::size_t i = 0; i < datum.dim; ++i)
    for (std::size_t j = 0; j < datum.dim; ++j)
      qa.basis_product(i, j) =
          project(ca.A.basis_product(out.parent_pos[i], out.parent_pos[j]));
  qa.unit = project(ca.A.unit);

  out.alg = CellularAlgebra::assemble(std::move(qa), std::move(datum));
  const CheckReport rep = out.alg.verify_cellular();
  if (!rep.ok())
    fail(ErrorKind::Internal, "quotient is not cellular");
  return out;
}

} // namespace cellua
