#include "cellua/alpha.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cellua/parallel.hpp"

namespace cellua {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

SparseVec unit_vec(const Field& f, std::size_t pos) {
  return {{pos, Scalar::one(f)}};
}

} // namespace

std::string omega_label(const std::string& lambda, int eps) {
  return "(" + lambda + "," + std::to_string(eps) + ")";
}

// ---------------------------------------------------------------------------
// Assumption verification and the index partition
// ---------------------------------------------------------------------------

namespace {

/// Unique mu whose idempotent fixes column t of cell lambda, npos otherwise.
std::size_t column_mu(const CellularAlgebra& ca, const AlphaDatum& ad,
                      std::size_t lambda, std::size_t t, std::string* why) {
  const Field& f = ca.field();
  const std::size_t k = ca.datum.t_size(lambda);
  std::size_t found = npos;
  for (std::size_t m = 0; m < ad.lambda.size(); ++m) {
    bool fixes = true;
    for (std::size_t s = 0; s < k && fixes; ++s) {
      const SparseVec c = unit_vec(f, ca.datum.position(lambda, s, t));
      fixes = sparse_equal(ca.A.multiply(c, ad.idempotents[m]), c);
    }
    if (!fixes) continue;
    if (found != npos) {
      if (why)
        *why = "both " + ad.lambda[found] + " and " + ad.lambda[m] +
               " fix column " + ca.datum.t_label(lambda, t);
      return npos;
    }
    found = m;
  }
  if (found == npos && why)
    *why = "no idempotent fixes column " + ca.datum.t_label(lambda, t) +
           " of " + ca.lambda_label(lambda);
  return found;
}

} // namespace

CheckReport verify_assumptions(const CellularAlgebra& ca, const AlphaDatum& ad) {
  CheckReport rep;
  const Field& f = ca.field();

  // The cell poset sits inside the ambient poset, order included.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t l = 0; l < ca.lambda_count() && ok; ++l)
      if (!ad.lambda_tilde.index(ca.lambda_label(l))) {
        ok = false;
        detail = ca.lambda_label(l) + " missing from the ambient poset";
      }
    for (std::size_t a = 0; a < ca.lambda_count() && ok; ++a)
      for (std::size_t b = 0; b < ca.lambda_count() && ok; ++b) {
        if (!ca.datum.lambda_plus.greater(a, b)) continue;
        const auto ia = ad.lambda_tilde.index(ca.lambda_label(a));
        const auto ib = ad.lambda_tilde.index(ca.lambda_label(b));
        if (!ad.lambda_tilde.greater(*ia, *ib)) {
          ok = false;
          detail = "cell order " + ca.lambda_label(a) + " > " +
                   ca.lambda_label(b) + " is not carried by the ambient order";
        }
      }
    for (const auto& mu : ad.lambda)
      if (ok && !ad.lambda_tilde.index(mu)) {
        ok = false;
        detail = "idempotent label " + mu + " missing from the ambient poset";
      }
    rep.add("order-extension", "-", ok, detail);
  }
  if (!rep.ok()) return rep;

  // Orthogonal idempotent decomposition of the unit.
  {
    SparseVec sum;
    for (const auto& e : ad.idempotents) sum = sparse_add(sum, e);
    const bool sum_ok = sparse_equal(sum, ca.A.unit);
    rep.add("idempotent-sum", "-", sum_ok,
            sum_ok ? "" : "idempotents do not sum to the unit");
    bool nz = true;
    std::string nz_detail;
    for (std::size_t m = 0; m < ad.lambda.size(); ++m)
      if (ad.idempotents[m].empty()) {
        nz = false;
        nz_detail = "e_" + ad.lambda[m] + " is zero";
      }
    rep.add("idempotent-nonzero", "-", nz, nz_detail);
    bool orth = true;
    std::string orth_detail;
    for (std::size_t m = 0; m < ad.lambda.size() && orth; ++m)
      for (std::size_t n = 0; n < ad.lambda.size() && orth; ++n) {
        const SparseVec prod =
            ca.A.multiply(ad.idempotents[m], ad.idempotents[n]);
        const SparseVec expect = m == n ? ad.idempotents[m] : SparseVec{};
        if (!sparse_equal(prod, expect)) {
          orth = false;
          orth_detail = "e_" + ad.lambda[m] + " * e_" + ad.lambda[n] +
                        " is not " + (m == n ? "idempotent" : "zero");
        }
      }
    rep.add("idempotent-orthogonal", "-", orth, orth_detail);
  }

  // Each idempotent is supported on cells at or above its label.
  for (std::size_t m = 0; m < ad.lambda.size(); ++m) {
    bool ok = true;
    std::string detail;
    const std::size_t imu = ad.lambda_tilde.index_or_fail(ad.lambda[m]);
    for (const auto& [pos, coeff] : ad.idempotents[m]) {
      const std::size_t il = ad.lambda_tilde.index_or_fail(
          ca.lambda_label(ca.datum.cell[pos].lambda));
      if (!ad.lambda_tilde.geq(il, imu)) {
        ok = false;
        detail = "support of e_" + ad.lambda[m] + " reaches cell " +
                 ca.lambda_label(ca.datum.cell[pos].lambda);
        break;
      }
    }
    rep.add("idempotent-support", ad.lambda[m], ok, detail);
  }

  // Unique column-fixing idempotent, which also fixes the matching rows.
  std::vector<std::vector<std::size_t>> mu_of(ca.lambda_count());
  bool a4_ok = true;
  for (std::size_t l = 0; l < ca.lambda_count(); ++l) {
    const std::size_t k = ca.datum.t_size(l);
    mu_of[l].assign(k, npos);
    bool col_ok = true, row_ok = true;
    std::string col_detail, row_detail;
    for (std::size_t t = 0; t < k; ++t) {
      std::string why;
      const std::size_t m = column_mu(ca, ad, l, t, &why);
      if (m == npos) {
        col_ok = false;
        col_detail = why;
        a4_ok = false;
        continue;
      }
      mu_of[l][t] = m;
      for (std::size_t u = 0; u < k && row_ok; ++u) {
        const SparseVec c = unit_vec(f, ca.datum.position(l, t, u));
        if (!sparse_equal(ca.A.multiply(ad.idempotents[m], c), c)) {
          row_ok = false;
          row_detail = "e_" + ad.lambda[m] + " does not fix row " +
                       ca.datum.t_label(l, t);
          a4_ok = false;
        }
      }
    }
    rep.add("column-fixing", ca.lambda_label(l), col_ok, col_detail);
    rep.add("row-fixing", ca.lambda_label(l), row_ok, row_detail);
  }

  if (a4_ok) {
    // Idempotent terms stay on their own (mu, mu) square.
    for (std::size_t m = 0; m < ad.lambda.size(); ++m) {
      bool ok = true;
      std::string detail;
      for (const auto& [pos, coeff] : ad.idempotents[m]) {
        const CellIndex& c = ca.datum.cell[pos];
        if (mu_of[c.lambda][c.s] != m || mu_of[c.lambda][c.t] != m) {
          ok = false;
          detail = "term " + ca.cell_name(pos) + " of e_" + ad.lambda[m] +
                   " leaves its square";
          break;
        }
      }
      rep.add("idempotent-square-support", ad.lambda[m], ok, detail);
    }
    // A nonempty square forces the cell above the idempotent label.
    for (std::size_t l = 0; l < ca.lambda_count(); ++l) {
      bool ok = true;
      std::string detail;
      const std::size_t il =
          ad.lambda_tilde.index_or_fail(ca.lambda_label(l));
      for (std::size_t t = 0; t < ca.datum.t_size(l); ++t) {
        const std::size_t imu =
            ad.lambda_tilde.index_or_fail(ad.lambda[mu_of[l][t]]);
        if (!ad.lambda_tilde.geq(il, imu)) {
          ok = false;
          detail = ca.lambda_label(l) + " is not above " +
                   ad.lambda[mu_of[l][t]];
          break;
        }
      }
      rep.add("square-above-label", ca.lambda_label(l), ok, detail);
    }
  }

  // The map is total and order compatible.
  {
    bool ok = true;
    std::string detail;
    for (const auto& lab : ad.lambda_tilde.elements()) {
      const auto it = ad.alpha.find(lab);
      if (it == ad.alpha.end() || !ad.x.index(it->second)) {
        ok = false;
        detail = "map undefined (or off-target) at " + lab;
        break;
      }
    }
    rep.add("map-total", "-", ok, detail);
    if (ok) {
      std::string d2;
      bool ok2 = true;
      for (std::size_t a = 0; a < ad.lambda_tilde.size() && ok2; ++a)
        for (std::size_t b = 0; b < ad.lambda_tilde.size() && ok2; ++b) {
          if (!ad.lambda_tilde.greater(a, b)) continue;
          const std::size_t xa =
              ad.x.index_or_fail(ad.alpha.at(ad.lambda_tilde.label(a)));
          const std::size_t xb =
              ad.x.index_or_fail(ad.alpha.at(ad.lambda_tilde.label(b)));
          if (!ad.x.geq(xa, xb)) {
            ok2 = false;
            d2 = "map reverses " + ad.lambda_tilde.label(a) + " > " +
                 ad.lambda_tilde.label(b);
          }
        }
      rep.add("map-order-compatible", "-", ok2, d2);
    }
  }
  return rep;
}

TableauPartition tableau_partition(const CellularAlgebra& ca,
                                   const AlphaDatum& ad) {
  TableauPartition tp;
  tp.mu_of.resize(ca.lambda_count());
  tp.t_plus.resize(ca.lambda_count());
  tp.t_minus.resize(ca.lambda_count());
  for (std::size_t l = 0; l < ca.lambda_count(); ++l) {
    const std::size_t k = ca.datum.t_size(l);
    tp.mu_of[l].assign(k, npos);
    const std::size_t xl = ad.x.index_or_fail(ad.alpha.at(ca.lambda_label(l)));
    for (std::size_t t = 0; t < k; ++t) {
      std::string why;
      const std::size_t m = column_mu(ca, ad, l, t, &why);
      if (m == npos) fail(ErrorKind::Assumption, why);
      tp.mu_of[l][t] = m;
      const std::size_t il = ad.lambda_tilde.index_or_fail(ca.lambda_label(l));
      const std::size_t imu = ad.lambda_tilde.index_or_fail(ad.lambda[m]);
      if (!ad.lambda_tilde.geq(il, imu))
        fail(ErrorKind::Assumption, "square at " + ca.lambda_label(l) +
                                        " is not above " + ad.lambda[m]);
      const std::size_t xm = ad.x.index_or_fail(ad.alpha.at(ad.lambda[m]));
      if (xl == xm)
        tp.t_plus[l].push_back(t);
      else if (ad.x.greater(xl, xm))
        tp.t_minus[l].push_back(t);
      else
        fail(ErrorKind::Assumption, "map value at " + ad.lambda[m] +
                                        " is not below " + ca.lambda_label(l));
    }
  }
  return tp;
}

std::optional<std::size_t> OmegaData::find(std::size_t lambda, int eps) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].lambda == lambda && entries[i].eps == eps) return i;
  return std::nullopt;
}

OmegaData omega(const CellularAlgebra& ca, const TableauPartition& tp) {
  OmegaData om;
  for (const std::size_t l : ca.datum.topo) {
    if (!tp.t_plus[l].empty())
      om.entries.push_back(
          {l, 0, tp.t_plus[l], omega_label(ca.lambda_label(l), 0)});
    if (!tp.t_minus[l].empty())
      om.entries.push_back(
          {l, 1, tp.t_minus[l], omega_label(ca.lambda_label(l), 1)});
  }
  std::vector<std::string> labels;
  for (const auto& e : om.entries) labels.push_back(e.label);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& a : om.entries)
    for (const auto& b : om.entries)
      if (a.eps > b.eps || (a.eps == b.eps &&
                            ca.datum.lambda_plus.greater(a.lambda, b.lambda)))
        pairs.emplace_back(a.label, b.label);
  om.poset = Poset(labels, pairs);
  for (std::size_t i = 0; i < om.entries.size(); ++i)
    if (om.entries[i].eps == 1) om.hat.push_back(i);
  for (const std::size_t l : ca.datum.topo)
    if (!tp.t_plus[l].empty()) om.lambda_bar.push_back(ca.lambda_label(l));
  return om;
}

// ---------------------------------------------------------------------------
// Spanned subalgebras, Levi and parabolic
// ---------------------------------------------------------------------------

namespace {

SpannedSubalgebra build_subalgebra(const CellularAlgebra& ca,
                                   const std::vector<std::size_t>& positions,
                                   const std::string& what) {
  SpannedSubalgebra sub;
  sub.parent_pos = positions;
  sub.image_pos.assign(ca.dim(), SpannedSubalgebra::npos);
  for (std::size_t i = 0; i < positions.size(); ++i)
    sub.image_pos[positions[i]] = i;
  sub.alg.field = ca.field();
  sub.alg.dim = positions.size();
  for (const std::size_t p : positions)
    sub.alg.basis_names.push_back(ca.A.basis_names[p]);
  sub.alg.mult.assign(positions.size() * positions.size(), {});
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = 0; j < positions.size(); ++j) {
      SparseVec prod;
      for (const auto& [pos, coeff] :
           ca.A.basis_product(positions[i], positions[j])) {
        if (sub.image_pos[pos] == SpannedSubalgebra::npos)
          fail(ErrorKind::Internal,
               what + " span is not closed under multiplication at " +
                   ca.A.basis_names[positions[i]] + " * " +
                   ca.A.basis_names[positions[j]]);
        prod.emplace_back(sub.image_pos[pos], coeff);
      }
      sub.alg.basis_product(i, j) = sparse_normalize(std::move(prod));
    }
  SparseVec unit;
  for (const auto& [pos, coeff] : ca.A.unit) {
    if (sub.image_pos[pos] == SpannedSubalgebra::npos)
      fail(ErrorKind::Internal, what + " span does not contain the unit");
    unit.emplace_back(sub.image_pos[pos], coeff);
  }
  sub.alg.unit = sparse_normalize(std::move(unit));
  return sub;
}

/// 0 when t is in the plus part of T(lambda), 1 for the minus part.
int index_part(const OmegaData& om, std::size_t lambda, std::size_t t) {
  const auto e0 = om.find(lambda, 0);
  if (e0) {
    const auto& plus = om.entries[*e0].members;
    if (std::find(plus.begin(), plus.end(), t) != plus.end()) return 0;
  }
  return 1;
}

/// Omega entry owning an ambient basis position of the plain parabolic
/// (determined by the row part) or of its star (column part); nullopt when
/// the position is outside the span.
std::optional<std::size_t> para_entry_of(const CellularAlgebra& ca,
                                         const Parabolic& pa,
                                         const OmegaData& om, std::size_t pos) {
  const CellIndex& c = ca.datum.cell[pos];
  const int part = index_part(om, c.lambda, pa.starred ? c.t : c.s);
  const auto e = om.find(c.lambda, part);
  if (!e) return std::nullopt;
  const auto& other_set = pa.starred ? pa.rows[*e] : pa.cols[*e];
  const std::size_t other = pa.starred ? c.s : c.t;
  if (std::find(other_set.begin(), other_set.end(), other) == other_set.end())
    return std::nullopt;
  return e;
}

/// Omega entry of an ambient position inside the plain parabolic span.
std::optional<std::size_t> plain_entry_of(const CellularAlgebra& ca,
                                          const OmegaData& om,
                                          std::size_t pos) {
  const CellIndex& c = ca.datum.cell[pos];
  const int part = index_part(om, c.lambda, c.s);
  const auto pe = om.find(c.lambda, part);
  if (!pe) return std::nullopt;
  if (part == 0 && index_part(om, c.lambda, c.t) != 0) return std::nullopt;
  return pe;
}

} // namespace

Levi build_levi(const CellularAlgebra& ca, const TableauPartition& tp,
                const OmegaData& om, CheckReport& rep) {
  // Product vanishing across squares, and the predicted support otherwise.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t p1 = 0; p1 < ca.dim() && ok; ++p1)
      for (std::size_t p2 = 0; p2 < ca.dim() && ok; ++p2) {
        const CellIndex& c1 = ca.datum.cell[p1];
        const CellIndex& c2 = ca.datum.cell[p2];
        const std::size_t nu1 = tp.mu_of[c1.lambda][c1.t];
        const std::size_t mu2 = tp.mu_of[c2.lambda][c2.s];
        const SparseVec& prod = ca.A.basis_product(p1, p2);
        if (nu1 != mu2) {
          if (!prod.empty()) {
            ok = false;
            detail = ca.cell_name(p1) + " * " + ca.cell_name(p2) +
                     " should vanish across squares";
          }
          continue;
        }
        const std::size_t mu1 = tp.mu_of[c1.lambda][c1.s];
        const std::size_t nu2 = tp.mu_of[c2.lambda][c2.t];
        for (const auto& [pos, coeff] : prod) {
          const CellIndex& c = ca.datum.cell[pos];
          if (!ca.datum.lambda_plus.geq(c.lambda, c1.lambda) ||
              !ca.datum.lambda_plus.geq(c.lambda, c2.lambda) ||
              tp.mu_of[c.lambda][c.s] != mu1 ||
              tp.mu_of[c.lambda][c.t] != nu2) {
            ok = false;
            detail = ca.cell_name(p1) + " * " + ca.cell_name(p2) +
                     " has a term outside the predicted support: " +
                     ca.cell_name(pos);
            break;
          }
        }
      }
    rep.add("product-orthogonality", "-", ok, detail);
  }

  // Cellular datum over the doubled poset, and the span in its order.
  std::vector<std::vector<std::string>> t_sets;
  for (const auto& e : om.entries) {
    std::vector<std::string> labels;
    for (const std::size_t t : e.members)
      labels.push_back(ca.datum.t_label(e.lambda, t));
    t_sets.push_back(std::move(labels));
  }
  CellularDatum datum = CellularDatum::build(om.poset, std::move(t_sets));
  std::vector<std::size_t> positions(datum.dim);
  for (std::size_t p = 0; p < datum.dim; ++p) {
    // The doubled poset lists elements in entries order, so the datum's
    // lambda index is the entry index.
    const CellIndex& c = datum.cell[p];
    const auto& e = om.entries[c.lambda];
    positions[p] =
        ca.datum.position(e.lambda, e.members[c.s], e.members[c.t]);
  }

  Levi levi;
  levi.sub = build_subalgebra(ca, positions, "levi");
  rep.pass("levi-closure", "-");
  rep.pass("levi-contains-unit", "-");

  // Four-case support constraints inside the span.
  {
    auto entry_of = [&](std::size_t pos) -> std::size_t {
      const CellIndex& c = ca.datum.cell[pos];
      const int ps = index_part(om, c.lambda, c.s);
      if (ps != index_part(om, c.lambda, c.t)) return npos;
      const auto e = om.find(c.lambda, ps);
      return e ? *e : npos;
    };
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < positions.size() && ok; ++i)
      for (std::size_t j = 0; j < positions.size() && ok; ++j) {
        const std::size_t e1 = entry_of(positions[i]);
        const std::size_t e2 = entry_of(positions[j]);
        for (const auto& [pos, coeff] :
             ca.A.basis_product(positions[i], positions[j])) {
          const std::size_t e = entry_of(pos);
          bool allowed = e != npos;
          for (const std::size_t side : {e1, e2}) {
            if (!allowed) break;
            const auto& se = om.entries[side];
            const auto& pe = om.entries[e];
            if (se.eps == 0)
              allowed = e == side || ca.datum.lambda_plus.greater(pe.lambda,
                                                                  se.lambda);
            else
              allowed = pe.eps == 1 &&
                        ca.datum.lambda_plus.geq(pe.lambda, se.lambda);
          }
          if (!allowed) {
            ok = false;
            detail = ca.cell_name(positions[i]) + " * " +
                     ca.cell_name(positions[j]) + " reaches " +
                     ca.cell_name(pos);
            break;
          }
        }
      }
    rep.add("levi-product-support", "-", ok, detail);
  }

  levi.cell = CellularAlgebra::assemble(levi.sub.alg, std::move(datum));
  const CheckReport cellrep = levi.cell.verify_cellular();
  rep.add("levi-cellular", "-", cellrep.ok(),
          cellrep.ok() ? "" : "cellular axioms fail on the levi span");

  // The eps = 1 part is upward closed in the doubled order.
  {
    bool ok = true;
    std::string detail;
    for (const std::size_t h : om.hat)
      for (std::size_t o = 0; o < om.entries.size(); ++o)
        if (om.poset.greater(o, h) && om.entries[o].eps != 1) {
          ok = false;
          detail = om.entries[o].label + " sits above " + om.entries[h].label;
        }
    rep.add("upper-part-saturated", "-", ok, detail);
  }
  {
    std::size_t zero_entries = 0;
    for (const auto& e : om.entries)
      if (e.eps == 0) ++zero_entries;
    rep.add("surviving-labels-bijection", "-",
            zero_entries == om.lambda_bar.size(), "");
  }
  return levi;
}

Parabolic build_parabolic(const CellularAlgebra& ca, const OmegaData& om,
                          bool starred, CheckReport& rep) {
  const Field& f = ca.field();
  const std::string tag = starred ? "parabolic-star" : "parabolic";
  Parabolic pa;
  pa.starred = starred;
  pa.rows.resize(om.entries.size());
  pa.cols.resize(om.entries.size());
  for (std::size_t e = 0; e < om.entries.size(); ++e) {
    const auto& ent = om.entries[e];
    if (ent.eps == 0) {
      pa.rows[e] = ent.members;
      pa.cols[e] = ent.members;
    } else {
      pa.rows[e] = ent.members;
      pa.cols[e].clear();
      for (std::size_t t = 0; t < ca.datum.t_size(ent.lambda); ++t)
        pa.cols[e].push_back(t);
    }
    if (starred) std::swap(pa.rows[e], pa.cols[e]);
  }

  std::vector<std::size_t> positions;
  for (std::size_t p = 0; p < ca.dim(); ++p)
    if (para_entry_of(ca, pa, om, p)) positions.push_back(p);
  pa.sub = build_subalgebra(ca, positions, tag);
  rep.pass(tag + "-closure", "-");

  auto higher_than = [&](std::size_t pos, std::size_t eidx) {
    const auto pe = para_entry_of(ca, pa, om, pos);
    return pe && om.poset.greater(*pe, eidx);
  };

  // Right action preserves the column set modulo higher entries, with
  // coefficients independent of the row; the left action mirrors this.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t e = 0; e < om.entries.size() && ok; ++e) {
      const auto& ent = om.entries[e];
      for (std::size_t a = 0; a < pa.sub.alg.dim && ok; ++a) {
        const SparseVec aa = unit_vec(f, pa.sub.parent_pos[a]);
        for (const std::size_t t : pa.cols[e]) {
          std::optional<Vec> first;
          for (const std::size_t s : pa.rows[e]) {
            const SparseVec c = unit_vec(f, ca.datum.position(ent.lambda, s, t));
            const SparseVec prod = ca.A.multiply(c, aa);
            Vec coeffs = vec_zero(f, pa.cols[e].size());
            bool good = true;
            for (const auto& [pos, coeff] : prod) {
              const CellIndex& pc = ca.datum.cell[pos];
              if (pc.lambda == ent.lambda && pc.s == s) {
                const auto it =
                    std::find(pa.cols[e].begin(), pa.cols[e].end(), pc.t);
                if (it != pa.cols[e].end()) {
                  coeffs[it - pa.cols[e].begin()] = coeff;
                  continue;
                }
              }
              if (!higher_than(pos, e)) {
                good = false;
                break;
              }
            }
            if (!good) {
              ok = false;
              detail = tag + " right action escapes at " + ent.label;
              break;
            }
            if (!first)
              first = coeffs;
            else if (*first != coeffs) {
              ok = false;
              detail =
                  tag + " right coefficients depend on the row at " + ent.label;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add(tag + "-right-triangular", "-", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (std::size_t e = 0; e < om.entries.size() && ok; ++e) {
      const auto& ent = om.entries[e];
      for (std::size_t a = 0; a < pa.sub.alg.dim && ok; ++a) {
        const SparseVec aa = unit_vec(f, pa.sub.parent_pos[a]);
        for (const std::size_t s : pa.rows[e]) {
          std::optional<Vec> first;
          for (const std::size_t t : pa.cols[e]) {
            const SparseVec c = unit_vec(f, ca.datum.position(ent.lambda, s, t));
            const SparseVec prod = ca.A.multiply(aa, c);
            Vec coeffs = vec_zero(f, pa.rows[e].size());
            bool good = true;
            for (const auto& [pos, coeff] : prod) {
              const CellIndex& pc = ca.datum.cell[pos];
              if (pc.lambda == ent.lambda && pc.t == t) {
                const auto it =
                    std::find(pa.rows[e].begin(), pa.rows[e].end(), pc.s);
                if (it != pa.rows[e].end()) {
                  coeffs[it - pa.rows[e].begin()] = coeff;
                  continue;
                }
              }
              if (!higher_than(pos, e)) {
                good = false;
                break;
              }
            }
            if (!good) {
              ok = false;
              detail = tag + " left action escapes at " + ent.label;
              break;
            }
            if (!first)
              first = coeffs;
            else if (*first != coeffs) {
              ok = false;
              detail = tag + " left coefficients depend on the column at " +
                       ent.label;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rep.add(tag + "-left-triangular", "-", ok, detail);
  }

  // Four-case support constraints (plain variant; the star is its mirror).
  if (!starred) {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < positions.size() && ok; ++i)
      for (std::size_t j = 0; j < positions.size() && ok; ++j) {
        const std::size_t e1 = *para_entry_of(ca, pa, om, positions[i]);
        const std::size_t e2 = *para_entry_of(ca, pa, om, positions[j]);
        for (const auto& [pos, coeff] :
             ca.A.basis_product(positions[i], positions[j])) {
          const auto e = para_entry_of(ca, pa, om, pos);
          bool allowed = e.has_value();
          if (allowed) {
            const auto& pe = om.entries[*e];
            if (om.entries[e1].eps == 0)
              allowed = *e == e1 || ca.datum.lambda_plus.greater(
                                        pe.lambda, om.entries[e1].lambda);
            else
              allowed = pe.eps == 1 &&
                        ca.datum.lambda_plus.geq(pe.lambda,
                                                 om.entries[e1].lambda);
            if (allowed) {
              if (om.entries[e2].eps == 0)
                allowed = ca.datum.lambda_plus.geq(pe.lambda,
                                                   om.entries[e2].lambda);
              else
                allowed = pe.eps == 1 &&
                          ca.datum.lambda_plus.geq(pe.lambda,
                                                   om.entries[e2].lambda);
            }
          }
          if (!allowed) {
            ok = false;
            detail = ca.cell_name(positions[i]) + " * " +
                     ca.cell_name(positions[j]) + " reaches " +
                     ca.cell_name(pos);
            break;
          }
        }
      }
    rep.add("parabolic-product-support", "-", ok, detail);
  }
  return pa;
}

CellModule sba_standard_module(const CellularAlgebra& ca, const Parabolic& pa,
                               const OmegaData& om, std::size_t entry,
                               Side side) {
  if (pa.starred)
    fail(ErrorKind::Internal, "standard modules are built on the plain variant");
  const Field& f = ca.field();
  const auto& ent = om.entries[entry];
  const auto& basis = side == Side::Right ? pa.cols[entry] : pa.rows[entry];
  const auto& aux = side == Side::Right ? pa.rows[entry] : pa.cols[entry];

  CellModule m;
  m.label = (side == Side::Right ? "Z~" : "#Z~") + ent.label;
  m.side = side;
  m.dim = basis.size();
  for (const std::size_t t : basis)
    m.basis_labels.push_back(ca.datum.t_label(ent.lambda, t));

  auto higher = [&](std::size_t pos) {
    const auto pe = plain_entry_of(ca, om, pos);
    return pe && om.poset.greater(*pe, entry);
  };

  for (std::size_t a = 0; a < pa.sub.alg.dim; ++a) {
    const SparseVec aa = unit_vec(f, pa.sub.parent_pos[a]);
    ExactMatrix mat(f, m.dim, m.dim);
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
      std::optional<Vec> first;
      for (const std::size_t other : aux) {
        const std::size_t p =
            side == Side::Right
                ? ca.datum.position(ent.lambda, other, basis[bi])
                : ca.datum.position(ent.lambda, basis[bi], other);
        const SparseVec c = unit_vec(f, p);
        const SparseVec prod =
            side == Side::Right ? ca.A.multiply(c, aa) : ca.A.multiply(aa, c);
        Vec coeffs = vec_zero(f, basis.size());
        bool good = true;
        for (const auto& [pos, coeff] : prod) {
          const CellIndex& pc = ca.datum.cell[pos];
          bool placed = false;
          if (pc.lambda == ent.lambda) {
            const std::size_t anchor = side == Side::Right ? pc.s : pc.t;
            const std::size_t moving = side == Side::Right ? pc.t : pc.s;
            if (anchor == other) {
              const auto it = std::find(basis.begin(), basis.end(), moving);
              if (it != basis.end()) {
                coeffs[it - basis.begin()] = coeff;
                placed = true;
              }
            }
          }
          if (!placed && !higher(pos)) {
            good = false;
            break;
          }
        }
        if (!good)
          fail(ErrorKind::Internal,
               "standard module action escapes at " + ent.label);
        if (!first)
          first = coeffs;
        else if (*first != coeffs)
          fail(ErrorKind::Internal,
               "standard module coefficients depend on the auxiliary index at " +
                   ent.label);
      }
      if (side == Side::Right)
        mat.set_row(bi, *first);
      else
        for (std::size_t v = 0; v < basis.size(); ++v)
          mat.at(v, bi) = (*first)[v];
    }
    m.act.push_back(std::move(mat));
  }
  if (m.representation_witness(pa.sub.alg))
    fail(ErrorKind::Internal,
         "standard module of the parabolic is not a representation at " +
             ent.label);
  return m;
}

ExactMatrix sba_beta(const CellularAlgebra& ca, const Parabolic& pa,
                     const OmegaData& om, std::size_t entry) {
  if (pa.starred)
    fail(ErrorKind::Internal, "the pairing is built on the plain variant");
  const Field& f = ca.field();
  const auto& ent = om.entries[entry];
  const auto& rows = pa.rows[entry];
  const auto& cols = pa.cols[entry];

  auto higher = [&](std::size_t pos) {
    const auto pe = plain_entry_of(ca, om, pos);
    return pe && om.poset.greater(*pe, entry);
  };

  ExactMatrix b(f, rows.size(), cols.size());
  for (std::size_t si = 0; si < rows.size(); ++si)
    for (std::size_t ti = 0; ti < cols.size(); ++ti) {
      std::optional<Scalar> first;
      for (const std::size_t u : rows)
        for (const std::size_t v : cols) {
          const SparseVec prod = ca.A.multiply(
              unit_vec(f, ca.datum.position(ent.lambda, u, cols[ti])),
              unit_vec(f, ca.datum.position(ent.lambda, rows[si], v)));
          Scalar val = Scalar::zero(f);
          bool good = true;
          for (const auto& [pos, coeff] : prod) {
            const CellIndex& pc = ca.datum.cell[pos];
            if (pc.lambda == ent.lambda && pc.s == u && pc.t == v) {
              val = coeff;
              continue;
            }
            if (!higher(pos)) {
              good = false;
              break;
            }
          }
          if (!good)
            fail(ErrorKind::Internal,
                 "pairing product escapes at " + ent.label);
          if (!first)
            first = val;
          else if (*first != val)
            fail(ErrorKind::Internal,
                 "pairing depends on the auxiliary pair at " + ent.label);
        }
      b.at(si, ti) = *first;
    }
  return b;
}

// ---------------------------------------------------------------------------
// Workspace assembly
// ---------------------------------------------------------------------------

std::string AlphaWorkspace::alpha_of_cell(std::size_t lambda) const {
  return ad.alpha.at(ca->lambda_label(lambda));
}

AlphaWorkspace build_alpha_workspace(const CellularAlgebra& ca,
                                     const AlphaDatum& ad) {
  AlphaWorkspace w;
  w.ca = &ca;
  w.ad = ad;
  w.construction_report = verify_assumptions(ca, ad);
  if (!w.construction_report.ok())
    fail(ErrorKind::Assumption, "idempotent-decomposition assumptions fail");
  w.tp = tableau_partition(ca, ad);
  w.om = omega(ca, w.tp);
  w.levi = build_levi(ca, w.tp, w.om, w.construction_report);
  w.para = build_parabolic(ca, w.om, false, w.construction_report);
  w.para_star = build_parabolic(ca, w.om, true, w.construction_report);

  // The plain and starred spans intersect in the levi span, and together
  // they generate the whole algebra (products either way round).
  {
    std::set<std::size_t> plain(w.para.sub.parent_pos.begin(),
                                w.para.sub.parent_pos.end());
    std::set<std::size_t> star(w.para_star.sub.parent_pos.begin(),
                               w.para_star.sub.parent_pos.end());
    std::set<std::size_t> levi(w.levi.sub.parent_pos.begin(),
                               w.levi.sub.parent_pos.end());
    std::set<std::size_t> inter;
    std::set_intersection(plain.begin(), plain.end(), star.begin(), star.end(),
                          std::inserter(inter, inter.begin()));
    w.construction_report.add("levi-equals-intersection", "-", inter == levi,
                              inter == levi ? "" : "span intersection differs");
    const Field& f = ca.field();
    bool generate = true;
    for (const bool plain_first : {true, false}) {
      std::vector<Vec> rows;
      for (const std::size_t p : w.para.sub.parent_pos)
        for (const std::size_t q : w.para_star.sub.parent_pos) {
          const SparseVec prod =
              plain_first ? ca.A.multiply(unit_vec(f, p), unit_vec(f, q))
                          : ca.A.multiply(unit_vec(f, q), unit_vec(f, p));
          rows.push_back(sparse_to_dense(f, ca.dim(), prod));
        }
      if (RowSpace::span(f, ca.dim(), rows).dim() != ca.dim()) generate = false;
    }
    w.construction_report.add("parabolic-star-generate", "-", generate,
                              generate ? "" : "products do not span");
  }

  // Quotient of the levi by the upper part.
  SaturatedSubset hat;
  for (const std::size_t h : w.om.hat) hat.labels.push_back(w.om.entries[h].label);
  w.quot = quotient_cellular(w.levi.cell, hat);
  w.construction_report.pass("quotient-cellular", "-");

  // The surviving entries biject with their cell labels; rename the
  // quotient accordingly so its row and column labels live in the cell
  // poset.
  {
    auto strip = [&](const std::string& omega_lab) -> std::string {
      for (const auto& e : w.om.entries)
        if (e.label == omega_lab) return ca.lambda_label(e.lambda);
      fail(ErrorKind::Internal, "unknown doubled label " + omega_lab);
    };
    std::vector<std::string> labels;
    for (const auto& lab : w.quot.alg.datum.lambda_plus.elements())
      labels.push_back(strip(lab));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : w.quot.alg.datum.lambda_plus.strict_pairs())
      pairs.emplace_back(strip(a), strip(b));
    CellularDatum nd = CellularDatum::build(Poset(labels, pairs),
                                            w.quot.alg.datum.t_sets);
    AssocAlgebra qa = w.quot.alg.A;
    w.quot.alg = CellularAlgebra::assemble(std::move(qa), std::move(nd));
  }

  // The upper-part span of the parabolic is a two-sided ideal, the quotient
  // through the parabolic matches the levi quotient, and the two upper-part
  // spans agree inside the levi.
  {
    std::set<std::size_t> para_hat;  // ambient positions, eps = 1 rows
    std::vector<std::size_t> para_zero;  // parabolic positions, eps = 0
    for (std::size_t i = 0; i < w.para.sub.alg.dim; ++i) {
      const std::size_t pos = w.para.sub.parent_pos[i];
      const auto e = para_entry_of(ca, w.para, w.om, pos);
      if (w.om.entries[*e].eps == 1)
        para_hat.insert(pos);
      else
        para_zero.push_back(i);
    }
    bool ideal = true;
    std::string detail;
    for (const std::size_t p : para_hat) {
      for (std::size_t j = 0; j < w.para.sub.alg.dim && ideal; ++j) {
        const std::size_t q = w.para.sub.parent_pos[j];
        for (const SparseVec& prod :
             {ca.A.basis_product(p, q), ca.A.basis_product(q, p)})
          for (const auto& [pos, coeff] : prod)
            if (!para_hat.count(pos)) {
              ideal = false;
              detail = "product of " + ca.A.basis_names[p] + " and " +
                       ca.A.basis_names[q] + " leaves the upper span";
            }
      }
      if (!ideal) break;
    }
    w.construction_report.add("parabolic-upper-ideal", "-", ideal, detail);

    std::set<std::size_t> levi_hat;
    for (std::size_t i = 0; i < w.levi.sub.alg.dim; ++i)
      if (w.quot.image_pos[i] == QuotientCellular::npos)
        levi_hat.insert(w.levi.sub.parent_pos[i]);
    std::set<std::size_t> levi_set(w.levi.sub.parent_pos.begin(),
                                   w.levi.sub.parent_pos.end());
    std::set<std::size_t> para_hat_in_levi;
    for (const std::size_t p : para_hat)
      if (levi_set.count(p)) para_hat_in_levi.insert(p);
    w.construction_report.add("quotient-ideal-match", "-",
                              para_hat_in_levi == levi_hat,
                              para_hat_in_levi == levi_hat
                                  ? ""
                                  : "upper-part spans disagree in the levi");

    // Structure constants of the parabolic quotient match the levi quotient.
    bool match = true;
    std::string mdetail;
    for (const std::size_t i : para_zero) {
      for (const std::size_t j : para_zero) {
        const std::size_t pi = w.para.sub.parent_pos[i];
        const std::size_t pj = w.para.sub.parent_pos[j];
        const std::size_t qi = w.quot.image_pos[w.levi.sub.image_pos[pi]];
        const std::size_t qj = w.quot.image_pos[w.levi.sub.image_pos[pj]];
        SparseVec via_para;
        for (const auto& [pos, coeff] : ca.A.basis_product(pi, pj))
          if (!para_hat.count(pos)) {
            const std::size_t lp = w.levi.sub.image_pos[pos];
            via_para.emplace_back(w.quot.image_pos[lp], coeff);
          }
        via_para = sparse_normalize(std::move(via_para));
        if (!sparse_equal(via_para, w.quot.alg.A.basis_product(qi, qj))) {
          match = false;
          mdetail = "structure constants differ at " + ca.A.basis_names[pi] +
                    " * " + ca.A.basis_names[pj];
          break;
        }
      }
      if (!match) break;
    }
    w.construction_report.add("quotient-via-parabolic", "-", match, mdetail);
  }

  return w;
}

// ---------------------------------------------------------------------------
// Decomposition data
// ---------------------------------------------------------------------------

void compute_decomposition_data(AlphaWorkspace& w) {
  const CellularAlgebra& ca = *w.ca;
  w.d_ambient = decomposition_matrix(ca, Side::Right);
  w.d_ambient_left = decomposition_matrix(ca, Side::Left);
  w.d_levi = decomposition_matrix(w.levi.cell, Side::Right);
  w.d_levi_left = decomposition_matrix(w.levi.cell, Side::Left);
  w.d_quot = decomposition_matrix(w.quot.alg, Side::Right);
  w.d_quot_left = decomposition_matrix(w.quot.alg, Side::Left);
  w.lambda_plus_zero = lambda_plus_zero(ca);
  w.omega_zero = lambda_plus_zero(w.levi.cell);
  w.lambda_bar_zero = lambda_plus_zero(w.quot.alg);

  // Parabolic: standard modules on both sides, simples from the pairing.
  const Radical j = jacobson_radical(w.para.sub.alg);
  std::vector<CellModule> right_std, left_std, right_simple, left_simple;
  std::vector<std::string> row_labels, col_labels;
  for (std::size_t e = 0; e < w.om.entries.size(); ++e) {
    right_std.push_back(sba_standard_module(ca, w.para, w.om, e, Side::Right));
    left_std.push_back(sba_standard_module(ca, w.para, w.om, e, Side::Left));
    row_labels.push_back(w.om.entries[e].label);
  }
  w.omega_zero_tilde.clear();
  for (std::size_t e = 0; e < w.om.entries.size(); ++e) {
    const ExactMatrix b = sba_beta(ca, w.para, w.om, e);
    if (rank(b) == 0) continue;
    w.omega_zero_tilde.push_back(w.om.entries[e].label);
    col_labels.push_back(w.om.entries[e].label);
    const RowSpace rad_r =
        RowSpace::span(ca.field(), right_std[e].dim, kernel_rows(b));
    const RowSpace rad_l = RowSpace::span(ca.field(), left_std[e].dim,
                                          kernel_rows(b.transpose()));
    right_simple.push_back(
        quotient_module(right_std[e], rad_r, "L~" + w.om.entries[e].label).mod);
    left_simple.push_back(
        quotient_module(left_std[e], rad_l, "#L~" + w.om.entries[e].label).mod);
  }
  w.d_para_right = decomposition_table(w.para.sub.alg, right_std, row_labels,
                                       right_simple, col_labels, j);
  w.d_para_left = decomposition_table(w.para.sub.alg, left_std, row_labels,
                                      left_simple, col_labels, j);
}

// ---------------------------------------------------------------------------
// Form relations
// ---------------------------------------------------------------------------

CheckReport check_form_relations(const AlphaWorkspace& w) {
  const CellularAlgebra& ca = *w.ca;
  CheckReport rep;

  for (std::size_t l = 0; l < ca.lambda_count(); ++l) {
    const GramForm g = gram(ca, l);
    const std::string label = ca.lambda_label(l);

    // Symmetric, and block diagonal across the split.
    bool sym = g.matrix == g.matrix.transpose();
    rep.add("form-symmetric", label, sym, "");
    bool blockdiag = true;
    for (const std::size_t s : w.tp.t_plus[l])
      for (const std::size_t t : w.tp.t_minus[l])
        if (!g.matrix.at(s, t).is_zero() || !g.matrix.at(t, s).is_zero())
          blockdiag = false;
    rep.add("form-block-diagonal", label, blockdiag, "");

    // The levi form is the restriction of the ambient form.
    for (const int eps : {0, 1}) {
      const auto e = w.om.find(l, eps);
      if (!e) continue;
      const std::size_t cl =
          w.levi.cell.datum.lambda_plus.index_or_fail(w.om.entries[*e].label);
      const GramForm gl = gram(w.levi.cell, cl);
      bool agree = true;
      const auto& mem = w.om.entries[*e].members;
      for (std::size_t a = 0; a < mem.size(); ++a)
        for (std::size_t b = 0; b < mem.size(); ++b)
          if (gl.matrix.at(a, b) != g.matrix.at(mem[a], mem[b])) agree = false;
      rep.add("form-restriction-agrees", w.om.entries[*e].label, agree, "");
    }

    // The quotient form agrees on the surviving part.
    const auto e0 = w.om.find(l, 0);
    if (e0) {
      const auto ql = w.quot.alg.datum.lambda_plus.index(label);
      if (ql) {
        const GramForm gq = gram(w.quot.alg, *ql);
        bool agree = true;
        const auto& mem = w.om.entries[*e0].members;
        for (std::size_t a = 0; a < mem.size(); ++a)
          for (std::size_t b = 0; b < mem.size(); ++b)
            if (gq.matrix.at(a, b) != g.matrix.at(mem[a], mem[b])) agree = false;
        rep.add("quotient-form-agrees", label, agree, "");
      }
    }

    // Pairing blocks: on the lower entry the plus-part columns vanish and the
    // minus block matches the ambient form; on the surviving entry the
    // pairing is the transposed restriction.
    for (const int eps : {0, 1}) {
      const auto e = w.om.find(l, eps);
      if (!e) continue;
      const ExactMatrix b = sba_beta(ca, w.para, w.om, *e);
      const auto& rows = w.para.rows[*e];
      const auto& cols = w.para.cols[*e];
      bool agree = true;
      for (std::size_t ti = 0; ti < rows.size(); ++ti)
        for (std::size_t si = 0; si < cols.size(); ++si) {
          const int part = index_part(w.om, l, cols[si]);
          const Scalar expect = (eps == 1 && part == 0)
                                    ? Scalar::zero(ca.field())
                                    : g.matrix.at(cols[si], rows[ti]);
          if (b.at(ti, si) != expect) agree = false;
        }
      rep.add("pairing-matches-form", w.om.entries[*e].label, agree, "");
    }
  }

  // Nonzero-pairing entries coincide with the nonzero-form entries.
  {
    const std::set<std::string> a(w.omega_zero_tilde.begin(),
                                  w.omega_zero_tilde.end());
    const std::set<std::string> b(w.omega_zero.begin(), w.omega_zero.end());
    rep.add("pairing-nonzero-set", "-", a == b, "");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Module relations
// ---------------------------------------------------------------------------

namespace {

std::vector<ExactMatrix> row_view(const CellModule& m) {
  std::vector<ExactMatrix> out;
  out.reserve(m.act.size());
  for (std::size_t i = 0; i < m.act.size(); ++i) out.push_back(m.row_act(i));
  return out;
}

bool equivariant_rows(const std::vector<ExactMatrix>& v,
                      const std::vector<ExactMatrix>& w,
                      const ExactMatrix& p) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] * p != p * w[i]) return false;
  return true;
}

RowSpace map_space(const Field& f, const RowSpace& s, const ExactMatrix& p) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < s.basis().rows(); ++r)
    rows.push_back(vec_mul(s.basis().row(r), p));
  return RowSpace::span(f, p.cols(), rows);
}

CellModule restrict_to_sub(const CellModule& m, const SpannedSubalgebra& sub) {
  CellModule out = m;
  out.act.clear();
  for (const std::size_t p : sub.parent_pos) out.act.push_back(m.act[p]);
  return out;
}

CellModule para_to_levi(const CellModule& m, const Parabolic& pa,
                        const SpannedSubalgebra& levi) {
  CellModule out = m;
  out.act.clear();
  for (const std::size_t p : levi.parent_pos)
    out.act.push_back(m.act[pa.sub.image_pos[p]]);
  return out;
}

CellModule quot_to_levi(const Field& f, const CellModule& m,
                        const QuotientCellular& q, std::size_t levi_dim) {
  CellModule out = m;
  out.act.clear();
  for (std::size_t k = 0; k < levi_dim; ++k)
    out.act.push_back(q.image_pos[k] == QuotientCellular::npos
                          ? ExactMatrix(f, m.dim, m.dim)
                          : m.act[q.image_pos[k]]);
  return out;
}

CellModule zero_module(const Field& f, std::size_t generators, Side side,
                       const std::string& label) {
  CellModule out;
  out.label = label;
  out.side = side;
  out.dim = 0;
  out.act.assign(generators, ExactMatrix(f, 0, 0));
  return out;
}

/// P[from][to] = 1 for each assignment pair.
ExactMatrix assignment_matrix(const Field& f, std::size_t from_dim,
                              std::size_t to_dim,
                              const std::vector<std::pair<std::size_t, std::size_t>>& assign) {
  ExactMatrix p(f, from_dim, to_dim);
  for (const auto& [a, b] : assign) p.at(a, b) = Scalar::one(f);
  return p;
}

ExactMatrix induced_quotient_map(const Field& f, const QuotientModule& qv,
                                 const QuotientModule& qw,
                                 const ExactMatrix& p) {
  ExactMatrix out(f, qv.coords.size(), qw.coords.size());
  for (std::size_t r = 0; r < qv.coords.size(); ++r) {
    Vec e = vec_zero(f, p.rows());
    e[qv.coords[r]] = Scalar::one(f);
    out.set_row(r, qw.project(vec_mul(e, p)));
  }
  return out;
}

/// Rows x with x * g = 0.
RowSpace left_kernel(const Field& f, const ExactMatrix& g) {
  return RowSpace::span(f, g.rows(), kernel_rows(g.transpose()));
}

} // namespace

CheckReport check_module_relations(const AlphaWorkspace& w) {
  const CellularAlgebra& ca = *w.ca;
  const Field& f = ca.field();

  std::vector<CheckReport> parts(ca.lambda_count());
  parallel_for(ca.lambda_count(), [&](std::size_t l) {
    CheckReport rep;
    const std::string label = ca.lambda_label(l);
    const auto& plus = w.tp.t_plus[l];
    const auto& minus = w.tp.t_minus[l];
    const std::size_t k = ca.datum.t_size(l);
    const auto e0 = w.om.find(l, 0);
    const auto e1 = w.om.find(l, 1);

    const GramForm g = gram(ca, l);
    const CellModule wmod = standard_module(ca, l, Side::Right);
    const CellModule wsharp = standard_module(ca, l, Side::Left);
    const RowSpace rad_w = gram_radical(ca, g, wmod);
    const RowSpace rad_wsharp = gram_radical(ca, left_gram(ca, l), wsharp);

    auto levi_lambda = [&](std::size_t e) {
      return w.levi.cell.datum.lambda_plus.index_or_fail(w.om.entries[e].label);
    };
    const std::size_t levi_dim = w.levi.sub.alg.dim;
    const CellModule z0 =
        e0 ? standard_module(w.levi.cell, levi_lambda(*e0), Side::Right)
           : zero_module(f, levi_dim, Side::Right, "Z" + omega_label(label, 0));
    const CellModule z1 =
        e1 ? standard_module(w.levi.cell, levi_lambda(*e1), Side::Right)
           : zero_module(f, levi_dim, Side::Right, "Z" + omega_label(label, 1));
    const CellModule zs0 =
        e0 ? standard_module(w.levi.cell, levi_lambda(*e0), Side::Left)
           : zero_module(f, levi_dim, Side::Left, "#Z" + omega_label(label, 0));
    const CellModule zs1 =
        e1 ? standard_module(w.levi.cell, levi_lambda(*e1), Side::Left)
           : zero_module(f, levi_dim, Side::Left, "#Z" + omega_label(label, 1));
    const RowSpace rad_z0 =
        e0 ? gram_radical(w.levi.cell, gram(w.levi.cell, levi_lambda(*e0)), z0)
           : RowSpace(f, 0);
    const RowSpace rad_z1 =
        e1 ? gram_radical(w.levi.cell, gram(w.levi.cell, levi_lambda(*e1)), z1)
           : RowSpace(f, 0);
    const RowSpace rad_zs0 =
        e0 ? gram_radical(w.levi.cell, left_gram(w.levi.cell, levi_lambda(*e0)),
                          zs0)
           : RowSpace(f, 0);
    const RowSpace rad_zs1 =
        e1 ? gram_radical(w.levi.cell, left_gram(w.levi.cell, levi_lambda(*e1)),
                          zs1)
           : RowSpace(f, 0);

    const CellModule w_levi = restrict_to_sub(wmod, w.levi.sub);
    const CellModule wsharp_levi = restrict_to_sub(wsharp, w.levi.sub);

    // The split map (plus block first, then minus) into the T order.
    std::vector<std::pair<std::size_t, std::size_t>> split_assign;
    for (std::size_t i = 0; i < plus.size(); ++i)
      split_assign.emplace_back(i, plus[i]);
    for (std::size_t i = 0; i < minus.size(); ++i)
      split_assign.emplace_back(plus.size() + i, minus[i]);
    const ExactMatrix p_split = assignment_matrix(f, k, k, split_assign);

    const CellModule dsum = direct_sum(z0, z1, "Z0+Z1(" + label + ")");
    {
      const bool ok = rank(p_split) == k &&
                      equivariant_rows(row_view(dsum), row_view(w_levi), p_split);
      rep.add("standard-splits", label, ok, "");
    }
    // Radical of the direct sum, in its coordinates.
    RowSpace rad_direct(f, k);
    {
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < rad_z0.basis().rows(); ++r) {
        Vec v = vec_zero(f, k);
        for (std::size_t c = 0; c < rad_z0.ambient(); ++c)
          v[c] = rad_z0.basis().at(r, c);
        rows.push_back(std::move(v));
      }
      for (std::size_t r = 0; r < rad_z1.basis().rows(); ++r) {
        Vec v = vec_zero(f, k);
        for (std::size_t c = 0; c < rad_z1.ambient(); ++c)
          v[plus.size() + c] = rad_z1.basis().at(r, c);
        rows.push_back(std::move(v));
      }
      rad_direct = RowSpace::span(f, k, rows);
    }
    {
      const bool rad_ok = map_space(f, rad_direct, p_split) == rad_w;
      bool ind_ok = false;
      if (rad_ok) {
        const QuotientModule qd = quotient_module(dsum, rad_direct, "L0+L1");
        const QuotientModule qw =
            quotient_module(w_levi, rad_w, "L(" + label + ")");
        const ExactMatrix pq = induced_quotient_map(f, qd, qw, p_split);
        ind_ok = qd.mod.dim == qw.mod.dim && rank(pq) == qd.mod.dim &&
                 equivariant_rows(row_view(qd.mod), row_view(qw.mod), pq);
      }
      rep.add("simple-splits", label, rad_ok && ind_ok, "");
    }

    // Quotient algebra comparisons (surviving labels only).
    if (e0) {
      const auto ql = w.quot.alg.datum.lambda_plus.index(label);
      if (ql) {
        const CellModule zbar = standard_module(w.quot.alg, *ql, Side::Right);
        const CellModule zbar_levi = quot_to_levi(f, zbar, w.quot, levi_dim);
        const ExactMatrix id = ExactMatrix::identity(f, z0.dim);
        rep.add("quotient-standard-iso", label,
                equivariant_rows(row_view(z0), row_view(zbar_levi), id), "");
        const RowSpace rad_zbar =
            gram_radical(w.quot.alg, gram(w.quot.alg, *ql), zbar);
        bool ok = rad_zbar == rad_z0;
        if (ok) {
          const QuotientModule q0 = quotient_module(z0, rad_z0, "L0");
          const QuotientModule qb =
              quotient_module(quot_to_levi(f, zbar, w.quot, levi_dim), rad_zbar,
                              "Lbar");
          const ExactMatrix pq = induced_quotient_map(f, q0, qb, id);
          ok = q0.mod.dim == qb.mod.dim && rank(pq) == q0.mod.dim &&
               equivariant_rows(row_view(q0.mod), row_view(qb.mod), pq);
        }
        rep.add("quotient-simple-iso", label, ok, "");
      }
    }

    // Parabolic standard modules and their pairings.
    const CellModule zt0 =
        e0 ? sba_standard_module(ca, w.para, w.om, *e0, Side::Right)
           : zero_module(f, w.para.sub.alg.dim, Side::Right, "Z~0");
    const CellModule zt1 =
        e1 ? sba_standard_module(ca, w.para, w.om, *e1, Side::Right)
           : zero_module(f, w.para.sub.alg.dim, Side::Right, "Z~1");
    const CellModule zts0 =
        e0 ? sba_standard_module(ca, w.para, w.om, *e0, Side::Left)
           : zero_module(f, w.para.sub.alg.dim, Side::Left, "#Z~0");
    const CellModule zts1 =
        e1 ? sba_standard_module(ca, w.para, w.om, *e1, Side::Left)
           : zero_module(f, w.para.sub.alg.dim, Side::Left, "#Z~1");
    const ExactMatrix beta0 =
        e0 ? sba_beta(ca, w.para, w.om, *e0) : ExactMatrix(f, 0, 0);
    const ExactMatrix beta1 =
        e1 ? sba_beta(ca, w.para, w.om, *e1) : ExactMatrix(f, 0, 0);
    const RowSpace rad_zt0 =
        e0 ? RowSpace::span(f, zt0.dim, kernel_rows(beta0)) : RowSpace(f, 0);
    const RowSpace rad_zt1 =
        e1 ? RowSpace::span(f, zt1.dim, kernel_rows(beta1)) : RowSpace(f, 0);
    const RowSpace rad_zts0 =
        e0 ? RowSpace::span(f, zts0.dim, kernel_rows(beta0.transpose()))
           : RowSpace(f, 0);
    const RowSpace rad_zts1 =
        e1 ? RowSpace::span(f, zts1.dim, kernel_rows(beta1.transpose()))
           : RowSpace(f, 0);

    // Restriction to the levi matches the levi standard modules.
    if (e0) {
      const CellModule r = para_to_levi(zt0, w.para, w.levi.sub);
      rep.add("parabolic-levi-right-0", label,
              equivariant_rows(row_view(z0), row_view(r),
                               ExactMatrix::identity(f, z0.dim)),
              "");
      const CellModule rs = para_to_levi(zts0, w.para, w.levi.sub);
      rep.add("parabolic-levi-left-0", label,
              equivariant_rows(row_view(zs0), row_view(rs),
                               ExactMatrix::identity(f, zs0.dim)),
              "");
      bool ok = rad_zt0 == rad_z0;
      if (ok) {
        const QuotientModule qa = quotient_module(z0, rad_z0, "L0");
        const QuotientModule qb = quotient_module(r, rad_zt0, "L~0|levi");
        const ExactMatrix pq = induced_quotient_map(
            f, qa, qb, ExactMatrix::identity(f, z0.dim));
        ok = qa.mod.dim == qb.mod.dim && rank(pq) == qa.mod.dim &&
             equivariant_rows(row_view(qa.mod), row_view(qb.mod), pq);
      }
      rep.add("parabolic-levi-right-simple-0", label, ok, "");
      bool oks = rad_zts0 == rad_zs0;
      if (oks) {
        const QuotientModule qa = quotient_module(zs0, rad_zs0, "#L0");
        const QuotientModule qb = quotient_module(rs, rad_zts0, "#L~0|levi");
        const ExactMatrix pq = induced_quotient_map(
            f, qa, qb, ExactMatrix::identity(f, zs0.dim));
        oks = qa.mod.dim == qb.mod.dim && rank(pq) == qa.mod.dim &&
              equivariant_rows(row_view(qa.mod), row_view(qb.mod), pq);
      }
      rep.add("parabolic-levi-left-simple-0", label, oks, "");
    }
    if (e1) {
      const CellModule r = para_to_levi(zt1, w.para, w.levi.sub);
      rep.add("parabolic-levi-right-1", label,
              rank(p_split) == k &&
                  equivariant_rows(row_view(dsum), row_view(r), p_split),
              "");
      const CellModule rs = para_to_levi(zts1, w.para, w.levi.sub);
      rep.add("parabolic-levi-left-1", label,
              equivariant_rows(row_view(zs1), row_view(rs),
                               ExactMatrix::identity(f, zs1.dim)),
              "");
      // rad Z~1 corresponds to Z0 (+) rad Z1 under the split.
      RowSpace expected(f, k);
      {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < plus.size(); ++i) {
          Vec v = vec_zero(f, k);
          v[i] = Scalar::one(f);
          rows.push_back(std::move(v));
        }
        for (std::size_t r2 = 0; r2 < rad_z1.basis().rows(); ++r2) {
          Vec v = vec_zero(f, k);
          for (std::size_t c = 0; c < rad_z1.ambient(); ++c)
            v[plus.size() + c] = rad_z1.basis().at(r2, c);
          rows.push_back(std::move(v));
        }
        expected = map_space(f, RowSpace::span(f, k, rows), p_split);
      }
      bool ok = expected == rad_zt1;
      if (ok) {
        std::vector<Vec> lhs_rows;
        for (std::size_t i = 0; i < plus.size(); ++i) {
          Vec v = vec_zero(f, k);
          v[i] = Scalar::one(f);
          lhs_rows.push_back(std::move(v));
        }
        for (std::size_t r2 = 0; r2 < rad_z1.basis().rows(); ++r2) {
          Vec v = vec_zero(f, k);
          for (std::size_t c = 0; c < rad_z1.ambient(); ++c)
            v[plus.size() + c] = rad_z1.basis().at(r2, c);
          lhs_rows.push_back(std::move(v));
        }
        const RowSpace lhs = RowSpace::span(f, k, lhs_rows);
        const QuotientModule qa = quotient_module(dsum, lhs, "L1-via-sum");
        const QuotientModule qb = quotient_module(r, rad_zt1, "L~1|levi");
        const ExactMatrix pq = induced_quotient_map(f, qa, qb, p_split);
        ok = qa.mod.dim == qb.mod.dim && rank(pq) == qa.mod.dim &&
             equivariant_rows(row_view(qa.mod), row_view(qb.mod), pq);
      }
      rep.add("parabolic-levi-right-simple-1", label, ok, "");
      bool oks = rad_zts1 == rad_zs1;
      if (oks) {
        const QuotientModule qa = quotient_module(zs1, rad_zs1, "#L1");
        const QuotientModule qb = quotient_module(rs, rad_zts1, "#L~1|levi");
        const ExactMatrix pq = induced_quotient_map(
            f, qa, qb, ExactMatrix::identity(f, zs1.dim));
        oks = qa.mod.dim == qb.mod.dim && rank(pq) == qa.mod.dim &&
              equivariant_rows(row_view(qa.mod), row_view(qb.mod), pq);
      }
      rep.add("parabolic-levi-left-simple-1", label, oks, "");
    }

    // Ambient restriction to the parabolic.
    const CellModule w_para = restrict_to_sub(wmod, w.para.sub);
    const CellModule wsharp_para = restrict_to_sub(wsharp, w.para.sub);
    const QuotientModule l_para = quotient_module(w_para, rad_w, "L|para");
    const QuotientModule lsharp_para =
        quotient_module(wsharp_para, rad_wsharp, "#L|para");

    RowSpace image_f(f, l_para.mod.dim);  // induced simple embedding image
    if (e0) {
      std::vector<std::pair<std::size_t, std::size_t>> assign;
      for (std::size_t i = 0; i < plus.size(); ++i) assign.emplace_back(i, plus[i]);
      const ExactMatrix p_incl = assignment_matrix(f, plus.size(), k, assign);
      rep.add("ambient-embed-right", label,
              rank(p_incl) == plus.size() &&
                  equivariant_rows(row_view(zt0), row_view(w_para), p_incl),
              "");
      // Radical pullback and the induced simple embedding.
      std::vector<Vec> unit_rows;
      for (std::size_t i = 0; i < plus.size(); ++i) {
        Vec v = vec_zero(f, plus.size());
        v[i] = Scalar::one(f);
        unit_rows.push_back(std::move(v));
      }
      const RowSpace full0 = RowSpace::span(f, plus.size(), unit_rows);
      const bool pullback =
          map_space(f, rad_zt0, p_incl).dim() == rad_zt0.dim() &&
          rad_w.contains(map_space(f, rad_zt0, p_incl)) &&
          map_space(f, full0, p_incl).intersect(rad_w).dim() == rad_zt0.dim();
      bool ok = pullback;
      if (ok) {
        const QuotientModule q0 = quotient_module(zt0, rad_zt0, "L~0");
        const ExactMatrix fq = induced_quotient_map(f, q0, l_para, p_incl);
        ok = rank(fq) == q0.mod.dim &&
             equivariant_rows(row_view(q0.mod), row_view(l_para.mod), fq);
        if (ok) {
          std::vector<Vec> rows;
          for (std::size_t r2 = 0; r2 < fq.rows(); ++r2)
            rows.push_back(fq.row(r2));
          image_f = RowSpace::span(f, l_para.mod.dim, rows);
        }
      }
      rep.add("simple-contains", label, ok, "");
    }
    if (e1) {
      const ExactMatrix id = ExactMatrix::identity(f, k);
      rep.add("ambient-iso-right", label,
              equivariant_rows(row_view(zt1), row_view(w_para), id), "");
      bool ok = rad_zt1.contains(rad_w);
      if (ok) {
        const QuotientModule q1 = quotient_module(zt1, rad_zt1, "L~1");
        const ExactMatrix gq = induced_quotient_map(f, l_para, q1, id);
        ok = rank(gq) == q1.mod.dim &&
             equivariant_rows(row_view(l_para.mod), row_view(q1.mod), gq);
        if (ok) {
          const RowSpace ker = left_kernel(f, gq);
          ok = ker == image_f &&
               l_para.mod.dim == image_f.dim() + q1.mod.dim;
        }
      }
      rep.add("simple-quotient-iso", label, ok, "");
    } else if (e0) {
      // No lower part: the embedded simple is everything.
      rep.add("simple-quotient-iso", label,
              image_f.dim() == l_para.mod.dim, "");
    }

    // Left-module relations with the ambient algebra.
    RowSpace image_sharp(f, lsharp_para.mod.dim);
    if (e1) {
      std::vector<std::pair<std::size_t, std::size_t>> assign;
      for (std::size_t i = 0; i < minus.size(); ++i)
        assign.emplace_back(i, minus[i]);
      const ExactMatrix p_incl = assignment_matrix(f, minus.size(), k, assign);
      rep.add("ambient-embed-left", label,
              rank(p_incl) == minus.size() &&
                  equivariant_rows(row_view(zts1), row_view(wsharp_para), p_incl),
              "");
      std::vector<Vec> unit_rows;
      for (std::size_t i = 0; i < minus.size(); ++i) {
        Vec v = vec_zero(f, minus.size());
        v[i] = Scalar::one(f);
        unit_rows.push_back(std::move(v));
      }
      const RowSpace full1 = RowSpace::span(f, minus.size(), unit_rows);
      bool ok = rad_wsharp.contains(map_space(f, rad_zts1, p_incl)) &&
                map_space(f, full1, p_incl).intersect(rad_wsharp).dim() ==
                    rad_zts1.dim();
      if (ok) {
        const QuotientModule q1 = quotient_module(zts1, rad_zts1, "#L~1");
        const ExactMatrix fq = induced_quotient_map(f, q1, lsharp_para, p_incl);
        ok = rank(fq) == q1.mod.dim &&
             equivariant_rows(row_view(q1.mod), row_view(lsharp_para.mod), fq);
        if (ok) {
          std::vector<Vec> rows;
          for (std::size_t r2 = 0; r2 < fq.rows(); ++r2)
            rows.push_back(fq.row(r2));
          image_sharp = RowSpace::span(f, lsharp_para.mod.dim, rows);
        }
      }
      rep.add("left-simple-contains", label, ok, "");
    }
    if (e0) {
      // Projection onto the surviving left module, T-minus rows to zero.
      std::vector<std::pair<std::size_t, std::size_t>> assign;
      for (std::size_t i = 0; i < plus.size(); ++i) assign.emplace_back(plus[i], i);
      const ExactMatrix p_proj = assignment_matrix(f, k, plus.size(), assign);
      const bool hom =
          equivariant_rows(row_view(wsharp_para), row_view(zts0), p_proj);
      rep.add("left-projection-hom", label, hom, "");
      bool ok = hom && rad_zts0.contains(map_space(f, rad_wsharp, p_proj));
      if (ok) {
        const QuotientModule q0 = quotient_module(zts0, rad_zts0, "#L~0");
        const ExactMatrix gq = induced_quotient_map(f, lsharp_para, q0, p_proj);
        ok = rank(gq) == q0.mod.dim &&
             equivariant_rows(row_view(lsharp_para.mod), row_view(q0.mod), gq);
        if (ok) {
          const RowSpace ker = left_kernel(f, gq);
          ok = ker == image_sharp &&
               lsharp_para.mod.dim == image_sharp.dim() + q0.mod.dim;
        }
      }
      rep.add("left-simple-quotient-iso", label, ok, "");
    }

    parts[l] = rep;
  });

  CheckReport rep;
  for (const auto& part : parts) rep.merge(part);
  return rep;
}

// ---------------------------------------------------------------------------
// Decomposition-number relations
// ---------------------------------------------------------------------------

CheckReport check_decomposition_relations(const AlphaWorkspace& w) {
  const CellularAlgebra& ca = *w.ca;
  CheckReport rep;
  const std::set<std::string> omega0(w.omega_zero.begin(), w.omega_zero.end());

  auto lam0 = [&](const std::string& l) { return omega_label(l, 0); };
  auto lam1 = [&](const std::string& l) { return omega_label(l, 1); };

  // Left and right decomposition matrices coincide for the cellular ones.
  rep.add("left-right-ambient", "-", w.d_ambient == w.d_ambient_left, "");
  rep.add("left-right-levi", "-", w.d_levi == w.d_levi_left, "");
  rep.add("left-right-quotient", "-", w.d_quot == w.d_quot_left, "");

  // Vanishing and equality inside the levi and the quotient.
  for (std::size_t li = 0; li < ca.lambda_count(); ++li) {
    const std::string l = ca.lambda_label(li);
    for (std::size_t mi = 0; mi < ca.lambda_count(); ++mi) {
      const std::string m = ca.lambda_label(mi);
      const bool same_alpha = w.alpha_of_cell(li) == w.alpha_of_cell(mi);
      const std::string pair = l + "->" + m;
      if (omega0.count(lam0(m))) {
        // Lower simples never appear in surviving standards, and surviving
        // rows match the quotient.
        rep.add("levi-quotient-equal", pair,
                w.d_levi.get(lam0(l), lam0(m)) == w.d_quot.get(l, m), "");
        if (same_alpha)
          rep.add("levi-lower-vanishing", pair,
                  w.d_levi.get(lam1(l), lam0(m)) == 0, "");
        if (!same_alpha) {
          rep.add("levi-cross-vanishing", pair,
                  w.d_levi.get(lam0(l), lam0(m)) == 0, "");
          rep.add("quotient-cross-vanishing", pair,
                  w.d_quot.get(l, m) == 0, "");
        }
      }
      if (omega0.count(lam1(m)))
        rep.add("surviving-vs-lower-vanishing", pair,
                w.d_levi.get(lam0(l), lam1(m)) == 0, "");
    }
  }

  // Chains through the four algebras.
  for (std::size_t li = 0; li < ca.lambda_count(); ++li) {
    const std::string l = ca.lambda_label(li);
    for (const std::string& m : w.lambda_plus_zero) {
      const std::size_t mi = ca.datum.lambda_plus.index_or_fail(m);
      const bool same_alpha = w.alpha_of_cell(li) == w.alpha_of_cell(mi);
      const long long da = w.d_ambient.get(l, m);
      const std::string pair = l + "->" + m;
      if (omega0.count(lam0(m))) {
        if (same_alpha) {
          const bool ok = da == w.d_levi.get(lam0(l), lam0(m)) &&
                          da == w.d_quot.get(l, m) &&
                          da == w.d_para_right.get(lam0(l), lam0(m));
          rep.add("decomp-chain-same-value", pair, ok, "");
        } else {
          const bool ok = da == w.d_levi.get(lam1(l), lam0(m)) &&
                          da == w.d_para_right.get(lam1(l), lam0(m));
          rep.add("decomp-chain-cross-value", pair, ok, "");
        }
      }
      if (omega0.count(lam1(m))) {
        const bool ok = da == w.d_levi.get(lam1(l), lam1(m)) &&
                        da == w.d_para_right.get(lam1(l), lam1(m));
        rep.add("decomp-chain-lower-value", pair, ok, "");
      }
    }
  }

  // Left/right equalities for the parabolic.
  for (std::size_t li = 0; li < ca.lambda_count(); ++li) {
    const std::string l = ca.lambda_label(li);
    for (const std::string& m : w.lambda_plus_zero) {
      const std::size_t mi = ca.datum.lambda_plus.index_or_fail(m);
      const bool same_alpha = w.alpha_of_cell(li) == w.alpha_of_cell(mi);
      const std::string pair = l + "->" + m;
      if (omega0.count(lam0(m)) && same_alpha) {
        const long long v = w.d_para_right.get(lam0(l), lam0(m));
        rep.add("parabolic-left-right-same", pair,
                v == w.d_levi.get(lam0(l), lam0(m)) &&
                    v == w.d_levi_left.get(lam0(l), lam0(m)) &&
                    v == w.d_para_left.get(lam0(l), lam0(m)),
                "");
      }
      if (omega0.count(lam0(m)) && !same_alpha) {
        const long long v = w.d_para_right.get(lam1(l), lam0(m));
        rep.add("parabolic-left-right-cross", pair,
                v == w.d_levi.get(lam1(l), lam0(m)) &&
                    v == w.d_levi_left.get(lam1(l), lam0(m)) &&
                    v == w.d_para_left.get(lam1(l), lam0(m)),
                "");
      }
      if (omega0.count(lam1(m))) {
        const long long v = w.d_para_right.get(lam1(l), lam1(m));
        rep.add("parabolic-left-right-lower", pair,
                v == w.d_levi.get(lam1(l), lam1(m)) &&
                    v == w.d_levi_left.get(lam1(l), lam1(m)) &&
                    v == w.d_para_left.get(lam1(l), lam1(m)),
                "");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Condition (C)
// ---------------------------------------------------------------------------

ConditionC check_condition_c(const AlphaWorkspace& w) {
  const CellularAlgebra& ca = *w.ca;
  ConditionC out;
  out.holds = true;
  for (const std::string& m : w.lambda_plus_zero) {
    const auto it = std::find(w.ad.lambda.begin(), w.ad.lambda.end(), m);
    if (it == w.ad.lambda.end()) {
      out.holds = false;
      out.witness = m + " carries a nonzero simple but no idempotent";
      break;
    }
    const std::size_t mu = it - w.ad.lambda.begin();
    const std::size_t li = ca.datum.lambda_plus.index_or_fail(m);
    bool has_base_term = false;
    for (const auto& [pos, coeff] : w.ad.idempotents[mu])
      if (ca.datum.cell[pos].lambda == li) has_base_term = true;
    if (!has_base_term) {
      out.holds = false;
      out.witness = "e_" + m + " vanishes modulo the span above " + m;
      break;
    }
  }
  if (out.holds) {
    // Every nonzero-simple label keeps a nonzero simple on the surviving part.
    const std::set<std::string> omega0(w.omega_zero.begin(),
                                       w.omega_zero.end());
    for (const std::string& m : w.lambda_plus_zero)
      out.consequences.add("surviving-simple-nonzero", m,
                           omega0.count(omega_label(m, 0)) > 0, "");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

namespace {

/// Canonical partition: blocks sorted internally and between each other.
std::vector<std::vector<std::string>> canonical_partition(
    std::vector<std::vector<std::string>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

} // namespace

BlockData compute_block_data(const AlphaWorkspace& w) {
  BlockData bd;
  bd.ambient = linkage_partition(w.d_ambient);
  bd.levi = linkage_partition(w.d_levi);
  bd.para = linkage_partition(w.d_para_right);
  bd.para_left = linkage_partition(w.d_para_left);
  bd.quot = linkage_partition(w.d_quot);

  // Project the parabolic partition to cell labels, merging the two halves
  // of each label.
  {
    std::vector<std::string> lambdas;
    for (std::size_t l = 0; l < w.ca->lambda_count(); ++l)
      lambdas.push_back(w.ca->lambda_label(l));
    std::vector<std::size_t> parent(lambdas.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto lambda_of = [&](const std::string& omega_lab) {
      for (const auto& e : w.om.entries)
        if (e.label == omega_lab) return w.ca->lambda_label(e.lambda);
      fail(ErrorKind::Internal, "unknown omega label " + omega_lab);
    };
    auto index_of = [&](const std::string& lam) {
      return static_cast<std::size_t>(
          std::find(lambdas.begin(), lambdas.end(), lam) - lambdas.begin());
    };
    for (const auto& blk : bd.para.blocks) {
      const std::size_t first = index_of(lambda_of(blk.front()));
      for (const auto& lab : blk)
        parent[find(index_of(lambda_of(lab)))] = find(first);
    }
    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      groups[find(i)].push_back(lambdas[i]);
    for (auto& [r, labels] : groups) bd.para_on_lambda.blocks.push_back(labels);
  }

  bd.cartan = cartan_via_formula(w.d_para_left, w.d_para_right);
  bd.cartan_sharp = cartan_via_formula(w.d_para_right, w.d_para_left);
  return bd;
}

CheckReport check_block_relations(const AlphaWorkspace& w, const BlockData& bd) {
  CheckReport rep;

  rep.add("blocks-ambient-vs-parabolic", "-",
          canonical_partition(bd.ambient.blocks) ==
              canonical_partition(bd.para_on_lambda.blocks),
          "");

  // Quotient blocks refine the ambient ones by the map fibers.
  {
    std::vector<std::vector<std::string>> expected;
    const std::set<std::string> bar(w.om.lambda_bar.begin(),
                                    w.om.lambda_bar.end());
    for (const auto& blk : bd.ambient.blocks) {
      std::map<std::string, std::vector<std::string>> fibers;
      for (const auto& lab : blk) {
        if (!bar.count(lab)) continue;
        const auto li = w.ca->datum.lambda_plus.index_or_fail(lab);
        fibers[w.alpha_of_cell(li)].push_back(lab);
      }
      for (auto& [eta, labs] : fibers) expected.push_back(labs);
    }
    rep.add("blocks-quotient-fiber-refinement", "-",
            canonical_partition(bd.quot.blocks) ==
                canonical_partition(expected),
            "");
  }

  // All composition factors of a parabolic standard module stay in its block.
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 0; r < w.d_para_right.row_labels.size() && ok; ++r)
      for (std::size_t c = 0; c < w.d_para_right.col_labels.size() && ok; ++c)
        if (w.d_para_right.entries[r][c] != 0 &&
            !bd.para.same_block(w.d_para_right.row_labels[r],
                                w.d_para_right.col_labels[c])) {
          ok = false;
          detail = w.d_para_right.row_labels[r] + " reaches " +
                   w.d_para_right.col_labels[c];
        }
    rep.add("parabolic-factors-one-block", "-", ok, detail);
  }

  // Symmetry of the projective multiplicities.
  {
    bool ok = bd.cartan.row_labels == bd.cartan_sharp.row_labels &&
              bd.cartan.col_labels == bd.cartan_sharp.col_labels;
    for (std::size_t x = 0; ok && x < bd.cartan.row_labels.size(); ++x)
      for (std::size_t y = 0; y < bd.cartan.col_labels.size(); ++y)
        if (bd.cartan.entries[x][y] != bd.cartan_sharp.entries[y][x]) {
          ok = false;
          break;
        }
    rep.add("cartan-symmetry", "-", ok, "");
  }
  return rep;
}

CheckReport run_full_report(AlphaWorkspace& w) {
  CheckReport rep;
  rep.merge(w.construction_report);
  if (w.d_ambient.row_labels.empty()) compute_decomposition_data(w);
  rep.merge(check_form_relations(w));
  rep.merge(check_module_relations(w));
  rep.merge(check_decomposition_relations(w));
  rep.merge(check_condition_c(w).consequences);
  const BlockData bd = compute_block_data(w);
  rep.merge(check_block_relations(w, bd));
  return rep;
}

} // namespace cellua
