#include "cellua/subspace.hpp"

namespace cellua {

RowSpace RowSpace::span(const ExactMatrix& rows) {
  RowSpace s(rows.field(), rows.cols());
  const Echelon e = rref(rows);
  std::vector<std::size_t> keep(e.rank);
  for (std::size_t i = 0; i < e.rank; ++i) keep[i] = i;
  s.basis_ = e.mat.select_rows(keep);
  return s;
}

RowSpace RowSpace::span(const Field& f, std::size_t ambient,
                        const std::vector<Vec>& rows) {
  return span(ExactMatrix::from_rows(f, ambient, rows));
}

bool RowSpace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  if (v.size() != ambient_)
    fail(ErrorKind::DimensionMismatch, "RowSpace: vector length mismatch");
  // Reduce v against the echelon basis; pivot entries give the coordinates.
  Vec r = v;
  Vec coords = vec_zero(field_, dim());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // Pivot column of basis row i is its first nonzero entry (value 1).
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    if (p == ambient_) continue;
    const Scalar c = r[p];
    if (c.is_zero()) continue;
    coords[i] = c;
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= c * basis_.at(i, j);
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coords;
}

bool RowSpace::contains(const RowSpace& o) const {
  for (std::size_t i = 0; i < o.basis_.rows(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

RowSpace RowSpace::sum(const RowSpace& o) const {
  if (ambient_ != o.ambient_)
    fail(ErrorKind::DimensionMismatch, "RowSpace sum: ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  for (std::size_t i = 0; i < o.basis_.rows(); ++i) rows.push_back(o.basis_.row(i));
  return span(field_, ambient_, rows);
}

RowSpace RowSpace::intersect(const RowSpace& o) const {
  if (ambient_ != o.ambient_)
    fail(ErrorKind::DimensionMismatch, "RowSpace intersect: ambient mismatch");
  const std::size_t k = dim(), m = o.dim();
  if (k == 0 || m == 0) return RowSpace(field_, ambient_);
  // x = a U = b V: solve [U^T | -V^T] (a,b)^T = 0.
  ExactMatrix sys(field_, ambient_, k + m);
  for (std::size_t r = 0; r < ambient_; ++r) {
    for (std::size_t i = 0; i < k; ++i) sys.at(r, i) = basis_.at(i, r);
    for (std::size_t j = 0; j < m; ++j) sys.at(r, k + j) = -o.basis_.at(j, r);
  }
  std::vector<Vec> gens;
  for (const Vec& ab : kernel_rows(sys)) {
    Vec x = vec_zero(field_, ambient_);
    for (std::size_t i = 0; i < k; ++i)
      if (!ab[i].is_zero())
        x = vec_add(x, vec_scaled(basis_.row(i), ab[i]));
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_, gens);
}

std::vector<std::size_t> RowSpace::complement_coords() const {
  std::vector<std::size_t> out;
  RowSpace acc = *this;
  for (std::size_t i = 0; i < ambient_ && acc.dim() < ambient_; ++i) {
    Vec e = vec_zero(field_, ambient_);
    e[i] = Scalar::one(field_);
    if (!acc.contains(e)) {
      out.push_back(i);
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < acc.basis_.rows(); ++r)
        rows.push_back(acc.basis_.row(r));
      rows.push_back(e);
      acc = span(field_, ambient_, rows);
    }
  }
  return out;
}

} // namespace cellua
