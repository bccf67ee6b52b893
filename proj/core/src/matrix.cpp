#include "cellua/matrix.hpp"

namespace cellua {

ExactMatrix ExactMatrix::identity(const Field& f, std::size_t n) {
  ExactMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_)
    fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  ExactMatrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  ExactMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  ExactMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
  ExactMatrix out(*this);
  for (auto& v : out.data_) v *= c;
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Vec ExactMatrix::row(std::size_t r) const {
  Vec out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

void ExactMatrix::set_row(std::size_t r, const Vec& v) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& which) const {
  ExactMatrix out(field_, which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(which[i], c);
  return out;
}

ExactMatrix ExactMatrix::select_cols(const std::vector<std::size_t>& which) const {
  ExactMatrix out(field_, rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < which.size(); ++i) out.at(r, i) = at(r, which[i]);
  return out;
}

ExactMatrix ExactMatrix::from_rows(const Field& f, std::size_t cols,
                                   const std::vector<Vec>& rows) {
  ExactMatrix out(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorKind::DimensionMismatch, "row length mismatch");
    out.set_row(r, rows[r]);
  }
  return out;
}

Echelon rref(const ExactMatrix& m) {
  Echelon e;
  e.mat = m;
  ExactMatrix& a = e.mat;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(pivot, c), a.at(lead, c));
    const Scalar inv = a.at(lead, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Scalar factor = a.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(lead, c);
    }
    e.pivots.push_back(col);
    ++lead;
  }
  e.rank = e.pivots.size();
  return e;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_rows(const ExactMatrix& m) {
  const Echelon e = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = vec_zero(f, m.cols());
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < e.rank; ++r)
      v[e.pivots[r]] = -e.mat.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
  if (b.size() != m.rows())
    fail(ErrorKind::DimensionMismatch, "solve: rhs length mismatch");
  const Field& f = m.field();
  ExactMatrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const Echelon e = rref(aug);
  for (auto p : e.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec x = vec_zero(f, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    x[e.pivots[r]] = e.mat.at(r, m.cols());
  return x;
}

Vec vec_zero(const Field& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
  Vec out(a);
  for (auto& v : out) v *= c;
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& v : a)
    if (!v.is_zero()) return false;
  return true;
}

Scalar vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    fail(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Scalar s = a.empty() ? Scalar() : Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_mul(const Vec& a, const ExactMatrix& m) {
  if (a.size() != m.rows())
    fail(ErrorKind::DimensionMismatch, "vec*mat: shape mismatch");
  Vec out = vec_zero(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (a[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += a[r] * m.at(r, c);
  }
  return out;
}

Vec mul_vec(const ExactMatrix& m, const Vec& x) {
  if (x.size() != m.cols())
    fail(ErrorKind::DimensionMismatch, "mat*vec: shape mismatch");
  Vec out = vec_zero(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out[r] += m.at(r, c) * x[c];
  return out;
}

} // namespace cellua
