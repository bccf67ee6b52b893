#pragma once

#include <optional>
#include <vector>

#include "cellua/field.hpp"

namespace cellua {

using Vec = std::vector<Scalar>;

/// Dense matrix of exact field elements; all entries share one field.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        data_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, const Scalar& v) { at(r, c) = v; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const Scalar& c) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Vec& v);

  /// Rows listed in `which`, in that order.
  ExactMatrix select_rows(const std::vector<std::size_t>& which) const;
  ExactMatrix select_cols(const std::vector<std::size_t>& which) const;

  static ExactMatrix from_rows(const Field& f, std::size_t cols,
                               const std::vector<Vec>& rows);

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct Echelon {
  ExactMatrix mat;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

/// Canonical reduced row echelon form; pivots are the first nonzero entry of
/// each row, scanned column by column in row-major order.
Echelon rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {x : m x^T = 0}, returned as rows; one vector per free column,
/// in ascending free-column order.
std::vector<Vec> kernel_rows(const ExactMatrix& m);

/// One solution of m x = b (column convention), or nullopt when inconsistent.
std::optional<Vec> solve(const ExactMatrix& m, const Vec& b);

// Vector helpers.
Vec vec_zero(const Field& f, std::size_t n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);
Scalar vec_dot(const Vec& a, const Vec& b);
/// Row vector times matrix.
Vec vec_mul(const Vec& a, const ExactMatrix& m);
/// Matrix times column vector.
Vec mul_vec(const ExactMatrix& m, const Vec& x);

} // namespace cellua
