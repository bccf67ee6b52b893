#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "cellua/error.hpp"

namespace cellua {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rational, Fp };

/// Field descriptor: the rationals, or a prime field F_p with p < 2^31.
class Field {
public:
  Field() : kind_(FieldKind::Rational), p_(0) {}

  static Field rationals() { return Field(); }
  static Field fp(std::uint32_t p);

  /// Accepts "rational" or "fp:<p>".
  static Field parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::Rational; }
  std::uint32_t prime() const { return p_; }
  std::string name() const;

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  FieldKind kind_;
  std::uint32_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; F_p residues live in [0, p).
class Scalar {
public:
  Scalar() : field_(), q_(0), r_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  Scalar(const Field& f, long long value);
  Scalar(const Field& f, const Rational& value);

  /// Parses "n" or "n/d" (rationals) or a decimal residue (F_p).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(field_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "n" or "n/d" for rationals; the residue for F_p. Parses back exactly.
  std::string str() const;

  const Rational& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

private:
  void check_same(const Scalar& o) const {
    if (field_ != o.field_)
      fail(ErrorKind::FieldMismatch,
           "scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
  }

  Field field_;
  Rational q_;       // used when rational
  std::uint64_t r_;  // used when F_p
};

} // namespace cellua
