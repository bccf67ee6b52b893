#include "cellua/field.hpp"

namespace cellua {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

} // namespace

Field Field::fp(std::uint32_t p) {
  if (p >= (1u << 31))
    fail(ErrorKind::Input, "prime too large: " + std::to_string(p));
  if (!is_prime_u32(p))
    fail(ErrorKind::Input, "not a prime: " + std::to_string(p));
  Field f;
  f.kind_ = FieldKind::Fp;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string num = text.substr(3);
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(num, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::Input, "bad field spec: " + text);
    }
    if (used != num.size() || p >= (1ul << 31))
      fail(ErrorKind::Input, "bad field spec: " + text);
    return fp(static_cast<std::uint32_t>(p));
  }
  fail(ErrorKind::Input, "bad field spec: " + text + " (expected rational or fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "rational" : "fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long long value) : field_(f), q_(0), r_(0) {
  if (f.is_rational()) {
    q_ = Rational(value);
  } else {
    long long m = value % static_cast<long long>(f.prime());
    if (m < 0) m += f.prime();
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(const Field& f, const Rational& value) : field_(f), q_(0), r_(0) {
  if (f.is_rational()) {
    q_ = value;
  } else {
    const std::uint64_t p = f.prime();
    const auto num = boost::multiprecision::cpp_int(numerator(value) % p);
    const auto den = boost::multiprecision::cpp_int(denominator(value) % p);
    std::uint64_t n = num < 0 ? static_cast<std::uint64_t>(num + p) : static_cast<std::uint64_t>(num);
    std::uint64_t d = den < 0 ? static_cast<std::uint64_t>(den + p) : static_cast<std::uint64_t>(den);
    if (d == 0)
      fail(ErrorKind::Input, "denominator divisible by p=" + std::to_string(p));
    r_ = n % p * mod_pow(d, p - 2, p) % p;
  }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational value = Rational(boost::multiprecision::cpp_int(text));
      return Scalar(f, value);
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::Input, "zero denominator in scalar: " + text);
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Scalar(f, Rational(num, den));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::Input, "bad scalar literal: " + text);
  }
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar out(*this);
  if (field_.is_rational())
    out.q_ += o.q_;
  else
    out.r_ = (r_ + o.r_) % field_.prime();
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar out(*this);
  if (field_.is_rational())
    out.q_ -= o.q_;
  else
    out.r_ = (r_ + field_.prime() - o.r_) % field_.prime();
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rational())
    out.q_ = -q_;
  else
    out.r_ = r_ == 0 ? 0 : field_.prime() - r_;
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar out(*this);
  if (field_.is_rational())
    out.q_ *= o.q_;
  else
    out.r_ = r_ * o.r_ % field_.prime();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::Input, "inverse of zero");
  Scalar out(*this);
  if (field_.is_rational())
    out.q_ = 1 / q_;
  else
    out.r_ = mod_pow(r_, field_.prime() - 2, field_.prime());
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

} // namespace cellua
