#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ribbon {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(mpz_class(num), mpz_class(den));
    value_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "a" or "a/b".
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Rational pow(Rational base, int exponent) {
  if (exponent < 0) {
    base = Rational(1) / base;
    exponent = -exponent;
  }
  Rational result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

inline Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, mpz_class(1));
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b, mpz_class(1));
}

/// gamma = 1/A - A.
inline Rational gamma_of(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("gamma_of: A must be nonzero");
  return Rational(1) / a - a;
}

}  // namespace ribbon

template <>
struct std::hash<ribbon::Rational> {
  size_t operator()(const ribbon::Rational& r) const noexcept { return std::hash<std::string>{}(r.str()); }
};
