#pragma once

#include <ostream>
#include <string>

#include "ribbon/rational.hpp"

namespace ribbon {

// Element a + b*sqrt(2) of the field Q[sqrt 2].
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QSqrt2 operator-() const { return {-a_, -b_}; }
  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o) {
    Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt2& operator/=(const QSqrt2& o) {
    // (a + b r)/(c + d r) = (a + b r)(c - d r)/(c^2 - 2 d^2); the norm is nonzero since sqrt 2 is irrational.
    const Rational norm = o.a_ * o.a_ - Rational(2) * o.b_ * o.b_;
    if (norm.is_zero()) throw std::domain_error("QSqrt2: division by zero");
    *this *= QSqrt2(o.a_, -o.b_);
    a_ /= norm;
    b_ /= norm;
    return *this;
  }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) = default;

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() > 0 ? "+" : "");
    return s + b_.str() + "*sqrt2";
  }
  friend std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.str(); }

 private:
  Rational a_;
  Rational b_;
};

inline QSqrt2 pow(QSqrt2 base, int exponent) {
  if (exponent < 0) {
    base = QSqrt2(1) / base;
    exponent = -exponent;
  }
  QSqrt2 result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace ribbon
