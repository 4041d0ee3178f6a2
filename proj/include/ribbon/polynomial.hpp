#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

/// Univariate polynomial in gamma with exact rational coefficients.
/// Coefficient i is the coefficient of gamma^i; trailing zeros are always trimmed.
class GammaPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  GammaPolynomial() = default;
  GammaPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT
  GammaPolynomial(int constant) : GammaPolynomial(Rational(constant)) {}         // NOLINT
  explicit GammaPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static GammaPolynomial monomial(int degree, Rational coeff = Rational(1)) {
    std::vector<Rational> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return GammaPolynomial(std::move(c));
  }
  static GammaPolynomial gamma() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
  }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  GammaPolynomial& operator+=(const GammaPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  GammaPolynomial& operator-=(const GammaPolynomial& o) { return *this += -o; }
  GammaPolynomial operator-() const { return scaled(Rational(-1)); }

  GammaPolynomial scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    GammaPolynomial r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  friend GammaPolynomial operator+(GammaPolynomial a, const GammaPolynomial& b) { return a += b; }
  friend GammaPolynomial operator-(GammaPolynomial a, const GammaPolynomial& b) { return a -= b; }
  friend GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return GammaPolynomial(std::move(c));
  }
  GammaPolynomial& operator*=(const GammaPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const GammaPolynomial&, const GammaPolynomial&) = default;

  /// Horner evaluation; T is any ring that accepts Rational coefficients (Rational, QSqrt2).
  template <typename T>
  T evaluate(const T& gamma) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + T(*it);
    return acc;
  }

  /// Human-readable form, e.g. "1/6 + 2/3*g^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << coeffs_[i];
      if (i == 1) os << "*g";
      if (i > 1) os << "*g^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// A point at which Stanley polynomials are evaluated: gamma, P = (p_1..p_l), Q = (q_1..q_l).
struct StanleyPoint {
  Rational gamma;
  std::vector<Rational> p;
  std::vector<Rational> q;
};

/// Sparse polynomial in gamma, p_1..p_l, q_1..q_l with rational coefficients.
///
/// An exponent vector is laid out as [gamma, p_1, q_1, p_2, q_2, ...]; trailing zero
/// exponents are trimmed so that polynomials with different l compare equal when they agree.
class StanleyPolynomial {
 public:
  using Exponent = std::vector<int>;

  StanleyPolynomial() = default;
  StanleyPolynomial(Rational constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) terms_.emplace(Exponent{}, std::move(constant));
  }
  StanleyPolynomial(int constant) : StanleyPolynomial(Rational(constant)) {}  // NOLINT

  static StanleyPolynomial gamma() { return variable(0); }
  static StanleyPolynomial p(int i) { return variable(2 * i - 1); }  // 1-based
  static StanleyPolynomial q(int i) { return variable(2 * i); }      // 1-based

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * monomial(exp); exp is trimmed first.
  void add_term(Exponent exp, const Rational& coeff) {
    while (!exp.empty() && exp.back() == 0) exp.pop_back();
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Total degree, gamma counted with degree 1. Zero polynomial reports GammaPolynomial::kZeroDegree.
  int degree() const {
    int d = GammaPolynomial::kZeroDegree;
    for (const auto& [exp, c] : terms_) d = std::max(d, total(exp));
    return d;
  }

  StanleyPolynomial homogeneous_part(int d) const {
    StanleyPolynomial r;
    for (const auto& [exp, c] : terms_)
      if (total(exp) == d) r.terms_.emplace(exp, c);
    return r;
  }

  StanleyPolynomial& operator+=(const StanleyPolynomial& o) {
    for (const auto& [exp, c] : o.terms_) add_term(exp, c);
    return *this;
  }
  StanleyPolynomial& operator-=(const StanleyPolynomial& o) { return *this += o.scaled(Rational(-1)); }
  StanleyPolynomial scaled(const Rational& s) const {
    StanleyPolynomial r;
    if (s.is_zero()) return r;
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, c * s);
    return r;
  }
  friend StanleyPolynomial operator+(StanleyPolynomial a, const StanleyPolynomial& b) { return a += b; }
  friend StanleyPolynomial operator-(StanleyPolynomial a, const StanleyPolynomial& b) { return a -= b; }
  friend StanleyPolynomial operator*(const StanleyPolynomial& a, const StanleyPolynomial& b) {
    StanleyPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }
  StanleyPolynomial& operator*=(const StanleyPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const StanleyPolynomial&, const StanleyPolynomial&) = default;

  /// Throws std::invalid_argument if a variable with nonzero exponent has no assigned value.
  Rational evaluate(const StanleyPoint& at) const {
    Rational sum;
    for (const auto& [exp, c] : terms_) {
      Rational term = c;
      for (size_t v = 0; v < exp.size(); ++v) {
        if (exp[v] == 0) continue;
        term *= pow(value_of(at, v), exp[v]);
      }
      sum += term;
    }
    return sum;
  }

  static std::string variable_name(size_t index) {
    if (index == 0) return "gamma";
    return (index % 2 == 1 ? "p" : "q") + std::to_string((index + 1) / 2);
  }
  static size_t variable_index(const std::string& name) {
    if (name == "gamma") return 0;
    if (name.size() < 2 || (name[0] != 'p' && name[0] != 'q'))
      throw std::invalid_argument("unknown variable '" + name + "'");
    const int i = std::stoi(name.substr(1));
    if (i < 1) throw std::invalid_argument("unknown variable '" + name + "'");
    return name[0] == 'p' ? static_cast<size_t>(2 * i - 1) : static_cast<size_t>(2 * i);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (size_t v = 0; v < exp.size(); ++v) {
        if (exp[v] == 0) continue;
        os << "*" << variable_name(v);
        if (exp[v] > 1) os << "^" << exp[v];
      }
    }
    return os.str();
  }

 private:
  static StanleyPolynomial variable(size_t index) {
    StanleyPolynomial r;
    Exponent e(index + 1, 0);
    e[index] = 1;
    r.terms_.emplace(std::move(e), Rational(1));
    return r;
  }
  static int total(const Exponent& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
  }
  static const Rational& value_of(const StanleyPoint& at, size_t v) {
    if (v == 0) return at.gamma;
    const size_t i = (v - 1) / 2;
    const auto& seq = (v % 2 == 1) ? at.p : at.q;
    if (i >= seq.size())
      throw std::invalid_argument("StanleyPolynomial::evaluate: no value for " + variable_name(v));
    return seq[i];
  }

  std::map<Exponent, Rational> terms_;
};

}  // namespace ribbon
