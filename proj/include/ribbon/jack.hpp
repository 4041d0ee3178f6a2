#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ribbon/enumeration.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

/// Symmetric function of homogeneous degree, as coefficients on a basis indexed by partitions.
struct SymFunc {
  enum class Basis { Power, Monomial };
  Basis basis = Basis::Power;
  std::map<Partition, Rational> coeffs;

  Rational operator[](const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
};

/// Orders in which Gram-Schmidt visits the monomial basis; both refine dominance.
enum class DominanceExtension {
  Lexicographic,  // increasing lex order
  Conjugate,      // decreasing lex order of the conjugate partition
};

namespace detail {

/// Coefficient of the monomial x^mu in p_pi: assignments of the parts of pi to the
/// variables x_1..x_l(mu) whose sums reproduce mu exactly.
inline Rational power_in_monomial(const Partition& pi, const Partition& mu) {
  std::vector<int> room(mu.parts().begin(), mu.parts().end());
  long count = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == static_cast<size_t>(pi.length())) {
      if (std::all_of(room.begin(), room.end(), [](int r) { return r == 0; })) ++count;
      return;
    }
    for (auto& r : room)
      if (r >= pi[i]) {
        r -= pi[i];
        rec(i + 1);
        r += pi[i];
      }
  };
  rec(0);
  return Rational(count);
}

/// Inverse of a square invertible matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("invert: singular matrix");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    const Rational s = m[c][c];
    for (size_t j = 0; j < n; ++j) {
      m[c][j] /= s;
      inv[c][j] /= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Jack polynomials J^(alpha)_lambda of one degree, in the power-sum basis.
class JackTable {
 public:
  static constexpr int kMaxDegree = 6;

  JackTable(int n, Rational alpha, DominanceExtension order = DominanceExtension::Lexicographic, bool force = false)
      : n_(n), alpha_(std::move(alpha)), parts_(partitions_of(n)) {
    if (n < 1) throw std::invalid_argument("JackTable: degree must be positive");
    if (alpha_.sign() <= 0) throw std::invalid_argument("JackTable: alpha must be positive");
    check_guard(n <= kMaxDegree, "jack(|lambda|=" + std::to_string(n) + ")", force);
    for (size_t i = 0; i < parts_.size(); ++i) index_[parts_[i]] = i;
    const size_t k = parts_.size();

    // p_pi = sum_mu R[pi][mu] m_mu, hence m_mu = sum_pi Rinv[mu][pi] p_pi.
    std::vector<std::vector<Rational>> r(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) r[i][j] = detail::power_in_monomial(parts_[i], parts_[j]);
    const auto m_in_p = detail::invert(r);

    std::vector<Rational> norm(k);
    for (size_t i = 0; i < k; ++i) norm[i] = parts_[i].z() * pow(alpha_, parts_[i].length());
    auto inner = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
      Rational s;
      for (size_t i = 0; i < k; ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i] * norm[i];
      return s;
    };

    std::vector<size_t> visit(k);
    std::iota(visit.begin(), visit.end(), 0);
    if (order == DominanceExtension::Conjugate)
      std::sort(visit.begin(), visit.end(),
                [&](size_t a, size_t b) { return parts_[a].conjugate() > parts_[b].conjugate(); });

    const size_t ones = index_.at(Partition(std::vector<int>(static_cast<size_t>(n), 1)));
    jack_.assign(k, {});
    std::vector<size_t> done;
    for (size_t lam : visit) {
      std::vector<Rational> v = m_in_p[lam];
      for (size_t mu : done) {
        const Rational c = inner(m_in_p[lam], jack_[mu]) / inner(jack_[mu], jack_[mu]);
        if (c.is_zero()) continue;
        for (size_t i = 0; i < k; ++i) v[i] -= c * jack_[mu][i];
      }
      const Rational lead = v[ones];
      if (lead.is_zero()) throw std::logic_error("JackTable: vanishing p_{1^n} coefficient");
      for (auto& x : v) x /= lead;
      jack_[lam] = std::move(v);
      done.push_back(lam);
    }
  }

  int degree() const { return n_; }
  const Rational& alpha() const { return alpha_; }
  const std::vector<Partition>& partitions() const { return parts_; }

  /// theta_pi(lambda): coefficient of p_pi in J_lambda.
  const Rational& theta(const Partition& pi, const Partition& lambda) const {
    return jack_.at(index_of(lambda)).at(index_of(pi));
  }

  SymFunc jack_in_p(const Partition& lambda) const {
    SymFunc f;
    const auto& row = jack_.at(index_of(lambda));
    for (size_t i = 0; i < parts_.size(); ++i)
      if (!row[i].is_zero()) f.coeffs.emplace(parts_[i], row[i]);
    return f;
  }

  /// <f, g>_alpha with <p_l, p_m> = delta z_l alpha^l(l).
  Rational inner_product(const SymFunc& f, const SymFunc& g) const {
    if (f.basis != SymFunc::Basis::Power || g.basis != SymFunc::Basis::Power)
      throw std::invalid_argument("inner_product: power-sum basis expected");
    Rational s;
    for (const auto& [pi, c] : f.coeffs) s += c * g[pi] * pi.z() * pow(alpha_, pi.length());
    return s;
  }

 private:
  size_t index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("JackTable: " + p.str() + " is not a partition of " + std::to_string(n_));
    return it->second;
  }

  int n_;
  Rational alpha_;
  std::vector<Partition> parts_;
  std::map<Partition, size_t> index_;
  std::vector<std::vector<Rational>> jack_;  // jack_[lambda][pi] = theta_pi(lambda)
};

/// Shared, lazily built tables; safe for concurrent readers.
inline std::shared_ptr<const JackTable> jack_table(int n, const Rational& alpha, bool force = false) {
  static std::mutex mu;
  static std::map<std::pair<int, Rational>, std::shared_ptr<const JackTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, alpha);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto t = std::make_shared<const JackTable>(n, alpha, DominanceExtension::Lexicographic, force);
  cache.emplace(key, t);
  return t;
}

inline SymFunc jack_in_p(const Partition& lambda, const Rational& alpha) {
  return jack_table(lambda.size(), alpha)->jack_in_p(lambda);
}

/// Normalized Jack character Ch_pi(lambda) with A^2 = alpha; T is Rational or QSqrt2.
template <typename T>
T ch(const Partition& pi, const Partition& lambda, const Rational& alpha, const T& a, bool force = false) {
  if (alpha.sign() <= 0) throw std::invalid_argument("ch: alpha must be positive");
  if (!(a * a == T(alpha))) throw std::invalid_argument("ch: A^2 must equal alpha");
  if (lambda.size() < pi.size()) return T(0);
  const int k = lambda.size() - pi.size();
  const int m1 = pi.multiplicity(1);
  const Rational theta = jack_table(lambda.size(), alpha, force)->theta(pi.with_ones(k), lambda);
  return pow(a, -(pi.size() - pi.length())) * T(binomial(k + m1, m1) * pi.z() * theta);
}

}  // namespace ribbon
