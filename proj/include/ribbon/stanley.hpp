#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ribbon/embeddings.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/jack.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/qsqrt2.hpp"

namespace ribbon {

/// The explicit Stanley polynomials of Ch_1, Ch_2, Ch_3 in l rectangles, as printed.
inline StanleyPolynomial printed_ch_polynomial(int n, int l) {
  if (n < 1 || n > 3) throw std::invalid_argument("printed_ch_polynomial: n must be 1, 2 or 3");
  if (l < 1) throw std::invalid_argument("printed_ch_polynomial: need at least one rectangle");
  using S = StanleyPolynomial;
  const S g = S::gamma();
  auto p = [](int i) { return S::p(i); };
  auto q = [](int i) { return S::q(i); };
  S r;
  switch (n) {
    case 1:
      for (int i = 1; i <= l; ++i) r += p(i) * q(i);
      break;
    case 2:
      for (int i = 1; i <= l; ++i) r += p(i) * q(i) * (q(i) - p(i) + g);
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) r -= S(2) * p(i) * p(j) * q(j);
      break;
    case 3:
      for (int i = 1; i <= l; ++i)
        r += p(i) * q(i) *
             (q(i) * q(i) - S(3) * p(i) * q(i) + p(i) * p(i) + S(3) * g * (q(i) - p(i)) + S(2) * g * g + S(1));
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
          r -= S(3) * p(i) * p(j) * q(j) * ((q(i) - p(i) + g) + (q(j) - p(j) + g));
      for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
          for (int k = j + 1; k <= l; ++k) r += S(6) * p(i) * p(j) * p(k) * q(k);
      break;
  }
  return r;
}

/// Value of the printed Ch_n polynomial (or its degree n+1 part) at (gamma, P, Q).
inline Rational printed_stanley_ch(int n, const StanleyPoint& at, bool top_only = false) {
  if (at.p.size() != at.q.size()) throw std::invalid_argument("printed_stanley_ch: P and Q differ in length");
  if (at.p.empty()) return Rational(0);
  StanleyPolynomial poly = printed_ch_polynomial(n, static_cast<int>(at.p.size()));
  if (top_only) poly = poly.homogeneous_part(n + 1);
  return poly.evaluate(at);
}

/// (-1)^{l(pi)} * sum of normalized embeddings over oriented maps with face permutation of
/// cycle type pi: sigma_1 ranges over S_n and sigma_2 = phi * sigma_1^{-1}.
template <typename T>
T oriented_face_type_sum(const Partition& pi, const YoungDiagram& lambda, const T& a, bool force = false) {
  const int n = pi.size();
  check_guard(n <= 5, "oriented face-type sum(pi=" + pi.str() + ")", force);
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : pi.parts()) {
    std::vector<int> c;
    for (int i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  const Permutation phi = Permutation::from_cycles(n, cycles);
  T sum(0);
  for (const Permutation& s1 : all_permutations(n)) {
    const OrientedMap m(s1, phi.after(s1.inverse()));
    sum += normalized_embeddings(underlying_graph(m), lambda, a);
  }
  return pi.length() % 2 == 0 ? sum : -sum;
}

/// (-1)^{l(pi)} * sum over conservative maps of face-type pi of
/// w^{|pi|+l(pi)-|V|} * normalized embeddings.
inline QSqrt2 nonoriented_face_type_sum(const Partition& pi, const YoungDiagram& lambda, const QSqrt2& a,
                                        const QSqrt2& w, bool force = false) {
  check_guard(pi.size() + pi.length() <= 6, "non-oriented face-type sum(pi=" + pi.str() + ")", force);
  QSqrt2 sum(0);
  for_each_conservative_map(pi, [&](const NonOrientedMap& m) {
    const BicoloredGraph g = underlying_graph(m);
    sum += pow(w, pi.size() + pi.length() - g.blacks - g.whites) * normalized_embeddings(g, lambda, a);
  });
  return pi.length() % 2 == 0 ? sum : -sum;
}

enum class SpecialAlpha { One, Two, Half };

inline std::string to_string(SpecialAlpha s) {
  switch (s) {
    case SpecialAlpha::One: return "1";
    case SpecialAlpha::Two: return "2";
    case SpecialAlpha::Half: return "1/2";
  }
  return {};
}

struct SpecialValue {
  QSqrt2 oracle;   // Ch_pi(lambda) from the Jack table
  QSqrt2 map_sum;  // the map-sum side
  bool agree() const { return oracle == map_sum; }
};

/// Both sides of the Stanley formula at alpha in {1, 2, 1/2}, with A = 1, sqrt 2, 1/sqrt 2.
inline SpecialValue stanley_special(const Partition& pi, const Partition& lambda, SpecialAlpha which,
                                    bool force = false) {
  check_guard(pi.size() + pi.length() <= 6 && lambda.size() <= 6, "stanley_special", force);
  const YoungDiagram diagram(lambda);
  const QSqrt2 root2 = QSqrt2::sqrt2();
  switch (which) {
    case SpecialAlpha::One: {
      const QSqrt2 a(1);
      return {ch(pi, lambda, Rational(1), a, force), oriented_face_type_sum(pi, diagram, a, force)};
    }
    case SpecialAlpha::Two:
      return {ch(pi, lambda, Rational(2), root2, force),
              nonoriented_face_type_sum(pi, diagram, root2, -QSqrt2(1) / root2, force)};
    case SpecialAlpha::Half: {
      const QSqrt2 a = QSqrt2(1) / root2;
      return {ch(pi, lambda, Rational(1, 2), a, force), nonoriented_face_type_sum(pi, diagram, a, a, force)};
    }
  }
  throw std::invalid_argument("stanley_special: unknown case");
}

}  // namespace ribbon
