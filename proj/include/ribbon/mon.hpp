#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbon/map.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

/// A linear order on the edges of a map, read as a removal order.
using History = std::vector<Edge>;

inline std::string to_string(const History& h) {
  std::string s = "(";
  for (size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + h[i].str();
  return s + ")";
}

inline void validate_history(const NonOrientedMap& m, const History& h) {
  std::vector<Edge> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != m.edges()) throw std::invalid_argument("history " + to_string(h) + " is not an ordering of the edges");
}

/// Straight edges weigh 1, twisted edges gamma, interface edges 1/2.
inline GammaPolynomial weight_of(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Straight: return GammaPolynomial(1);
    case EdgeKind::Twisted: return GammaPolynomial::gamma();
    case EdgeKind::Interface: return GammaPolynomial(Rational(1, 2));
  }
  return {};
}

inline GammaPolynomial edge_weight(const NonOrientedMap& m, const Edge& e) { return weight_of(classify_edge(m, e)); }

/// Product of the weights of the edges at the moment of their removal.
inline GammaPolynomial history_weight(const NonOrientedMap& m, const History& h) {
  validate_history(m, h);
  GammaPolynomial w(1);
  NonOrientedMap cur = m;
  for (const Edge& e : h) {
    w *= edge_weight(cur, e);
    cur = remove_edge(cur, e);
  }
  return w;
}

/// Every connected component consists of exactly one face.
inline bool is_top_degree_map(const NonOrientedMap& m) {
  const MapStructure s = structure(m);
  return s.faces == s.components;
}

inline bool is_top_degree_pair(const NonOrientedMap& m, const History& h) {
  validate_history(m, h);
  NonOrientedMap cur = m;
  if (!is_top_degree_map(cur)) return false;
  for (const Edge& e : h) {
    cur = remove_edge(cur, e);
    if (!is_top_degree_map(cur)) return false;
  }
  return true;
}

/// Index of the first prefix-removal map M_i that is not top-degree, or -1.
inline int first_non_top_degree_prefix(const NonOrientedMap& m, const History& h) {
  NonOrientedMap cur = m;
  if (!is_top_degree_map(cur)) return 0;
  for (size_t i = 0; i < h.size(); ++i) {
    cur = remove_edge(cur, h[i]);
    if (!is_top_degree_map(cur)) return static_cast<int>(i) + 1;
  }
  return -1;
}

/// Exponent at which mon_M can carry its leading coefficient: n + |F| - |V|.
inline int mon_degree_bound(const NonOrientedMap& m) {
  const MapStructure s = structure(m);
  return s.edges + s.faces - s.vertices();
}

/// Memoizing evaluator for the measure of non-orientability.
///
/// Residual maps are keyed by their unrooted canonical form, so isomorphic residuals
/// share work. Not thread-safe; use one instance per worker.
class MonCalculator {
 public:
  /// mon_M = (1/n) * sum_e weight(M, e) * mon_{M \ e}; the empty map has mon = 1.
  GammaPolynomial mon(const NonOrientedMap& m) {
    if (m.empty()) return GammaPolynomial(1);
    const std::string key = canonical_form(m);
    if (auto it = mon_cache_.find(key); it != mon_cache_.end()) return it->second;
    const FaceColoring coloring = face_coloring(m);
    GammaPolynomial sum;
    for (const Edge& e : m.edges()) sum += weight_of(classify_edge(coloring, e)) * mon(remove_edge(m, e));
    GammaPolynomial result = sum.scaled(Rational(1, m.edge_count()));
    mon_cache_.emplace(key, result);
    return result;
  }

  /// Probability that a uniformly random history makes (M, history) a top-degree pair.
  Rational top_degree_probability(const NonOrientedMap& m) {
    if (m.empty()) return Rational(1);
    if (!is_top_degree_map(m)) return Rational(0);
    const std::string key = canonical_form(m);
    if (auto it = top_cache_.find(key); it != top_cache_.end()) return it->second;
    Rational sum;
    for (const Edge& e : m.edges()) sum += top_degree_probability(remove_edge(m, e));
    Rational result = sum / Rational(m.edge_count());
    top_cache_.emplace(key, result);
    return result;
  }

  size_t cache_size() const { return mon_cache_.size() + top_cache_.size(); }

 private:
  std::unordered_map<std::string, GammaPolynomial> mon_cache_;
  std::unordered_map<std::string, Rational> top_cache_;
};

inline GammaPolynomial mon(const NonOrientedMap& m) { return MonCalculator().mon(m); }

/// mon_top computed two independent ways.
struct MonTop {
  Rational probability;          // via random-removal probability
  Rational leading_coefficient;  // [gamma^{n+|F|-|V|}] mon_M
};

inline MonTop mon_top_both(const NonOrientedMap& m, MonCalculator& calc) {
  return {calc.top_degree_probability(m), calc.mon(m).coefficient(mon_degree_bound(m))};
}

/// mon_top; throws std::logic_error if the two computations disagree.
inline Rational mon_top(const NonOrientedMap& m, MonCalculator& calc) {
  MonTop t = mon_top_both(m, calc);
  if (t.probability != t.leading_coefficient)
    throw std::logic_error("mon_top: probability " + t.probability.str() + " differs from leading coefficient " +
                           t.leading_coefficient.str());
  return t.probability;
}

inline Rational mon_top(const NonOrientedMap& m) {
  MonCalculator calc;
  return mon_top(m, calc);
}

/// Three equivalent characterizations of a top-degree pair.
struct LemmaReport {
  bool top_degree_pair = false;             // A
  bool twisted_bridge_or_leaf = false;      // B: every removed edge is twisted, a bridge or a leaf
  bool weight_reaches_bound = false;        // C: deg weight = |F| + |E| - |V|
  int bound = 0;
  int degree = 0;
  Rational leading_coefficient;
  bool leading_is_one = false;

  bool consistent() const {
    const bool agree = top_degree_pair == twisted_bridge_or_leaf && twisted_bridge_or_leaf == weight_reaches_bound;
    return agree && (!top_degree_pair || leading_is_one);
  }
};

inline LemmaReport lemma_equivalence_check(const NonOrientedMap& m, const History& h) {
  validate_history(m, h);
  LemmaReport r;
  r.top_degree_pair = is_top_degree_pair(m, h);
  r.twisted_bridge_or_leaf = true;
  NonOrientedMap cur = m;
  GammaPolynomial w(1);
  for (const Edge& e : h) {
    const EdgeKind kind = classify_edge(cur, e);
    w *= weight_of(kind);
    if (kind != EdgeKind::Twisted) {
      const EdgeRole role = edge_role(cur, e);
      if (!role.is_bridge && !role.is_leaf) r.twisted_bridge_or_leaf = false;
    }
    cur = remove_edge(cur, e);
  }
  r.bound = mon_degree_bound(m);
  r.degree = w.degree();
  r.weight_reaches_bound = r.degree == r.bound;
  r.leading_coefficient = w.leading_coefficient();
  r.leading_is_one = r.leading_coefficient == Rational(1);
  return r;
}

}  // namespace ribbon
