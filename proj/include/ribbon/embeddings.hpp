#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/enumeration.hpp"
#include "ribbon/map.hpp"
#include "ribbon/mon.hpp"
#include "ribbon/oriented.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

/// Anisotropic multirectangular coordinates (P, Q) together with the parameter A.
/// The diagram is P' x Q' with P' = A*P and Q' = Q/A.
struct MultiRect {
  std::vector<Rational> p;
  std::vector<Rational> q;
  Rational a{1};

  /// Builds (P, Q) from isotropic integer coordinates P', Q'.
  static MultiRect from_isotropic(const std::vector<int>& p_iso, const std::vector<int>& q_iso, const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("MultiRect: A must be nonzero");
    MultiRect mr;
    mr.a = a;
    for (int x : p_iso) mr.p.push_back(Rational(x) / a);
    for (int x : q_iso) mr.q.push_back(Rational(x) * a);
    return mr;
  }

  std::vector<Rational> p_iso() const {
    std::vector<Rational> r;
    for (const auto& x : p) r.push_back(a * x);
    return r;
  }
  std::vector<Rational> q_iso() const {
    std::vector<Rational> r;
    for (const auto& x : q) r.push_back(x / a);
    return r;
  }
  Rational gamma() const { return gamma_of(a); }
  StanleyPoint point() const { return {gamma(), p, q}; }

  std::string str() const {
    auto list = [](const std::vector<Rational>& v) {
      std::string s;
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
      return s;
    };
    return "P=(" + list(p) + ") Q=(" + list(q) + ") A=" + a.str();
  }
};

/// Young diagram P' x Q': q'_1 repeated p'_1 times, then q'_2 repeated p'_2 times, ...
inline YoungDiagram multirectangular(const MultiRect& mr) {
  if (mr.a.is_zero()) throw std::invalid_argument("multirectangular: A must be nonzero");
  if (mr.p.size() != mr.q.size()) throw std::invalid_argument("multirectangular: P and Q differ in length");
  const auto pi = mr.p_iso();
  const auto qi = mr.q_iso();
  std::vector<int> rows;
  for (size_t i = 0; i < pi.size(); ++i) {
    if (!pi[i].is_integer() || !qi[i].is_integer() || pi[i].sign() < 0 || qi[i].sign() < 0)
      throw std::invalid_argument("multirectangular: P' and Q' must be nonnegative integers (" + mr.str() + ")");
    if (i > 0 && qi[i] > qi[i - 1]) throw std::invalid_argument("multirectangular: Q' must be weakly decreasing");
    const long len = qi[i].numerator().get_si();
    const long times = pi[i].numerator().get_si();
    if (len == 0) continue;
    rows.insert(rows.end(), static_cast<size_t>(times), static_cast<int>(len));
  }
  return YoungDiagram(Partition(std::move(rows)));
}

/// Number of embeddings of g into lambda: white vertices to columns, black vertices to rows,
/// edges to boxes, preserving incidence. Each edge's box is the crossing of its endpoints'
/// row and column, so a white vertex can take any column within the shortest of its rows.
inline Rational count_embeddings(const BicoloredGraph& g, const YoungDiagram& lambda) {
  // Blocks of equal rows: (length, multiplicity).
  std::vector<std::pair<int, int>> blocks;
  for (int r : lambda.shape().parts()) {
    if (!blocks.empty() && blocks.back().first == r)
      ++blocks.back().second;
    else
      blocks.emplace_back(r, 1);
  }
  std::vector<std::vector<int>> neighbours(static_cast<size_t>(g.whites));
  for (auto [b, w] : g.edges) neighbours[static_cast<size_t>(w)].push_back(b);
  if (g.blacks > 0 && blocks.empty()) return Rational(0);

  std::vector<int> choice(static_cast<size_t>(g.blacks), 0);
  mpz_class total = 0;
  std::function<void(int, const mpz_class&)> rec = [&](int b, const mpz_class& weight) {
    if (b == g.blacks) {
      mpz_class prod = weight;
      for (const auto& nb : neighbours) {
        int columns = lambda.column_count();
        for (int x : nb) columns = std::min(columns, blocks[static_cast<size_t>(choice[static_cast<size_t>(x)])].first);
        prod *= columns;
        if (prod == 0) return;
      }
      total += prod;
      return;
    }
    for (size_t k = 0; k < blocks.size(); ++k) {
      choice[static_cast<size_t>(b)] = static_cast<int>(k);
      rec(b + 1, weight * blocks[k].second);
    }
  };
  rec(0, mpz_class(1));
  return Rational(total, mpz_class(1));
}

/// A^{|white|} / (-A)^{|black|} * N_G(lambda). T is Rational or QSqrt2.
template <typename T>
T normalized_embeddings(const BicoloredGraph& g, const YoungDiagram& lambda, const T& a) {
  if (a == T(0)) throw std::invalid_argument("normalized_embeddings: A must be nonzero");
  const T factor = pow(a, g.whites) / pow(-a, g.blacks);
  return factor * T(count_embeddings(g, lambda));
}

/// Graph classes with a representative graph and an accumulated weight.
template <typename W>
struct GraphTable {
  struct Entry {
    BicoloredGraph graph;
    W weight;
  };
  std::map<BicoloredGraphClass, Entry> entries;

  void add(const BicoloredGraph& g, const W& w) {
    auto cls = graph_class(g);
    auto it = entries.find(cls);
    if (it == entries.end())
      entries.emplace(std::move(cls), Entry{g, w});
    else
      it->second.weight += w;
  }
};

/// Transitive pairs (sigma1, sigma2) in S_n^2 grouped by underlying graph; weight = count.
inline GraphTable<Rational> oriented_connected_table(int n, bool force = false) {
  GraphTable<Rational> t;
  for_each_permutation_pair(n, [&](const OrientedMap& m) {
    if (is_transitive(m)) t.add(underlying_graph(m), Rational(1));
  }, force);
  return t;
}

/// Conservative one-face maps with n edges grouped by underlying graph; weight = sum of mon_top.
inline GraphTable<Rational> one_face_mon_top_table(int n, MonCalculator& calc) {
  GraphTable<Rational> t;
  for_each_conservative_map(Partition{n}, [&](const NonOrientedMap& m) {
    const Rational top = mon_top(m, calc);
    if (!top.is_zero()) t.add(underlying_graph(m), top);
  });
  return t;
}

inline void check_map_sum_guard(int n, bool force) {
  if (n < 1) throw std::invalid_argument("map sums need n >= 1");
  check_guard(n <= 5, "map sum(n=" + std::to_string(n) + ")", force);
}

/// Sum over oriented, unlabeled, rooted, connected maps with n edges of
/// -gamma^{n+1-|V|} * normalized embeddings, realized as transitive pairs weighted 1/(n-1)!.
inline Rational chtop_map_sum(int n, const MultiRect& mr, bool force = false) {
  check_map_sum_guard(n, force);
  const YoungDiagram lambda = multirectangular(mr);
  const Rational gamma = mr.gamma();
  Rational sum;
  for (const auto& [cls, entry] : oriented_connected_table(n, force).entries) {
    const int v = cls.blacks + cls.whites;
    sum += entry.weight * pow(gamma, n + 1 - v) * normalized_embeddings(entry.graph, lambda, mr.a);
  }
  return -sum / factorial(n - 1);
}

/// Top-degree part of the orientability generating series as a sum over conservative
/// one-face maps: sum_M mon_top(M) * gamma^{n+1-|V|} * normalized embeddings. No overall
/// sign is applied here; the series itself carries (-1)^{l(pi)} = -1 for pi = (n), see
/// ogs_top_map_sum_signed.
inline Rational ogs_top_map_sum(int n, const MultiRect& mr, bool force = false) {
  check_map_sum_guard(n, force);
  const YoungDiagram lambda = multirectangular(mr);
  const Rational gamma = mr.gamma();
  MonCalculator calc;
  Rational sum;
  for (const auto& [cls, entry] : one_face_mon_top_table(n, calc).entries) {
    const int v = cls.blacks + cls.whites;
    sum += entry.weight * pow(gamma, n + 1 - v) * normalized_embeddings(entry.graph, lambda, mr.a);
  }
  return sum;
}

/// ogs_top_map_sum with the (-1)^{l(pi)} factor of the full series applied.
inline Rational ogs_top_map_sum_signed(int n, const MultiRect& mr, bool force = false) {
  return -ogs_top_map_sum(n, mr, force);
}

/// Orientability generating series: (-1)^{l(pi)} * sum over conservative maps of face-type pi
/// of mon_M(gamma) * normalized embeddings, at gamma = 1/A - A.
inline Rational ogs_full(const Partition& pi, const YoungDiagram& lambda, const Rational& a, bool force = false) {
  check_guard(pi.size() + pi.length() <= 8, "ogs_full(pi=" + pi.str() + ")", force);
  MonCalculator calc;
  GraphTable<GammaPolynomial> table;
  for_each_conservative_map(pi, [&](const NonOrientedMap& m) { table.add(underlying_graph(m), calc.mon(m)); });
  const Rational gamma = gamma_of(a);
  Rational sum;
  for (const auto& [cls, entry] : table.entries)
    sum += entry.weight.evaluate(gamma) * normalized_embeddings(entry.graph, lambda, a);
  return pi.length() % 2 == 0 ? sum : -sum;
}

}  // namespace ribbon
