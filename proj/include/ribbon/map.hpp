#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/partition.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

/// An edge of a non-oriented map, identified by its two edge-side labels (a < b).
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

  std::string str() const { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Fixed-point-free involution on a finite set of positive labels.
///
/// Stored densely: partner_[x] is the partner of x, or 0 when x is not in the support.
class Pairing {
 public:
  Pairing() = default;

  explicit Pairing(std::span<const std::pair<int, int>> pairs) {
    for (const auto& [x, y] : pairs) {
      if (x <= 0 || y <= 0) throw std::invalid_argument("Pairing: labels must be positive");
      if (x == y) throw std::invalid_argument("Pairing: fixed point " + std::to_string(x));
      const auto top = static_cast<size_t>(std::max(x, y));
      if (partner_.size() <= top) partner_.resize(top + 1, 0);
      if (partner_[static_cast<size_t>(x)] != 0 || partner_[static_cast<size_t>(y)] != 0)
        throw std::invalid_argument("Pairing: label used twice");
      partner_[static_cast<size_t>(x)] = y;
      partner_[static_cast<size_t>(y)] = x;
    }
  }
  Pairing(std::initializer_list<std::pair<int, int>> pairs)
      : Pairing(std::span<const std::pair<int, int>>(pairs.begin(), pairs.size())) {}

  /// Partner of x; 0 if x is not in the support.
  int operator()(int x) const {
    return x > 0 && static_cast<size_t>(x) < partner_.size() ? partner_[static_cast<size_t>(x)] : 0;
  }
  bool contains(int x) const { return (*this)(x) != 0; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (size_t x = 1; x < partner_.size(); ++x)
      if (partner_[x] > static_cast<int>(x)) out.emplace_back(static_cast<int>(x), partner_[x]);
    return out;
  }
  std::vector<int> support() const {
    std::vector<int> out;
    for (size_t x = 1; x < partner_.size(); ++x)
      if (partner_[x] != 0) out.push_back(static_cast<int>(x));
    return out;
  }
  int support_size() const {
    return static_cast<int>(std::count_if(partner_.begin(), partner_.end(), [](int v) { return v != 0; }));
  }

  /// Conjugation by the transposition (a b): x ~ y becomes t(x) ~ t(y).
  Pairing conjugated(int a, int b) const {
    auto t = [a, b](int x) { return x == a ? b : (x == b ? a : x); };
    Pairing r;
    r.partner_.assign(partner_.size(), 0);
    for (size_t x = 1; x < partner_.size(); ++x)
      if (partner_[x] != 0) r.partner_[static_cast<size_t>(t(static_cast<int>(x)))] = t(partner_[x]);
    r.trim();
    return r;
  }

  /// Deletes labels a and b, pairing their former partners with each other
  /// (unless a and b were partners, in which case the pair simply disappears).
  Pairing healed_without(int a, int b) const {
    Pairing r = *this;
    const int pa = (*this)(a);
    const int pb = (*this)(b);
    r.partner_[static_cast<size_t>(a)] = 0;
    r.partner_[static_cast<size_t>(b)] = 0;
    if (pa != b) {
      r.partner_[static_cast<size_t>(pa)] = pb;
      r.partner_[static_cast<size_t>(pb)] = pa;
    }
    r.trim();
    return r;
  }

  const std::vector<int>& dense() const { return partner_; }

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  void trim() {
    while (!partner_.empty() && partner_.back() == 0) partner_.pop_back();
  }
  std::vector<int> partner_;
};

/// Non-oriented bicolored map encoded as three pairings of one label set:
/// beta (black corners), omega (white corners) and eps (edges).
class NonOrientedMap {
 public:
  /// The empty map.
  NonOrientedMap() = default;

  NonOrientedMap(Pairing beta, Pairing omega, Pairing eps, std::optional<int> root = std::nullopt)
      : beta_(std::move(beta)), omega_(std::move(omega)), eps_(std::move(eps)), root_(root) {
    labels_ = eps_.support();
    if (beta_.support() != labels_ || omega_.support() != labels_)
      throw std::invalid_argument("NonOrientedMap: pairings act on different label sets");
    if (root_ && !eps_.contains(*root_)) throw std::invalid_argument("NonOrientedMap: root is not a label");
  }

  const Pairing& beta() const { return beta_; }
  const Pairing& omega() const { return omega_; }
  const Pairing& eps() const { return eps_; }
  const std::optional<int>& root() const { return root_; }
  const std::vector<int>& labels() const { return labels_; }
  int max_label() const { return labels_.empty() ? 0 : labels_.back(); }

  int edge_count() const { return static_cast<int>(labels_.size() / 2); }
  bool empty() const { return labels_.empty(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [x, y] : eps_.pairs()) out.emplace_back(x, y);
    return out;
  }
  bool has_edge(const Edge& e) const { return e.a != e.b && eps_(e.a) == e.b; }

  NonOrientedMap with_root(std::optional<int> root) const {
    return NonOrientedMap(beta_, omega_, eps_, root);
  }
  NonOrientedMap with_omega(Pairing omega) const { return NonOrientedMap(beta_, std::move(omega), eps_, root_); }

  friend bool operator==(const NonOrientedMap& x, const NonOrientedMap& y) {
    return x.beta_ == y.beta_ && x.omega_ == y.omega_ && x.eps_ == y.eps_ && x.root_ == y.root_;
  }

 private:
  Pairing beta_;
  Pairing omega_;
  Pairing eps_;
  std::optional<int> root_;
  std::vector<int> labels_;
};

enum class EdgeKind { Straight, Twisted, Interface };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Straight: return "straight";
    case EdgeKind::Twisted: return "twisted";
    case EdgeKind::Interface: return "interface";
  }
  return "?";
}

namespace detail {

/// Orbit id for each label (indexed by label, -1 for absent labels) under the group
/// generated by the given pairings; returns the number of orbits.
inline int orbit_ids(const NonOrientedMap& m, std::initializer_list<const Pairing*> gens, std::vector<int>& id) {
  id.assign(static_cast<size_t>(m.max_label()) + 1, -1);
  int count = 0;
  std::vector<int> stack;
  for (int start : m.labels()) {
    if (id[static_cast<size_t>(start)] != -1) continue;
    id[static_cast<size_t>(start)] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Pairing* g : gens) {
        const int y = (*g)(x);
        if (id[static_cast<size_t>(y)] == -1) {
          id[static_cast<size_t>(y)] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

inline int orbit_count(const NonOrientedMap& m, std::initializer_list<const Pairing*> gens) {
  std::vector<int> id;
  return orbit_ids(m, gens, id);
}

inline void require_edge(const NonOrientedMap& m, const Edge& e, const char* op) {
  if (!m.has_edge(e)) throw std::invalid_argument(std::string(op) + ": " + e.str() + " is not an edge of the map");
}

}  // namespace detail

/// Faces as alternating beta/omega cycles. Each cycle starts at its smallest label and
/// continues x, beta(x), omega(beta(x)), ...
struct FaceDecomposition {
  std::vector<std::vector<int>> faces;
  Partition face_type;
};

inline FaceDecomposition faces(const NonOrientedMap& m) {
  FaceDecomposition out;
  std::vector<char> seen(static_cast<size_t>(m.max_label()) + 1, 0);
  std::vector<int> half_sizes;
  for (int start : m.labels()) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    bool use_beta = true;
    do {
      seen[static_cast<size_t>(x)] = 1;
      cycle.push_back(x);
      x = use_beta ? m.beta()(x) : m.omega()(x);
      use_beta = !use_beta;
    } while (x != start || !use_beta);
    half_sizes.push_back(static_cast<int>(cycle.size()) / 2);
    out.faces.push_back(std::move(cycle));
  }
  out.face_type = Partition(std::move(half_sizes));
  return out;
}

struct MapStructure {
  int black_vertices = 0;
  int white_vertices = 0;
  int edges = 0;
  int faces = 0;
  int components = 0;
  int euler = 0;        // faces - edges + vertices
  int twice_genus = 0;  // 2*components - euler

  int vertices() const { return black_vertices + white_vertices; }
  Rational genus() const { return Rational(twice_genus, 2); }
};

inline MapStructure structure(const NonOrientedMap& m) {
  MapStructure s;
  s.black_vertices = detail::orbit_count(m, {&m.beta(), &m.eps()});
  s.white_vertices = detail::orbit_count(m, {&m.omega(), &m.eps()});
  s.faces = detail::orbit_count(m, {&m.beta(), &m.omega()});
  s.components = detail::orbit_count(m, {&m.beta(), &m.omega(), &m.eps()});
  s.edges = m.edge_count();
  s.euler = s.faces - s.edges + s.vertices();
  s.twice_genus = 2 * s.components - s.euler;
  return s;
}

/// Orientable iff the graph on labels joined by all beta, omega and eps pairs is bipartite.
inline bool is_orientable(const NonOrientedMap& m) {
  std::vector<int> color(static_cast<size_t>(m.max_label()) + 1, -1);
  std::vector<int> stack;
  for (int start : m.labels()) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Pairing* g : {&m.beta(), &m.omega(), &m.eps()}) {
        const int y = (*g)(x);
        auto& cy = color[static_cast<size_t>(y)];
        if (cy == -1) {
          cy = 1 - color[static_cast<size_t>(x)];
          stack.push_back(y);
        } else if (cy == color[static_cast<size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Per-label face id and traversal direction (parity of the position in the face cycle).
struct FaceColoring {
  std::vector<int> face;
  std::vector<int> parity;
};

inline FaceColoring face_coloring(const NonOrientedMap& m) {
  FaceColoring c;
  c.face.assign(static_cast<size_t>(m.max_label()) + 1, -1);
  c.parity.assign(static_cast<size_t>(m.max_label()) + 1, -1);
  const auto dec = faces(m);
  for (size_t f = 0; f < dec.faces.size(); ++f)
    for (size_t i = 0; i < dec.faces[f].size(); ++i) {
      c.face[static_cast<size_t>(dec.faces[f][i])] = static_cast<int>(f);
      c.parity[static_cast<size_t>(dec.faces[f][i])] = static_cast<int>(i % 2);
    }
  return c;
}

inline EdgeKind classify_edge(const FaceColoring& c, const Edge& e) {
  const auto a = static_cast<size_t>(e.a), b = static_cast<size_t>(e.b);
  if (c.face[a] != c.face[b]) return EdgeKind::Interface;
  return c.parity[a] == c.parity[b] ? EdgeKind::Twisted : EdgeKind::Straight;
}

inline EdgeKind classify_edge(const NonOrientedMap& m, const Edge& e) {
  detail::require_edge(m, e, "classify_edge");
  return classify_edge(face_coloring(m), e);
}

/// Removes an edge. Vertices left without edges vanish together with it.
inline NonOrientedMap remove_edge(const NonOrientedMap& m, const Edge& e) {
  detail::require_edge(m, e, "remove_edge");
  std::optional<int> root = m.root();
  if (root && (*root == e.a || *root == e.b)) root.reset();
  return NonOrientedMap(m.beta().healed_without(e.a, e.b), m.omega().healed_without(e.a, e.b),
                        m.eps().healed_without(e.a, e.b), root);
}

/// Twists an edge: omega is conjugated by the transposition of the edge's two sides.
inline NonOrientedMap twist(const NonOrientedMap& m, const Edge& e) {
  detail::require_edge(m, e, "twist");
  return m.with_omega(m.omega().conjugated(e.a, e.b));
}

/// Twists a set of distinct edges at once.
inline NonOrientedMap twist_all(const NonOrientedMap& m, std::span<const Edge> edges) {
  Pairing w = m.omega();
  for (const Edge& e : edges) {
    detail::require_edge(m, e, "twist_all");
    w = w.conjugated(e.a, e.b);
  }
  return m.with_omega(std::move(w));
}

struct EdgeRole {
  bool is_bridge = false;
  bool is_leaf = false;
};

inline EdgeRole edge_role(const NonOrientedMap& m, const Edge& e) {
  detail::require_edge(m, e, "edge_role");
  EdgeRole r;
  r.is_leaf = m.beta()(e.a) == e.b || m.omega()(e.a) == e.b;
  const int before = detail::orbit_count(m, {&m.beta(), &m.omega(), &m.eps()});
  const NonOrientedMap rest = remove_edge(m, e);
  const int after = detail::orbit_count(rest, {&rest.beta(), &rest.omega(), &rest.eps()});
  r.is_bridge = after > before;
  return r;
}

namespace detail {

inline char canonical_symbol(int v) {
  static constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+-";
  return kAlphabet[v];
}

/// Breadth-first relabeling of the component of `start`; emits beta, omega, eps images
/// of the relabeled sides in discovery order. Writes the trace into `out`.
inline void bfs_trace(const NonOrientedMap& m, int start, std::vector<int>& scratch_id, std::vector<int>& order,
                      std::vector<int>& out) {
  order.clear();
  out.clear();
  order.push_back(start);
  scratch_id[static_cast<size_t>(start)] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (const Pairing* g : {&m.beta(), &m.omega(), &m.eps()}) {
      const int y = (*g)(x);
      int& idy = scratch_id[static_cast<size_t>(y)];
      if (idy == -1) {
        idy = static_cast<int>(order.size());
        order.push_back(y);
      }
      out.push_back(idy);
    }
  }
  for (int x : order) scratch_id[static_cast<size_t>(x)] = -1;
}

inline std::string encode_trace(const std::vector<int>& trace, size_t labels) {
  std::string s;
  if (labels <= 64) {
    for (int v : trace) s.push_back(canonical_symbol(v));
  } else {
    for (size_t i = 0; i < trace.size(); ++i) s += (i ? "," : "") + std::to_string(trace[i]);
  }
  return s;
}

}  // namespace detail

/// Canonical string: equal for two maps iff they differ by a relabeling of edge-sides
/// (that also maps root to root when `rooted`).
inline std::string canonical_form(const NonOrientedMap& m, bool rooted = false) {
  if (rooted && !m.root()) throw std::invalid_argument("canonical_form: rooted form requested for unrooted map");
  std::vector<int> comp;
  const int ncomp = detail::orbit_ids(m, {&m.beta(), &m.omega(), &m.eps()}, comp);
  std::vector<std::vector<int>> members(static_cast<size_t>(ncomp));
  for (int x : m.labels()) members[static_cast<size_t>(comp[static_cast<size_t>(x)])].push_back(x);

  std::vector<int> scratch(static_cast<size_t>(m.max_label()) + 1, -1);
  std::vector<int> order, trace, best;
  std::string rooted_code;
  std::vector<std::string> codes;
  for (const auto& labels : members) {
    const bool holds_root = rooted && comp[static_cast<size_t>(*m.root())] == comp[static_cast<size_t>(labels[0])];
    best.clear();
    if (holds_root) {
      detail::bfs_trace(m, *m.root(), scratch, order, best);
    } else {
      for (int start : labels) {
        detail::bfs_trace(m, start, scratch, order, trace);
        if (best.empty() || trace < best) best.swap(trace);
      }
    }
    std::string code = detail::encode_trace(best, labels.size());
    if (holds_root)
      rooted_code = std::move(code);
    else
      codes.push_back(std::move(code));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = rooted ? "R" + rooted_code : "";
  for (const auto& c : codes) {
    if (!out.empty()) out += '/';
    out += c;
  }
  return out;
}

/// Underlying bicolored multigraph; vertices are numbered from 0 within each color.
struct BicoloredGraph {
  int blacks = 0;
  int whites = 0;
  std::vector<std::pair<int, int>> edges;  // (black, white)

  friend bool operator==(const BicoloredGraph&, const BicoloredGraph&) = default;
};

inline BicoloredGraph underlying_graph(const NonOrientedMap& m) {
  std::vector<int> black, white;
  BicoloredGraph g;
  g.blacks = detail::orbit_ids(m, {&m.beta(), &m.eps()}, black);
  g.whites = detail::orbit_ids(m, {&m.omega(), &m.eps()}, white);
  for (const Edge& e : m.edges())
    g.edges.emplace_back(black[static_cast<size_t>(e.a)], white[static_cast<size_t>(e.a)]);
  return g;
}

/// Isomorphism class of a bicolored multigraph: the lexicographically smallest
/// column-major edge-multiplicity matrix over all vertex orderings.
struct BicoloredGraphClass {
  int blacks = 0;
  int whites = 0;
  std::vector<int> matrix;

  /// e.g. "B1W1[3]" for one black and one white vertex joined by three edges.
  std::string key() const {
    std::string s = "B" + std::to_string(blacks) + "W" + std::to_string(whites) + "[";
    for (size_t i = 0; i < matrix.size(); ++i) s += (i ? "," : "") + std::to_string(matrix[i]);
    return s + "]";
  }
  friend bool operator==(const BicoloredGraphClass&, const BicoloredGraphClass&) = default;
  friend auto operator<=>(const BicoloredGraphClass&, const BicoloredGraphClass&) = default;
};

inline BicoloredGraphClass graph_class(const BicoloredGraph& g) {
  // Permute the smaller color class exhaustively; for each permutation the other class is
  // ordered optimally by sorting its multiplicity vectors.
  const bool transpose = g.blacks > g.whites;
  const int rows = transpose ? g.whites : g.blacks;
  const int cols = transpose ? g.blacks : g.whites;
  std::vector<int> mult(static_cast<size_t>(rows * cols), 0);
  for (auto [b, w] : g.edges) {
    const int r = transpose ? w : b;
    const int c = transpose ? b : w;
    ++mult[static_cast<size_t>(r * cols + c)];
  }
  std::vector<int> perm(static_cast<size_t>(rows));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<std::vector<int>> columns(static_cast<size_t>(cols), std::vector<int>(static_cast<size_t>(rows)));
  std::vector<int> flat;
  do {
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r)
        columns[static_cast<size_t>(c)][static_cast<size_t>(r)] = mult[static_cast<size_t>(perm[static_cast<size_t>(r)] * cols + c)];
    std::sort(columns.begin(), columns.end());
    flat.clear();
    for (const auto& col : columns) flat.insert(flat.end(), col.begin(), col.end());
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {g.blacks, g.whites, std::move(best)};
}

inline BicoloredGraphClass graph_class(const NonOrientedMap& m) { return graph_class(underlying_graph(m)); }

}  // namespace ribbon
