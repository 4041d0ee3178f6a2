#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/map.hpp"

namespace ribbon {

/// Permutation of [n] = {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : image_(static_cast<size_t>(n) + 1) { std::iota(image_.begin(), image_.end(), 0); }

  /// From one-line notation: images[k-1] is the image of k.
  static Permutation from_images(const std::vector<int>& images) {
    Permutation p(static_cast<int>(images.size()));
    std::vector<char> hit(images.size() + 1, 0);
    for (size_t k = 0; k < images.size(); ++k) {
      const int v = images[k];
      if (v < 1 || v > static_cast<int>(images.size()) || hit[static_cast<size_t>(v)])
        throw std::invalid_argument("Permutation: not a bijection");
      hit[static_cast<size_t>(v)] = 1;
      p.image_[k + 1] = v;
    }
    return p;
  }

  /// From disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p(n);
    std::vector<char> hit(static_cast<size_t>(n) + 1, 0);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i) {
        const int x = c[i];
        if (x < 1 || x > n || hit[static_cast<size_t>(x)]) throw std::invalid_argument("Permutation: bad cycle");
        hit[static_cast<size_t>(x)] = 1;
        p.image_[static_cast<size_t>(x)] = c[(i + 1) % c.size()];
      }
    return p;
  }

  int size() const { return image_.empty() ? 0 : static_cast<int>(image_.size()) - 1; }
  int operator()(int k) const { return image_[static_cast<size_t>(k)]; }
  std::vector<int> images() const { return {image_.begin() + 1, image_.end()}; }

  /// (this ∘ other)(k) = this(other(k)).
  Permutation after(const Permutation& other) const {
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.image_[static_cast<size_t>(k)] = (*this)(other(k));
    return r;
  }
  Permutation inverse() const {
    Permutation r(size());
    for (int k = 1; k <= size(); ++k) r.image_[static_cast<size_t>((*this)(k))] = k;
    return r;
  }

  /// Cycles, each starting at its smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int k = 1; k <= size(); ++k) {
      if (seen[static_cast<size_t>(k)]) continue;
      std::vector<int> c;
      for (int x = k; !seen[static_cast<size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<size_t>(x)] = 1;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }
  int cycle_count() const { return static_cast<int>(cycles().size()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Oriented bicolored map M(sigma1, sigma2): sigma1 lists the counterclockwise order of
/// edges around white vertices, sigma2 around black vertices.
struct OrientedMap {
  Permutation sigma1;
  Permutation sigma2;
  std::optional<int> root;

  OrientedMap() = default;
  OrientedMap(Permutation s1, Permutation s2, std::optional<int> r = std::nullopt)
      : sigma1(std::move(s1)), sigma2(std::move(s2)), root(r) {
    if (sigma1.size() != sigma2.size()) throw std::invalid_argument("OrientedMap: permutation sizes differ");
    if (root && (*root < 1 || *root > sigma1.size())) throw std::invalid_argument("OrientedMap: bad root");
  }

  int n() const { return sigma1.size(); }
  /// Faces are the cycles of sigma2 ∘ sigma1.
  Permutation face_permutation() const { return sigma2.after(sigma1); }
};

namespace detail {
inline int oriented_orbits(const OrientedMap& m, std::vector<int>& id) {
  id.assign(static_cast<size_t>(m.n()) + 1, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 1; s <= m.n(); ++s) {
    if (id[static_cast<size_t>(s)] != -1) continue;
    id[static_cast<size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : {m.sigma1(x), m.sigma2(x)})
        if (id[static_cast<size_t>(y)] == -1) {
          id[static_cast<size_t>(y)] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}
}  // namespace detail

inline bool is_transitive(const OrientedMap& m) {
  if (m.n() < 1) throw std::invalid_argument("is_transitive: n must be positive");
  std::vector<int> id;
  return detail::oriented_orbits(m, id) == 1;
}

struct OrientedStructure {
  int white_vertices = 0;
  int black_vertices = 0;
  int faces = 0;
  int components = 0;
  int euler = 0;
  std::vector<int> component_genus;  // one entry per orbit of <sigma1, sigma2>

  int vertices() const { return white_vertices + black_vertices; }
  /// Genus of a connected map.
  int genus() const {
    if (components != 1) throw std::domain_error("genus: map is not connected");
    return component_genus.front();
  }
};

inline OrientedStructure oriented_structure(const OrientedMap& m) {
  if (m.n() < 1) throw std::invalid_argument("oriented_structure: n must be positive");
  OrientedStructure s;
  std::vector<int> id;
  s.components = detail::oriented_orbits(m, id);
  std::vector<int> chi(static_cast<size_t>(s.components), 0);
  auto tally = [&](const Permutation& p, int& total, int sign) {
    for (const auto& c : p.cycles()) {
      ++total;
      chi[static_cast<size_t>(id[static_cast<size_t>(c.front())])] += sign;
    }
  };
  tally(m.sigma1, s.white_vertices, 1);
  tally(m.sigma2, s.black_vertices, 1);
  tally(m.face_permutation(), s.faces, 1);
  for (int k = 1; k <= m.n(); ++k) --chi[static_cast<size_t>(id[static_cast<size_t>(k)])];
  s.euler = s.faces - m.n() + s.vertices();
  for (int c : chi) s.component_genus.push_back((2 - c) / 2);
  return s;
}

/// Bijection [n] x {1,2} -> [2n]; label(k, s) is the label of side s of edge k.
class SideLabeling {
 public:
  SideLabeling() = default;
  /// labels[2(k-1) + (s-1)] = f(k, s).
  explicit SideLabeling(std::vector<int> labels) : labels_(std::move(labels)) {
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("SideLabeling: not a bijection onto [2n]");
  }
  /// f(k, s) = 2(k-1) + s.
  static SideLabeling standard(int n) {
    std::vector<int> l(static_cast<size_t>(2 * n));
    std::iota(l.begin(), l.end(), 1);
    return SideLabeling(std::move(l));
  }
  int operator()(int k, int side) const { return labels_[static_cast<size_t>(2 * (k - 1) + (side - 1))]; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  std::vector<int> labels_;
};

/// The non-oriented map obtained by labeling the two sides of every edge so that,
/// going counterclockwise around the white endpoint of k, f(k,2) follows f(k,1).
inline NonOrientedMap side_label(const OrientedMap& m, const SideLabeling& f) {
  const int n = m.n();
  if (static_cast<int>(f.labels().size()) != 2 * n) throw std::invalid_argument("side_label: labeling size mismatch");
  std::vector<std::pair<int, int>> b, w, e;
  for (int k = 1; k <= n; ++k) {
    b.emplace_back(f(k, 1), f(m.sigma2(k), 2));
    w.emplace_back(f(k, 2), f(m.sigma1(k), 1));
    e.emplace_back(f(k, 1), f(k, 2));
  }
  std::optional<int> root;
  if (m.root) root = f(*m.root, 1);
  return NonOrientedMap(Pairing(b), Pairing(w), Pairing(e), root);
}

/// Underlying bicolored graph: whites are cycles of sigma1, blacks are cycles of sigma2.
inline BicoloredGraph underlying_graph(const OrientedMap& m) {
  auto cycle_ids = [&](const Permutation& p, int& count) {
    std::vector<int> id(static_cast<size_t>(m.n()) + 1, -1);
    count = 0;
    for (const auto& c : p.cycles()) {
      for (int k : c) id[static_cast<size_t>(k)] = count;
      ++count;
    }
    return id;
  };
  BicoloredGraph g;
  const auto white = cycle_ids(m.sigma1, g.whites);
  const auto black = cycle_ids(m.sigma2, g.blacks);
  for (int k = 1; k <= m.n(); ++k) g.edges.emplace_back(black[static_cast<size_t>(k)], white[static_cast<size_t>(k)]);
  return g;
}

}  // namespace ribbon
