#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/map.hpp"
#include "ribbon/oriented.hpp"
#include "ribbon/partition.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

/// Raised when a generator would exceed its desk-scale cost guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_guard(bool ok, const std::string& what, bool force) {
  if (!ok && !force) throw GuardError(what + " exceeds the enumeration guard (pass force to override)");
}

/// Calls fn on every pairing of `labels`, in a fixed order: the smallest remaining label
/// is matched with each candidate partner in increasing order.
inline void for_each_pairing(const std::vector<int>& labels, const std::function<void(const Pairing&)>& fn) {
  if (labels.size() % 2 != 0) throw std::invalid_argument("for_each_pairing: odd number of labels");
  std::vector<std::pair<int, int>> pairs;
  std::vector<char> used(labels.size(), 0);
  std::function<void()> rec = [&]() {
    size_t i = 0;
    while (i < labels.size() && used[i]) ++i;
    if (i == labels.size()) {
      fn(Pairing(pairs));
      return;
    }
    used[i] = 1;
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      pairs.emplace_back(labels[i], labels[j]);
      rec();
      pairs.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
}

inline std::vector<int> label_range(int count) {
  std::vector<int> l(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) l[static_cast<size_t>(i)] = i + 1;
  return l;
}

inline std::vector<Pairing> involutions(const std::vector<int>& labels) {
  std::vector<Pairing> out;
  for_each_pairing(labels, [&](const Pairing& p) { out.push_back(p); });
  return out;
}

/// Black and white pairings of disjoint polygons with 2*pi_1, 2*pi_2, ... consecutive sides.
inline std::pair<Pairing, Pairing> polygon_pairings(const Partition& face_type) {
  std::vector<std::pair<int, int>> b, w;
  int offset = 0;
  for (int part : face_type.parts()) {
    const int len = 2 * part;
    for (int i = 1; i <= len; i += 2) b.emplace_back(offset + i, offset + i + 1);
    for (int i = 2; i <= len; i += 2) w.emplace_back(offset + i, offset + (i % len) + 1);
    offset += len;
  }
  return {Pairing(b), Pairing(w)};
}

/// Conservative family for a face-type: fixed polygons, every edge pairing, root at side 1.
inline void for_each_conservative_map(const Partition& face_type, const std::function<void(const NonOrientedMap&)>& fn) {
  const auto [b, w] = polygon_pairings(face_type);
  for_each_pairing(label_range(2 * face_type.size()),
                   [&](const Pairing& e) { fn(NonOrientedMap(b, w, e, 1)); });
}

inline std::vector<NonOrientedMap> conservative_maps(const Partition& face_type) {
  std::vector<NonOrientedMap> out;
  for_each_conservative_map(face_type, [&](const NonOrientedMap& m) { out.push_back(m); });
  return out;
}

inline std::vector<NonOrientedMap> conservative_one_face(int n) {
  if (n < 1) throw std::invalid_argument("conservative_one_face: n must be positive");
  return conservative_maps(Partition{n});
}

/// Every triple (B, W, E) on [2n] whose polygons L(B, W) form a single face.
inline void for_each_liberal_one_face(int n, const std::function<void(const NonOrientedMap&)>& fn,
                                      bool force = false) {
  check_guard(n <= 4, "liberal_one_face(n=" + std::to_string(n) + ")", force);
  const auto labels = label_range(2 * n);
  const auto pairings = involutions(labels);
  for (const Pairing& b : pairings)
    for (const Pairing& w : pairings) {
      const NonOrientedMap polygon(b, w, b);
      if (structure(polygon).faces != 1) continue;
      for (const Pairing& e : pairings) fn(NonOrientedMap(b, w, e));
    }
}

inline std::vector<NonOrientedMap> liberal_one_face(int n, bool force = false) {
  std::vector<NonOrientedMap> out;
  for_each_liberal_one_face(n, [&](const NonOrientedMap& m) { out.push_back(m); }, force);
  return out;
}

/// Every triple of pairings on [2n].
inline void for_each_map(int n, const std::function<void(const NonOrientedMap&)>& fn, bool force = false) {
  check_guard(n <= 3, "all_maps(n=" + std::to_string(n) + ")", force);
  const auto pairings = involutions(label_range(2 * n));
  for (const Pairing& b : pairings)
    for (const Pairing& w : pairings)
      for (const Pairing& e : pairings) fn(NonOrientedMap(b, w, e));
}

inline std::vector<NonOrientedMap> all_maps(int n, bool force = false) {
  std::vector<NonOrientedMap> out;
  for_each_map(n, [&](const NonOrientedMap& m) { out.push_back(m); }, force);
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images = label_range(n);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Every pair (sigma1, sigma2) in S_n x S_n, in lexicographic order.
inline void for_each_permutation_pair(int n, const std::function<void(const OrientedMap&)>& fn, bool force = false) {
  check_guard(n <= 5, "permutation pairs(n=" + std::to_string(n) + ")", force);
  const auto perms = all_permutations(n);
  for (const auto& s1 : perms)
    for (const auto& s2 : perms) fn(OrientedMap(s1, s2));
}

inline std::vector<OrientedMap> transitive_pairs(int n, bool force = false) {
  std::vector<OrientedMap> out;
  for_each_permutation_pair(n, [&](const OrientedMap& m) {
    if (is_transitive(m)) out.push_back(m);
  }, force);
  return out;
}

enum class GroupKey { Canonical, RootedCanonical, GraphClass };

/// Multiset table: key -> exact multiplicity.
using Histogram = std::map<std::string, Rational>;

inline std::string group_key(const NonOrientedMap& m, GroupKey key) {
  switch (key) {
    case GroupKey::Canonical: return canonical_form(m, false);
    case GroupKey::RootedCanonical: return canonical_form(m, true);
    case GroupKey::GraphClass: return graph_class(m).key();
  }
  return {};
}

/// Sums `weight(m)` per key over the given maps.
inline Histogram group_by(const std::vector<NonOrientedMap>& maps, GroupKey key,
                          const std::function<Rational(const NonOrientedMap&)>& weight = nullptr) {
  Histogram h;
  for (const auto& m : maps) h[group_key(m, key)] += weight ? weight(m) : Rational(1);
  return h;
}

inline Histogram scaled(Histogram h, const Rational& s) {
  for (auto& [k, v] : h) v *= s;
  return h;
}

}  // namespace ribbon
