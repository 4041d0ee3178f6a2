#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/map.hpp"
#include "ribbon/mon.hpp"

namespace ribbon {

/// Result of the twisting bijection: the image map, the (unchanged) history and the set
/// of edges whose twisting turns the input into the output.
struct BijectionResult {
  NonOrientedMap map;
  History history;
  std::vector<Edge> twist_set;  // sorted
};

/// Thrown when the exactly-one dichotomy fails during the recursion; carries the trace.
class BijectionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

enum class BijectionDirection { ToOrientable, ToTopDegree };

inline bool target_property(const NonOrientedMap& m, BijectionDirection dir) {
  return dir == BijectionDirection::ToOrientable ? is_orientable(m) : is_top_degree_map(m);
}

inline std::vector<Edge> bijection_step(const NonOrientedMap& m, const History& h, size_t first,
                                        BijectionDirection dir, std::vector<std::string>& trace) {
  if (first == h.size()) return {};
  const Edge e = h[first];
  // Edges h[first..] are exactly the edges of m.
  const NonOrientedMap rest = remove_edge(m, e);
  std::vector<Edge> twists = bijection_step(rest, h, first + 1, dir, trace);
  const NonOrientedMap tilde = twist_all(m, twists);
  const EdgeRole role = edge_role(tilde, e);
  std::ostringstream line;
  line << "step " << first << " edge " << e.str() << ": ";
  if (role.is_bridge || role.is_leaf) {
    line << (role.is_leaf ? "leaf" : "bridge") << ", keep";
    trace.push_back(line.str());
    return twists;
  }
  const bool keep = target_property(tilde, dir);
  const bool flip = target_property(twist(tilde, e), dir);
  line << "keep=" << keep << " twist=" << flip;
  trace.push_back(line.str());
  if (keep == flip) {
    std::string msg = "bijection: exactly-one dichotomy failed\n";
    for (const auto& t : trace) msg += "  " + t + "\n";
    throw BijectionError(msg);
  }
  if (flip) {
    twists.push_back(e);
    std::sort(twists.begin(), twists.end());
  }
  return twists;
}

}  // namespace detail

/// Sends a top-degree pair (M, h) to (M', h) with M' orientable, M' obtained from M by twists.
inline BijectionResult phi(const NonOrientedMap& m, const History& h) {
  validate_history(m, h);
  if (const int bad = first_non_top_degree_prefix(m, h); bad >= 0)
    throw std::invalid_argument("phi: not a top-degree pair (prefix map M_" + std::to_string(bad) +
                                " is not top-degree)");
  std::vector<std::string> trace;
  auto twists = detail::bijection_step(m, h, 0, detail::BijectionDirection::ToOrientable, trace);
  return {twist_all(m, twists), h, std::move(twists)};
}

/// Inverse of phi: sends (M', h) with M' orientable to the unique top-degree pair (M, h).
inline BijectionResult phi_inverse(const NonOrientedMap& m, const History& h) {
  validate_history(m, h);
  if (!is_orientable(m)) throw std::invalid_argument("phi_inverse: map is not orientable");
  std::vector<std::string> trace;
  auto twists = detail::bijection_step(m, h, 0, detail::BijectionDirection::ToTopDegree, trace);
  return {twist_all(m, twists), h, std::move(twists)};
}

}  // namespace ribbon
