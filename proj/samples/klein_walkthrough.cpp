// Walks through the three-edge one-face map on the Klein bottle: its edges, every
// removal history with its weight, mon and mon_top, and its image under phi.

#include <algorithm>
#include <iostream>

#include "ribbon/bijection.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/mon.hpp"

int main() {
  using namespace ribbon;
  const NonOrientedMap k = fixtures::klein();
  const MapStructure s = structure(k);
  std::cout << "vertices " << s.vertices() << ", edges " << s.edges << ", faces " << s.faces << ", euler " << s.euler
            << ", orientable " << std::boolalpha << is_orientable(k) << "\n";
  for (const Edge& e : k.edges()) std::cout << "  edge " << e.str() << ": " << to_string(classify_edge(k, e)) << "\n";

  History h = k.edges();
  do {
    std::cout << "  history " << to_string(h) << "  weight " << history_weight(k, h).str()
              << (is_top_degree_pair(k, h) ? "  (top degree)" : "") << "\n";
  } while (std::next_permutation(h.begin(), h.end()));

  std::cout << "mon = " << mon(k).str() << "\n";
  std::cout << "mon_top = " << mon_top(k) << "\n";

  const History top{Edge(1, 5), Edge(2, 4), Edge(3, 6)};
  const BijectionResult r = phi(k, top);
  std::cout << "phi twists";
  for (const Edge& e : r.twist_set) std::cout << " " << e.str();
  std::cout << "; image orientable " << is_orientable(r.map) << ", euler " << structure(r.map).euler << "\n";
}
