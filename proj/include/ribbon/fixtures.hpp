#pragma once

#include "ribbon/map.hpp"
#include "ribbon/oriented.hpp"

namespace ribbon::fixtures {

// One-face map with three edges joining one black and one white vertex, drawn on the Klein bottle.
inline NonOrientedMap klein() {
  return NonOrientedMap(Pairing{{1, 2}, {3, 4}, {5, 6}}, Pairing{{2, 3}, {4, 5}, {6, 1}},
                        Pairing{{1, 5}, {2, 4}, {3, 6}});
}

// Two-face map with seven edges on the projective plane (a decagon 1..10 and a square
// whose sides A, B, C, D are labeled 11, 12, 13, 14).
inline NonOrientedMap projective_plane() {
  return NonOrientedMap(
      Pairing{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}},
      Pairing{{2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 1}, {12, 13}, {14, 11}},
      Pairing{{1, 3}, {2, 10}, {4, 9}, {5, 14}, {6, 13}, {7, 12}, {8, 11}});
}

inline NonOrientedMap single_edge() { return NonOrientedMap(Pairing{{1, 2}}, Pairing{{1, 2}}, Pairing{{1, 2}}); }

// Oriented map with nine edges drawn on the torus.
inline OrientedMap torus() {
  return OrientedMap(Permutation::from_cycles(9, {{1, 4, 9, 5, 7}, {2, 6}, {3, 8}}),
                     Permutation::from_cycles(9, {{1, 9}, {2, 3, 5}, {4, 7}, {6, 8}}));
}

}  // namespace ribbon::fixtures
