#pragma once

// The two families on {1,2,3,4} used throughout the tests:
//   P1 = {{1,2},{3,4}}, P2 = {{1,3},{2,4}}            (minimum size)
//   Q1 = {{1},{2,3,4}}, Q2 = {{1,2},{3,4}}, Q3 = {{1,2,3},{4}}  (maximum size)

#include <vector>

#include "sepfam/core.hpp"

namespace sepfam::testing {

inline Bipartition bp(unsigned n, std::vector<unsigned> block) {
  return Bipartition::from_block(n, block);
}

inline Bipartition P1() { return bp(4, {1, 2}); }
inline Bipartition P2() { return bp(4, {1, 3}); }
inline Bipartition Q1() { return bp(4, {1}); }
inline Bipartition Q2() { return bp(4, {1, 2}); }
inline Bipartition Q3() { return bp(4, {1, 2, 3}); }

inline Family family_P() { return Family(4, {P1(), P2()}); }
inline Family family_Q() { return Family(4, {Q1(), Q2(), Q3()}); }

}  // namespace sepfam::testing
