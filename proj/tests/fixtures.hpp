#pragma once

// Shared fixture varieties used across the test suite: the four worked
// examples (two lines in a plane pair; three fibers over X; two skew lines
// with a common free variable; the five-component mixed arrangement).

#include "escalier/planes.hpp"

namespace fixtures {

using escalier::AffinePlane;
using escalier::Matrix;
using escalier::Rational;
using escalier::Variety;

inline AffinePlane plane3(const Matrix& B, const std::vector<Rational>& c) {
  return escalier::from_general_equations(3, B, c);
}

// Two lines: {Y=X, Z=1} and {X=0, Z=Y}; graded-lex fixture.
inline Variety crossed_lines() {
  Variety V;
  V.n = 3;
  V.components.push_back(plane3({{-1, 1, 0}, {0, 0, 1}}, {0, -1}));
  V.components.push_back(plane3({{1, 0, 0}, {0, -1, 1}}, {0, 0}));
  return V;
}

// Three lines pinned at X=1,2,3: {X=1,Z=3}, {X=2,Z=Y-1}, {X=3,Y=4}; lex.
inline Variety stacked_lines() {
  Variety V;
  V.n = 3;
  V.components.push_back(plane3({{1, 0, 0}, {0, 0, 1}}, {-1, -3}));
  V.components.push_back(plane3({{1, 0, 0}, {0, -1, 1}}, {-2, 1}));
  V.components.push_back(plane3({{1, 0, 0}, {0, 1, 0}}, {-3, -4}));
  return V;
}

// Two lines free in X: {Y=X, Z=1} and {Y=2X, Z=2}; lex.
inline Variety sloped_lines() {
  Variety V;
  V.n = 3;
  V.components.push_back(plane3({{-1, 1, 0}, {0, 0, 1}}, {0, -1}));
  V.components.push_back(plane3({{-2, 1, 0}, {0, 0, 1}}, {0, -2}));
  return V;
}

// Five components with all three minimal free variables represented; lex.
inline Variety mixed_lines() {
  Variety V;
  V.n = 3;
  V.components.push_back(plane3({{-1, 1, 0}, {0, 0, 1}}, {0, -1}));
  V.components.push_back(plane3({{-1, 1, 0}, {0, 0, 1}}, {0, -2}));
  V.components.push_back(plane3({{1, 0, 0}, {0, -1, 1}}, {-2, 1}));
  V.components.push_back(plane3({{1, 0, 0}, {0, 0, 1}}, {-1, -3}));
  V.components.push_back(plane3({{1, 0, 0}, {0, 1, 0}}, {-3, -4}));
  return V;
}

}  // namespace fixtures
