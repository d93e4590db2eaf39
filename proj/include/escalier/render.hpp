#pragma once

#include <string>
#include <vector>

#include "escalier/staircase.hpp"

namespace escalier {

// ASCII rendering of a staircase with n <= 3, layer by layer along the last
// coordinate. Cells: '#' member, '*' member lying on a top-dimensional
// plane, 'C' corner of the complement, '.' outside.
inline std::string render_staircase(const StandardSet& s, unsigned bounds) {
  if (s.arity() > 3) throw std::invalid_argument("render: arity must be at most 3");
  const std::size_t n = s.arity();
  auto inv = s.top_planes();
  auto cell = [&](const Exponent& a) -> char {
    for (const auto& g : s.corners())
      if (g == a) return 'C';
    if (!s.contains(a)) return '.';
    for (const auto& pl : inv.planes) {
      bool on = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::find(pl.J.begin(), pl.J.end(), i) != pl.J.end()) continue;
        if (pl.base[i] != a[i]) {
          on = false;
          break;
        }
      }
      if (on && inv.top_dimension > 0) return '*';
    }
    return '#';
  };

  std::string out;
  if (n == 0) {
    out += s.is_full() ? "#\n" : ".\n";
    return out;
  }
  const unsigned levels = (n == 3) ? bounds + 1 : 1;
  for (unsigned z = 0; z < levels; ++z) {
    if (n == 3) out += "layer x3=" + std::to_string(z) + "\n";
    const unsigned rows = (n >= 2) ? bounds + 1 : 1;
    // Second coordinate increases upward, first to the right.
    for (unsigned rr = 0; rr < rows; ++rr) {
      unsigned y = rows - 1 - rr;
      std::string line;
      for (unsigned x = 0; x <= bounds; ++x) {
        Exponent a(n);
        a[0] = x;
        if (n >= 2) a[1] = y;
        if (n == 3) a[2] = z;
        line += cell(a);
        line += ' ';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    if (z + 1 < levels) out += "\n";
  }
  return out;
}

}  // namespace escalier
