#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "escalier/exponent.hpp"

namespace escalier {

// A d-plane in a staircase: gamma + (+)_{j in J} N e_j, with gamma supported
// off J. J holds 0-based coordinate indices, sorted.
struct PlaneInStaircase {
  std::vector<std::size_t> J;
  Exponent base;

  bool operator==(const PlaneInStaircase& o) const { return J == o.J && base == o.base; }
  bool operator<(const PlaneInStaircase& o) const {
    if (J != o.J) return J < o.J;
    return base < o.base;
  }
};

// A downward-closed subset of N^n, represented by the finite antichain of
// minimal generators of its complement (the corners). The full set N^n has no
// corners; the empty set has the single corner 0.
class StandardSet {
 public:
  // Minimises an arbitrary generator list to the canonical antichain.
  static StandardSet from_corners(std::size_t arity, std::vector<Exponent> gens) {
    for (const auto& g : gens)
      if (g.size() != arity) throw std::invalid_argument("corner arity mismatch");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i == j) continue;
        if (gens[j].divides(gens[i]) && !(gens[i] == gens[j])) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(gens[i]);
    }
    StandardSet s;
    s.arity_ = arity;
    s.corners_ = std::move(minimal);
    return s;
  }

  static StandardSet full(std::size_t arity) { return from_corners(arity, {}); }
  static StandardSet empty_set(std::size_t arity) {
    return from_corners(arity, {Exponent(arity)});
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Exponent>& corners() const { return corners_; }

  bool is_full() const { return corners_.empty(); }
  bool is_empty() const { return corners_.size() == 1 && corners_[0].is_zero(); }

  bool contains(const Exponent& a) const {
    if (a.size() != arity_) throw std::invalid_argument("contains: arity mismatch");
    for (const auto& g : corners_)
      if (g.divides(a)) return false;
    return true;
  }

  bool operator==(const StandardSet& o) const {
    return arity_ == o.arity_ && corners_ == o.corners_;
  }

  // Subset test via complements: this is a subset of o iff every corner of o
  // lies outside this set.
  bool subset_of(const StandardSet& o) const {
    check_arity(o);
    for (const auto& g : o.corners_)
      if (contains(g)) return false;
    return true;
  }

  StandardSet set_union(const StandardSet& o) const {
    check_arity(o);
    std::vector<Exponent> gens;
    for (const auto& a : corners_)
      for (const auto& b : o.corners_) gens.push_back(a.join(b));
    if (corners_.empty() || o.corners_.empty()) gens.clear();  // union with full
    return from_corners(arity_, std::move(gens));
  }

  StandardSet set_intersection(const StandardSet& o) const {
    check_arity(o);
    std::vector<Exponent> gens = corners_;
    gens.insert(gens.end(), o.corners_.begin(), o.corners_.end());
    return from_corners(arity_, std::move(gens));
  }

  // Per-coordinate bound: members and plane bases are determined inside the
  // box [0, M_i] where M_i = max corner i-th coordinate.
  std::vector<unsigned> corner_box() const {
    std::vector<unsigned> M(arity_, 0);
    for (const auto& g : corners_)
      for (std::size_t i = 0; i < arity_; ++i) M[i] = std::max(M[i], g[i]);
    return M;
  }

  // True iff gamma + (+)_{j in J} N e_j is a subset: every corner must exceed
  // the base in some off-J coordinate.
  bool plane_contained(const PlaneInStaircase& plane) const {
    for (const auto& g : corners_) {
      bool escapes = false;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (std::find(plane.J.begin(), plane.J.end(), i) != plane.J.end()) continue;
        if (plane.base[i] < g[i]) {
          escapes = true;
          break;
        }
      }
      if (!escapes) return false;
    }
    return true;
  }

  struct PlaneFamily {
    bool infinite = false;   // the staircase contains a strictly larger plane
    std::vector<Exponent> bases;
  };

  // All planes parallel to (+)_{j in J} N e_j, by enumerating bases over the
  // corner box. The membership predicate is constant in coordinate i once the
  // base reaches M_i, so a contained plane on the box boundary certifies an
  // infinite family.
  PlaneFamily d_planes(const std::vector<std::size_t>& J) const {
    PlaneFamily out;
    std::vector<unsigned> M = corner_box();
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < arity_; ++i)
      if (std::find(J.begin(), J.end(), i) == J.end()) off.push_back(i);
    Exponent gamma(arity_);
    enumerate_bases(J, off, 0, gamma, M, out);
    return out;
  }

  struct PlaneInventory {
    std::size_t top_dimension = 0;
    std::vector<PlaneInStaircase> planes;  // all top-dimensional planes
  };

  // The maximal d admitting a d-plane, together with all d-planes (E as a
  // plane list). Scans d from the top so every reported family is finite.
  PlaneInventory top_planes() const {
    PlaneInventory inv;
    for (std::size_t d = arity_ + 1; d-- > 0;) {
      std::vector<PlaneInStaircase> found;
      bool any = false;
      for_each_subset(arity_, d, [&](const std::vector<std::size_t>& J) {
        PlaneFamily fam = d_planes(J);
        if (fam.infinite || !fam.bases.empty()) any = true;
        for (const auto& b : fam.bases) found.push_back(PlaneInStaircase{J, b});
      });
      if (any) {
        inv.top_dimension = d;
        std::sort(found.begin(), found.end());
        inv.planes = std::move(found);
        return inv;
      }
    }
    // Empty staircase: no planes at all; report d = 0 with no planes.
    return inv;
  }

  // --- the addition map on D-bar (no N e_1 ray) ----------------------------

  // Membership in D-bar: some corner has a zero tail, so every e_1-fiber is
  // finite.
  bool in_dbar() const {
    for (const auto& g : corners_)
      if (g.tail().is_zero()) return true;
    return false;
  }

  // #(p^{-1}(alpha) cap delta) = min { g_1 : g corner, p(g) <= alpha }.
  unsigned fiber_count(const Exponent& alpha) const {
    if (alpha.size() + 1 != arity_) throw std::invalid_argument("fiber_count arity");
    if (!in_dbar()) throw std::invalid_argument("fiber_count: staircase not in D-bar");
    unsigned best = 0;
    bool any = false;
    for (const auto& g : corners_) {
      if (g.tail().divides(alpha)) {
        if (!any || g[0] < best) best = g[0];
        any = true;
      }
    }
    return best;  // `any` always holds: some corner has zero tail
  }

  // Fiber-count-summing addition (defined on D-bar). Output corners are found
  // on candidate tails: the join closure of both inputs' projected corners.
  StandardSet add(const StandardSet& o) const {
    check_arity(o);
    if (!in_dbar() || !o.in_dbar())
      throw std::invalid_argument("add: input not in D-bar");
    std::set<Exponent> tails;
    tails.insert(Exponent(arity_ - 1));
    for (const auto& g : corners_) tails.insert(g.tail());
    for (const auto& g : o.corners_) tails.insert(g.tail());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Exponent> cur(tails.begin(), tails.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j)
          if (tails.insert(cur[i].join(cur[j])).second) grew = true;
    }
    std::vector<Exponent> gens;
    for (const auto& t : tails)
      gens.push_back(t.prepend(fiber_count(t) + o.fiber_count(t)));
    return from_corners(arity_, std::move(gens));
  }

  // Image under p (drop the first coordinate).
  StandardSet project() const {
    std::vector<Exponent> gens;
    for (const auto& g : corners_)
      if (g[0] == 0) gens.push_back(g.tail());
    return from_corners(arity_ - 1, std::move(gens));
  }

  // Prepends a zero coordinate: the section {alpha_1 = 0} copy inside D-bar.
  StandardSet embed() const {
    std::vector<Exponent> gens;
    gens.push_back(Exponent::unit(arity_ + 1, 0));
    for (const auto& g : corners_) gens.push_back(g.prepend(0));
    return from_corners(arity_ + 1, std::move(gens));
  }

  // N e_1 (+) delta: arbitrary first coordinate over a tail in delta.
  StandardSet cuboid() const {
    std::vector<Exponent> gens;
    for (const auto& g : corners_) gens.push_back(g.prepend(0));
    return from_corners(arity_ + 1, std::move(gens));
  }

  // The largest union of 1-planes parallel to N e_1 inside this staircase,
  // reported as the staircase of its tails in N^{n-1}.
  StandardSet e1_ray_tails() const {
    std::vector<Exponent> gens;
    for (const auto& g : corners_) gens.push_back(g.tail());
    return from_corners(arity_ - 1, std::move(gens));
  }

  // Finite iff no 1-plane is contained; then all members lie in the corner
  // box. Returns nullopt for infinite staircases.
  std::optional<unsigned long long> cardinality() const {
    if (arity_ == 0) return corners_.empty() ? 1ull : 0ull;
    for (std::size_t i = 0; i < arity_; ++i) {
      PlaneFamily fam = d_planes({i});
      if (fam.infinite || !fam.bases.empty()) return std::nullopt;
    }
    std::vector<unsigned> M = corner_box();
    unsigned long long count = 0;
    Exponent a(arity_);
    count_members(0, a, M, count);
    return count;
  }

  // #{alpha in delta : |alpha| <= t}, by box enumeration.
  unsigned long long hilbert_function(unsigned t) const {
    unsigned long long count = 0;
    Exponent a(arity_);
    hilbert_rec(0, 0, t, a, count);
    return count;
  }

 private:
  void check_arity(const StandardSet& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("staircase arity mismatch");
  }

  void enumerate_bases(const std::vector<std::size_t>& J,
                       const std::vector<std::size_t>& off, std::size_t k,
                       Exponent& gamma, const std::vector<unsigned>& M,
                       PlaneFamily& out) const {
    if (k == off.size()) {
      if (plane_contained(PlaneInStaircase{J, gamma})) {
        bool boundary = false;
        for (std::size_t i : off)
          if (gamma[i] >= M[i]) boundary = true;
        if (boundary)
          out.infinite = true;
        else
          out.bases.push_back(gamma);
      }
      return;
    }
    std::size_t i = off[k];
    for (unsigned v = 0; v <= M[i]; ++v) {
      gamma[i] = v;
      enumerate_bases(J, off, k + 1, gamma, M, out);
    }
    gamma[i] = 0;
  }

  template <class F>
  static void for_each_subset(std::size_t n, std::size_t d, F&& f) {
    std::vector<std::size_t> J;
    subset_rec(n, d, 0, J, f);
  }

  template <class F>
  static void subset_rec(std::size_t n, std::size_t d, std::size_t start,
                         std::vector<std::size_t>& J, F& f) {
    if (J.size() == d) {
      f(const_cast<const std::vector<std::size_t>&>(J));
      return;
    }
    for (std::size_t i = start; i + (d - J.size()) <= n; ++i) {
      J.push_back(i);
      subset_rec(n, d, i + 1, J, f);
      J.pop_back();
    }
  }

  void count_members(std::size_t k, Exponent& a, const std::vector<unsigned>& M,
                     unsigned long long& count) const {
    if (k == arity_) {
      if (contains(a)) ++count;
      return;
    }
    for (unsigned v = 0; v <= (M[k] == 0 ? 0 : M[k] - 1); ++v) {
      a[k] = v;
      count_members(k + 1, a, M, count);
    }
    a[k] = 0;
  }

  void hilbert_rec(std::size_t k, unsigned used, unsigned t, Exponent& a,
                   unsigned long long& count) const {
    if (k == arity_) {
      if (contains(a)) ++count;
      return;
    }
    for (unsigned v = 0; v + used <= t; ++v) {
      a[k] = v;
      hilbert_rec(k + 1, used + v, t, a, count);
    }
    a[k] = 0;
  }

  std::size_t arity_ = 0;
  std::vector<Exponent> corners_;
};

}  // namespace escalier
