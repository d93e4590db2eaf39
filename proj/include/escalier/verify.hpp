#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "escalier/planes.hpp"
#include "escalier/staircase.hpp"

namespace escalier {

struct CheckReport {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string witness;  // on failure: the offending alpha, J, lambda, ...
};

namespace detail {

template <class F>
void for_each_subset(std::size_t n, std::size_t d, F&& f) {
  std::vector<std::size_t> J;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (J.size() == d) {
      f(J);
      return;
    }
    for (std::size_t i = start; i + (d - J.size()) <= n; ++i) {
      J.push_back(i);
      rec(i + 1);
      J.pop_back();
    }
  };
  rec(0);
}

inline std::string describe(const Variety& V) {
  std::ostringstream os;
  os << "n=" << V.n << " m=" << V.components.size() << " [";
  for (std::size_t k = 0; k < V.components.size(); ++k) {
    const auto& P = V.components[k];
    if (k) os << "; ";
    os << "J={";
    for (std::size_t t = 0; t < P.J.size(); ++t) os << (t ? "," : "") << P.J[t] + 1;
    os << "}";
    for (const auto& [key, v] : P.b)
      if (v != 0)
        os << " b(" << key.first + 1 << "," << key.second + 1 << ")=" << to_string(v);
    for (const auto& [i, v] : P.c)
      if (v != 0) os << " c(" << i + 1 << ")=" << to_string(v);
  }
  os << "]";
  return os.str();
}

inline std::string describe(const StandardSet& s) {
  std::string out = "corners{";
  for (std::size_t i = 0; i < s.corners().size(); ++i)
    out += (i ? "," : "") + s.corners()[i].str();
  return out + "}";
}

// Counts of components per minimal-free-variable set.
inline std::map<std::vector<std::size_t>, std::size_t> mj_counts(const Variety& V) {
  std::map<std::vector<std::size_t>, std::size_t> m;
  for (const auto& P : V.components) ++m[P.J];
  return m;
}

// Membership of alpha in a union of planes: some plane matches alpha exactly
// on its bound coordinates.
inline bool in_plane_union(const std::vector<PlaneInStaircase>& planes,
                           const Exponent& alpha) {
  for (const auto& pl : planes) {
    bool match = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (std::find(pl.J.begin(), pl.J.end(), i) != pl.J.end()) continue;
      if (pl.base[i] != alpha[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

// All d-planes of a staircase over every direction set J of size d; throws on
// an infinite family (cannot happen for staircases of d-plane varieties).
inline std::vector<PlaneInStaircase> all_d_planes(const StandardSet& s, std::size_t d) {
  std::vector<PlaneInStaircase> out;
  bool infinite = false;
  for_each_subset(s.arity(), d, [&](const std::vector<std::size_t>& J) {
    auto fam = s.d_planes(J);
    if (fam.infinite) infinite = true;
    for (const auto& b : fam.bases) out.push_back(PlaneInStaircase{J, b});
  });
  if (infinite) throw std::runtime_error("unexpected infinite plane family");
  std::sort(out.begin(), out.end());
  return out;
}

inline StandardSet sum_over(const std::vector<StandardSet>& terms, std::size_t arity) {
  StandardSet acc = StandardSet::empty_set(arity);
  for (const auto& t : terms) acc = acc.add(t);
  return acc;
}

}  // namespace detail

// Degenerate dimension-zero case: the staircase of a finite point set is finite of the
// same cardinality.
inline CheckReport check_finiteness(const std::vector<std::vector<Rational>>& points) {
  CheckReport rep{"finiteness", "", false, ""};
  if (points.empty()) {
    rep.witness = "no points";
    return rep;
  }
  const std::size_t n = points[0].size();
  Variety V;
  V.n = n;
  for (const auto& pt : points) {
    AffinePlane P;
    P.n = n;
    for (std::size_t i = 0; i < n; ++i) P.c[i] = -pt[i];
    V.components.push_back(P);
  }
  rep.instance = detail::describe(V);
  StandardSet D = standard_set_of_variety(V, TermOrder::lex());
  auto card = D.cardinality();
  if (!card) {
    rep.witness = "staircase infinite: " + detail::describe(D);
    return rep;
  }
  if (*card != points.size()) {
    rep.witness = "#D=" + std::to_string(*card) +
                  " expected " + std::to_string(points.size());
    return rep;
  }
  rep.pass = true;
  return rep;
}

// Plane counting: for every direction set J of size d, the number of d-planes in
// D(A) parallel to (+)_J N e_j equals the number m_J of components with
// minimal free variables J; and D(A) has no (d+1)-plane.
inline CheckReport check_theorem_number(const Variety& V, const TermOrder& order) {
  CheckReport rep{"theorem_number", detail::describe(V), false, ""};
  const std::size_t d = V.components[0].dimension();
  StandardSet D = standard_set_of_variety(V, order);
  auto mj = detail::mj_counts(V);
  bool ok = true;
  detail::for_each_subset(V.n, d, [&](const std::vector<std::size_t>& J) {
    if (!ok) return;
    auto fam = D.d_planes(J);
    std::size_t expected = mj.count(J) ? mj[J] : 0;
    if (fam.infinite || fam.bases.size() != expected) {
      std::string js;
      for (std::size_t j : J) js += std::to_string(j + 1) + " ";
      rep.witness = "J={" + js + "}: count " +
                    (fam.infinite ? std::string("infinite")
                                  : std::to_string(fam.bases.size())) +
                    " expected " + std::to_string(expected);
      ok = false;
    }
  });
  if (!ok) return rep;
  if (d < V.n) {
    auto inv = D.top_planes();
    if (inv.top_dimension != d) {
      rep.witness = "top dimension " + std::to_string(inv.top_dimension) +
                    " expected " + std::to_string(d);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

// Direction decomposition: E(A) equals the union of the E(A_J), A_J collecting the
// components with minimal free variables J. Compared pointwise over a box.
inline CheckReport check_lemma_decompose(const Variety& V, const TermOrder& order) {
  CheckReport rep{"lemma_decompose", detail::describe(V), false, ""};
  const std::size_t d = V.components[0].dimension();
  StandardSet D = standard_set_of_variety(V, order);
  std::vector<PlaneInStaircase> lhs = detail::all_d_planes(D, d);
  std::vector<PlaneInStaircase> rhs;
  for (const auto& [J, count] : detail::mj_counts(V)) {
    Variety VJ;
    VJ.n = V.n;
    for (const auto& P : V.components)
      if (P.J == J) VJ.components.push_back(P);
    StandardSet DJ = standard_set_of_variety(VJ, order);
    for (const auto& pl : detail::all_d_planes(DJ, d)) rhs.push_back(pl);
  }
  // Compare the unions over a box covering every base and corner.
  std::vector<unsigned> M = D.corner_box();
  for (const auto& pl : lhs)
    for (std::size_t i = 0; i < V.n; ++i) M[i] = std::max(M[i], pl.base[i]);
  for (const auto& pl : rhs)
    for (std::size_t i = 0; i < V.n; ++i) M[i] = std::max(M[i], pl.base[i]);
  Exponent a(V.n);
  std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
    if (k == V.n) {
      if (detail::in_plane_union(lhs, a) != detail::in_plane_union(rhs, a)) {
        rep.witness = "membership differs at " + a.str();
        return false;
      }
      return true;
    }
    for (unsigned v = 0; v <= M[k] + 1; ++v) {
      a[k] = v;
      if (!walk(k + 1)) return false;
    }
    a[k] = 0;
    return true;
  };
  rep.pass = walk(0);
  return rep;
}

// Stacking: D(A) is the addition-map sum of the embedded slice staircases
// over the projection support, for product orders and X_1-pinned components.
inline CheckReport check_theorem_stack(const Variety& V, const TermOrder& order) {
  CheckReport rep{"theorem_stack", detail::describe(V), false, ""};
  if (!order.is_product()) {
    rep.witness = "precondition: order is not a product order";
    return rep;
  }
  StandardSet D = standard_set_of_variety(V, order);
  std::vector<StandardSet> terms;
  for (const Rational& lambda : projection_support(V)) {
    StandardSet s = standard_set_of_variety(slice(V, lambda), order.restricted());
    terms.push_back(s.embed());
  }
  StandardSet sum = detail::sum_over(terms, V.n);
  if (!(sum == D)) {
    rep.witness = "sum " + detail::describe(sum) + " vs D " + detail::describe(D);
    return rep;
  }
  rep.pass = true;
  return rep;
}

namespace detail {

inline StandardSet nested_sum(const Variety& V, const TermOrder& order, unsigned b) {
  if (b == 0) return standard_set_of_variety(V, order);
  StandardSet acc = StandardSet::empty_set(V.n);
  for (const Rational& lambda : projection_support(V)) {
    StandardSet inner = nested_sum(slice(V, lambda), order.restricted(), b - 1);
    acc = acc.add(inner.embed());
  }
  return acc;
}

}  // namespace detail

// Nested stacking: the b-fold nested stacking sum reproduces D(A).
inline CheckReport check_corollary_recursive(const Variety& V, const TermOrder& order,
                                             unsigned b) {
  CheckReport rep{"corollary_recursive", detail::describe(V), false, ""};
  TermOrder level = order;
  for (unsigned i = 0; i < b; ++i) {
    if (!level.is_product()) {
      rep.witness = "precondition: order restriction at level " + std::to_string(i) +
                    " is not a product order";
      return rep;
    }
    level = level.restricted();
  }
  for (const auto& P : V.components)
    for (std::size_t j : P.J)
      if (j < b) {
        rep.witness = "precondition: X_" + std::to_string(j + 1) +
                      " free in a component";
        return rep;
      }
  StandardSet D = standard_set_of_variety(V, order);
  StandardSet sum = detail::nested_sum(V, order, b);
  if (!(sum == D)) {
    rep.witness = "nested sum " + detail::describe(sum) + " vs D " + detail::describe(D);
    return rep;
  }
  rep.pass = true;
  return rep;
}

namespace detail {

// Closed innermost fibers: case (a) a single d-plane contributes
// (+)_{j in J} N e_j; case (b) a union of hyperplanes contributes the
// union of slabs alpha_i < m_i.
inline StandardSet closed_fiber(const Variety& V) {
  const std::size_t n = V.n;
  if (V.components.size() == 1) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(V.components[0].J.begin(), V.components[0].J.end(), i) ==
          V.components[0].J.end())
        gens.push_back(Exponent::unit(n, i));
    return StandardSet::from_corners(n, gens);
  }
  // Hyperplane case: m_i components have bound variable X_i.
  StandardSet acc = StandardSet::empty_set(n);
  std::map<std::size_t, unsigned> m;
  for (const auto& P : V.components) {
    std::size_t bound = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(P.J.begin(), P.J.end(), i) == P.J.end()) bound = i;
    ++m[bound];
  }
  for (const auto& [i, mi] : m) {
    Exponent g(n);
    g[i] = mi;
    acc = acc.set_union(StandardSet::from_corners(n, {g}));
  }
  return acc;
}

inline StandardSet nested_closed(const Variety& V, const TermOrder& order, unsigned b) {
  if (b == 0) return closed_fiber(V);
  StandardSet acc = StandardSet::empty_set(V.n);
  for (const Rational& lambda : projection_support(V))
    acc = acc.add(nested_closed(slice(V, lambda), order.restricted(), b - 1).embed());
  return acc;
}

}  // namespace detail

// Fully explicit nested formula (case (a) single-plane fibers, case (b)
// hyperplane slab fibers) reproducing D(A).
inline CheckReport check_corlex_formulas(const Variety& V, const TermOrder& order,
                                         unsigned b) {
  CheckReport rep{"corlex_formulas", detail::describe(V), false, ""};
  const std::size_t d = V.components[0].dimension();
  for (const auto& P : V.components)
    for (std::size_t j : P.J)
      if (j < b) {
        rep.witness = "precondition: X_" + std::to_string(j + 1) +
                      " free in a component";
        return rep;
      }
  // Hypotheses: after b slicing levels the fibers are single d-planes (a) or
  // unions of hyperplanes (b).
  if (!(d + b <= V.n)) {
    rep.witness = "precondition: b too large";
    return rep;
  }
  StandardSet D = standard_set_of_variety(V, order);
  StandardSet sum = detail::nested_closed(V, order, b);
  if (!(sum == D)) {
    rep.witness = "closed form " + detail::describe(sum) + " vs D " +
                  detail::describe(D);
    return rep;
  }
  rep.pass = true;
  return rep;
}

// Slab formula: for a union of hyperplanes, D(A) is the union of the slabs
// alpha_i < m_i, m_i the number of components bound in X_i.
inline CheckReport check_hyperplane_formula(const Variety& V, const TermOrder& order) {
  CheckReport rep{"hyperplane_formula", detail::describe(V), false, ""};
  for (const auto& P : V.components)
    if (P.dimension() + 1 != V.n) {
      rep.witness = "precondition: a component is not a hyperplane";
      return rep;
    }
  StandardSet D = standard_set_of_variety(V, order);
  StandardSet expected = detail::closed_fiber(V);
  if (!(expected == D)) {
    rep.witness = "formula " + detail::describe(expected) + " vs D " +
                  detail::describe(D);
    return rep;
  }
  rep.pass = true;
  return rep;
}

// Generic-fiber inheritance: when every component has X_1 free, the cuboid N e_1 (+) delta
// over the generic fiber is contained in D(A) and is exactly the union of
// the 1-planes of D(A) parallel to N e_1.
inline CheckReport check_theorem_inherit(const Variety& V, const TermOrder& order) {
  CheckReport rep{"theorem_inherit", detail::describe(V), false, ""};
  if (!order.is_product()) {
    rep.witness = "precondition: order is not a product order";
    return rep;
  }
  for (const auto& P : V.components)
    if (std::find(P.J.begin(), P.J.end(), std::size_t{0}) == P.J.end()) {
      rep.witness = "precondition: a component has X_1 pinned";
      return rep;
    }
  StandardSet D = standard_set_of_variety(V, order);
  GenericFiber gf = generic_fiber(V, order);
  StandardSet cub = gf.delta.cuboid();
  if (!cub.subset_of(D)) {
    rep.witness = "cuboid " + detail::describe(cub) + " not inside D " +
                  detail::describe(D);
    return rep;
  }
  StandardSet rays = D.e1_ray_tails();
  if (!(rays == gf.delta)) {
    rep.witness = "e1-ray tails " + detail::describe(rays) + " vs delta " +
                  detail::describe(gf.delta);
    return rep;
  }
  rep.pass = true;
  return rep;
}

// General lower bound: D(A) contains the cuboid over the generic delta united with
// the stacked sum of the exceptional fibers, and the cuboid is exactly the
// union of e_1-parallel 1-planes. Strictness of the containment is recorded
// in the witness, never judged.
inline CheckReport check_corollary_general(const Variety& V, const TermOrder& order) {
  CheckReport rep{"corollary_general", detail::describe(V), false, ""};
  if (!order.is_product()) {
    rep.witness = "precondition: order is not a product order";
    return rep;
  }
  StandardSet D = standard_set_of_variety(V, order);
  GenericFiber gf = generic_fiber(V, order);
  std::vector<StandardSet> terms;
  for (const Rational& lambda : gf.exceptional) {
    StandardSet s = standard_set_of_variety(slice(V, lambda), order.restricted());
    terms.push_back(s.embed());
  }
  StandardSet rhs = gf.delta.cuboid().set_union(detail::sum_over(terms, V.n));
  if (!rhs.subset_of(D)) {
    rep.witness = "lower bound " + detail::describe(rhs) + " not inside D " +
                  detail::describe(D);
    return rep;
  }
  StandardSet rays = D.e1_ray_tails();
  if (!(rays == gf.delta)) {
    rep.witness = "e1-ray tails " + detail::describe(rays) + " vs delta " +
                  detail::describe(gf.delta);
    return rep;
  }
  rep.pass = true;
  rep.witness = (D == rhs) ? "containment is an equality" : "containment is strict";
  return rep;
}

// Corner inequality: for every corner beta of C(A), the first coordinate
// bounds the number of fibers whose staircase contains p(beta); p(beta)
// must avoid the generic delta.
inline CheckReport check_inequality_strong(const Variety& V, const TermOrder& order) {
  CheckReport rep{"inequality_strong", detail::describe(V), false, ""};
  if (!order.is_product()) {
    rep.witness = "precondition: order is not a product order";
    return rep;
  }
  GroebnerBasis G = ideal_of_variety(V, order);
  GenericFiber gf = generic_fiber(V, order);
  std::vector<StandardSet> fibers;
  for (const Rational& lambda : gf.exceptional)
    fibers.push_back(standard_set_of_variety(slice(V, lambda), order.restricted()));
  for (const Exponent& beta : corner_set(G)) {
    Exponent pb = beta.tail();
    if (gf.delta.contains(pb)) {
      rep.witness = "p(beta)=" + pb.str() + " lies in the generic delta";
      return rep;
    }
    unsigned long long rhsum = 0;
    for (const auto& f : fibers)
      if (f.contains(pb)) ++rhsum;
    if (beta[0] < rhsum) {
      rep.witness = "corner " + beta.str() + ": beta_1 < " + std::to_string(rhsum);
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

// Homogenisation reduction: homogenising the variety and computing (d+1)-planes of
// its staircase under the product extension of the order recovers, after
// projecting away the X_0 coordinate, the d-plane bases of D(A).
inline CheckReport check_prop_iff_reduction(const Variety& V, const TermOrder& order) {
  CheckReport rep{"prop_iff_reduction", detail::describe(V), false, ""};
  const std::vector<std::size_t> J = V.components[0].J;
  for (const auto& P : V.components)
    if (P.J != J) {
      rep.witness = "precondition: components have different minimal free variables";
      return rep;
    }
  StandardSet D = standard_set_of_variety(V, order);
  auto fam = D.d_planes(J);
  if (fam.infinite) {
    rep.witness = "unexpected infinite plane family in D(A)";
    return rep;
  }
  Variety H = homogenize_variety(V);
  TermOrder prec = TermOrder::product_over(order);
  StandardSet DH = standard_set_of_variety(H, prec);
  std::vector<std::size_t> Jh{0};
  for (std::size_t j : J) Jh.push_back(j + 1);
  auto famh = DH.d_planes(Jh);
  if (famh.infinite) {
    rep.witness = "unexpected infinite plane family in D(A-hat)";
    return rep;
  }
  std::vector<Exponent> projected;
  for (const auto& b : famh.bases) projected.push_back(b.tail());
  std::vector<Exponent> expected = fam.bases;
  std::sort(projected.begin(), projected.end());
  std::sort(expected.begin(), expected.end());
  if (projected != expected) {
    rep.witness = "projected bases differ";
    return rep;
  }
  rep.pass = true;
  return rep;
}

// Deterministic random instances at desk scale.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(num(rng_), den(rng_));
  }

  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(rng_);
  }

  std::vector<std::size_t> direction_set(std::size_t n, std::size_t d,
                                         std::size_t forbid_below = 0,
                                         int force_x1 = 0) {
    // force_x1: +1 requires 0 in J, -1 forbids it, 0 free choice.
    std::vector<std::size_t> pool;
    for (std::size_t i = forbid_below; i < n; ++i) pool.push_back(i);
    std::vector<std::size_t> J;
    if (force_x1 > 0) {
      J.push_back(0);
      pool.erase(std::remove(pool.begin(), pool.end(), std::size_t{0}), pool.end());
    }
    if (force_x1 < 0)
      pool.erase(std::remove(pool.begin(), pool.end(), std::size_t{0}), pool.end());
    while (J.size() < d) {
      std::size_t k = index(0, pool.size() - 1);
      J.push_back(pool[k]);
      pool.erase(pool.begin() + k);
    }
    std::sort(J.begin(), J.end());
    return J;
  }

  AffinePlane plane(std::size_t n, const std::vector<std::size_t>& J) {
    AffinePlane P;
    P.n = n;
    P.J = J;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(J.begin(), J.end(), i) != J.end()) continue;
      for (std::size_t j : J)
        if (j < i && index(0, 2) != 0) P.b[{i, j}] = rational();
      P.c[i] = rational();
    }
    // Canonical shape does not imply minimality of J; recanonicalise.
    Matrix B;
    std::vector<Rational> c;
    for (const auto& f : ideal_of_plane(P).generators) {
      std::vector<Rational> row(n, 0);
      Rational cc = 0;
      for (const auto& [e, coef] : f.terms()) {
        if (e.is_zero()) {
          cc = coef;
          continue;
        }
        for (std::size_t i = 0; i < n; ++i)
          if (e[i] != 0) row[i] = coef;
      }
      B.push_back(std::move(row));
      c.push_back(cc);
    }
    return from_general_equations(n, B, c);
  }

  // m distinct components of dimension d; constraints as in direction_set.
  Variety variety(std::size_t n, std::size_t d, std::size_t m,
                  std::size_t forbid_below = 0, int force_x1 = 0,
                  bool common_J = false) {
    Variety V;
    V.n = n;
    std::set<AffinePlane> seen;
    std::vector<std::size_t> J0;
    while (V.components.size() < m) {
      std::vector<std::size_t> J =
          (common_J && !J0.empty()) ? J0 : direction_set(n, d, forbid_below, force_x1);
      AffinePlane P = plane(n, J);
      if (common_J) {
        if (J0.empty()) J0 = P.J;
        if (P.J != J0) continue;
      }
      if (forbid_below > 0 || force_x1 != 0) {
        // Recanonicalisation may have moved J; re-check the constraint.
        bool ok = true;
        for (std::size_t j : P.J)
          if (j < forbid_below) ok = false;
        bool has0 = std::find(P.J.begin(), P.J.end(), std::size_t{0}) != P.J.end();
        if (force_x1 > 0 && !has0) ok = false;
        if (force_x1 < 0 && has0) ok = false;
        if (!ok) continue;
      }
      if (seen.insert(P).second) V.components.push_back(P);
    }
    return V;
  }

  std::vector<std::vector<Rational>> points(std::size_t n, std::size_t m) {
    std::set<std::vector<Rational>> seen;
    while (seen.size() < m) {
      std::vector<Rational> p;
      for (std::size_t i = 0; i < n; ++i) p.push_back(rational());
      seen.insert(p);
    }
    return std::vector<std::vector<Rational>>(seen.begin(), seen.end());
  }

  // A random staircase in D-bar_n with corners bounded by `bound`.
  StandardSet staircase_dbar(std::size_t n, unsigned bound) {
    std::vector<Exponent> gens;
    // Guarantee a corner with zero tail.
    Exponent g0(n);
    g0[0] = static_cast<unsigned>(index(0, bound));
    gens.push_back(g0);
    std::size_t extra = index(0, 4);
    for (std::size_t k = 0; k < extra; ++k) {
      Exponent g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<unsigned>(index(0, bound));
      gens.push_back(g);
    }
    return StandardSet::from_corners(n, gens);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Routes `count` random instances to each named check. Supported names:
// number, decompose, stack, recursive, corlex, hyperplane, inherit, general,
// strong, iff, finiteness.
inline std::vector<CheckReport> fuzz(InstanceGenerator& gen,
                                     const std::vector<std::string>& which,
                                     std::size_t count) {
  std::vector<CheckReport> reports;
  TermOrder lex = TermOrder::lex();
  for (const std::string& name : which) {
    for (std::size_t k = 0; k < count; ++k) {
      if (name == "finiteness") {
        std::size_t n = gen.index(1, 3);
        reports.push_back(check_finiteness(gen.points(n, gen.index(1, 6))));
      } else if (name == "number" || name == "decompose") {
        std::size_t n = gen.index(2, 4);
        std::size_t d = gen.index(0, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 4));
        reports.push_back(name == "number" ? check_theorem_number(V, lex)
                                           : check_lemma_decompose(V, lex));
      } else if (name == "stack") {
        std::size_t n = gen.index(2, 4);
        std::size_t d = gen.index(0, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 4), 0, -1);
        reports.push_back(check_theorem_stack(V, lex));
      } else if (name == "recursive") {
        std::size_t n = gen.index(3, 4);
        std::size_t b = gen.index(1, 2);
        std::size_t d = gen.index(0, std::min<std::size_t>(2, n - b));
        Variety V = gen.variety(n, d, gen.index(1, 4), b);
        reports.push_back(check_corollary_recursive(V, lex, static_cast<unsigned>(b)));
      } else if (name == "corlex") {
        std::size_t n = gen.index(3, 4);
        std::size_t b = gen.index(1, 2);
        bool case_a = gen.index(0, 1) == 0;
        std::size_t d = case_a ? gen.index(0, n - b - 1) : n - b - 1;
        std::size_t m = case_a ? 1 : gen.index(1, 4);
        Variety V = gen.variety(n, d, m, b);
        reports.push_back(check_corlex_formulas(V, lex, static_cast<unsigned>(b)));
      } else if (name == "hyperplane") {
        std::size_t n = gen.index(2, 4);
        Variety V = gen.variety(n, n - 1, gen.index(1, 4));
        reports.push_back(check_hyperplane_formula(V, lex));
      } else if (name == "inherit") {
        std::size_t n = gen.index(2, 4);
        std::size_t d = gen.index(1, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 3), 0, +1);
        reports.push_back(check_theorem_inherit(V, lex));
      } else if (name == "general") {
        std::size_t n = gen.index(2, 3);
        std::size_t d = gen.index(1, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 3));
        reports.push_back(check_corollary_general(V, lex));
      } else if (name == "strong") {
        std::size_t n = gen.index(2, 3);
        std::size_t d = gen.index(1, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 3));
        reports.push_back(check_inequality_strong(V, lex));
      } else if (name == "iff") {
        std::size_t n = gen.index(2, 3);
        std::size_t d = gen.index(0, std::min<std::size_t>(2, n - 1));
        Variety V = gen.variety(n, d, gen.index(1, 3), 0, 0, true);
        reports.push_back(check_prop_iff_reduction(V, lex));
      } else {
        reports.push_back(CheckReport{name, "", false, "unknown check"});
      }
    }
  }
  return reports;
}

}  // namespace escalier
