#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "escalier/polynomial.hpp"
#include "escalier/term_order.hpp"

namespace escalier {

// A finite generating list; not necessarily a basis of any kind.
struct Ideal {
  std::size_t arity;
  std::vector<Polynomial> generators;
};

// Reduced Groebner basis: monic generators, pairwise auto-reduced, sorted by
// leading exponent ascending under the order. Canonical for (ideal, order).
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> generators;

  bool operator==(const GroebnerBasis& o) const {
    return generators == o.generators;
  }
};

// Multivariate division: the remainder of f on division by G. No exponent of
// the result is divisible by any leading exponent of G. Division always uses
// the first dividing generator in basis order, so the result is deterministic.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  Polynomial rem(f.arity());
  Polynomial work = f;
  std::vector<std::pair<Exponent, Rational>> leads;
  leads.reserve(G.generators.size());
  for (const auto& g : G.generators) {
    if (g.arity() != f.arity()) throw std::invalid_argument("normal_form arity mismatch");
    leads.emplace_back(g.leading_exponent(G.order), g.leading_coefficient(G.order));
  }
  while (!work.is_zero()) {
    const Exponent le = work.leading_exponent(G.order);
    const Rational lc = work.coefficient(le);
    bool reduced = false;
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].first.divides(le)) {
        Rational factor = lc / leads[i].second;
        work = work - G.generators[i] *
                          Polynomial::monomial(f.arity(), le - leads[i].first, factor);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(le, lc);
      work.add_term(le, -lc);
    }
  }
  return rem;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const TermOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of zero polynomial");
  const Exponent& lf = f.leading_exponent(order);
  const Exponent& lg = g.leading_exponent(order);
  Exponent lcm = lf.join(lg);
  Polynomial mf = Polynomial::monomial(f.arity(), lcm - lf,
                                       1 / f.leading_coefficient(order));
  Polynomial mg = Polynomial::monomial(g.arity(), lcm - lg,
                                       1 / g.leading_coefficient(order));
  return f * mf - g * mg;
}

namespace detail {

// Inter-reduce a Groebner basis into its reduced form: drop generators whose
// lead is divisible by another lead, reduce every tail, make monic, sort.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                            const TermOrder& order) {
  // Minimal basis: no lead divides another.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Exponent li = basis[i].leading_exponent(order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Exponent lj = basis[j].leading_exponent(order);
      if (lj.divides(li) && !(li == lj && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail reduction against the other generators, repeated to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      GroebnerBasis others{order, {}};
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.generators.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others);
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  for (auto& g : minimal) g = g.monic(order);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_exponent(order), b.leading_exponent(order));
            });
  return minimal;
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first) and the coprime-lead criterion. Returns the reduced Groebner basis;
// the zero ideal yields an empty basis and the unit ideal yields {1}.
inline GroebnerBasis buchberger(const Ideal& I, const TermOrder& order) {
  std::vector<Polynomial> basis;
  for (const auto& f : I.generators) {
    if (f.arity() != I.arity) throw std::invalid_argument("buchberger arity mismatch");
    if (!f.is_zero()) basis.push_back(f.monic(order));
  }
  if (basis.empty()) return GroebnerBasis{order, {}};

  struct PairKey {
    Exponent lcm;
    std::size_t i, j;
  };
  auto key_less = [&order](const PairKey& a, const PairKey& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::multiset<PairKey, decltype(key_less)> queue(key_less);
  auto push_pairs = [&](std::size_t j) {
    const Exponent lj = basis[j].leading_exponent(order);
    for (std::size_t i = 0; i < j; ++i) {
      const Exponent li = basis[i].leading_exponent(order);
      queue.insert(PairKey{li.join(lj), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const Exponent li = basis[pk.i].leading_exponent(order);
    const Exponent lj = basis[pk.j].leading_exponent(order);
    // Coprime leads: the S-polynomial reduces to zero.
    if (pk.lcm == li + lj) continue;
    Polynomial s = s_polynomial(basis[pk.i], basis[pk.j], order);
    GroebnerBasis current{order, basis};
    Polynomial r = normal_form(s, current);
    if (!r.is_zero()) {
      basis.push_back(r.monic(order));
      push_pairs(basis.size() - 1);
    }
  }
  return GroebnerBasis{order, detail::reduce_basis(std::move(basis), order)};
}

// Leading exponents of a reduced basis: the minimal generators (corners) of
// the complement C(I).
inline std::vector<Exponent> corner_set(const GroebnerBasis& G) {
  std::vector<Exponent> corners;
  corners.reserve(G.generators.size());
  for (const auto& g : G.generators) corners.push_back(g.leading_exponent(G.order));
  return corners;
}

// Drops the last `count` (most significant) variables: keeps generators free
// of them and re-expresses the rest in the smaller ring. The basis must have
// been computed under an order in which those variables dominate (lex, or an
// eliminate_last extension); the kept sub-list is a Groebner basis of the
// elimination ideal by the elimination theorem.
inline GroebnerBasis eliminate(const GroebnerBasis& G, std::size_t count) {
  TermOrder base = G.order;
  for (std::size_t k = 0; k < count; ++k) base = base.without_last();
  if (count == 0) return G;
  std::vector<Polynomial> kept;
  std::size_t arity = 0;
  for (const auto& g : G.generators) {
    arity = g.arity() - count;
    bool free_of_last = true;
    for (const auto& [e, c] : g.terms())
      for (std::size_t k = 0; k < count; ++k)
        if (e[e.size() - 1 - k] != 0) free_of_last = false;
    if (!free_of_last) continue;
    Polynomial h(g.arity() - count);
    for (const auto& [e, c] : g.terms()) {
      std::vector<unsigned> v(e.entries().begin(), e.entries().end() - count);
      h.add_term(Exponent(std::move(v)), c);
    }
    kept.push_back(h);
  }
  // Re-run for the canonical reduced form under the base order.
  return buchberger(Ideal{arity, kept}, base);
}

// Ideal intersection by the T-trick: I1 cap I2 = (T*I1 + (1-T)*I2) cap k[X],
// with T appended as a new variable larger than any power of X.
inline GroebnerBasis intersect(const Ideal& I1, const Ideal& I2,
                               const TermOrder& order) {
  if (I1.arity != I2.arity) throw std::invalid_argument("intersect arity mismatch");
  const std::size_t n = I1.arity;
  TermOrder ext = TermOrder::eliminate_last(order);
  Polynomial T = Polynomial::variable(n + 1, n);
  Polynomial one_minus_T = Polynomial::constant(n + 1, 1) - T;
  Ideal J{n + 1, {}};
  for (const auto& f : I1.generators) J.generators.push_back(T * f.extended());
  for (const auto& g : I2.generators) J.generators.push_back(one_minus_T * g.extended());
  GroebnerBasis Gext = buchberger(J, ext);
  return eliminate(Gext, 1);
}

// Homogenises every generator with a new least variable X_0 at coordinate 0.
// Sound as a homogenisation of the ideal when the input is a reduced basis
// of an ideal whose homogenisation needs no saturation (the callers in this
// library homogenise component-wise and intersect instead).
inline Ideal homogenize(const GroebnerBasis& G) {
  Ideal H{0, {}};
  for (const auto& g : G.generators) {
    Polynomial h = g.homogenized();
    H.arity = h.arity();
    H.generators.push_back(h);
  }
  return H;
}

inline Ideal dehomogenize(const Ideal& I) {
  Ideal D{I.arity == 0 ? 0 : I.arity - 1, {}};
  for (const auto& g : I.generators) {
    Polynomial h = g.dehomogenized();
    if (!h.is_zero()) D.generators.push_back(h);
  }
  return D;
}

// The canonical basis element f_beta = X^beta - NF(X^beta): monic with
// leading exponent beta and all other exponents in D(I). Requires beta in
// C(I), i.e. some corner divides beta.
inline Polynomial canonical_basis_element(const GroebnerBasis& G, const Exponent& beta) {
  bool in_C = false;
  for (const auto& g : G.generators)
    if (g.leading_exponent(G.order).divides(beta)) in_C = true;
  if (!in_C) throw std::invalid_argument("canonical_basis_element: exponent not in C(I)");
  const std::size_t n = beta.size();
  Polynomial xb = Polynomial::monomial(n, beta);
  return xb - normal_form(xb, G);
}

}  // namespace escalier
