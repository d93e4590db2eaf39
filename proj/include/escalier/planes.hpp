#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "escalier/groebner.hpp"
#include "escalier/rational.hpp"
#include "escalier/staircase.hpp"

namespace escalier {

using Matrix = std::vector<std::vector<Rational>>;

namespace linalg {

// In-place reduced row echelon form over the rationals; returns the pivot
// column of each nonzero row.
inline std::vector<std::size_t> rref(Matrix& M) {
  std::vector<std::size_t> pivots;
  if (M.empty()) return pivots;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[r], M[p]);
    Rational inv = 1 / M[r][c];
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix M) { return rref(M).size(); }

// Rank of the submatrix keeping only the listed columns.
inline std::size_t column_rank(const Matrix& M, const std::vector<std::size_t>& cols) {
  Matrix S;
  S.reserve(M.size());
  for (const auto& row : M) {
    std::vector<Rational> s;
    s.reserve(cols.size());
    for (std::size_t c : cols) s.push_back(row[c]);
    S.push_back(std::move(s));
  }
  return rank(std::move(S));
}

}  // namespace linalg

// An affine d-plane in affine n-space, stored in canonical form: for each
// bound index i (off J), the equation X_i + sum_{j in J, j < i} b_{i,j} X_j
// + c_i = 0. Indices are 0-based (coordinate i is variable X_{i+1}).
struct AffinePlane {
  std::size_t n = 0;
  std::vector<std::size_t> J;                       // sorted minimal free variables
  std::map<std::pair<std::size_t, std::size_t>, Rational> b;  // (i, j) -> coefficient
  std::map<std::size_t, Rational> c;                // i -> constant

  std::size_t dimension() const { return J.size(); }

  bool operator==(const AffinePlane& o) const {
    return n == o.n && J == o.J && b == o.b && c == o.c;
  }
  bool operator<(const AffinePlane& o) const {
    if (J != o.J) return J < o.J;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

// A finite union of affine planes, all of the same dimension.
struct Variety {
  std::size_t n = 0;
  std::vector<AffinePlane> components;

  bool operator==(const Variety& o) const {
    return n == o.n && components == o.components;
  }
};

// Greedy minimal-free-variable scan: index i joins J iff the system still
// pins all the remaining variables, i.e. the columns outside J u {i} keep
// full rank. B must have full row rank equal to n - d.
inline std::vector<std::size_t> minimal_free_variables(const Matrix& B) {
  if (B.empty()) {
    return {};  // handled by caller for the full-space case
  }
  const std::size_t n = B[0].size();
  const std::size_t codim = linalg::rank(B);
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      if (std::find(J.begin(), J.end(), k) != J.end()) continue;
      rest.push_back(k);
    }
    if (linalg::column_rank(B, rest) == codim) J.push_back(i);
  }
  return J;
}

// Canonicalises a consistent linear system B X + c = 0 into an AffinePlane.
inline AffinePlane from_general_equations(std::size_t n, const Matrix& B,
                                          const std::vector<Rational>& c) {
  if (B.size() != c.size()) throw std::invalid_argument("equation/constant count mismatch");
  for (const auto& row : B)
    if (row.size() != n) throw std::invalid_argument("equation arity mismatch");
  Matrix aug = B;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(c[i]);
  std::size_t rank_B = linalg::rank(B);
  if (linalg::rank(aug) != rank_B)
    throw std::invalid_argument("inconsistent linear system");

  AffinePlane P;
  P.n = n;
  if (rank_B == 0) {
    for (std::size_t i = 0; i < n; ++i) P.J.push_back(i);
    return P;
  }
  P.J = minimal_free_variables(B);

  // Solve for the bound variables: columns off J carry the pivots.
  std::vector<std::size_t> bound;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(P.J.begin(), P.J.end(), i) == P.J.end()) bound.push_back(i);
  // Reorder columns bound-first so rref pivots land on the bound block.
  Matrix S;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    std::vector<Rational> row;
    for (std::size_t i : bound) row.push_back(aug[r][i]);
    for (std::size_t j : P.J) row.push_back(aug[r][j]);
    row.push_back(aug[r][n]);
    S.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = linalg::rref(S);
  if (pivots.size() != bound.size())
    throw std::logic_error("free-variable scan inconsistent with rank");
  for (std::size_t r = 0; r < bound.size(); ++r) {
    if (pivots[r] != r) throw std::logic_error("bound columns not independent");
    std::size_t i = bound[r];
    // Row r reads X_i + sum_j S[r][bound.size()+j] X_{J[j]} + S[r][last] = 0.
    for (std::size_t jj = 0; jj < P.J.size(); ++jj) {
      Rational coef = S[r][bound.size() + jj];
      if (coef == 0) continue;
      std::size_t j = P.J[jj];
      if (j > i)
        throw std::logic_error("canonical form has a larger free variable in a tail");
      P.b[{i, j}] = coef;
    }
    P.c[i] = S[r].back();
  }
  return P;
}

// The canonical degree-1 generators X_i + sum b_{i,j} X_j + c_i; already a
// reduced Groebner basis under any order with X_1 < ... < X_n.
inline Ideal ideal_of_plane(const AffinePlane& P) {
  Ideal I{P.n, {}};
  for (std::size_t i = 0; i < P.n; ++i) {
    if (std::find(P.J.begin(), P.J.end(), i) != P.J.end()) continue;
    Polynomial f = Polynomial::variable(P.n, i);
    for (const auto& [key, coef] : P.b)
      if (key.first == i)
        f = f + Polynomial::variable(P.n, key.second).scaled(coef);
    auto it = P.c.find(i);
    if (it != P.c.end() && it->second != 0)
      f = f + Polynomial::constant(P.n, it->second);
    I.generators.push_back(f);
  }
  return I;
}

// r(J) + n - |J|: the dimension of the stratum of planes with minimal free
// variables J, where r(J) counts pairs j in J, i off J with j < i.
inline std::size_t stratum_dimension(const std::vector<std::size_t>& J, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(J.begin(), J.end(), i) != J.end()) continue;
    for (std::size_t j : J)
      if (j < i) ++r;
  }
  return r + n - J.size();
}

// Reduced basis of the intersection of all component ideals (left fold).
inline GroebnerBasis ideal_of_variety(const Variety& V, const TermOrder& order) {
  if (V.components.empty())
    return buchberger(Ideal{V.n, {Polynomial::constant(V.n, 1)}}, order);
  GroebnerBasis G = buchberger(ideal_of_plane(V.components[0]), order);
  for (std::size_t k = 1; k < V.components.size(); ++k) {
    Ideal left{V.n, G.generators};
    G = intersect(left, ideal_of_plane(V.components[k]), order);
  }
  return G;
}

inline StandardSet standard_set_of_variety(const Variety& V, const TermOrder& order) {
  GroebnerBasis G = ideal_of_variety(V, order);
  return StandardSet::from_corners(V.n, corner_set(G));
}

// A cap {X_1 = lambda}, viewed in the remaining n-1 variables. Components
// with X_1 free drop a dimension; pinned components survive only at their
// own X_1 value. Duplicates are merged.
inline Variety slice(const Variety& V, const Rational& lambda) {
  Variety W;
  W.n = V.n - 1;
  std::set<AffinePlane> seen;
  for (const auto& P : V.components) {
    Ideal I = ideal_of_plane(P);
    bool pinned = std::find(P.J.begin(), P.J.end(), std::size_t{0}) == P.J.end();
    if (pinned) {
      Rational value = -P.c.at(0);
      if (value != lambda) continue;
    }
    Matrix B;
    std::vector<Rational> c;
    for (const auto& f : I.generators) {
      Polynomial g = f.substitute(0, lambda);
      if (g.is_zero()) continue;
      std::vector<Rational> row(W.n, 0);
      Rational cc = 0;
      for (const auto& [e, coef] : g.terms()) {
        if (e.is_zero()) {
          cc = coef;
          continue;
        }
        for (std::size_t i = 0; i < W.n; ++i)
          if (e[i] != 0) row[i] = coef;
      }
      B.push_back(std::move(row));
      c.push_back(cc);
    }
    AffinePlane Q = from_general_equations(W.n, B, c);
    if (seen.insert(Q).second) W.components.push_back(Q);
  }
  return W;
}

// The pinned X_1 values; every component must be parallel to {X_1 = 0}.
inline std::vector<Rational> projection_support(const Variety& V) {
  std::set<Rational> values;
  for (const auto& P : V.components) {
    if (std::find(P.J.begin(), P.J.end(), std::size_t{0}) != P.J.end())
      throw std::invalid_argument("projection_support: a component has X_1 free");
    values.insert(-P.c.at(0));
  }
  return std::vector<Rational>(values.begin(), values.end());
}

struct GenericFiber {
  StandardSet delta;                 // staircase of the generic slice
  std::vector<Rational> exceptional; // all lambda with a different staircase
};

namespace detail {

// Candidate degeneration values for a pair of X_1-free components: sliced
// constants are affine-linear in lambda (c_i + b_{i,0} lambda); any lambda
// where some pair of them meets can change the union's staircase. Collects
// the root of every pairwise difference, one bound coordinate at a time.
inline void coincidence_roots(const AffinePlane& P, const AffinePlane& Q,
                              std::set<Rational>& out) {
  for (const auto& [i, ci] : P.c) {
    auto it = Q.c.find(i);
    if (it == Q.c.end()) continue;
    Rational bp = 0, bq = 0;
    auto itp = P.b.find({i, 0});
    if (itp != P.b.end()) bp = itp->second;
    auto itq = Q.b.find({i, 0});
    if (itq != Q.b.end()) bq = itq->second;
    Rational dc = ci - it->second;
    Rational db = bp - bq;  // constant difference: dc + db * lambda
    if (db != 0) out.insert(-dc / db);
  }
}

inline unsigned sample_budget() {
  if (const char* env = std::getenv("ESCALIER_SAMPLE_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 50;
}

}  // namespace detail

// The staircase of the generic slice, found by sampling fresh lambda until it
// stabilises, plus the exact set of exceptional lambda. Candidate exceptional
// values: pinned X_1 values and pairwise coincidence values of free
// components; every candidate is tested, so the returned exceptional set is
// complete within the candidate locus (and samples confirm the generic value).
inline GenericFiber generic_fiber(const Variety& V, const TermOrder& order,
                                  unsigned stabilization = 5) {
  TermOrder inner = order.restricted();
  std::set<Rational> candidates;
  for (const auto& P : V.components)
    if (std::find(P.J.begin(), P.J.end(), std::size_t{0}) == P.J.end())
      candidates.insert(-P.c.at(0));
  for (std::size_t a = 0; a < V.components.size(); ++a)
    for (std::size_t b = a + 1; b < V.components.size(); ++b) {
      const auto& P = V.components[a];
      const auto& Q = V.components[b];
      bool pf = std::find(P.J.begin(), P.J.end(), std::size_t{0}) != P.J.end();
      bool qf = std::find(Q.J.begin(), Q.J.end(), std::size_t{0}) != Q.J.end();
      if (pf && qf) detail::coincidence_roots(P, Q, candidates);
    }

  auto slice_staircase = [&](const Rational& lambda) {
    return standard_set_of_variety(slice(V, lambda), inner);
  };

  const unsigned budget = detail::sample_budget();
  std::optional<StandardSet> current;
  unsigned streak = 0;
  Rational lambda = 1000;  // far from desk-scale coefficients
  for (unsigned used = 0; used < budget; ++used, lambda += 1) {
    while (candidates.count(lambda)) lambda += 1;
    StandardSet s = slice_staircase(lambda);
    if (current && s == *current) {
      if (++streak >= stabilization) break;
    } else {
      current = s;
      streak = 1;
    }
  }
  if (!current || streak < stabilization)
    throw std::runtime_error("generic_fiber: staircase did not stabilize within budget");

  GenericFiber out{*current, {}};
  for (const auto& cand : candidates)
    if (!(slice_staircase(cand) == *current)) out.exceptional.push_back(cand);
  return out;
}

// Replaces each component by the linear span of its image under
// iota: x -> (1, x); the new variable X_0 sits at coordinate 0 and joins the
// free variables of every component.
inline Variety homogenize_variety(const Variety& V) {
  Variety W;
  W.n = V.n + 1;
  for (const auto& P : V.components) {
    Matrix B;
    std::vector<Rational> c;
    for (const auto& f : ideal_of_plane(P).generators) {
      // X_i + sum b X_j + c_i = 0 homogenises to X_i + sum b X_j + c_i X_0 = 0.
      std::vector<Rational> row(W.n, 0);
      for (const auto& [e, coef] : f.terms()) {
        if (e.is_zero())
          row[0] = coef;
        else
          for (std::size_t i = 0; i < V.n; ++i)
            if (e[i] != 0) row[i + 1] = coef;
      }
      B.push_back(std::move(row));
      c.push_back(0);
    }
    W.components.push_back(from_general_equations(W.n, B, c));
  }
  return W;
}

}  // namespace escalier
