#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "escalier/exponent.hpp"
#include "escalier/rational.hpp"
#include "escalier/term_order.hpp"

namespace escalier {

// Sparse multivariate polynomial over the rationals. Canonical form: no
// stored coefficient is zero; the zero polynomial has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial zero(std::size_t arity) { return Polynomial(arity); }

  static Polynomial monomial(std::size_t arity, const Exponent& e,
                             const Rational& c = 1) {
    Polynomial p(arity);
    if (e.size() != arity) throw std::invalid_argument("monomial arity mismatch");
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  static Polynomial constant(std::size_t arity, const Rational& c) {
    return monomial(arity, Exponent(arity), c);
  }

  static Polynomial variable(std::size_t arity, std::size_t i) {
    return monomial(arity, Exponent::unit(arity, i));
  }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != arity_) throw std::invalid_argument("add_term arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_arity(o);
    Polynomial r(arity_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(arity_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }

  Polynomial operator-() const { return scaled(-1); }

  bool operator==(const Polynomial& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  const Exponent& leading_exponent(const TermOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading exponent of zero polynomial");
    const Exponent* best = nullptr;
    for (const auto& [e, c] : terms_) {
      if (!best || order.less(*best, e)) best = &e;
    }
    return *best;
  }

  const Rational& leading_coefficient(const TermOrder& order) const {
    return terms_.at(leading_exponent(order));
  }

  Polynomial monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coefficient(order));
  }

  // X_{index+1} := value; remaining variables are reindexed order-preservingly
  // (arity drops by one).
  Polynomial substitute(std::size_t index, const Rational& value) const {
    if (index >= arity_) throw std::invalid_argument("substitute: index out of range");
    Polynomial r(arity_ - 1);
    for (const auto& [e, c] : terms_) {
      Rational factor = c;
      for (unsigned k = 0; k < e[index]; ++k) factor *= value;
      std::vector<unsigned> v;
      v.reserve(arity_ - 1);
      for (std::size_t i = 0; i < arity_; ++i)
        if (i != index) v.push_back(e[i]);
      r.add_term(Exponent(std::move(v)), factor);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluate arity mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < arity_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  // Homogenises with a new least variable X_0 prepended at coordinate 0.
  Polynomial homogenized() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.total_degree());
    Polynomial r(arity_ + 1);
    for (const auto& [e, c] : terms_)
      r.terms_[e.prepend(deg - e.total_degree())] = c;
    return r;
  }

  // Sets the first variable to 1 (inverse of homogenized up to scaling).
  Polynomial dehomogenized() const { return substitute(0, 1); }

  // Appends a fresh most-significant variable with exponent 0 everywhere.
  Polynomial extended() const {
    Polynomial r(arity_ + 1);
    for (const auto& [e, c] : terms_) r.terms_[e.append(0)] = c;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // Highest structural key first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational a = c;
      if (first) {
        if (a < 0) { s += "-"; a = -a; }
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(i, arity_);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += to_string(a);
      } else {
        if (a != 1) s += to_string(a) + "*";
        s += mono;
      }
    }
    return s;
  }

  static std::string var_name(std::size_t i, std::size_t arity) {
    if (arity <= 3) {
      static const char* names[] = {"X", "Y", "Z"};
      return names[i];
    }
    return "X" + std::to_string(i + 1);
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t arity_;
  TermMap terms_;
};

}  // namespace escalier
