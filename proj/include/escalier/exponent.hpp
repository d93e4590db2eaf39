#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace escalier {

// A point of N^n: the exponent of a monomial. Coordinate i (0-based) holds
// the exponent of variable X_{i+1}; X_1 is the least significant variable.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<unsigned> xs) : e_(xs) {}
  explicit Exponent(std::vector<unsigned> xs) : e_(std::move(xs)) {}

  static Exponent unit(std::size_t n, std::size_t i) {
    Exponent r(n);
    r.e_.at(i) = 1;
    return r;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& entries() const { return e_; }

  unsigned total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
  }

  Exponent operator+(const Exponent& o) const {
    check_arity(o);
    Exponent r(size());
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  // Coordinatewise difference; caller guarantees divisibility.
  Exponent operator-(const Exponent& o) const {
    check_arity(o);
    Exponent r(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (e_[i] < o.e_[i]) throw std::invalid_argument("exponent underflow");
      r.e_[i] = e_[i] - o.e_[i];
    }
    return r;
  }

  // Coordinatewise <=, the divisibility order on monomials.
  bool divides(const Exponent& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Coordinatewise max.
  Exponent join(const Exponent& o) const {
    check_arity(o);
    Exponent r(size());
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }

  // The projection p: drops the first coordinate.
  Exponent tail() const {
    if (e_.empty()) throw std::logic_error("tail of arity-0 exponent");
    return Exponent(std::vector<unsigned>(e_.begin() + 1, e_.end()));
  }

  // Inverse of tail: prepends a coordinate.
  Exponent prepend(unsigned first) const {
    std::vector<unsigned> v;
    v.reserve(size() + 1);
    v.push_back(first);
    v.insert(v.end(), e_.begin(), e_.end());
    return Exponent(std::move(v));
  }

  Exponent drop_last() const {
    if (e_.empty()) throw std::logic_error("drop_last of arity-0 exponent");
    return Exponent(std::vector<unsigned>(e_.begin(), e_.end() - 1));
  }

  Exponent append(unsigned last) const {
    std::vector<unsigned> v(e_);
    v.push_back(last);
    return Exponent(std::move(v));
  }

  // Structural order used as a map key; unrelated to term orders.
  auto operator<=>(const Exponent& o) const = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  void check_arity(const Exponent& o) const {
    if (size() != o.size()) throw std::invalid_argument("exponent arity mismatch");
  }

  std::vector<unsigned> e_;
};

}  // namespace escalier
