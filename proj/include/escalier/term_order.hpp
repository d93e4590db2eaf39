#pragma once

#include <memory>
#include <stdexcept>

#include "escalier/exponent.hpp"

namespace escalier {

// Term orders on N^n with the convention X_1 < ... < X_n: the last coordinate
// is the most significant one under lex.
//
// Four kinds:
//   - lex: the last differing coordinate decides.
//   - grlex: total degree first, ties broken by lex.
//   - product_over(inner): inner order compares the tails p(a), p(b); the
//     first coordinate only breaks ties. Lex is the iterated instance; this
//     kind realises the homogenisation order (new least variable prepended).
//   - eliminate_last(inner): the last coordinate dominates, inner compares the
//     rest. Used for the auxiliary variable T in ideal intersection, where T
//     is larger than any power of the base variables.
class TermOrder {
 public:
  static TermOrder lex() { return TermOrder(Kind::Lex, nullptr); }
  static TermOrder grlex() { return TermOrder(Kind::GrLex, nullptr); }
  static TermOrder product_over(TermOrder inner) {
    return TermOrder(Kind::Product, std::make_shared<TermOrder>(std::move(inner)));
  }
  static TermOrder eliminate_last(TermOrder inner) {
    return TermOrder(Kind::ElimLast, std::make_shared<TermOrder>(std::move(inner)));
  }

  // -1 / 0 / +1 for a < b / a == b / a > b.
  int compare(const Exponent& a, const Exponent& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("compare: arity mismatch");
    switch (kind_) {
      case Kind::Lex:
        return lex_compare(a, b);
      case Kind::GrLex: {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        return lex_compare(a, b);
      }
      case Kind::Product: {
        if (a.size() == 0) return 0;
        int c = inner_->compare(a.tail(), b.tail());
        if (c != 0) return c;
        if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
        return 0;
      }
      case Kind::ElimLast: {
        if (a.size() == 0) return 0;
        std::size_t last = a.size() - 1;
        if (a[last] != b[last]) return a[last] < b[last] ? -1 : 1;
        return inner_->compare(a.drop_last(), b.drop_last());
      }
    }
    return 0;
  }

  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  // Structural test for the product-order property: p(a) smaller under the
  // restricted order forces a smaller, the first coordinate only breaking
  // ties. Lex satisfies it by construction; grlex does not (degree can
  // override the tail comparison).
  bool is_product() const {
    return kind_ == Kind::Lex || kind_ == Kind::Product;
  }

  // The order induced on the tail coordinates (drop X_1).
  TermOrder restricted() const {
    switch (kind_) {
      case Kind::Lex:
        return lex();
      case Kind::GrLex:
        return grlex();
      case Kind::Product:
        return *inner_;
      case Kind::ElimLast:
        throw std::logic_error("restricted: elimination order has no tail restriction");
    }
    throw std::logic_error("unreachable");
  }

  // The order induced on all but the last (most significant) coordinate.
  // Defined only for orders that eliminate their last variable.
  TermOrder without_last() const {
    switch (kind_) {
      case Kind::Lex:
        return lex();
      case Kind::ElimLast:
        return *inner_;
      default:
        throw std::logic_error("without_last: not an elimination order for the last variable");
    }
  }

  bool operator==(const TermOrder& o) const {
    if (kind_ != o.kind_) return false;
    if (!inner_) return !o.inner_;
    return o.inner_ && *inner_ == *o.inner_;
  }

 private:
  enum class Kind { Lex, GrLex, Product, ElimLast };

  TermOrder(Kind k, std::shared_ptr<const TermOrder> inner)
      : kind_(k), inner_(std::move(inner)) {}

  static int lex_compare(const Exponent& a, const Exponent& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::shared_ptr<const TermOrder> inner_;
};

}  // namespace escalier
