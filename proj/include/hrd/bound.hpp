#pragma once

// Upper bounds on linear expressions.  A bound is either unbounded or a pair
// of a relation (< or <=) and a rational constant.  The total order used by
// the diagrams places (<, c) before (<=, c), every finite bound before the
// infinite one, and otherwise compares constants.

#include "hrd/rational.hpp"

#include <cassert>
#include <compare>
#include <cstdint>
#include <string>

namespace hrd {

enum class Rel : std::uint8_t { strict, weak };

class Bound {
 public:
  static Bound unbounded() { return Bound(); }
  static Bound strict(Rational v) { return Bound(Rel::strict, std::move(v)); }
  static Bound weak(Rational v) { return Bound(Rel::weak, std::move(v)); }
  static Bound of(Rel rel, Rational v) { return Bound(rel, std::move(v)); }

  bool is_finite() const { return finite_; }
  Rel rel() const { assert(finite_); return rel_; }
  const Rational& value() const { assert(finite_); return value_; }

  // True when the rational v satisfies "v ~ this".
  bool admits(const Rational& v) const {
    if (!finite_) return true;
    return rel_ == Rel::strict ? v < value_ : v <= value_;
  }

  // Truth of "0 ~ this": a cancelled combination leaves the zero expression,
  // whose constraint holds unless the constant is negative or the relation
  // is strict at zero.
  bool admits_zero() const { return admits(Rational(0)); }

  // Sum of two upper bounds: constants add and strictness is contagious.
  friend Bound operator+(const Bound& a, const Bound& b) {
    if (!a.finite_ || !b.finite_) return unbounded();
    Rel rel = (a.rel_ == Rel::strict || b.rel_ == Rel::strict) ? Rel::strict : Rel::weak;
    return Bound(rel, a.value_ + b.value_);
  }

  // Scales by a positive rational; the relation is unchanged.
  Bound scaled(const Rational& k) const {
    assert(k > 0);
    if (!finite_) return *this;
    return Bound(rel_, value_ * k);
  }

  // Complement of the constraint "e ~ c" is "-e ~' -c" with strictness
  // flipped; this returns the bound for the negated expression.
  Bound complement_bound() const {
    assert(finite_);
    return Bound(rel_ == Rel::strict ? Rel::weak : Rel::strict, -value_);
  }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.finite_ != b.finite_) return false;
    if (!a.finite_) return true;
    return a.rel_ == b.rel_ && a.value_ == b.value_;
  }

  // The diagram order: ascending tightness, unbounded last.
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (!a.finite_ || !b.finite_) {
      if (a.finite_) return std::strong_ordering::less;
      if (b.finite_) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    if (a.value_ != b.value_)
      return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.rel_ == b.rel_) return std::strong_ordering::equal;
    return a.rel_ == Rel::strict ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  static const Bound& min(const Bound& a, const Bound& b) { return a <= b ? a : b; }

  std::size_t hash() const {
    if (!finite_) return 0x7fffffffu;
    std::size_t h = hash_rational(value_);
    return h * 31u + (rel_ == Rel::strict ? 1u : 2u);
  }

  std::string rel_text() const { return rel_ == Rel::strict ? "<" : "<="; }

  std::string to_string() const {
    if (!finite_) return "< oo";
    return rel_text() + " " + rational_to_string(value_);
  }

 private:
  Bound() : finite_(false), rel_(Rel::strict) {}
  Bound(Rel rel, Rational v) : finite_(true), rel_(rel), value_(std::move(v)) {}

  bool finite_;
  Rel rel_;
  Rational value_;
};

}  // namespace hrd
