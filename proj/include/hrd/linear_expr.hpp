#pragma once

// Normalized linear expressions over dense variables.  An expression is a
// nonempty sum of integer-coefficient terms whose coefficients have gcd 1;
// every decision atom in a diagram and every constraint left-hand side is
// kept in this form so that equal spaces share one representation.

#include "hrd/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hrd {

// Index into the dense-variable table of the enclosing context.
struct VarId {
  std::uint32_t index = 0;
  friend bool operator==(VarId, VarId) = default;
  friend auto operator<=>(VarId, VarId) = default;
};

struct Term {
  VarId var;
  Int coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Thrown when a construction would yield the zero expression, which is not a
// legal atom.  Callers that can meet a cancelling sum (the combination step
// of variable elimination) must test for it before constructing.
struct ZeroExpressionError : std::invalid_argument {
  ZeroExpressionError() : std::invalid_argument("linear expression has no nonzero term") {}
};

class LinearExpr {
 public:
  // Builds a normalized expression and reports the positive factor that was
  // divided out.  Terms may arrive unsorted and may repeat; zero coefficients
  // are dropped after merging.
  static std::pair<LinearExpr, Int> normalized(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().var == t.var) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    if (merged.empty()) throw ZeroExpressionError();
    Int g = 0;
    for (const auto& t : merged) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(t.coeff));
    if (g > 1)
      for (auto& t : merged) t.coeff /= g;
    return {LinearExpr(std::move(merged)), g == 0 ? Int(1) : g};
  }

  static LinearExpr single(VarId v, Int coeff = 1) {
    return normalized({{v, std::move(coeff)}}).first;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t hash() const { return hash_; }

  // First term in variable order; its sign steers sign canonicalization.
  const Term& leading() const { return terms_.front(); }

  Int coeff_of(VarId v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const Term& t, VarId w) { return t.var < w; });
    return (it != terms_.end() && it->var == v) ? it->coeff : Int(0);
  }

  bool mentions(VarId v) const { return coeff_of(v) != 0; }

  bool mentions_any(const std::vector<VarId>& vars) const {
    for (VarId v : vars)
      if (mentions(v)) return true;
    return false;
  }

  LinearExpr negated() const {
    std::vector<Term> t = terms_;
    for (auto& term : t) term.coeff = -term.coeff;
    return LinearExpr(std::move(t));
  }

  // a*this + b*other, renormalized.  Throws ZeroExpressionError if the sum
  // cancels completely.
  static std::pair<LinearExpr, Int> combine(const LinearExpr& x, const Int& a,
                                            const LinearExpr& y, const Int& b) {
    std::vector<Term> terms;
    terms.reserve(x.terms_.size() + y.terms_.size());
    for (const auto& t : x.terms_) terms.push_back({t.var, t.coeff * a});
    for (const auto& t : y.terms_) terms.push_back({t.var, t.coeff * b});
    return normalized(std::move(terms));
  }

  Rational evaluate(const std::function<Rational(VarId)>& value_of) const {
    Rational sum = 0;
    for (const auto& t : terms_) sum += Rational(t.coeff) * value_of(t.var);
    return sum;
  }

  // Renders "-5A-2x2+10x3": coefficient magnitude omitted when 1, sign
  // printed except for a positive first term.
  std::string render(const std::function<std::string(VarId)>& name_of) const {
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      if (t.coeff < 0) {
        out += '-';
      } else if (!first) {
        out += '+';
      }
      Int mag = boost::multiprecision::abs(t.coeff);
      if (mag != 1) out += mag.str();
      out += name_of(t.var);
      first = false;
    }
    return out;
  }

  friend bool operator==(const LinearExpr& a, const LinearExpr& b) {
    return a.hash_ == b.hash_ && a.terms_ == b.terms_;
  }

  // Structural order (variable ids, then coefficients); used for map keys,
  // unrelated to the diagram atom orderings.
  friend auto operator<=>(const LinearExpr& a, const LinearExpr& b) {
    auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto c = a.terms_[i].var <=> b.terms_[i].var; c != 0) return c;
      if (auto c = a.terms_[i].coeff.compare(b.terms_[i].coeff); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

 private:
  explicit LinearExpr(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::size_t h = 0xd3e1f2a5u;
    for (const auto& t : terms_) {
      boost::hash_combine(h, t.var.index);
      boost::hash_combine(h, hash_int(t.coeff));
    }
    hash_ = h;
  }

  std::vector<Term> terms_;
  std::size_t hash_ = 0;
};

struct LinearExprHash {
  std::size_t operator()(const LinearExpr& e) const { return e.hash(); }
};

}  // namespace hrd
