#pragma once

// The total orders on decision atoms.  All three orderings share the same
// skeleton: atoms are grouped by the highest-numbered process owning one of
// their variables (globals and parameters form group 0), groups are visited
// in ascending order, discrete atoms precede dense atoms inside their group,
// and dense atoms within a group are compared on their sign-canonical form
// under the selected scheme.  Canonicalization makes an expression and its
// negation adjacent, which the infeasibility shortcuts rely on.

#include "hrd/atom.hpp"

#include <compare>
#include <string>

namespace hrd {

enum class OrderingKind { dictionary, coefficient, magnitude };

inline const char* to_string(OrderingKind k) {
  switch (k) {
    case OrderingKind::dictionary: return "dictionary";
    case OrderingKind::coefficient: return "coefficient";
    case OrderingKind::magnitude: return "magnitude";
  }
  return "?";
}

// Sign canonicalization: flip all signs when the first nonzero coefficient
// (in variable order) is positive, so converse constraint pairs compare as
// equals until the final tie-break.
inline LinearExpr canonical_form(const LinearExpr& e) {
  return e.leading().coeff > 0 ? e.negated() : e;
}

inline std::uint32_t group_of(const VarSpace& vars, const Atom& atom) {
  if (!atom.is_dense()) return vars.discrete(atom.dvar()).owner;
  std::uint32_t g = 0;
  for (const auto& t : atom.expr().terms()) g = std::max(g, vars.dense(t.var).owner);
  return g;
}

namespace detail {

// Walks two sorted term vectors in lockstep over the full variable order;
// absent variables contribute coefficient zero.
template <typename Visit>
std::strong_ordering merge_terms(const LinearExpr& a, const LinearExpr& b, Visit visit) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  static const Int kZero = 0;
  while (i < ta.size() || j < tb.size()) {
    const Int* ca = &kZero;
    const Int* cb = &kZero;
    VarId va = (i < ta.size()) ? ta[i].var : VarId{~0u};
    VarId vb = (j < tb.size()) ? tb[j].var : VarId{~0u};
    if (va <= vb) ca = &ta[i++].coeff;
    if (vb <= va) cb = &tb[j++].coeff;
    if (auto c = visit(*ca, *cb); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_int(const Int& a, const Int& b) {
  int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace detail

// Compares two canonical dense forms under the selected scheme.  Dictionary
// compares the rendered text byte by byte; coefficient compares coefficient
// sequences numerically in variable order; magnitude compares absolute
// values first and breaks ties by sign, negative first.
inline std::strong_ordering compare_canonical(const VarSpace& vars, OrderingKind kind,
                                              const LinearExpr& a, const LinearExpr& b) {
  switch (kind) {
    case OrderingKind::dictionary: {
      auto name = [&vars](VarId v) { return vars.dense_name(v); };
      return a.render(name) <=> b.render(name);
    }
    case OrderingKind::coefficient:
      return detail::merge_terms(a, b, [](const Int& x, const Int& y) {
        return detail::compare_int(x, y);
      });
    case OrderingKind::magnitude:
      return detail::merge_terms(a, b, [](const Int& x, const Int& y) {
        if (auto c = detail::compare_int(boost::multiprecision::abs(x),
                                         boost::multiprecision::abs(y));
            c != 0)
          return c;
        if (x == y) return std::strong_ordering::equal;
        return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
      });
  }
  return std::strong_ordering::equal;
}

// The full atom order.  Returns equal only for identical atoms.
inline std::strong_ordering compare_atoms(const VarSpace& vars, OrderingKind kind,
                                          const Atom& a, const Atom& b) {
  if (auto c = group_of(vars, a) <=> group_of(vars, b); c != 0) return c;
  if (a.is_dense() != b.is_dense())
    return a.is_dense() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!a.is_dense()) return a.dvar().index <=> b.dvar().index;
  if (auto c = compare_canonical(vars, kind, canonical_form(a.expr()), canonical_form(b.expr()));
      c != 0)
    return c;
  // Converse pair: the negative-leading form comes first.
  bool a_neg = a.expr().leading().coeff < 0;
  bool b_neg = b.expr().leading().coeff < 0;
  if (a_neg != b_neg) return a_neg ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hrd
