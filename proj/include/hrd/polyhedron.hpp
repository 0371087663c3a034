#pragma once

// Explicit convex polyhedra: a finite map from normalized expressions to
// their tightest upper bound.  One diagram path denotes exactly one such
// polyhedron.  Lower bounds need no separate representation because a lower
// bound on e is an upper bound on -e.

#include "hrd/bound.hpp"
#include "hrd/linear_expr.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace hrd {

struct Constraint {
  LinearExpr expr;
  Bound bound;  // always finite in a stored constraint
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// Combines two constraints whose coefficients on pivot variable v have
// opposite signs into the v-free consequence.  Returns the constraint, or
// nothing when the combination cancels completely; *degenerate is set when
// that cancelled combination is unsatisfiable (the pair is contradictory).
inline std::optional<Constraint> combine_on(const Constraint& pos, const Constraint& neg,
                                            VarId v, bool* degenerate_infeasible = nullptr) {
  Int a = pos.expr.coeff_of(v);
  Int b = neg.expr.coeff_of(v);
  // pos carries the positive coefficient, neg the negative one.
  Int mul_pos = -b;  // |b|
  Int mul_neg = a;   // |a|
  if (degenerate_infeasible) *degenerate_infeasible = false;
  Bound raw = pos.bound.scaled(Rational(mul_pos)) + neg.bound.scaled(Rational(mul_neg));
  try {
    auto [expr, scale] = LinearExpr::combine(pos.expr, mul_pos, neg.expr, mul_neg);
    return Constraint{expr, raw.scaled(Rational(1, scale))};
  } catch (const ZeroExpressionError&) {
    if (degenerate_infeasible && !raw.admits_zero()) *degenerate_infeasible = true;
    return std::nullopt;
  }
}

class Polyhedron {
 public:
  Polyhedron() = default;

  // Conjoins one constraint, keeping the tighter bound per expression.
  void add(const LinearExpr& e, const Bound& b) {
    if (!b.is_finite()) return;
    auto [it, inserted] = bounds_.try_emplace(e, b);
    if (!inserted && b < it->second) it->second = b;
  }

  void add(const Constraint& c) { add(c.expr, c.bound); }

  const std::map<LinearExpr, Bound>& bounds() const { return bounds_; }
  bool unconstrained() const { return bounds_.empty(); }
  std::size_t size() const { return bounds_.size(); }

  Bound bound_for(const LinearExpr& e) const {
    auto it = bounds_.find(e);
    return it == bounds_.end() ? Bound::unbounded() : it->second;
  }

  std::vector<Constraint> constraints() const {
    std::vector<Constraint> out;
    out.reserve(bounds_.size());
    for (const auto& [e, b] : bounds_) out.push_back({e, b});
    return out;
  }

  // Pointwise intersection of the two spaces.
  friend Polyhedron space_intersect(const Polyhedron& x, const Polyhedron& y) {
    Polyhedron out = x;
    for (const auto& [e, b] : y.bounds_) out.add(e, b);
    return out;
  }

  bool satisfied_by(const std::function<Rational(VarId)>& value_of) const {
    for (const auto& [e, b] : bounds_)
      if (!b.admits(e.evaluate(value_of))) return false;
    return true;
  }

  // Exact emptiness test by eliminating every variable in turn.  Eliminating
  // v pairs each constraint with positive v-coefficient against each with
  // negative v-coefficient; a cancelled pair with an unsatisfiable bound on
  // the zero expression witnesses emptiness.  Complete for mixed strict and
  // weak inequalities over the rationals.
  bool is_infeasible() const {
    std::vector<Constraint> work = constraints();
    for (const auto& c : work)
      if (c.expr.terms().empty()) return true;  // defensive; not constructible
    while (true) {
      // Pick the variable whose elimination spawns the fewest pairs.
      std::map<VarId, std::pair<std::size_t, std::size_t>> occ;
      for (const auto& c : work)
        for (const auto& t : c.expr.terms())
          (t.coeff > 0 ? occ[t.var].first : occ[t.var].second)++;
      if (occ.empty()) return false;
      VarId v = occ.begin()->first;
      std::size_t best = SIZE_MAX;
      for (const auto& [var, pn] : occ) {
        std::size_t cost = pn.first * pn.second;
        if (cost < best) {
          best = cost;
          v = var;
        }
      }
      std::vector<Constraint> pos, neg, rest;
      for (auto& c : work) {
        Int a = c.expr.coeff_of(v);
        if (a > 0) {
          pos.push_back(std::move(c));
        } else if (a < 0) {
          neg.push_back(std::move(c));
        } else {
          rest.push_back(std::move(c));
        }
      }
      Polyhedron derived;
      for (const auto& p : pos)
        for (const auto& n : neg) {
          bool degenerate = false;
          auto c = combine_on(p, n, v, &degenerate);
          if (degenerate) return true;
          if (c) derived.add(*c);
        }
      work = std::move(rest);
      for (auto& c : derived.constraints()) work.push_back(std::move(c));
    }
  }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
  friend auto operator<=>(const Polyhedron& a, const Polyhedron& b) {
    return std::lexicographical_compare_three_way(
        a.bounds_.begin(), a.bounds_.end(), b.bounds_.begin(), b.bounds_.end(),
        [](const auto& x, const auto& y) {
          if (auto c = x.first <=> y.first; c != 0) return c;
          return x.second <=> y.second;
        });
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b9u;
    for (const auto& [e, b] : bounds_) {
      boost::hash_combine(h, e.hash());
      boost::hash_combine(h, b.hash());
    }
    return h;
  }

 private:
  std::map<LinearExpr, Bound> bounds_;
};

}  // namespace hrd
