// Predicate transformers over diagrams: quantifier elimination, the delta
// rewrite for time steps, and the per-transition / per-duration pre- and
// post-operators used by the reachability engines.
//
// Elimination of a dense variable is transitivity closure followed by
// deletion.  The closure pairs every constraint that mentions the variable
// with every other constraint of opposite sign on the same path, conjoining
// the combined (variable-free) consequence; dropping the variable's atoms
// afterwards is then precise, not just an overapproximation.

#pragma once

#include <unordered_map>
#include <vector>

#include "hrd/compile.hpp"
#include "hrd/diagram.hpp"

namespace hrd {

// Rebuilds a diagram with every dense atom's expression rewritten by
// `f : LinearExpr -> std::vector<Term>`.  The rewrite may change where the
// atom sorts, so the result is assembled with the set operations rather
// than node by node.
template <typename F>
NodeRef map_dense_atoms(Space& sp, NodeRef d, F&& f) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef n) -> NodeRef {
    if (n->terminal()) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    NodeRef acc = self(self, n->wide);
    const Atom& at = sp.atom(n->atom);
    for (const Arc& a : n->arcs) {
      NodeRef head = at.is_dense() ? sp.raw_constraint(f(at.expr()), a.bound)
                                   : sp.discrete_eq(at.dvar(), a.value);
      acc = sp.set_union(acc, sp.space_intersect(head, self(self, a.child)));
    }
    memo.emplace(n, acc);
    return acc;
  };
  return rec(rec, d);
}

namespace detail {

// Conjoins, throughout `n`, the consequence of combining the constraint
// "e ~ b" (whose coefficient on x is cx) with every constraint in `n` whose
// coefficient on x has the opposite sign.  The combination cancels x, so
// freshly added atoms are never paired again.
inline NodeRef inject_combined(Space& sp, const LinearExpr& e, const Bound& b,
                               const Int& cx, NodeRef n, VarId x,
                               std::unordered_map<NodeRef, NodeRef>& memo) {
  if (n->terminal()) return n;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  NodeRef acc = inject_combined(sp, e, b, cx, n->wide, x, memo);
  const Atom& at = sp.atom(n->atom);
  Int cv = at.is_dense() ? at.expr().coeff_of(x) : Int(0);
  bool opposite = cv != 0 && (cv < 0) != (cx < 0);
  for (const Arc& a : n->arcs) {
    NodeRef piece = inject_combined(sp, e, b, cx, a.child, x, memo);
    if (opposite) {
      Int ka = abs(cv), kb = abs(cx);
      std::vector<Term> sum;
      for (const Term& t : e.terms()) sum.push_back({t.var, t.coeff * ka});
      for (const Term& t : at.expr().terms()) sum.push_back({t.var, t.coeff * kb});
      piece = sp.space_intersect(
          piece, sp.raw_constraint(std::move(sum), b.scaled(Rational(ka)) +
                                                       a.bound.scaled(Rational(kb))));
    }
    NodeRef head = at.is_dense() ? sp.constraint_node(at.expr(), a.bound)
                                 : sp.discrete_eq(at.dvar(), a.value);
    acc = sp.set_union(acc, sp.space_intersect(head, piece));
  }
  memo.emplace(n, acc);
  return acc;
}

}  // namespace detail

// Saturates every recorded path with the pairwise x-cancelling combinations
// of its own constraints.  Original constraints are kept.
inline NodeRef xtivity(Space& sp, NodeRef d, VarId x) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef n) -> NodeRef {
    if (n->terminal()) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    NodeRef acc = self(self, n->wide);
    const Atom& at = sp.atom(n->atom);
    Int cx = at.is_dense() ? at.expr().coeff_of(x) : Int(0);
    for (const Arc& a : n->arcs) {
      NodeRef sub = self(self, a.child);
      if (cx != 0) {
        std::unordered_map<NodeRef, NodeRef> inj;
        sub = detail::inject_combined(sp, at.expr(), a.bound, cx, sub, x, inj);
      }
      NodeRef head = at.is_dense() ? sp.constraint_node(at.expr(), a.bound)
                                   : sp.discrete_eq(at.dvar(), a.value);
      acc = sp.set_union(acc, sp.space_intersect(head, sub));
    }
    memo.emplace(n, acc);
    return acc;
  };
  return rec(rec, d);
}

// Removes every dense atom that mentions one of the given variables,
// keeping both branches of the removed tests.
inline NodeRef var_del(Space& sp, NodeRef d, const std::vector<VarId>& xs) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef n) -> NodeRef {
    if (n->terminal()) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    NodeRef wide = self(self, n->wide);
    const Atom& at = sp.atom(n->atom);
    NodeRef result;
    if (at.is_dense() && at.expr().mentions_any(xs)) {
      result = wide;
      for (const Arc& a : n->arcs) result = sp.set_union(result, self(self, a.child));
    } else {
      std::vector<Arc> arcs = n->arcs;
      for (Arc& a : arcs) a.child = self(self, a.child);
      result = sp.make(n->atom, std::move(arcs), wide);
    }
    memo.emplace(n, result);
    return result;
  };
  return rec(rec, d);
}

// Precise existential quantification of one dense variable.
inline NodeRef exists_elim(Space& sp, NodeRef d, VarId x) {
  return var_del(sp, xtivity(sp, d, x), {x});
}

// Fixes a discrete variable to `val` and removes its atoms: paths that test
// the variable keep only the matching arc, paths that never test it pass
// through unchanged.
inline NodeRef cofactor(Space& sp, NodeRef d, DiscreteVarId dv, DiscreteVal val) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef n) -> NodeRef {
    if (n->terminal()) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    NodeRef wide = self(self, n->wide);
    const Atom& at = sp.atom(n->atom);
    NodeRef result;
    if (!at.is_dense() && at.dvar() == dv) {
      result = wide;
      for (const Arc& a : n->arcs)
        if (a.value == val) result = sp.set_union(result, self(self, a.child));
    } else {
      std::vector<Arc> arcs = n->arcs;
      for (Arc& a : arcs) a.child = self(self, a.child);
      result = sp.make(n->atom, std::move(arcs), wide);
    }
    memo.emplace(n, result);
    return result;
  };
  return rec(rec, d);
}

// Existential quantification of a discrete variable: drops its tests and
// keeps every branch.
inline NodeRef discrete_del(Space& sp, NodeRef d, DiscreteVarId dv) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto rec = [&](auto&& self, NodeRef n) -> NodeRef {
    if (n->terminal()) return n;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    NodeRef wide = self(self, n->wide);
    const Atom& at = sp.atom(n->atom);
    NodeRef result;
    if (!at.is_dense() && at.dvar() == dv) {
      result = wide;
      for (const Arc& a : n->arcs) result = sp.set_union(result, self(self, a.child));
    } else {
      std::vector<Arc> arcs = n->arcs;
      for (Arc& a : arcs) a.child = self(self, a.child);
      result = sp.make(n->atom, std::move(arcs), wide);
    }
    memo.emplace(n, result);
    return result;
  };
  return rec(rec, d);
}

// Diagram for "x in range"; open interval ends become strict bounds.
inline NodeRef interval_node(Space& sp, VarId x, const Interval& range) {
  NodeRef r = sp.top();
  if (range.lo) {
    Bound b = range.lo_open ? Bound::strict(-*range.lo) : Bound::weak(-*range.lo);
    r = sp.space_intersect(r, sp.raw_constraint({Term{x, Int(-1)}}, b));
  }
  if (range.hi) {
    Bound b = range.hi_open ? Bound::strict(*range.hi) : Bound::weak(*range.hi);
    r = sp.space_intersect(r, sp.raw_constraint({Term{x, Int(1)}}, b));
  }
  return r;
}

// Rewrites every dense atom over state variables into its displaced form:
// each non-parameter variable x gains sign * (coefficient of x) on its
// displacement variable x#d.  Parameters stay put; they do not drift.
inline NodeRef delta_exp(ModelContext& ctx, NodeRef d, int sign = 1) {
  return map_dense_atoms(ctx.space(), d, [&](const LinearExpr& e) {
    std::vector<Term> out(e.terms().begin(), e.terms().end());
    for (const Term& t : e.terms()) {
      const auto& info = ctx.vars().dense(t.var);
      if (info.is_parameter || info.is_delta) continue;
      out.push_back({ctx.delta_for(t.var), t.coeff * sign});
    }
    return out;
  });
}

namespace detail {

// Drops paths whose polyhedra are empty.  Not needed for correctness
// anywhere; it keeps the variable eliminations between pipeline stages from
// saturating constraint systems nobody can satisfy.
inline NodeRef prune_infeasible(Space& sp, NodeRef d) {
  NodeRef acc = sp.bot();
  bool dropped = false;
  sp.each_path(d, [&](const PathAssignment& p) {
    if (sp.path_infeasible(p.poly)) {
      dropped = true;
    } else {
      acc = sp.set_union(acc, sp.from_path(p));
    }
  });
  // Keep the original node (and its sharing) when every path survived.
  return dropped ? acc : d;
}

// Shared core of the two time closures.  With sign +1 the displaced diagram
// speaks about the state after the step (backward closure); with sign -1
// about the state before it (forward closure).
inline NodeRef time_closure(ModelContext& ctx, NodeRef d, int sign) {
  Space& sp = ctx.space();
  NodeRef inv = ctx.invariant_block();
  NodeRef inner = delta_exp(ctx, sp.space_intersect(d, inv), sign);
  inner = sp.space_intersect(inner, ctx.delta_nonneg());
  inner = sp.space_intersect(inner, ctx.rate_block());
  inner = prune_infeasible(sp, inner);
  for (VarId x : ctx.clocks()) {
    inner = prune_infeasible(sp, exists_elim(sp, inner, ctx.delta_for(x)));
  }
  inner = prune_infeasible(sp, exists_elim(sp, inner, ctx.global_delta()));
  return sp.space_intersect(inv, inner);
}

}  // namespace detail

// States that can reach `d` by letting time pass inside the invariants.
inline NodeRef wp_time(ModelContext& ctx, NodeRef d) {
  return detail::time_closure(ctx, d, +1);
}

// States reachable from `d` by letting time pass inside the invariants.
inline NodeRef post_time(ModelContext& ctx, NodeRef d) {
  return detail::time_closure(ctx, d, -1);
}

// States from which taking transition `t` lands inside `d`.
inline NodeRef wp_xtion(ModelContext& ctx, NodeRef d, const TransInfo& t) {
  Space& sp = ctx.space();
  const ProcInfo& proc = ctx.processes()[t.process];
  NodeRef cur = sp.space_intersect(d, proc.modes[t.to].invariant);
  cur = cofactor(sp, cur, proc.mode_var, t.to);
  for (const auto& [dv, val] : t.discrete_sets) cur = cofactor(sp, cur, dv, val);
  for (const auto& [x, range] : t.dense_sets)
    cur = sp.space_intersect(cur, interval_node(sp, x, range));
  cur = detail::prune_infeasible(sp, cur);
  for (const auto& [x, range] : t.dense_sets) cur = exists_elim(sp, cur, x);
  cur = sp.space_intersect(cur, t.guard);
  cur = sp.space_intersect(cur, ctx.mode_pin(t.process, t.from));
  return sp.space_intersect(cur, proc.modes[t.from].invariant);
}

// States reached from `d` by taking transition `t`.
inline NodeRef post_xtion(ModelContext& ctx, NodeRef d, const TransInfo& t) {
  Space& sp = ctx.space();
  const ProcInfo& proc = ctx.processes()[t.process];
  NodeRef cur = sp.space_intersect(d, t.guard);
  cur = sp.space_intersect(cur, proc.modes[t.from].invariant);
  cur = detail::prune_infeasible(sp, cur);
  cur = cofactor(sp, cur, proc.mode_var, t.from);
  for (const auto& [dv, val] : t.discrete_sets) {
    cur = discrete_del(sp, cur, dv);
    cur = sp.space_intersect(cur, sp.discrete_eq(dv, val));
  }
  for (const auto& [x, range] : t.dense_sets) {
    cur = exists_elim(sp, cur, x);
    cur = sp.space_intersect(cur, interval_node(sp, x, range));
  }
  cur = sp.space_intersect(cur, ctx.mode_pin(t.process, t.to));
  return sp.space_intersect(cur, proc.modes[t.to].invariant);
}

}  // namespace hrd
