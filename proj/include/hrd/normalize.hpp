// Two-phase diagram normalization: infeasible paths are dropped, each
// surviving path is tightened against the diagram's proof obligations and
// compared against its peers for subsumption, then redundant constraints
// are stripped path by path.
//
// "Derivable" throughout means: a nonnegative rational combination of at
// most four constraints of the path whose expressions sum to a positive
// multiple of the target expression.  The bound search enumerates the
// subsets and solves the small exact linear system matching coefficient
// vectors; only uniquely solvable subsets matter, since the optimum of the
// underlying LP sits at a basic solution.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "hrd/diagram.hpp"
#include "hrd/polyhedron.hpp"

namespace hrd {

using ProofObligations = std::set<LinearExpr>;

// Every dense atom reachable in the diagram.
inline ProofObligations collect_obligations(const Space& sp, NodeRef d) {
  ProofObligations out;
  sp.for_each_node(d, [&](NodeRef n) {
    const Atom& at = sp.atom(n->atom);
    if (at.is_dense()) out.insert(at.expr());
  });
  return out;
}

namespace detail {

// Support mask for quick can-this-subset-cover-the-target pruning; vars
// beyond 64 fall back to "maybe".
inline std::uint64_t support_mask(const LinearExpr& e) {
  std::uint64_t m = 0;
  for (const Term& t : e.terms())
    if (t.var.index < 64) m |= std::uint64_t{1} << t.var.index;
  return m;
}

inline bool mask_exact(const LinearExpr& e) {
  for (const Term& t : e.terms())
    if (t.var.index >= 64) return false;
  return true;
}

// Solves sum(lambda_i * rows[idx[i]].expr) = target for lambda >= 0 by
// Gaussian elimination over the exact rationals.  Returns the combined
// bound, or unbounded when the system is inconsistent, underdetermined,
// or needs a negative multiplier.
inline Bound combine_subset(const std::vector<Constraint>& rows,
                            const std::vector<std::size_t>& idx,
                            const LinearExpr& target) {
  std::vector<VarId> vars;
  for (const Term& t : target.terms()) vars.push_back(t.var);
  for (std::size_t i : idx)
    for (const Term& t : rows[i].expr.terms()) vars.push_back(t.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  // One equation per variable: k multiplier columns plus the target column.
  // Elimination stays in integers (fraction-free), so the expensive rational
  // gcd normalization happens only for the final multipliers.
  const std::size_t k = idx.size();
  std::vector<std::vector<Int>> m;
  m.reserve(vars.size());
  for (VarId v : vars) {
    std::vector<Int> row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = rows[idx[i]].expr.coeff_of(v);
    row[k] = target.coeff_of(v);
    m.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_row(k);
  Int prev(1);
  std::size_t next = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = next; r < m.size(); ++r)
      if (m[r][col] != 0) { sel = r; break; }
    if (sel == SIZE_MAX) return Bound::unbounded();  // underdetermined
    std::swap(m[sel], m[next]);
    for (std::size_t r = next + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c <= k; ++c)
        m[r][c] = (m[r][c] * m[next][col] - m[r][col] * m[next][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[next][col];
    pivot_row[col] = next++;
  }
  for (std::size_t r = next; r < m.size(); ++r)
    if (m[r][k] != 0) return Bound::unbounded();  // inconsistent

  std::vector<Rational> lam(k);
  Bound combined = Bound::weak(Rational(0));
  bool used = false;
  for (std::size_t col = k; col-- > 0;) {
    const std::vector<Int>& row = m[pivot_row[col]];
    Rational acc(row[k]);
    for (std::size_t c = col + 1; c < k; ++c) acc -= lam[c] * Rational(row[c]);
    lam[col] = acc / Rational(row[col]);
    if (lam[col] < 0) return Bound::unbounded();
  }
  for (std::size_t col = 0; col < k; ++col) {
    if (lam[col] == 0) continue;
    combined = combined + rows[idx[col]].bound.scaled(lam[col]);
    used = true;
  }
  return used ? combined : Bound::unbounded();
}

// The least bound on `target` derivable from the given rows.  Subsets that
// cannot possibly combine to the target are filtered by variable coverage:
// the subset's support must cover the target, and every covered variable
// outside the target must occur in at least two chosen rows (a variable
// occurring once cannot cancel, which would force that row's multiplier to
// zero, and the smaller subset is enumerated anyway).
inline Bound derive_bound(const std::vector<Constraint>& rows, const LinearExpr& target) {
  Bound best = Bound::unbounded();
  std::uint64_t want = support_mask(target);
  bool exact = mask_exact(target);
  std::vector<std::uint64_t> masks(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    masks[i] = support_mask(rows[i].expr);
    exact = exact && mask_exact(rows[i].expr);
  }
  std::vector<std::uint64_t> suffix(rows.size() + 1, 0);
  for (std::size_t i = rows.size(); i-- > 0;) suffix[i] = suffix[i + 1] | masks[i];

  std::vector<std::size_t> idx;
  auto search = [&](auto&& self, std::size_t from, std::uint64_t cover,
                    std::uint64_t once, std::uint64_t twice) -> void {
    if (!idx.empty() && (!exact || (once == 0 && (cover & want) == want))) {
      best = std::min(best, combine_subset(rows, idx, target));
    }
    if (idx.size() == 4) return;
    // No extension can reach the target's full support from here.
    if (exact && ((cover | suffix[from]) & want) != want) return;
    for (std::size_t i = from; i < rows.size(); ++i) {
      std::uint64_t stray = masks[i] & ~want;
      std::uint64_t t2 = twice | (once & stray);
      std::uint64_t o2 = (once | stray) & ~t2;
      // Unresolvable leftover: a once-seen variable no later row mentions
      // stays uncancelled in every extension of this subset.
      if (exact && (o2 & ~suffix[i + 1]) != 0) continue;
      idx.push_back(i);
      self(self, i + 1, cover | masks[i], o2, t2);
      idx.pop_back();
    }
  };
  search(search, 0, 0, 0, 0);
  return best;
}

}  // namespace detail

// Tightens z: every obligation whose ⊏-least derivable bound beats the
// recorded one gets the better bound; underivable obligations add nothing.
// Obligations mentioning a variable no row touches are skipped outright:
// no combination of the rows can produce them.
inline Polyhedron tighten_path(const Polyhedron& z, const ProofObligations& obligations) {
  std::vector<Constraint> rows = z.constraints();
  std::uint64_t covered = 0;
  bool exact = true;
  for (const Constraint& c : rows) {
    covered |= detail::support_mask(c.expr);
    exact = exact && detail::mask_exact(c.expr);
  }
  Polyhedron out = z;
  for (const LinearExpr& e : obligations) {
    std::uint64_t need = detail::support_mask(e);
    if (exact && detail::mask_exact(e) && (need & ~covered) != 0) continue;
    Bound b = detail::derive_bound(rows, e);
    if (b.is_finite()) out.add(e, b);
  }
  return out;
}

class Normalizer {
 public:
  explicit Normalizer(Space& sp) : sp_(sp) {}

  // Removes paths whose polyhedra have no solutions.
  NodeRef drop_infeasible(NodeRef d) {
    return rebuild(feasible_paths(d));
  }

  // Step I: removes paths provably contained in another path with the same
  // discrete assignment.  The containment test compares tightened copies;
  // the surviving paths keep their original constraints.  Tightening only
  // needs the expressions occurring within the comparison group, since the
  // test never consults a bound on any other expression.  Equal paths keep
  // a single representative.
  NodeRef eliminate_subsumed(NodeRef d) {
    std::vector<PathAssignment> paths = feasible_paths(d);
    std::map<std::map<DiscreteVarId, DiscreteVal>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < paths.size(); ++i)
      groups[paths[i].discrete].push_back(i);

    std::vector<bool> dead(paths.size(), false);
    for (const auto& [sig, members] : groups) {
      if (members.size() < 2) continue;
      ProofObligations obligations;
      for (std::size_t i : members)
        for (const auto& [e, b] : paths[i].poly.bounds()) obligations.insert(e);
      std::vector<Polyhedron> tight(members.size());
      for (std::size_t k = 0; k < members.size(); ++k)
        tight[k] = tightened(paths[members[k]].poly, obligations);
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b < members.size() && !dead[members[a]]; ++b) {
          if (a == b || dead[members[b]]) continue;
          if (!contains(tight[b], tight[a])) continue;
          // Mutual containment means equal sets; keep the lower index.
          if (contains(tight[a], tight[b]) && b > a) continue;
          dead[members[a]] = true;
        }
      }
    }
    std::vector<PathAssignment> kept;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (!dead[i]) kept.push_back(std::move(paths[i]));
    return rebuild(kept);
  }

  // Step II: along each path, drops a constraint when at most four
  // surviving peers derive a bound at least as tight.  Witnesses must not
  // precede the dropped constraint in the atom ordering, so decisions run
  // from the last constraint upward and removed rows never testify.
  NodeRef eliminate_redundant(NodeRef d) {
    std::vector<PathAssignment> paths = sp_.paths(d);
    for (PathAssignment& p : paths) strip_redundant(p.poly);
    return rebuild(paths);
  }

  // Whole pipeline, run to a verified fixpoint.  A single pass can leave
  // work behind (removing a path can unlock a new subsumption), so the
  // composition is repeated until the diagram stops changing; that is what
  // makes the result stable under a second normalize call.  Constraint
  // stripping runs once up front: raw step images carry many derivable
  // rows, and shedding them first keeps the subsumption pass's obligation
  // sets and derivation searches small.
  NodeRef normalize(NodeRef d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    NodeRef cur = eliminate_redundant(drop_infeasible(d));
    while (true) {
      NodeRef next = eliminate_redundant(eliminate_subsumed(drop_infeasible(cur)));
      if (next == cur) break;
      cur = next;
    }
    cache_.emplace(d, cur);
    cache_.emplace(cur, cur);
    return cur;
  }

 private:
  std::vector<PathAssignment> feasible_paths(NodeRef d) const {
    std::vector<PathAssignment> out;
    sp_.each_path(d, [&](const PathAssignment& p) {
      if (!sp_.path_infeasible(p.poly)) out.push_back(p);
    });
    return out;
  }

  NodeRef rebuild(const std::vector<PathAssignment>& paths) {
    NodeRef acc = sp_.bot();
    for (const PathAssignment& p : paths)
      acc = sp_.set_union(acc, sp_.from_path(p));
    return acc;
  }

  // z2 contained in z1: every bound of z1 is met or beaten by z2's
  // recorded bound on the same expression.  Paths are tightened first, so
  // missing bounds genuinely mean "unbounded in that direction".
  static bool contains(const Polyhedron& z1, const Polyhedron& z2) {
    for (const auto& [e, b] : z1.bounds()) {
      if (!(z2.bound_for(e) <= b)) return false;
    }
    return true;
  }

  // Memoized tighten_path.  The bound derived for an obligation depends
  // only on the path's own rows, never on the rest of the obligation set,
  // so caching per (path, expression) makes re-tightening a group after
  // its obligations grew pay only for the new expressions.
  Polyhedron tightened(const Polyhedron& poly, const ProofObligations& obligations) {
    DeriveTable& table = derive_memo_[poly];
    if (!table.init) {
      table.init = true;
      table.rows = poly.constraints();
      table.exact = true;
      for (const Constraint& c : table.rows) {
        table.covered |= detail::support_mask(c.expr);
        table.exact = table.exact && detail::mask_exact(c.expr);
      }
    }
    Polyhedron out = poly;
    for (const LinearExpr& e : obligations) {
      std::uint64_t need = detail::support_mask(e);
      if (table.exact && detail::mask_exact(e) && (need & ~table.covered) != 0) continue;
      auto [it, fresh] = table.derived.try_emplace(e, Bound::unbounded());
      if (fresh) it->second = detail::derive_bound(table.rows, e);
      if (it->second.is_finite()) out.add(e, it->second);
    }
    return out;
  }

  void strip_redundant(Polyhedron& poly) {
    auto hit = strip_memo_.find(poly);
    if (hit != strip_memo_.end()) {
      poly = hit->second;
      return;
    }
    Polyhedron key = poly;
    std::vector<Constraint> rows = poly.constraints();
    std::sort(rows.begin(), rows.end(), [this](const Constraint& a, const Constraint& b) {
      return sp_.cmp(atom_id(a.expr), atom_id(b.expr)) < 0;
    });
    std::vector<bool> removed(rows.size(), false);
    for (std::size_t i = rows.size(); i-- > 0;) {
      std::vector<Constraint> peers;
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (!removed[j]) peers.push_back(rows[j]);
      if (peers.empty()) continue;
      Bound b = detail::derive_bound(peers, rows[i].expr);
      if (b <= rows[i].bound) removed[i] = true;
    }
    Polyhedron out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!removed[i]) out.add(rows[i]);
    strip_memo_.emplace(std::move(key), out);
    strip_memo_.emplace(out, out);
    poly = std::move(out);
  }

  AtomId atom_id(const LinearExpr& e) { return sp_.intern(Atom::dense(e)); }

  struct PolyHash {
    std::size_t operator()(const Polyhedron& p) const { return p.hash(); }
  };
  struct ExprHash {
    std::size_t operator()(const LinearExpr& e) const { return e.hash(); }
  };
  struct DeriveTable {
    bool init = false;
    std::vector<Constraint> rows;
    std::uint64_t covered = 0;
    bool exact = false;
    std::unordered_map<LinearExpr, Bound, ExprHash> derived;
  };

  Space& sp_;
  std::unordered_map<NodeRef, NodeRef> cache_;
  std::unordered_map<Polyhedron, Polyhedron, PolyHash> strip_memo_;
  std::unordered_map<Polyhedron, DeriveTable, PolyHash> derive_memo_;
};

}  // namespace hrd
