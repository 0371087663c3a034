#pragma once

// Hybrid restriction diagrams.  A diagram is a rooted DAG whose internal
// nodes branch on decision atoms: dense nodes carry upper-bound labels in
// strictly ascending order, discrete nodes carry domain values.  Every node
// also has a "wide" branch, the trailing don't-care arc: on a dense atom it
// stands for the unbounded label, on a discrete atom for "value unasserted".
// A root-to-true path records one convex polyhedron together with a partial
// discrete assignment; the diagram denotes the set of its recorded paths.
//
// Nodes are hash-consed in an arena, so structural equality is pointer
// equality and the fixpoint tests in the engine are O(1).  Memo tables for
// the recursive operations live for one top-level call each.

#include "hrd/atom.hpp"
#include "hrd/bound.hpp"
#include "hrd/ordering.hpp"
#include "hrd/polyhedron.hpp"

#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hrd {

using AtomId = std::uint32_t;

struct Node;
using NodeRef = const Node*;

struct Arc {
  Bound bound = Bound::unbounded();  // dense label; finite on every stored arc
  DiscreteVal value = 0;             // discrete label
  NodeRef child = nullptr;
};

struct Node {
  static constexpr AtomId kTerminal = ~AtomId{0};

  AtomId atom = kTerminal;
  bool dense = false;
  std::vector<Arc> arcs;  // never empty for an internal node
  NodeRef wide = nullptr; // don't-care branch; the false terminal when absent
  std::size_t hash = 0;

  bool terminal() const { return atom == kTerminal; }
};

// One recorded path: a polyhedron over the dense variables plus the discrete
// values asserted along the way.
struct PathAssignment {
  Polyhedron poly;
  std::map<DiscreteVarId, DiscreteVal> discrete;
  friend bool operator==(const PathAssignment&, const PathAssignment&) = default;
  friend auto operator<=>(const PathAssignment&, const PathAssignment&) = default;
};

class Space {
 public:
  Space(VarSpace vars, OrderingKind ordering)
      : vars_(std::move(vars)), ordering_(ordering) {
    top_ = &arena_.emplace_back();
    bot_ = &arena_.emplace_back();
    const_cast<Node*>(top_)->hash = 1;
    const_cast<Node*>(bot_)->hash = 2;
  }

  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  const VarSpace& vars() const { return vars_; }
  VarSpace& vars() { return vars_; }
  OrderingKind ordering() const { return ordering_; }

  NodeRef top() const { return top_; }
  NodeRef bot() const { return bot_; }
  std::size_t node_count() const { return arena_.size(); }

  // When false, the recursive operations run without consulting their memo
  // tables; results must not change, only cost.
  bool memo_enabled = true;

  // ---- atoms ------------------------------------------------------------

  AtomId intern(const Atom& atom) {
    auto it = atom_ids_.find(atom);
    if (it != atom_ids_.end()) return it->second;
    AtomId id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(atom);
    atom_ids_.emplace(atom, id);
    return id;
  }

  const Atom& atom(AtomId id) const { return atoms_.at(id); }

  std::strong_ordering cmp(AtomId a, AtomId b) const {
    if (a == b) return std::strong_ordering::equal;
    std::uint64_t key = (std::uint64_t(a) << 32) | b;
    auto it = cmp_cache_.find(key);
    if (it != cmp_cache_.end()) return order_from_int(it->second);
    auto ord = compare_atoms(vars_, ordering_, atoms_[a], atoms_[b]);
    cmp_cache_.emplace(key, order_to_int(ord));
    return ord;
  }

  // ---- construction -----------------------------------------------------

  // Canonicalizing constructor: drops false children, sorts and merges arcs,
  // collapses a node whose only branch is the don't-care one, and
  // hash-conses the result.
  NodeRef make(AtomId atom, std::vector<Arc> arcs, NodeRef wide) {
    bool dense = atoms_.at(atom).is_dense();
    std::erase_if(arcs, [&](const Arc& a) { return a.child == bot_; });
    if (dense) {
      for (const Arc& a : arcs) assert(a.bound.is_finite());
      std::sort(arcs.begin(), arcs.end(),
                [](const Arc& x, const Arc& y) { return x.bound < y.bound; });
    } else {
      std::sort(arcs.begin(), arcs.end(),
                [](const Arc& x, const Arc& y) { return x.value < y.value; });
    }
    std::vector<Arc> merged;
    merged.reserve(arcs.size());
    for (auto& a : arcs) {
      bool same = !merged.empty() && (dense ? merged.back().bound == a.bound
                                            : merged.back().value == a.value);
      if (same) {
        merged.back().child = set_union(merged.back().child, a.child);
      } else {
        merged.push_back(std::move(a));
      }
    }
    if (merged.empty()) return wide == bot_ ? bot_ : wide;
    Node candidate;
    candidate.atom = atom;
    candidate.dense = dense;
    candidate.arcs = std::move(merged);
    candidate.wide = wide;
#ifndef NDEBUG
    for (const Arc& a : candidate.arcs)
      if (!a.child->terminal()) assert(cmp(atom, a.child->atom) < 0);
    if (wide != bot_ && !wide->terminal()) assert(cmp(atom, wide->atom) < 0);
#endif
    candidate.hash = node_hash(candidate);
    auto it = unique_.find(&candidate);
    if (it != unique_.end()) return *it;
    Node* stored = &arena_.emplace_back(std::move(candidate));
    unique_.insert(stored);
    return stored;
  }

  // Diagram for one constraint "e ~ b".  An unbounded bound constrains
  // nothing.  The expression must already be normalized.
  NodeRef constraint_node(const LinearExpr& e, const Bound& b) {
    if (!b.is_finite()) return top_;
    return make(intern(Atom::dense(e)), {Arc{b, 0, top_}}, bot_);
  }

  // Diagram for a possibly-denormalized sum of terms; a cancelled sum
  // degenerates to true or false by the zero-expression rule.
  NodeRef raw_constraint(std::vector<Term> terms, const Bound& b) {
    if (!b.is_finite()) return top_;
    try {
      auto [expr, scale] = LinearExpr::normalized(std::move(terms));
      return constraint_node(expr, b.scaled(Rational(1, scale)));
    } catch (const ZeroExpressionError&) {
      return b.admits_zero() ? top_ : bot_;
    }
  }

  NodeRef discrete_eq(DiscreteVarId d, DiscreteVal v) {
    assert(v >= vars_.discrete(d).lo && v <= vars_.discrete(d).hi);
    return make(intern(Atom::discrete(d)), {Arc{Bound::unbounded(), v, top_}}, bot_);
  }

  NodeRef discrete_neq(DiscreteVarId d, DiscreteVal v) {
    const auto& info = vars_.discrete(d);
    std::vector<Arc> arcs;
    for (DiscreteVal w = info.lo; w <= info.hi; ++w)
      if (w != v) arcs.push_back(Arc{Bound::unbounded(), w, top_});
    return make(intern(Atom::discrete(d)), std::move(arcs), bot_);
  }

  // Rebuilds the diagram holding exactly one recorded path.
  NodeRef from_path(const PathAssignment& path) {
    struct Entry { AtomId atom; Arc arc; };
    std::vector<Entry> entries;
    for (const auto& [e, b] : path.poly.bounds())
      entries.push_back({intern(Atom::dense(e)), Arc{b, 0, nullptr}});
    for (const auto& [d, v] : path.discrete)
      entries.push_back({intern(Atom::discrete(d)), Arc{Bound::unbounded(), v, nullptr}});
    std::sort(entries.begin(), entries.end(),
              [this](const Entry& x, const Entry& y) { return cmp(x.atom, y.atom) < 0; });
    NodeRef acc = top_;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      Arc arc = it->arc;
      arc.child = acc;
      acc = make(it->atom, {arc}, bot_);
    }
    return acc;
  }

  // ---- set operations on recorded paths ----------------------------------

  NodeRef set_union(NodeRef a, NodeRef b) {
    PairMemo memo;
    return union_rec(a, b, memo);
  }

  NodeRef set_intersect(NodeRef a, NodeRef b) {
    PairMemo memo;
    return intersect_rec(a, b, memo);
  }

  NodeRef set_exclude(NodeRef a, NodeRef b) {
    PairMemo memo;
    return exclude_rec(a, b, memo);
  }

  // Pointwise intersection of spaces: every recorded polyhedron of the left
  // operand is intersected with every compatible one of the right operand.
  NodeRef space_intersect(NodeRef a, NodeRef b) {
    PairMemo memo;
    return space_rec(a, b, memo);
  }

  NodeRef complement(NodeRef a) {
    UnaryMemo memo;
    return complement_rec(a, memo);
  }

  // ---- queries ------------------------------------------------------------

  bool evaluate(NodeRef d, const std::function<Rational(VarId)>& dense_val,
                const std::function<DiscreteVal(DiscreteVarId)>& discrete_val) const {
    std::unordered_map<NodeRef, bool> memo;
    std::unordered_map<AtomId, Rational> atom_val;
    auto rec = [&](auto&& self, NodeRef n) -> bool {
      if (n == top_) return true;
      if (n == bot_) return false;
      auto it = memo.find(n);
      if (it != memo.end()) return it->second;
      bool result = n->wide != bot_ && self(self, n->wide);
      if (!result && n->dense) {
        auto [vit, fresh] = atom_val.try_emplace(n->atom);
        if (fresh) vit->second = atom(n->atom).expr().evaluate(dense_val);
        for (const Arc& a : n->arcs)
          if (a.bound.admits(vit->second) && self(self, a.child)) { result = true; break; }
      } else if (!result) {
        DiscreteVal v = discrete_val(atom(n->atom).dvar());
        for (const Arc& a : n->arcs)
          if (a.value == v && self(self, a.child)) { result = true; break; }
      }
      memo.emplace(n, result);
      return result;
    };
    return rec(rec, d);
  }

  // Visits every recorded path.  Exponential in general; reporting and the
  // normalization pipeline work on enumerated paths by design, everything
  // else stays recursive.
  void each_path(NodeRef d, const std::function<void(const PathAssignment&)>& visit) const {
    PathAssignment current;
    auto rec = [&](auto&& self, NodeRef n) -> void {
      if (n == bot_) return;
      if (n == top_) { visit(current); return; }
      const Atom& at = atom(n->atom);
      for (const Arc& a : n->arcs) {
        PathAssignment saved = current;
        if (n->dense) {
          current.poly.add(at.expr(), a.bound);
        } else {
          current.discrete[at.dvar()] = a.value;
        }
        self(self, a.child);
        current = std::move(saved);
      }
      if (n->wide != bot_) self(self, n->wide);
    };
    rec(rec, d);
  }

  std::vector<PathAssignment> paths(NodeRef d) const {
    std::vector<PathAssignment> out;
    each_path(d, [&out](const PathAssignment& p) { out.push_back(p); });
    return out;
  }

  // Memoized Fourier-Motzkin feasibility test.  The same path polyhedra
  // recur across pruning passes (shared subgraphs, repeated pipeline
  // stages), and the raw test is by far the most expensive primitive.
  bool path_infeasible(const Polyhedron& p) {
    auto it = infeasible_memo_.find(p);
    if (it != infeasible_memo_.end()) return it->second;
    bool bad = p.is_infeasible();
    infeasible_memo_.emplace(p, bad);
    return bad;
  }

  std::size_t path_count(NodeRef d) const {
    std::unordered_map<NodeRef, std::size_t> memo;
    auto rec = [&](auto&& self, NodeRef n) -> std::size_t {
      if (n == bot_) return 0;
      if (n == top_) return 1;
      auto it = memo.find(n);
      if (it != memo.end()) return it->second;
      std::size_t total = n->wide == bot_ ? 0 : self(self, n->wide);
      for (const Arc& a : n->arcs) total += self(self, a.child);
      memo.emplace(n, total);
      return total;
    };
    return rec(rec, d);
  }

  void for_each_node(NodeRef d, const std::function<void(NodeRef)>& visit) const {
    std::unordered_set<NodeRef> seen;
    auto rec = [&](auto&& self, NodeRef n) -> void {
      if (n->terminal() || !seen.insert(n).second) return;
      visit(n);
      for (const Arc& a : n->arcs) self(self, a.child);
      if (n->wide != bot_) self(self, n->wide);
    };
    rec(rec, d);
  }

  // Structural invariant check used by the test suites.  Returns problem
  // descriptions; an empty result means the diagram is well formed.
  std::vector<std::string> audit(NodeRef d) const {
    std::vector<std::string> problems;
    for_each_node(d, [&](NodeRef n) {
      if (n->arcs.empty()) problems.push_back("internal node without a finite arc");
      for (std::size_t i = 0; i + 1 < n->arcs.size(); ++i) {
        bool ascending = n->dense ? n->arcs[i].bound < n->arcs[i + 1].bound
                                  : n->arcs[i].value < n->arcs[i + 1].value;
        if (!ascending) problems.push_back("arc labels not strictly ascending");
      }
      for (const Arc& a : n->arcs) {
        if (n->dense && !a.bound.is_finite()) problems.push_back("unbounded arc label");
        if (!n->dense) {
          const auto& info = vars_.discrete(atom(n->atom).dvar());
          if (a.value < info.lo || a.value > info.hi) problems.push_back("label outside domain");
        }
        if (a.child == bot_) problems.push_back("arc to the false terminal");
        if (!a.child->terminal() && cmp(n->atom, a.child->atom) >= 0)
          problems.push_back("child atom does not follow node atom");
      }
      if (n->wide != bot_ && !n->wide->terminal() && cmp(n->atom, n->wide->atom) >= 0)
        problems.push_back("wide child atom does not follow node atom");
    });
    return problems;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<NodeRef, NodeRef>& p) const {
      return std::hash<const void*>()(p.first) * 31 ^ std::hash<const void*>()(p.second);
    }
  };
  using PairMemo = std::unordered_map<std::pair<NodeRef, NodeRef>, NodeRef, PairHash>;
  using UnaryMemo = std::unordered_map<NodeRef, NodeRef>;

  static int order_to_int(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }
  static std::strong_ordering order_from_int(int v) {
    return v < 0 ? std::strong_ordering::less
                 : (v > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  static std::size_t node_hash(const Node& n) {
    std::size_t h = 0x51ed270bu + n.atom;
    for (const Arc& a : n.arcs) {
      boost::hash_combine(h, n.dense ? a.bound.hash() : std::size_t(a.value));
      boost::hash_combine(h, std::hash<const void*>()(a.child));
    }
    boost::hash_combine(h, std::hash<const void*>()(n.wide));
    return h;
  }

  struct NodeDerefHash {
    std::size_t operator()(NodeRef n) const { return n->hash; }
  };
  struct NodeDerefEq {
    bool operator()(NodeRef a, NodeRef b) const {
      if (a->hash != b->hash || a->atom != b->atom || a->dense != b->dense ||
          a->wide != b->wide || a->arcs.size() != b->arcs.size())
        return false;
      for (std::size_t i = 0; i < a->arcs.size(); ++i) {
        if (a->arcs[i].child != b->arcs[i].child) return false;
        if (a->dense ? !(a->arcs[i].bound == b->arcs[i].bound)
                     : a->arcs[i].value != b->arcs[i].value)
          return false;
      }
      return true;
    }
  };

  NodeRef memo_get(const PairMemo& memo, NodeRef a, NodeRef b) const {
    if (!memo_enabled) return nullptr;
    auto it = memo.find({a, b});
    return it == memo.end() ? nullptr : it->second;
  }

  NodeRef wide_of(NodeRef n) const { return n->wide; }

  NodeRef union_rec(NodeRef a, NodeRef b, PairMemo& memo) {
    if (a == b || b == bot_) return a;
    if (a == bot_) return b;
    if (a == top_ || b == top_) return top_;
    if (auto hit = memo_get(memo, a, b)) return hit;
    NodeRef result;
    auto order = cmp(a->atom, b->atom);
    if (order < 0) {
      result = make(a->atom, a->arcs, union_rec(a->wide, b, memo));
    } else if (order > 0) {
      result = make(b->atom, b->arcs, union_rec(b->wide, a, memo));
    } else {
      std::vector<Arc> arcs;
      std::size_t i = 0, j = 0;
      while (i < a->arcs.size() || j < b->arcs.size()) {
        bool take_a, take_b;
        if (i == a->arcs.size()) {
          take_a = false; take_b = true;
        } else if (j == b->arcs.size()) {
          take_a = true; take_b = false;
        } else {
          auto c = a->dense ? (a->arcs[i].bound <=> b->arcs[j].bound)
                            : (a->arcs[i].value <=> b->arcs[j].value);
          take_a = c <= 0;
          take_b = c >= 0;
        }
        if (take_a && take_b) {
          Arc merged = a->arcs[i];
          merged.child = union_rec(a->arcs[i].child, b->arcs[j].child, memo);
          arcs.push_back(std::move(merged));
          ++i; ++j;
        } else if (take_a) {
          arcs.push_back(a->arcs[i++]);
        } else {
          arcs.push_back(b->arcs[j++]);
        }
      }
      result = make(a->atom, std::move(arcs), union_rec(a->wide, b->wide, memo));
    }
    memo.emplace(std::make_pair(a, b), result);
    return result;
  }

  // Recorded-set intersection: a path survives only when both operands
  // record it with identical labels.  Descending through an atom the other
  // side lacks keeps only the don't-care branch.
  NodeRef intersect_rec(NodeRef a, NodeRef b, PairMemo& memo) {
    if (a == b) return a;
    if (a == bot_ || b == bot_) return bot_;
    if (a == top_) return intersect_rec(a, b->wide, memo);
    if (b == top_) return intersect_rec(a->wide, b, memo);
    if (auto hit = memo_get(memo, a, b)) return hit;
    NodeRef result;
    auto order = cmp(a->atom, b->atom);
    if (order < 0) {
      result = intersect_rec(a->wide, b, memo);
    } else if (order > 0) {
      result = intersect_rec(a, b->wide, memo);
    } else {
      std::vector<Arc> arcs;
      std::size_t i = 0, j = 0;
      while (i < a->arcs.size() && j < b->arcs.size()) {
        auto c = a->dense ? (a->arcs[i].bound <=> b->arcs[j].bound)
                          : (a->arcs[i].value <=> b->arcs[j].value);
        if (c < 0) { ++i; continue; }
        if (c > 0) { ++j; continue; }
        Arc merged = a->arcs[i];
        merged.child = intersect_rec(a->arcs[i].child, b->arcs[j].child, memo);
        arcs.push_back(std::move(merged));
        ++i; ++j;
      }
      result = make(a->atom, std::move(arcs), intersect_rec(a->wide, b->wide, memo));
    }
    memo.emplace(std::make_pair(a, b), result);
    return result;
  }

  // Recorded-set difference.
  NodeRef exclude_rec(NodeRef a, NodeRef b, PairMemo& memo) {
    if (a == b || a == bot_) return bot_;
    if (b == bot_) return a;
    if (b == top_) {
      if (a == top_) return bot_;
      return make(a->atom, a->arcs, exclude_rec(a->wide, b, memo));
    }
    if (a == top_) return exclude_rec(a, b->wide, memo);
    if (auto hit = memo_get(memo, a, b)) return hit;
    NodeRef result;
    auto order = cmp(a->atom, b->atom);
    if (order < 0) {
      result = make(a->atom, a->arcs, exclude_rec(a->wide, b, memo));
    } else if (order > 0) {
      result = exclude_rec(a, b->wide, memo);
    } else {
      std::vector<Arc> arcs;
      std::size_t i = 0, j = 0;
      while (i < a->arcs.size()) {
        bool matched = false;
        while (j < b->arcs.size()) {
          auto c = a->dense ? (a->arcs[i].bound <=> b->arcs[j].bound)
                            : (a->arcs[i].value <=> b->arcs[j].value);
          if (c > 0) { ++j; continue; }
          if (c == 0) matched = true;
          break;
        }
        if (matched) {
          Arc diff = a->arcs[i];
          diff.child = exclude_rec(a->arcs[i].child, b->arcs[j].child, memo);
          arcs.push_back(std::move(diff));
        } else {
          arcs.push_back(a->arcs[i]);
        }
        ++i;
      }
      result = make(a->atom, std::move(arcs), exclude_rec(a->wide, b->wide, memo));
    }
    memo.emplace(std::make_pair(a, b), result);
    return result;
  }

  NodeRef space_rec(NodeRef a, NodeRef b, PairMemo& memo) {
    if (a == bot_ || b == bot_) return bot_;
    if (a == top_ || a == b) return b;
    if (b == top_) return a;
    if (auto hit = memo_get(memo, a, b)) return hit;
    NodeRef result;
    auto order = cmp(a->atom, b->atom);
    if (order < 0) {
      std::vector<Arc> arcs;
      arcs.reserve(a->arcs.size());
      for (const Arc& arc : a->arcs) {
        Arc out = arc;
        out.child = space_rec(arc.child, b, memo);
        arcs.push_back(std::move(out));
      }
      result = make(a->atom, std::move(arcs), space_rec(a->wide, b, memo));
    } else if (order > 0) {
      result = space_rec(b, a, memo);
    } else if (a->dense) {
      // Cross product of the two restriction lists; the combined label is
      // the tighter of the pair.
      std::vector<Arc> arcs;
      for (const Arc& x : a->arcs) {
        for (const Arc& y : b->arcs)
          arcs.push_back(Arc{Bound::min(x.bound, y.bound), 0,
                             space_rec(x.child, y.child, memo)});
        if (b->wide != bot_)
          arcs.push_back(Arc{x.bound, 0, space_rec(x.child, b->wide, memo)});
      }
      if (a->wide != bot_)
        for (const Arc& y : b->arcs)
          arcs.push_back(Arc{y.bound, 0, space_rec(a->wide, y.child, memo)});
      result = make(a->atom, std::move(arcs), space_rec(a->wide, b->wide, memo));
    } else {
      // Discrete conjunction: equal values meet, a don't-care side adopts
      // the other side's assertion, disagreeing values vanish.
      std::vector<Arc> arcs;
      std::size_t i = 0, j = 0;
      while (i < a->arcs.size() && j < b->arcs.size()) {
        if (a->arcs[i].value < b->arcs[j].value) { arc_with_wide(arcs, a->arcs[i++], b->wide, memo); continue; }
        if (a->arcs[i].value > b->arcs[j].value) { arc_with_wide(arcs, b->arcs[j++], a->wide, memo); continue; }
        arcs.push_back(Arc{Bound::unbounded(), a->arcs[i].value,
                           space_rec(a->arcs[i].child, b->arcs[j].child, memo)});
        ++i; ++j;
      }
      while (i < a->arcs.size()) arc_with_wide(arcs, a->arcs[i++], b->wide, memo);
      while (j < b->arcs.size()) arc_with_wide(arcs, b->arcs[j++], a->wide, memo);
      result = make(a->atom, std::move(arcs), space_rec(a->wide, b->wide, memo));
    }
    memo.emplace(std::make_pair(a, b), result);
    return result;
  }

  void arc_with_wide(std::vector<Arc>& arcs, const Arc& arc, NodeRef other_wide, PairMemo& memo) {
    if (other_wide == bot_) return;
    arcs.push_back(Arc{Bound::unbounded(), arc.value, space_rec(arc.child, other_wide, memo)});
  }

  // De Morgan over one node: the complement of "any restriction holds" is
  // the meet over restrictions of "this restriction fails or its tail
  // fails"; failing a dense restriction asserts the converse constraint.
  NodeRef complement_rec(NodeRef n, UnaryMemo& memo) {
    if (n == top_) return bot_;
    if (n == bot_) return top_;
    if (memo_enabled) {
      auto it = memo.find(n);
      if (it != memo.end()) return it->second;
    }
    NodeRef result = top_;
    const Atom& at = atom(n->atom);
    for (const Arc& a : n->arcs) {
      NodeRef holds, fails;
      if (n->dense) {
        holds = constraint_node(at.expr(), a.bound);
        fails = constraint_node(at.expr().negated(), a.bound.complement_bound());
      } else {
        holds = discrete_eq(at.dvar(), a.value);
        fails = discrete_neq(at.dvar(), a.value);
      }
      PairMemo scratch;
      NodeRef keep = space_rec(holds, complement_rec(a.child, memo), scratch);
      NodeRef term = union_rec(fails, keep, scratch);
      PairMemo meet;
      result = space_rec(result, term, meet);
    }
    if (n->wide != bot_) {
      PairMemo meet;
      result = space_rec(result, complement_rec(n->wide, memo), meet);
    }
    memo.emplace(n, result);
    return result;
  }

  VarSpace vars_;
  OrderingKind ordering_;
  std::deque<Node> arena_;
  std::unordered_set<NodeRef, NodeDerefHash, NodeDerefEq> unique_;
  // Deque so references handed out by atom() survive later interning.
  std::deque<Atom> atoms_;
  std::unordered_map<Atom, AtomId, AtomHash> atom_ids_;
  mutable std::unordered_map<std::uint64_t, int> cmp_cache_;
  struct PolyHash {
    std::size_t operator()(const Polyhedron& p) const { return p.hash(); }
  };
  std::unordered_map<Polyhedron, bool, PolyHash> infeasible_memo_;
  NodeRef top_;
  NodeRef bot_;
};

}  // namespace hrd
