// Abstract syntax for the model input language. The parser produces this
// representation with names unresolved; ModelContext (compile.hpp) resolves
// names against the declarations and reports problems as Diagnostics.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrd/rational.hpp"

namespace hrd {

struct Diagnostic {
  int line = 0;
  std::string message;
};

inline std::string render_diagnostics(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += "line " + std::to_string(d.line) + ": " + d.message + "\n";
  }
  return out;
}

// One end of an interval. An absent value means the interval is unbounded on
// that side; open/closed is tracked per end.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool lo_open = false;
  bool hi_open = false;

  static Interval point(Rational v) { return Interval{v, v, false, false}; }

  bool is_point() const {
    return lo && hi && *lo == *hi && !lo_open && !hi_open;
  }

  // Empty when both ends are finite and cross, or touch with an open end.
  bool is_empty() const {
    if (!lo || !hi) return false;
    if (*lo > *hi) return true;
    return *lo == *hi && (lo_open || hi_open);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class CmpOp { lt, le, eq, ge, gt };

inline const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::eq: return "=";
    case CmpOp::ge: return ">=";
    case CmpOp::gt: return ">";
  }
  return "?";
}

// Predicate tree. `eq_test` covers the surface form `name = rational`, which
// is a discrete value test or a dense equality depending on what `name`
// resolves to; the distinction is only made during compilation.
struct PredNode {
  enum class Kind {
    truth,        // uses truth_value
    conj,         // children
    disj,         // children
    linear,       // terms, op, rhs
    eq_test,      // lhs_name, rhs
    neq_test,     // lhs_name, int_value
    mode_test,    // proc_name, mode_name
  };

  Kind kind = Kind::truth;
  bool truth_value = true;
  std::vector<PredNode> children;
  std::vector<std::pair<std::string, Int>> terms;
  CmpOp op = CmpOp::le;
  Rational rhs;
  std::string lhs_name;
  std::int64_t int_value = 0;
  std::string proc_name, mode_name;
  int line = 0;

  static PredNode truth(bool v) {
    PredNode p;
    p.kind = Kind::truth;
    p.truth_value = v;
    return p;
  }
};

struct RateDecl {
  std::string var;
  Interval range;
  int line = 0;
};

struct ModeDecl {
  std::string name;
  PredNode invariant;
  std::vector<RateDecl> rates;
  int line = 0;
};

struct AssignDecl {
  std::string var;
  Interval value;
  int line = 0;
};

struct TransDecl {
  std::string from, to;
  PredNode guard;
  std::vector<AssignDecl> sets;
  int line = 0;
};

struct ProcessDecl {
  std::string name;
  std::vector<std::string> dense_locals;
  std::vector<std::pair<std::string, int>> dense_local_lines() const;
  std::vector<int> local_lines;
  std::vector<ModeDecl> modes;
  std::vector<TransDecl> transitions;
  int line = 0;
};

struct DiscreteDecl {
  std::string name;
  std::int64_t lo = 0, hi = 0, init = 0;
  int line = 0;
};

struct NamedDecl {
  std::string name;
  int line = 0;
};

struct ModelAst {
  std::vector<NamedDecl> params;
  std::vector<NamedDecl> dense_globals;
  std::vector<DiscreteDecl> discretes;
  std::vector<ProcessDecl> processes;
  PredNode initially;
  PredNode risk;
};

inline std::vector<std::pair<std::string, int>> ProcessDecl::dense_local_lines() const {
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t i = 0; i < dense_locals.size(); ++i) {
    out.emplace_back(dense_locals[i], i < local_lines.size() ? local_lines[i] : line);
  }
  return out;
}

}  // namespace hrd
