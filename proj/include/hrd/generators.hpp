// Built-in model families, produced as ASTs so the CLI can either analyze
// them directly or pretty-print them to a file.  Each generator records its
// modeling assumptions as notes; the CLI writes those as comments ahead of
// the printed model.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrd/model.hpp"

namespace hrd {

struct GeneratedModel {
  std::string name;
  std::vector<std::string> notes;
  ModelAst ast;
};

namespace detail {

inline PredNode mode_at(std::string proc, std::string mode) {
  PredNode p;
  p.kind = PredNode::Kind::mode_test;
  p.proc_name = std::move(proc);
  p.mode_name = std::move(mode);
  return p;
}

inline PredNode value_eq(std::string name, Rational v) {
  PredNode p;
  p.kind = PredNode::Kind::eq_test;
  p.lhs_name = std::move(name);
  p.rhs = std::move(v);
  return p;
}

inline PredNode value_neq(std::string name, std::int64_t v) {
  PredNode p;
  p.kind = PredNode::Kind::neq_test;
  p.lhs_name = std::move(name);
  p.int_value = v;
  return p;
}

inline PredNode linear(std::vector<std::pair<std::string, Int>> terms, CmpOp op,
                       Rational rhs) {
  PredNode p;
  p.kind = PredNode::Kind::linear;
  p.terms = std::move(terms);
  p.op = op;
  p.rhs = std::move(rhs);
  return p;
}

inline PredNode all_of(std::vector<PredNode> xs) {
  if (xs.empty()) return PredNode::truth(true);
  if (xs.size() == 1) return std::move(xs[0]);
  PredNode p;
  p.kind = PredNode::Kind::conj;
  p.children = std::move(xs);
  return p;
}

inline PredNode any_of(std::vector<PredNode> xs) {
  if (xs.empty()) return PredNode::truth(false);
  if (xs.size() == 1) return std::move(xs[0]);
  PredNode p;
  p.kind = PredNode::Kind::disj;
  p.children = std::move(xs);
  return p;
}

inline AssignDecl set_point(std::string var, Rational v) {
  return AssignDecl{std::move(var), Interval::point(std::move(v)), 0};
}

inline ModeDecl mode(std::string name, PredNode inv,
                     std::vector<RateDecl> rates = {}) {
  return ModeDecl{std::move(name), std::move(inv), std::move(rates), 0};
}

inline TransDecl edge(std::string from, std::string to, PredNode guard,
                      std::vector<AssignDecl> sets = {}) {
  return TransDecl{std::move(from), std::move(to), std::move(guard),
                   std::move(sets), 0};
}

}  // namespace detail

// Fischer's timed mutual exclusion over a shared lock variable.  Process 1
// is the slow one (clock rate in [4/5, 1]); the others run fast (rate in
// [1, 11/10]).  A is the write deadline, B the read-back delay.  The write
// deadline guard is weak (x - A <= 0), so hitting the deadline exactly
// still permits the write.
inline GeneratedModel generate_fischer(int m) {
  using namespace detail;
  GeneratedModel g;
  g.name = "fischer-" + std::to_string(m);
  g.notes = {
      "Fischer's mutual exclusion protocol with " + std::to_string(m) + " processes.",
      "Shared lock variable L; process i writes L := i within A of requesting,",
      "then waits at least B before checking it still owns the lock.",
      "Process 1 drifts slow (clock rate in [4/5, 1]); the others drift fast",
      "(rate in [1, 11/10]).",
      "Mutual exclusion fails exactly when 0 <= A and 11 A >= 8 B.",
  };
  ModelAst& ast = g.ast;
  ast.params = {{"A", 0}, {"B", 0}};
  ast.discretes = {{"L", 0, m, 0, 0}};
  std::vector<PredNode> init, risk;
  for (int i = 1; i <= m; ++i) {
    std::string pn = "P" + std::to_string(i);
    std::string x = "x" + std::to_string(i);
    Interval rate = i == 1 ? Interval{Rational(4, 5), Rational(1), false, false}
                           : Interval{Rational(1), Rational(11, 10), false, false};
    ProcessDecl p;
    p.name = pn;
    p.dense_locals = {x};
    for (const char* mn : {"q0", "q1", "q2", "q3"}) {
      p.modes.push_back(mode(mn, PredNode::truth(true), {RateDecl{x, rate, 0}}));
    }
    p.transitions.push_back(
        edge("q0", "q1", value_eq("L", Rational(0)), {set_point(x, Rational(0))}));
    p.transitions.push_back(
        edge("q1", "q2", linear({{x, Int(1)}, {"A", Int(-1)}}, CmpOp::le, Rational(0)),
             {set_point(x, Rational(0)), set_point("L", Rational(i))}));
    p.transitions.push_back(edge("q2", "q1", value_neq("L", i)));
    p.transitions.push_back(
        edge("q2", "q3",
             all_of({linear({{x, Int(1)}, {"B", Int(-1)}}, CmpOp::ge, Rational(0)),
                     value_eq("L", Rational(i))})));
    p.transitions.push_back(
        edge("q3", "q0", PredNode::truth(true), {set_point("L", Rational(0))}));
    ast.processes.push_back(std::move(p));
    init.push_back(mode_at(pn, "q0"));
    init.push_back(value_eq(x, Rational(0)));
    for (int j = i + 1; j <= m; ++j) {
      risk.push_back(all_of({mode_at(pn, "q3"), mode_at("P" + std::to_string(j), "q3")}));
    }
  }
  ast.initially = all_of(std::move(init));
  ast.risk = any_of(std::move(risk));
  return g;
}

// Temperature controller with m cooling rods.  The core heats while no rod
// is in (mode heat, capped at 16.1) and cools with a rod in (mode cool,
// capped at 5.9).  A rod must rest at least T after use; T is the
// parameter.  Risk: the core needs a rod (heat phase, c >= 16) and none
// has rested long enough.
inline GeneratedModel generate_reactor(int m) {
  using namespace detail;
  GeneratedModel g;
  g.name = "reactor-" + std::to_string(m);
  g.notes = {
      "Reactor temperature control with " + std::to_string(m) + " rods.",
      "The heat phase ends in the window c in [16, 16.1], the cool phase in",
      "c in [5.8, 5.9]; a rod is picked up only after resting at least T.",
      "Rod clocks start at or beyond T, so every rod is available at first.",
      "The shutdown risk is reachable exactly when 5 T <= 109 m - 29.",
  };
  ModelAst& ast = g.ast;
  ast.params = {{"T", 0}};
  ast.discretes = {{"rod", 0, m, 0, 0}};

  ProcessDecl c;
  c.name = "C";
  c.dense_locals = {"c"};
  c.modes.push_back(mode("heat", linear({{"c", Int(1)}}, CmpOp::le, Rational(161, 10))));
  c.modes.push_back(mode("cool", linear({{"c", Int(1)}}, CmpOp::le, Rational(59, 10))));
  c.transitions.push_back(
      edge("heat", "cool", value_neq("rod", 0), {set_point("c", Rational(0))}));
  c.transitions.push_back(
      edge("cool", "heat", value_eq("rod", Rational(0)), {set_point("c", Rational(0))}));
  ast.processes.push_back(std::move(c));

  std::vector<PredNode> init{mode_at("C", "heat"), value_eq("c", Rational(0))};
  std::vector<PredNode> stuck{mode_at("C", "heat"),
                              linear({{"c", Int(1)}}, CmpOp::ge, Rational(16))};
  for (int i = 1; i <= m; ++i) {
    std::string pn = "R" + std::to_string(i);
    std::string x = "x" + std::to_string(i);
    ProcessDecl r;
    r.name = pn;
    r.dense_locals = {x};
    r.modes.push_back(mode("rest", PredNode::truth(true)));
    r.modes.push_back(mode("soak", PredNode::truth(true)));
    r.transitions.push_back(
        edge("rest", "soak",
             all_of({mode_at("C", "heat"),
                     linear({{"c", Int(1)}}, CmpOp::ge, Rational(16)),
                     linear({{x, Int(1)}, {"T", Int(-1)}}, CmpOp::ge, Rational(0)),
                     value_eq("rod", Rational(0))}),
             {set_point("rod", Rational(i))}));
    r.transitions.push_back(
        edge("soak", "rest",
             all_of({mode_at("C", "cool"),
                     linear({{"c", Int(1)}}, CmpOp::ge, Rational(29, 5)),
                     value_eq("rod", Rational(i))}),
             {set_point("rod", Rational(0)), set_point(x, Rational(0))}));
    ast.processes.push_back(std::move(r));
    init.push_back(mode_at(pn, "rest"));
    init.push_back(linear({{x, Int(1)}, {"T", Int(-1)}}, CmpOp::ge, Rational(0)));
    stuck.push_back(linear({{x, Int(1)}, {"T", Int(-1)}}, CmpOp::le, Rational(0)));
  }
  ast.initially = all_of(std::move(init));
  ast.risk = all_of(std::move(stuck));
  return g;
}

// Railroad crossing: m trains, a relay controller, and a gate.  A train
// signals when it starts approaching and clears the signal when it has
// crossed; the controller relays the signal to the gate, which lowers at
// rate [-10, -9] from 90 and raises at [9, 10].  CUTOFF is the distance
// parameter: a train reaches the crossing no earlier than CUTOFF after
// signaling and spends at most 5 inside.  With several trains the single
// signal flag is overwritten, so safety additionally degrades with m.
inline GeneratedModel generate_railroad(int m) {
  using namespace detail;
  GeneratedModel g;
  g.name = "railroad-" + std::to_string(m);
  g.notes = {
      "Railroad gate control with " + std::to_string(m) + " trains.",
      "Trains signal on approach (sig := 1) and on leaving (sig := 0); the",
      "controller copies sig to cmd; the gate lowers from 90 at rate",
      "[-10, -9] while cmd = 1 and raises at [9, 10] while cmd = 0.",
      "Risk: a train is in the crossing while the gate is off the ground.",
  };
  ModelAst& ast = g.ast;
  ast.params = {{"CUTOFF", 0}};
  ast.discretes = {{"sig", 0, 1, 0, 0}, {"cmd", 0, 1, 0, 0}};

  std::vector<PredNode> init;
  std::vector<PredNode> risk;
  for (int i = 1; i <= m; ++i) {
    std::string pn = "T" + std::to_string(i);
    std::string x = "x" + std::to_string(i);
    ProcessDecl t;
    t.name = pn;
    t.dense_locals = {x};
    t.modes.push_back(mode("far", PredNode::truth(true)));
    t.modes.push_back(
        mode("near", linear({{x, Int(1)}, {"CUTOFF", Int(-1)}}, CmpOp::le, Rational(0))));
    t.modes.push_back(
        mode("cross", linear({{x, Int(1)}, {"CUTOFF", Int(-1)}}, CmpOp::le, Rational(5))));
    t.transitions.push_back(edge("far", "near", PredNode::truth(true),
                                 {set_point(x, Rational(0)), set_point("sig", Rational(1))}));
    t.transitions.push_back(
        edge("near", "cross",
             linear({{x, Int(1)}, {"CUTOFF", Int(-1)}}, CmpOp::ge, Rational(0))));
    t.transitions.push_back(
        edge("cross", "far",
             linear({{x, Int(1)}, {"CUTOFF", Int(-1)}}, CmpOp::ge, Rational(5)),
             {set_point("sig", Rational(0))}));
    ast.processes.push_back(std::move(t));
    init.push_back(mode_at(pn, "far"));
    risk.push_back(all_of({mode_at(pn, "cross"),
                           linear({{"g", Int(-1)}}, CmpOp::lt, Rational(0))}));
  }

  ProcessDecl k;
  k.name = "K";
  k.modes.push_back(mode("idle", PredNode::truth(true)));
  k.modes.push_back(mode("busy", PredNode::truth(true)));
  k.transitions.push_back(
      edge("idle", "busy", value_eq("sig", Rational(1)), {set_point("cmd", Rational(1))}));
  k.transitions.push_back(
      edge("busy", "idle", value_eq("sig", Rational(0)), {set_point("cmd", Rational(0))}));
  ast.processes.push_back(std::move(k));

  ProcessDecl gate;
  gate.name = "G";
  gate.dense_locals = {"g"};
  Interval still = Interval::point(Rational(0));
  gate.modes.push_back(mode("up", PredNode::truth(true), {RateDecl{"g", still, 0}}));
  gate.modes.push_back(mode("lower", linear({{"g", Int(-1)}}, CmpOp::le, Rational(0)),
                            {RateDecl{"g", {Rational(-10), Rational(-9), false, false}, 0}}));
  gate.modes.push_back(mode("down", PredNode::truth(true), {RateDecl{"g", still, 0}}));
  gate.modes.push_back(mode("raise", linear({{"g", Int(1)}}, CmpOp::le, Rational(90)),
                            {RateDecl{"g", {Rational(9), Rational(10), false, false}, 0}}));
  gate.transitions.push_back(edge("up", "lower", value_eq("cmd", Rational(1))));
  gate.transitions.push_back(
      edge("lower", "down", linear({{"g", Int(1)}}, CmpOp::le, Rational(0))));
  gate.transitions.push_back(edge("down", "raise", value_eq("cmd", Rational(0))));
  gate.transitions.push_back(
      edge("raise", "up", linear({{"g", Int(1)}}, CmpOp::ge, Rational(90))));
  ast.processes.push_back(std::move(gate));

  init.push_back(mode_at("K", "idle"));
  init.push_back(mode_at("G", "up"));
  init.push_back(value_eq("g", Rational(90)));
  ast.initially = all_of(std::move(init));
  ast.risk = any_of(std::move(risk));
  return g;
}

// Carrier-sense bus with collision detection, m stations.  A is the
// propagation delay, B the message length (the analysis is run with B
// between 52 and 808).  A station that senses a free bus transmits; a
// second station starting within A of that causes a collision, which the
// bus manager clears once everyone has noticed (2 A).  Risk: a station is
// transmitting while the bus believes it is free.
inline GeneratedModel generate_csma(int m) {
  using namespace detail;
  GeneratedModel g;
  g.name = "csma-" + std::to_string(m);
  g.notes = {
      "CSMA/CD bus arbitration with " + std::to_string(m) + " stations.",
      "bus = 0: free, 1: one sender, 2: collision.  y tracks the time since",
      "the bus last changed state; a collision is only possible within the",
      "propagation delay A, and the manager clears it after 2 A.",
      "Message length B is constrained to [52, 808] in the initial region.",
  };
  ModelAst& ast = g.ast;
  ast.params = {{"A", 0}, {"B", 0}};
  ast.dense_globals = {{"y", 0}};
  ast.discretes = {{"bus", 0, 2, 0, 0}};

  std::vector<PredNode> init{
      linear({{"B", Int(1)}}, CmpOp::ge, Rational(52)),
      linear({{"B", Int(1)}}, CmpOp::le, Rational(808)),
      value_eq("y", Rational(0)),
  };
  std::vector<PredNode> risk;
  for (int i = 1; i <= m; ++i) {
    std::string pn = "S" + std::to_string(i);
    std::string x = "x" + std::to_string(i);
    ProcessDecl s;
    s.name = pn;
    s.dense_locals = {x};
    s.modes.push_back(mode("idle", PredNode::truth(true)));
    s.modes.push_back(
        mode("send", any_of({value_eq("bus", Rational(0)), value_eq("bus", Rational(1)),
                             linear({{"y", Int(1)}, {"A", Int(-1)}}, CmpOp::le, Rational(0))})));
    s.modes.push_back(mode("backoff", PredNode::truth(true)));
    s.transitions.push_back(edge("idle", "send", value_eq("bus", Rational(0)),
                                 {set_point(x, Rational(0)), set_point("bus", Rational(1)),
                                  set_point("y", Rational(0))}));
    s.transitions.push_back(
        edge("idle", "send",
             all_of({value_eq("bus", Rational(1)),
                     linear({{"y", Int(1)}, {"A", Int(-1)}}, CmpOp::lt, Rational(0))}),
             {set_point(x, Rational(0)), set_point("bus", Rational(2)),
              set_point("y", Rational(0))}));
    s.transitions.push_back(
        edge("send", "idle", linear({{x, Int(1)}, {"B", Int(-1)}}, CmpOp::ge, Rational(0)),
             {set_point("bus", Rational(0))}));
    s.transitions.push_back(edge("send", "backoff", value_eq("bus", Rational(2))));
    s.transitions.push_back(edge("backoff", "idle", PredNode::truth(true)));
    ast.processes.push_back(std::move(s));
    init.push_back(mode_at(pn, "idle"));
    init.push_back(value_eq(x, Rational(0)));
    risk.push_back(all_of({mode_at(pn, "send"), value_eq("bus", Rational(0))}));
  }

  ProcessDecl mgr;
  mgr.name = "M";
  mgr.modes.push_back(mode("watch", PredNode::truth(true)));
  mgr.transitions.push_back(
      edge("watch", "watch",
           all_of({value_eq("bus", Rational(2)),
                   linear({{"y", Int(1)}, {"A", Int(-2)}}, CmpOp::ge, Rational(0))}),
           {set_point("bus", Rational(0)), set_point("y", Rational(0))}));
  ast.processes.push_back(std::move(mgr));

  init.push_back(mode_at("M", "watch"));
  ast.initially = all_of(std::move(init));
  ast.risk = any_of(std::move(risk));
  return g;
}

// Parses "family:N" and produces the model; fills `error` on bad input.
inline std::optional<GeneratedModel> generate(std::string_view which,
                                              std::string* error) {
  auto fail = [&](std::string msg) -> std::optional<GeneratedModel> {
    if (error) *error = std::move(msg);
    return std::nullopt;
  };
  auto colon = which.find(':');
  if (colon == std::string_view::npos)
    return fail("expected family:N, e.g. fischer:2");
  std::string family(which.substr(0, colon));
  int m = 0;
  for (char c : which.substr(colon + 1)) {
    if (c < '0' || c > '9' || m > 9999) return fail("bad process count in '" + std::string(which) + "'");
    m = m * 10 + (c - '0');
  }
  if (which.substr(colon + 1).empty()) return fail("missing process count");

  if (family == "fischer") {
    if (m < 2) return fail("fischer needs at least 2 processes");
    return generate_fischer(m);
  }
  if (family == "reactor") {
    if (m < 1) return fail("reactor needs at least 1 rod");
    return generate_reactor(m);
  }
  if (family == "railroad") {
    if (m < 1) return fail("railroad needs at least 1 train");
    return generate_railroad(m);
  }
  if (family == "csma") {
    if (m < 2) return fail("csma needs at least 2 stations");
    return generate_csma(m);
  }
  return fail("unknown model family '" + family + "'");
}

}  // namespace hrd
