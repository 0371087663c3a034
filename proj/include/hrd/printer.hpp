// Renders a ModelAst back to the text format understood by Parser. Printing
// then reparsing then printing again yields byte-identical text, which the
// tests rely on.
#pragma once

#include <string>

#include "hrd/model.hpp"

namespace hrd {

class Printer {
 public:
  static std::string print(const ModelAst& ast) {
    Printer p;
    p.model(ast);
    return std::move(p.out_);
  }

  static std::string print_pred(const PredNode& p) {
    Printer pr;
    pr.pred(p, false);
    return std::move(pr.out_);
  }

  static std::string print_interval(const Interval& iv) {
    Printer pr;
    pr.interval(iv);
    return std::move(pr.out_);
  }

 private:
  void emit(std::string_view s) { out_ += s; }

  void rational(const Rational& r) { out_ += rational_to_string(r); }

  void interval(const Interval& iv) {
    emit(iv.lo && !iv.lo_open ? "[" : "(");
    if (iv.lo) {
      rational(*iv.lo);
    } else {
      emit("-inf");
    }
    emit(", ");
    if (iv.hi) {
      rational(*iv.hi);
    } else {
      emit("inf");
    }
    emit(iv.hi && !iv.hi_open ? "]" : ")");
  }

  void terms(const std::vector<std::pair<std::string, Int>>& ts) {
    bool first = true;
    for (const auto& [name, coeff] : ts) {
      Int mag = coeff < 0 ? Int(-coeff) : coeff;
      if (first) {
        if (coeff < 0) emit("-");
      } else {
        emit(coeff < 0 ? " - " : " + ");
      }
      if (mag != 1) out_ += mag.str();
      emit(name);
      first = false;
    }
  }

  // `parenthesize` is set when the parent is a conjunction and this child is
  // a disjunction, the one case where precedence needs help.
  void pred(const PredNode& p, bool parenthesize) {
    switch (p.kind) {
      case PredNode::Kind::truth:
        emit(p.truth_value ? "true" : "false");
        break;
      case PredNode::Kind::conj: {
        bool first = true;
        for (const auto& c : p.children) {
          if (!first) emit(" and ");
          pred(c, c.kind == PredNode::Kind::disj);
          first = false;
        }
        break;
      }
      case PredNode::Kind::disj: {
        if (parenthesize) emit("(");
        bool first = true;
        for (const auto& c : p.children) {
          if (!first) emit(" or ");
          pred(c, false);
          first = false;
        }
        if (parenthesize) emit(")");
        break;
      }
      case PredNode::Kind::linear:
        terms(p.terms);
        emit(" ");
        emit(cmp_text(p.op));
        emit(" ");
        rational(p.rhs);
        break;
      case PredNode::Kind::eq_test:
        emit(p.lhs_name);
        emit(" = ");
        rational(p.rhs);
        break;
      case PredNode::Kind::neq_test:
        emit(p.lhs_name);
        emit(" != ");
        out_ += std::to_string(p.int_value);
        break;
      case PredNode::Kind::mode_test:
        emit(p.proc_name);
        emit("@");
        emit(p.mode_name);
        break;
    }
  }

  void model(const ModelAst& ast) {
    for (const auto& d : ast.params) {
      emit("param ");
      emit(d.name);
      emit(";\n");
    }
    for (const auto& d : ast.dense_globals) {
      emit("dense ");
      emit(d.name);
      emit(";\n");
    }
    for (const auto& d : ast.discretes) {
      emit("discrete ");
      emit(d.name);
      emit(" in ");
      out_ += std::to_string(d.lo);
      emit("..");
      out_ += std::to_string(d.hi);
      emit(" init ");
      out_ += std::to_string(d.init);
      emit(";\n");
    }
    for (const auto& proc : ast.processes) {
      emit("\nprocess ");
      emit(proc.name);
      emit(" {\n");
      for (const auto& v : proc.dense_locals) {
        emit("  dense ");
        emit(v);
        emit(";\n");
      }
      for (const auto& m : proc.modes) {
        emit("\n  mode ");
        emit(m.name);
        emit(" {\n    inv ");
        pred(m.invariant, false);
        emit(";\n");
        for (const auto& r : m.rates) {
          emit("    rate ");
          emit(r.var);
          emit(" in ");
          interval(r.range);
          emit(";\n");
        }
        emit("  }\n");
      }
      for (const auto& t : proc.transitions) {
        emit("\n  trans ");
        emit(t.from);
        emit(" -> ");
        emit(t.to);
        emit(" {\n    guard ");
        pred(t.guard, false);
        emit(";\n");
        for (const auto& a : t.sets) {
          emit("    set ");
          emit(a.var);
          emit(" := ");
          interval(a.value);
          emit(";\n");
        }
        emit("  }\n");
      }
      emit("}\n");
    }
    emit("\ninitially ");
    pred(ast.initially, false);
    emit(";\nrisk ");
    pred(ast.risk, false);
    emit(";\n");
  }

  std::string out_;
};

}  // namespace hrd
