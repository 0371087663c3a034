// Resolves a parsed model against its declarations and lowers it onto a
// Space: variables are numbered in declaration order, each process gets a
// hidden discrete mode variable, every non-parameter dense variable gets a
// displacement twin used by the time step, and all predicates (invariants,
// guards, initially, risk) are compiled to diagrams.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hrd/diagram.hpp"
#include "hrd/model.hpp"
#include "hrd/parser.hpp"
#include "hrd/printer.hpp"

namespace hrd {

struct ModeInfo {
  std::string name;
  NodeRef invariant = nullptr;
  // One entry per dense variable owned by the process, defaults filled in.
  std::vector<std::pair<VarId, Interval>> rates;
  int line = 0;
};

struct ProcInfo {
  std::string name;
  DiscreteVarId mode_var{0};
  std::vector<VarId> locals;
  std::vector<ModeInfo> modes;
  // True when every mode carries the same invariant diagram; the invariant
  // block then needs no mode pin.
  bool uniform_invariant = false;
};

struct TransInfo {
  std::uint32_t process = 0;
  DiscreteVal from = 0, to = 0;
  std::string from_name, to_name;
  NodeRef guard = nullptr;
  std::vector<std::pair<VarId, Interval>> dense_sets;
  std::vector<std::pair<DiscreteVarId, DiscreteVal>> discrete_sets;
  int line = 0;
};

namespace detail {

// Name tables shared by validation and lowering. All declared names live in
// one namespace; only mode names are scoped (to their process).
struct SymbolTables {
  enum class Kind { parameter, dense, discrete, process };
  std::map<std::string, Kind> kinds;
  std::map<std::string, int> decl_line;
  std::map<std::string, std::size_t> proc_index;
  std::map<std::string, const DiscreteDecl*> discrete_decl;
  std::vector<std::map<std::string, std::size_t>> mode_index;

  bool declare(const std::string& name, Kind kind, int line,
               std::vector<Diagnostic>& diags) {
    auto [it, fresh] = kinds.try_emplace(name, kind);
    if (!fresh) {
      diags.push_back({line, "'" + name + "' is already declared on line " +
                                 std::to_string(decl_line[name])});
      return false;
    }
    decl_line[name] = line;
    return true;
  }
};

inline SymbolTables collect_symbols(const ModelAst& ast,
                                    std::vector<Diagnostic>& diags) {
  SymbolTables t;
  for (const auto& d : ast.params) {
    t.declare(d.name, SymbolTables::Kind::parameter, d.line, diags);
  }
  for (const auto& d : ast.dense_globals) {
    t.declare(d.name, SymbolTables::Kind::dense, d.line, diags);
  }
  for (const auto& d : ast.discretes) {
    if (t.declare(d.name, SymbolTables::Kind::discrete, d.line, diags)) {
      t.discrete_decl[d.name] = &d;
    }
    if (d.lo > d.hi) {
      diags.push_back({d.line, "discrete '" + d.name + "' has empty domain " +
                                   std::to_string(d.lo) + ".." +
                                   std::to_string(d.hi)});
    } else if (d.init < d.lo || d.init > d.hi) {
      diags.push_back({d.line, "initial value " + std::to_string(d.init) +
                                   " of '" + d.name +
                                   "' lies outside its domain"});
    }
  }
  for (std::size_t i = 0; i < ast.processes.size(); ++i) {
    const auto& proc = ast.processes[i];
    if (t.declare(proc.name, SymbolTables::Kind::process, proc.line, diags)) {
      t.proc_index[proc.name] = i;
    }
    for (const auto& [name, line] : proc.dense_local_lines()) {
      t.declare(name, SymbolTables::Kind::dense, line, diags);
    }
    t.mode_index.emplace_back();
    auto& modes = t.mode_index.back();
    for (std::size_t q = 0; q < proc.modes.size(); ++q) {
      auto [it, fresh] = modes.try_emplace(proc.modes[q].name, q);
      if (!fresh) {
        diags.push_back({proc.modes[q].line,
                         "mode '" + proc.modes[q].name +
                             "' is declared twice in process " + proc.name});
      }
    }
    if (proc.modes.empty()) {
      diags.push_back({proc.line, "process " + proc.name + " has no modes"});
    }
  }
  return t;
}

inline bool is_dense_kind(SymbolTables::Kind k) {
  return k == SymbolTables::Kind::parameter || k == SymbolTables::Kind::dense;
}

inline void check_pred(const SymbolTables& t, const ModelAst& ast,
                       const PredNode& p, std::vector<Diagnostic>& diags) {
  using Kind = SymbolTables::Kind;
  switch (p.kind) {
    case PredNode::Kind::truth:
      break;
    case PredNode::Kind::conj:
    case PredNode::Kind::disj:
      for (const auto& c : p.children) check_pred(t, ast, c, diags);
      break;
    case PredNode::Kind::linear:
      for (const auto& [name, coeff] : p.terms) {
        auto it = t.kinds.find(name);
        if (it == t.kinds.end()) {
          diags.push_back({p.line, "unknown variable '" + name + "'"});
        } else if (!is_dense_kind(it->second)) {
          diags.push_back(
              {p.line, "'" + name + "' cannot appear in a linear term"});
        }
      }
      break;
    case PredNode::Kind::eq_test: {
      auto it = t.kinds.find(p.lhs_name);
      if (it == t.kinds.end()) {
        diags.push_back({p.line, "unknown variable '" + p.lhs_name + "'"});
        break;
      }
      if (it->second == Kind::discrete) {
        const DiscreteDecl* d = t.discrete_decl.at(p.lhs_name);
        if (rat_den(p.rhs) != 1) {
          diags.push_back({p.line, "discrete '" + p.lhs_name +
                                       "' is compared with the non-integer " +
                                       rational_to_string(p.rhs)});
        } else if (rat_num(p.rhs) < d->lo || rat_num(p.rhs) > d->hi) {
          diags.push_back({p.line, "value " + rational_to_string(p.rhs) +
                                       " is outside the domain of '" +
                                       p.lhs_name + "'"});
        }
      } else if (!is_dense_kind(it->second)) {
        diags.push_back(
            {p.line, "'" + p.lhs_name + "' cannot be tested for equality"});
      }
      break;
    }
    case PredNode::Kind::neq_test: {
      auto it = t.kinds.find(p.lhs_name);
      if (it == t.kinds.end()) {
        diags.push_back({p.line, "unknown variable '" + p.lhs_name + "'"});
      } else if (it->second != Kind::discrete) {
        diags.push_back({p.line, "'!=' applies to discrete variables only"});
      } else {
        const DiscreteDecl* d = t.discrete_decl.at(p.lhs_name);
        if (p.int_value < d->lo || p.int_value > d->hi) {
          diags.push_back({p.line, "value " + std::to_string(p.int_value) +
                                       " is outside the domain of '" +
                                       p.lhs_name + "'"});
        }
      }
      break;
    }
    case PredNode::Kind::mode_test: {
      auto it = t.proc_index.find(p.proc_name);
      if (it == t.proc_index.end()) {
        diags.push_back({p.line, "unknown process '" + p.proc_name + "'"});
        break;
      }
      const auto& modes = t.mode_index[it->second];
      if (!modes.count(p.mode_name)) {
        diags.push_back({p.line, "process " + p.proc_name + " has no mode '" +
                                     p.mode_name + "'"});
      }
      break;
    }
  }
}

}  // namespace detail

// Structural checks: declarations are well formed, every name resolves to a
// declaration of the right kind, values fit their domains. Returns an empty
// list when the model can be compiled.
inline std::vector<Diagnostic> validate_model(const ModelAst& ast) {
  std::vector<Diagnostic> diags;
  auto tables = detail::collect_symbols(ast, diags);
  if (!diags.empty()) return diags;  // name tables are unreliable past here

  using Kind = detail::SymbolTables::Kind;
  for (std::size_t i = 0; i < ast.processes.size(); ++i) {
    const auto& proc = ast.processes[i];
    for (const auto& m : proc.modes) {
      detail::check_pred(tables, ast, m.invariant, diags);
      std::vector<std::string> seen;
      for (const auto& r : m.rates) {
        auto it = tables.kinds.find(r.var);
        if (it == tables.kinds.end()) {
          diags.push_back({r.line, "unknown variable '" + r.var + "'"});
          continue;
        }
        if (it->second == Kind::parameter) {
          diags.push_back(
              {r.line, "parameter '" + r.var + "' cannot have a rate"});
          continue;
        }
        if (it->second != Kind::dense) {
          diags.push_back({r.line, "'" + r.var + "' is not a dense variable"});
          continue;
        }
        bool local = false;
        for (const auto& lv : proc.dense_locals) local = local || lv == r.var;
        if (!local) {
          diags.push_back({r.line, "rate for '" + r.var +
                                       "' must be declared in the process "
                                       "that declares the variable"});
        }
        for (const auto& s : seen) {
          if (s == r.var) {
            diags.push_back({r.line, "duplicate rate for '" + r.var + "'"});
          }
        }
        seen.push_back(r.var);
        if (r.range.is_empty()) {
          diags.push_back({r.line, "empty rate interval for '" + r.var + "'"});
        }
        if ((r.range.lo && r.range.lo_open) || (r.range.hi && r.range.hi_open)) {
          diags.push_back({r.line, "rate interval ends must be closed"});
        }
        if (r.range.lo && r.range.hi && *r.range.lo > *r.range.hi) {
          diags.push_back({r.line, "reversed rate interval for '" + r.var + "'"});
        }
      }
    }
    const auto& modes = tables.mode_index[i];
    for (const auto& tr : proc.transitions) {
      if (!modes.count(tr.from)) {
        diags.push_back({tr.line, "process " + proc.name + " has no mode '" +
                                      tr.from + "'"});
      }
      if (!modes.count(tr.to)) {
        diags.push_back({tr.line, "process " + proc.name + " has no mode '" +
                                      tr.to + "'"});
      }
      detail::check_pred(tables, ast, tr.guard, diags);
      std::vector<std::string> assigned;
      for (const auto& a : tr.sets) {
        for (const auto& s : assigned) {
          if (s == a.var) {
            diags.push_back({a.line, "'" + a.var +
                                         "' is assigned twice in one "
                                         "transition"});
          }
        }
        assigned.push_back(a.var);
        auto it = tables.kinds.find(a.var);
        if (it == tables.kinds.end()) {
          diags.push_back({a.line, "unknown variable '" + a.var + "'"});
          continue;
        }
        switch (it->second) {
          case Kind::parameter:
            diags.push_back(
                {a.line, "parameter '" + a.var + "' cannot be assigned"});
            break;
          case Kind::process:
            diags.push_back({a.line, "'" + a.var + "' names a process"});
            break;
          case Kind::dense:
            if (a.value.is_empty()) {
              diags.push_back(
                  {a.line, "empty assignment interval for '" + a.var + "'"});
            }
            break;
          case Kind::discrete: {
            const DiscreteDecl* d = tables.discrete_decl.at(a.var);
            if (!a.value.is_point() || rat_den(*a.value.lo) != 1) {
              diags.push_back({a.line, "discrete '" + a.var +
                                           "' must be assigned a single "
                                           "integer value"});
            } else if (rat_num(*a.value.lo) < d->lo ||
                       rat_num(*a.value.lo) > d->hi) {
              diags.push_back({a.line, "assigned value is outside the domain "
                                       "of '" +
                                           a.var + "'"});
            }
            break;
          }
        }
      }
    }
  }
  detail::check_pred(tables, ast, ast.initially, diags);
  detail::check_pred(tables, ast, ast.risk, diags);
  return diags;
}

// The compiled model: a Space plus resolved processes, transitions and the
// standard blocks the analysis consumes.
class ModelContext {
 public:
  // Validates and lowers `ast`. On failure returns nullptr with the problems
  // appended to `diags`.
  static std::unique_ptr<ModelContext> build(const ModelAst& ast,
                                             OrderingKind ordering,
                                             std::vector<Diagnostic>& diags) {
    auto problems = validate_model(ast);
    if (!problems.empty()) {
      diags.insert(diags.end(), problems.begin(), problems.end());
      return nullptr;
    }
    auto tables = detail::collect_symbols(ast, diags);

    VarSpace vs;
    std::map<std::string, VarId> dense_ids;
    std::map<std::string, DiscreteVarId> discrete_ids;
    for (const auto& d : ast.params) {
      dense_ids[d.name] = vs.add_dense(d.name, 0, true);
    }
    for (const auto& d : ast.dense_globals) {
      dense_ids[d.name] = vs.add_dense(d.name, 0, false);
    }
    for (std::size_t i = 0; i < ast.processes.size(); ++i) {
      for (const auto& name : ast.processes[i].dense_locals) {
        dense_ids[name] =
            vs.add_dense(name, static_cast<std::uint32_t>(i + 1), false);
      }
    }
    for (const auto& d : ast.discretes) {
      discrete_ids[d.name] = vs.add_discrete(d.name, 0, d.lo, d.hi, d.init,
                                             /*is_mode_var=*/false);
    }
    std::vector<DiscreteVarId> mode_vars;
    for (std::size_t i = 0; i < ast.processes.size(); ++i) {
      const auto& proc = ast.processes[i];
      mode_vars.push_back(vs.add_discrete(
          "@" + proc.name, static_cast<std::uint32_t>(i + 1), 0,
          static_cast<DiscreteVal>(proc.modes.size()) - 1, 0,
          /*is_mode_var=*/true));
    }

    auto ctx = std::unique_ptr<ModelContext>(
        new ModelContext(std::move(vs), ordering));
    ctx->ast_ = ast;
    ctx->dense_ids_ = std::move(dense_ids);
    ctx->discrete_ids_ = std::move(discrete_ids);
    ctx->tables_ = std::move(tables);

    for (const auto& [name, id] : ctx->dense_ids_) {
      const auto& info = ctx->vars().dense(id);
      if (info.is_parameter) {
        ctx->params_.push_back(id);
      } else {
        ctx->clocks_.push_back(id);
      }
    }
    std::sort(ctx->params_.begin(), ctx->params_.end());
    std::sort(ctx->clocks_.begin(), ctx->clocks_.end());
    for (VarId v : ctx->clocks_) {
      ctx->delta_of_[v] = ctx->space_.vars().add_delta_for(v);
    }
    ctx->global_delta_ = ctx->space_.vars().add_global_delta();

    for (std::size_t i = 0; i < ast.processes.size(); ++i) {
      const auto& proc = ast.processes[i];
      ProcInfo info;
      info.name = proc.name;
      info.mode_var = mode_vars[i];
      for (const auto& name : proc.dense_locals) {
        info.locals.push_back(ctx->dense_ids_.at(name));
      }
      for (const auto& m : proc.modes) {
        ModeInfo mi;
        mi.name = m.name;
        mi.line = m.line;
        mi.invariant = ctx->compile_pred(m.invariant);
        for (VarId v : info.locals) {
          Interval range = Interval::point(Rational(1));
          for (const auto& r : m.rates) {
            if (ctx->dense_ids_.at(r.var) == v) range = r.range;
          }
          mi.rates.emplace_back(v, range);
        }
        info.modes.push_back(std::move(mi));
      }
      info.uniform_invariant = true;
      for (const auto& m : info.modes) {
        info.uniform_invariant =
            info.uniform_invariant && m.invariant == info.modes[0].invariant;
      }
      ctx->procs_.push_back(std::move(info));

      for (const auto& tr : proc.transitions) {
        TransInfo ti;
        ti.process = static_cast<std::uint32_t>(i);
        ti.from_name = tr.from;
        ti.to_name = tr.to;
        ti.from = static_cast<DiscreteVal>(ctx->tables_.mode_index[i].at(tr.from));
        ti.to = static_cast<DiscreteVal>(ctx->tables_.mode_index[i].at(tr.to));
        ti.guard = ctx->compile_pred(tr.guard);
        ti.line = tr.line;
        for (const auto& a : tr.sets) {
          auto dit = ctx->discrete_ids_.find(a.var);
          if (dit != ctx->discrete_ids_.end()) {
            ti.discrete_sets.emplace_back(
                dit->second, static_cast<DiscreteVal>(rat_num(*a.value.lo)));
          } else {
            ti.dense_sets.emplace_back(ctx->dense_ids_.at(a.var), a.value);
          }
        }
        ctx->trans_.push_back(std::move(ti));
      }
    }

    ctx->init_ = ctx->compile_pred(ast.initially);
    for (const auto& d : ast.discretes) {
      ctx->init_ = ctx->space_.space_intersect(
          ctx->init_,
          ctx->space_.discrete_eq(ctx->discrete_ids_.at(d.name), d.init));
    }
    ctx->risk_ = ctx->compile_pred(ast.risk);

    ctx->invariant_block_ = ctx->space_.top();
    for (std::size_t i = 0; i < ctx->procs_.size(); ++i) {
      ctx->invariant_block_ = ctx->space_.space_intersect(
          ctx->invariant_block_, ctx->process_invariant(i));
    }
    return ctx;
  }

  Space& space() { return space_; }
  const VarSpace& vars() const { return space_.vars(); }
  const ModelAst& ast() const { return ast_; }
  const std::vector<ProcInfo>& processes() const { return procs_; }
  const std::vector<TransInfo>& transitions() const { return trans_; }

  NodeRef init() const { return init_; }
  NodeRef risk() const { return risk_; }
  // Conjunction over processes of (mode pin -> mode invariant).
  NodeRef invariant_block() const { return invariant_block_; }

  const std::vector<VarId>& clocks() const { return clocks_; }
  const std::vector<VarId>& parameters() const { return params_; }

  VarId delta_for(VarId v) const { return delta_of_.at(v); }
  VarId global_delta() const { return global_delta_; }

  NodeRef mode_pin(std::size_t proc, DiscreteVal mode) {
    return space_.discrete_eq(procs_[proc].mode_var, mode);
  }

  // Invariant of one process as a diagram over (mode variable, dense state).
  NodeRef process_invariant(std::size_t proc) {
    const auto& info = procs_[proc];
    if (info.uniform_invariant) return info.modes[0].invariant;
    NodeRef block = space_.bot();
    for (std::size_t q = 0; q < info.modes.size(); ++q) {
      block = space_.set_union(
          block, space_.space_intersect(
                     mode_pin(proc, static_cast<DiscreteVal>(q)),
                     info.modes[q].invariant));
    }
    return block;
  }

  // delta >= 0, the duration variable of a time step.
  NodeRef delta_nonneg() {
    if (!delta_nonneg_) {
      delta_nonneg_ = space_.raw_constraint({Term{global_delta_, Int(-1)}},
                                            Bound::weak(Rational(0)));
    }
    return delta_nonneg_;
  }

  // Ties every clock displacement to the duration: rate interval [a, c]
  // contributes a*delta <= delta_x <= c*delta, guarded by the mode variable
  // when a process declares different rates in different modes.  Global
  // clocks advance at rate one everywhere.
  NodeRef rate_block() {
    if (rate_block_) return rate_block_;
    NodeRef block = space_.top();
    for (VarId x : clocks_) {
      if (vars().dense(x).owner == 0) {
        block = space_.space_intersect(
            block, rate_envelope(x, Interval::point(Rational(1))));
      }
    }
    for (std::size_t p = 0; p < procs_.size(); ++p) {
      const ProcInfo& info = procs_[p];
      if (info.locals.empty()) continue;
      bool uniform = true;
      for (std::size_t q = 1; q < info.modes.size() && uniform; ++q) {
        uniform = info.modes[q].rates == info.modes[0].rates;
      }
      if (uniform) {
        block = space_.space_intersect(block, mode_rates(info.modes[0]));
      } else {
        NodeRef cases = space_.bot();
        for (std::size_t q = 0; q < info.modes.size(); ++q) {
          cases = space_.set_union(
              cases, space_.space_intersect(mode_pin(p, static_cast<DiscreteVal>(q)),
                                            mode_rates(info.modes[q])));
        }
        block = space_.space_intersect(block, cases);
      }
    }
    rate_block_ = block;
    return block;
  }

  std::optional<VarId> dense_id(const std::string& name) const {
    auto it = dense_ids_.find(name);
    if (it == dense_ids_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<DiscreteVarId> discrete_id(const std::string& name) const {
    auto it = discrete_ids_.find(name);
    if (it == discrete_ids_.end()) return std::nullopt;
    return it->second;
  }

 private:
  ModelContext(VarSpace vs, OrderingKind ordering)
      : space_(std::move(vs), ordering) {}

  NodeRef compile_linear(const std::vector<std::pair<std::string, Int>>& terms,
                         CmpOp op, const Rational& rhs) {
    std::vector<Term> ts;
    for (const auto& [name, coeff] : terms) {
      ts.push_back({dense_ids_.at(name), coeff});
    }
    auto negated = [&ts] {
      std::vector<Term> out = ts;
      for (auto& t : out) t.coeff = -t.coeff;
      return out;
    };
    switch (op) {
      case CmpOp::lt:
        return space_.raw_constraint(ts, Bound::strict(rhs));
      case CmpOp::le:
        return space_.raw_constraint(ts, Bound::weak(rhs));
      case CmpOp::ge:
        return space_.raw_constraint(negated(), Bound::weak(-rhs));
      case CmpOp::gt:
        return space_.raw_constraint(negated(), Bound::strict(-rhs));
      case CmpOp::eq:
        return space_.space_intersect(
            space_.raw_constraint(ts, Bound::weak(rhs)),
            space_.raw_constraint(negated(), Bound::weak(-rhs)));
    }
    return space_.top();
  }

  NodeRef compile_pred(const PredNode& p) {
    switch (p.kind) {
      case PredNode::Kind::truth:
        return p.truth_value ? space_.top() : space_.bot();
      case PredNode::Kind::conj: {
        NodeRef r = space_.top();
        for (const auto& c : p.children) {
          r = space_.space_intersect(r, compile_pred(c));
        }
        return r;
      }
      case PredNode::Kind::disj: {
        NodeRef r = space_.bot();
        for (const auto& c : p.children) {
          r = space_.set_union(r, compile_pred(c));
        }
        return r;
      }
      case PredNode::Kind::linear:
        return compile_linear(p.terms, p.op, p.rhs);
      case PredNode::Kind::eq_test: {
        auto dit = discrete_ids_.find(p.lhs_name);
        if (dit != discrete_ids_.end()) {
          return space_.discrete_eq(dit->second,
                                    static_cast<DiscreteVal>(rat_num(p.rhs)));
        }
        return compile_linear({{p.lhs_name, Int(1)}}, CmpOp::eq, p.rhs);
      }
      case PredNode::Kind::neq_test:
        return space_.discrete_neq(discrete_ids_.at(p.lhs_name), p.int_value);
      case PredNode::Kind::mode_test: {
        std::size_t proc = tables_.proc_index.at(p.proc_name);
        DiscreteVarId mv =
            proc < procs_.size() ? procs_[proc].mode_var : mode_var_for(proc);
        return space_.discrete_eq(
            mv,
            static_cast<DiscreteVal>(tables_.mode_index[proc].at(p.mode_name)));
      }
    }
    return space_.top();
  }

  NodeRef mode_rates(const ModeInfo& mi) {
    NodeRef r = space_.top();
    for (const auto& [x, range] : mi.rates) {
      r = space_.space_intersect(r, rate_envelope(x, range));
    }
    return r;
  }

  // Validation guarantees closed finite ends on every declared rate interval,
  // so both envelope halves are weak inequalities.
  NodeRef rate_envelope(VarId x, const Interval& range) {
    VarId dx = delta_of_.at(x);
    VarId dt = global_delta_;
    NodeRef r = space_.top();
    if (range.lo) {
      Int a = rat_num(*range.lo), b = rat_den(*range.lo);
      r = space_.space_intersect(
          r, space_.raw_constraint({Term{dx, -b}, Term{dt, a}},
                                   Bound::weak(Rational(0))));
    }
    if (range.hi) {
      Int c = rat_num(*range.hi), d = rat_den(*range.hi);
      r = space_.space_intersect(
          r, space_.raw_constraint({Term{dx, d}, Term{dt, -c}},
                                   Bound::weak(Rational(0))));
    }
    return r;
  }

  // During construction mode invariants are compiled before procs_ is
  // filled; mode variables are found by owner instead.
  DiscreteVarId mode_var_for(std::size_t proc) const {
    for (std::size_t i = 0; i < vars().discrete_count(); ++i) {
      DiscreteVarId id{static_cast<std::uint32_t>(i)};
      const auto& info = vars().discrete(id);
      if (info.is_mode_var && info.owner == proc + 1) return id;
    }
    assert(false && "mode variable missing");
    return DiscreteVarId{0};
  }

  Space space_;
  ModelAst ast_;
  detail::SymbolTables tables_;
  std::map<std::string, VarId> dense_ids_;
  std::map<std::string, DiscreteVarId> discrete_ids_;
  std::vector<ProcInfo> procs_;
  std::vector<TransInfo> trans_;
  std::vector<VarId> params_, clocks_;
  std::map<VarId, VarId> delta_of_;
  VarId global_delta_{0};
  NodeRef init_ = nullptr, risk_ = nullptr, invariant_block_ = nullptr;
  NodeRef delta_nonneg_ = nullptr, rate_block_ = nullptr;
};

// Convenience wrappers mirroring the shape of the other front door
// operations (Parser::parse and Printer::print).
inline std::optional<ModelAst> parse_model(std::string_view text,
                                           std::vector<Diagnostic>& diags) {
  return Parser::parse(text, diags);
}

inline std::string print_model(const ModelAst& ast) {
  return Printer::print(ast);
}

inline std::unique_ptr<ModelContext> compile_model(
    const ModelAst& ast, OrderingKind ordering,
    std::vector<Diagnostic>& diags) {
  return ModelContext::build(ast, ordering, diags);
}

}  // namespace hrd
