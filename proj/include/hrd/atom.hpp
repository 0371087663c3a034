#pragma once

// Variable metadata and decision atoms.  A decision atom is either a
// normalized linear expression over dense variables or a finite-domain
// discrete variable (mode variables included); diagram nodes branch on atoms.

#include "hrd/linear_expr.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hrd {

struct DiscreteVarId {
  std::uint32_t index = 0;
  friend bool operator==(DiscreteVarId, DiscreteVarId) = default;
  friend auto operator<=>(DiscreteVarId, DiscreteVarId) = default;
};

using DiscreteVal = std::int64_t;

struct DenseVarInfo {
  std::string name;
  std::uint32_t owner = 0;  // 0 = global, otherwise 1-based process index
  bool is_parameter = false;
  bool is_delta = false;          // displacement variable introduced by time steps
  std::optional<VarId> base;      // for per-variable deltas, the rewritten variable
};

struct DiscreteVarInfo {
  std::string name;
  std::uint32_t owner = 0;  // mode variables belong to their process; declared ones are global
  DiscreteVal lo = 0;
  DiscreteVal hi = 0;
  DiscreteVal init = 0;
  bool is_mode_var = false;
};

// Owns the dense and discrete variable tables of one analysis.  Dense ids are
// issued in declaration order, which fixes the variable order every atom
// ordering iterates over; delta variables are appended after all model
// variables so they never disturb comparisons between model atoms.
class VarSpace {
 public:
  VarId add_dense(std::string name, std::uint32_t owner, bool is_parameter) {
    VarId id{static_cast<std::uint32_t>(dense_.size())};
    dense_.push_back({std::move(name), owner, is_parameter, false, std::nullopt});
    return id;
  }

  VarId add_delta_for(VarId base) {
    const auto& b = dense(base);
    assert(!b.is_parameter);
    VarId id{static_cast<std::uint32_t>(dense_.size())};
    dense_.push_back({b.name + "#d", b.owner, false, true, base});
    return id;
  }

  VarId add_global_delta() {
    VarId id{static_cast<std::uint32_t>(dense_.size())};
    dense_.push_back({"#delta", 0, false, true, std::nullopt});
    return id;
  }

  DiscreteVarId add_discrete(std::string name, std::uint32_t owner, DiscreteVal lo,
                             DiscreteVal hi, DiscreteVal init, bool is_mode_var) {
    if (lo > hi) throw std::invalid_argument("discrete domain is empty: " + name);
    DiscreteVarId id{static_cast<std::uint32_t>(discrete_.size())};
    discrete_.push_back({std::move(name), owner, lo, hi, init, is_mode_var});
    return id;
  }

  const DenseVarInfo& dense(VarId v) const { return dense_.at(v.index); }
  const DiscreteVarInfo& discrete(DiscreteVarId d) const { return discrete_.at(d.index); }
  std::size_t dense_count() const { return dense_.size(); }
  std::size_t discrete_count() const { return discrete_.size(); }

  std::string dense_name(VarId v) const { return dense(v).name; }

 private:
  std::vector<DenseVarInfo> dense_;
  std::vector<DiscreteVarInfo> discrete_;
};

class Atom {
 public:
  static Atom dense(LinearExpr e) { return Atom(std::move(e)); }
  static Atom discrete(DiscreteVarId d) { return Atom(d); }

  bool is_dense() const { return expr_.has_value(); }
  const LinearExpr& expr() const { assert(is_dense()); return *expr_; }
  DiscreteVarId dvar() const { assert(!is_dense()); return dvar_; }

  std::size_t hash() const { return is_dense() ? expr_->hash() : (0xabcd1234u + dvar_.index * 2654435761u); }

  friend bool operator==(const Atom& a, const Atom& b) {
    if (a.is_dense() != b.is_dense()) return false;
    return a.is_dense() ? *a.expr_ == *b.expr_ : a.dvar_ == b.dvar_;
  }

 private:
  explicit Atom(LinearExpr e) : expr_(std::move(e)) {}
  explicit Atom(DiscreteVarId d) : dvar_(d) {}

  std::optional<LinearExpr> expr_;
  DiscreteVarId dvar_{};
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const { return a.hash(); }
};

}  // namespace hrd
