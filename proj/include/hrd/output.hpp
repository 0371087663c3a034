// Serializes analysis results. The unsafe region and its complement are
// reported in disjunctive normal form, either as plain text or as JSON with
// exact rationals (kept as "p/q" strings so nothing is rounded). Both
// renderings are built from the same stringified document, which is what
// keeps them describing the same region.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hrd/engine.hpp"
#include "json.hpp"

namespace hrd {

struct OutputConstraint {
  std::vector<std::pair<std::string, Int>> terms;  // var name, coefficient
  std::string relation;                            // "<" or "<="
  std::string bound;                               // exact rational "p/q"
};

// One conjunction per diagram path. An empty disjunction is the empty
// region; a conjunction without constraints is the whole parameter space.
using OutputConjunct = std::vector<OutputConstraint>;

struct OutputDocument {
  std::string status;
  std::vector<OutputConjunct> unsafe;
  std::vector<OutputConjunct> solutions;
  std::size_t iterations = 0;
  std::size_t peak_nodes = 0;
};

namespace detail {

inline std::vector<OutputConjunct> region_dnf(Space& sp, const VarSpace& vars, NodeRef d) {
  std::vector<OutputConjunct> out;
  sp.each_path(d, [&](const PathAssignment& p) {
    OutputConjunct conj;
    for (const Constraint& row : p.poly.constraints()) {
      OutputConstraint c;
      for (const Term& t : row.expr.terms())
        c.terms.emplace_back(vars.dense_name(t.var), t.coeff);
      c.relation = row.bound.rel_text();
      c.bound = rational_to_string(row.bound.value());
      conj.push_back(std::move(c));
    }
    out.push_back(std::move(conj));
  });
  return out;
}

inline std::string expr_text(const OutputConstraint& c) {
  std::string s;
  bool first = true;
  for (const auto& [name, coeff] : c.terms) {
    Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (first) {
      if (coeff < 0) s += "-";
    } else {
      s += coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.str();
    s += name;
    first = false;
  }
  return s;
}

inline std::string dnf_text(const std::vector<OutputConjunct>& dnf) {
  if (dnf.empty()) return "false";
  std::string s;
  for (const OutputConjunct& conj : dnf) {
    if (!s.empty()) s += " or ";
    if (conj.empty()) {
      s += "true";
      continue;
    }
    bool first = true;
    for (const OutputConstraint& c : conj) {
      if (!first) s += " and ";
      s += expr_text(c) + " " + c.relation + " " + c.bound;
      first = false;
    }
  }
  return s;
}

inline nlohmann::ordered_json dnf_json(const std::vector<OutputConjunct>& dnf) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const OutputConjunct& conj : dnf) {
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    for (const OutputConstraint& c : conj) {
      nlohmann::ordered_json expr = nlohmann::ordered_json::object();
      for (const auto& [name, coeff] : c.terms)
        expr[name] = coeff.convert_to<long long>();
      jc.push_back({{"expression", std::move(expr)},
                    {"relation", c.relation},
                    {"bound", c.bound}});
    }
    arr.push_back(std::move(jc));
  }
  return arr;
}

}  // namespace detail

inline OutputDocument make_document(ModelContext& ctx, const AnalysisResult& r) {
  OutputDocument doc;
  doc.status = to_string(r.status);
  doc.unsafe = detail::region_dnf(ctx.space(), ctx.vars(), r.unsafe_params);
  doc.solutions = detail::region_dnf(ctx.space(), ctx.vars(), r.solutions);
  doc.iterations = r.iterations;
  doc.peak_nodes = r.peak_nodes;
  return doc;
}

inline std::string to_text(const OutputDocument& doc) {
  std::string s;
  s += "status: " + doc.status + "\n";
  s += "unsafe: " + detail::dnf_text(doc.unsafe) + "\n";
  s += "solutions: " + detail::dnf_text(doc.solutions) + "\n";
  s += "iterations: " + std::to_string(doc.iterations) + "\n";
  s += "peak nodes: " + std::to_string(doc.peak_nodes) + "\n";
  return s;
}

inline std::string to_json_text(const OutputDocument& doc) {
  nlohmann::ordered_json j{
      {"status", doc.status},
      {"unsafe", detail::dnf_json(doc.unsafe)},
      {"solutions", detail::dnf_json(doc.solutions)},
      {"stats",
       {{"iterations", doc.iterations}, {"peak_nodes", doc.peak_nodes}}},
  };
  return j.dump(2) + "\n";
}

}  // namespace hrd
