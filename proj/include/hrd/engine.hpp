// Reachability fixpoints and parametric analysis.  The backward engine
// iterates Z ↦ time(risk) ∪ ⋃_e time(xtion(Z,e)) to its least fixpoint; the
// forward engine is the dual over post-operators.  The PSPSC variant prunes
// each new frontier against the parameter valuations already known unsafe
// and against the explored region, accumulating the parameter projection
// incrementally; by Lemma-style precision it returns the same solutions.
//
// Every frontier is normalized before use, so fixpoint detection is a node
// identity check: an empty (false) frontier means nothing new was found,
// and drop_infeasible is complete, so emptiness is never missed.

#pragma once

#include <cassert>
#include <chrono>
#include <ostream>
#include <vector>

#include "hrd/compile.hpp"
#include "hrd/normalize.hpp"
#include "hrd/wp.hpp"

namespace hrd {

enum class Direction { backward, forward };
enum class AnalysisStatus { converged, iteration_limit };

inline const char* to_string(Direction d) {
  return d == Direction::backward ? "backward" : "forward";
}
inline const char* to_string(AnalysisStatus s) {
  return s == AnalysisStatus::converged ? "CONVERGED" : "ITERATION_LIMIT";
}

struct AnalysisConfig {
  Direction direction = Direction::backward;
  bool pspsc = false;
  OrderingKind ordering = OrderingKind::coefficient;
  std::size_t max_iterations = 0;  // 0 = unbounded
  bool emit_stats = false;
};

struct IterationStat {
  std::size_t iteration = 0;
  std::size_t frontier_paths = 0;
  std::size_t store_nodes = 0;
};

struct AnalysisResult {
  AnalysisStatus status = AnalysisStatus::converged;
  NodeRef reach = nullptr;          // explored state set (fixpoint accumulator)
  NodeRef unsafe_params = nullptr;  // parameter atoms only
  NodeRef solutions = nullptr;      // complement of unsafe_params
  std::size_t iterations = 0;
  std::size_t peak_nodes = 0;
  std::vector<IterationStat> per_iteration;
  double wall_seconds = 0.0;
};

class Engine {
 public:
  // The context's ordering is authoritative; the config's ordering field is
  // for the caller that constructed the context.
  Engine(ModelContext& ctx, const AnalysisConfig& cfg, std::ostream* stats_out = nullptr)
      : ctx_(ctx), cfg_(cfg), norm_(ctx.space()), stats_out_(stats_out) {
    assert(cfg.ordering == ctx.space().ordering());
  }

  AnalysisResult run() {
    auto started = std::chrono::steady_clock::now();
    AnalysisResult r;
    if (cfg_.pspsc) {
      assert(cfg_.direction == Direction::backward);
      r = pspsc_loop();
    } else {
      r = plain_loop();
    }
    r.peak_nodes = ctx_.space().node_count();
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return r;
  }

  // I ⊓ reach (backward) or reach ⊓ risk (forward), projected onto the
  // parameters: every non-parameter dense variable is existentially
  // eliminated (closure first, so derivable parameter constraints survive),
  // then every discrete atom is dropped.
  NodeRef project_params(NodeRef d) {
    Space& sp = ctx_.space();
    NodeRef cur = detail::prune_infeasible(sp, d);
    for (std::size_t i = 0; i < ctx_.vars().dense_count(); ++i) {
      VarId v{static_cast<std::uint32_t>(i)};
      if (!ctx_.vars().dense(v).is_parameter)
        cur = detail::prune_infeasible(sp, exists_elim(sp, cur, v));
    }
    for (std::size_t i = 0; i < ctx_.vars().discrete_count(); ++i) {
      cur = discrete_del(sp, cur, DiscreteVarId{static_cast<std::uint32_t>(i)});
    }
    return norm_.normalize(cur);
  }

  Normalizer& normalizer() { return norm_; }

 private:
  NodeRef step(NodeRef frontier, const TransInfo& t) {
    if (cfg_.direction == Direction::backward) {
      return wp_time(ctx_, wp_xtion(ctx_, frontier, t));
    }
    return post_time(ctx_, post_xtion(ctx_, frontier, t));
  }

  NodeRef seed() {
    if (cfg_.direction == Direction::backward) {
      return norm_.normalize(wp_time(ctx_, ctx_.risk()));
    }
    return norm_.normalize(post_time(ctx_, ctx_.init()));
  }

  void record(AnalysisResult& r, std::size_t iter, NodeRef frontier) {
    IterationStat st{iter, ctx_.space().path_count(frontier), ctx_.space().node_count()};
    r.per_iteration.push_back(st);
    if (cfg_.emit_stats && stats_out_) {
      *stats_out_ << "iteration " << st.iteration << ": frontier-paths "
                  << st.frontier_paths << " store-nodes " << st.store_nodes << "\n";
    }
  }

  bool capped(std::size_t iter) const {
    return cfg_.max_iterations != 0 && iter >= cfg_.max_iterations;
  }

  // The fixpoint test is node identity of the normalized accumulator; the
  // next frontier is the representation-level difference, which drops the
  // frontier parts already recorded in the accumulator without paying for a
  // full complement of the explored set.
  AnalysisResult plain_loop() {
    Space& sp = ctx_.space();
    AnalysisResult r;
    NodeRef frontier = seed();
    NodeRef reach = frontier;
    record(r, 0, frontier);
    while (frontier != sp.bot()) {
      if (capped(r.iterations)) {
        r.status = AnalysisStatus::iteration_limit;
        break;
      }
      ++r.iterations;
      NodeRef next = sp.bot();
      for (const TransInfo& t : ctx_.transitions()) {
        next = sp.set_union(next, norm_.normalize(step(frontier, t)));
      }
      NodeRef grown = norm_.normalize(sp.set_union(reach, next));
      frontier = grown == reach ? sp.bot() : sp.set_exclude(grown, reach);
      reach = grown;
      record(r, r.iterations, frontier);
    }
    r.reach = reach;
    NodeRef hit = cfg_.direction == Direction::backward
                      ? sp.space_intersect(ctx_.init(), reach)
                      : sp.space_intersect(reach, ctx_.risk());
    r.unsafe_params = project_params(hit);
    r.solutions = norm_.normalize(sp.complement(r.unsafe_params));
    return r;
  }

  // Pruned variant: each new frontier is cut down by the complement of the
  // parameter region collected so far (a genuine complement, cheap because
  // params holds only parameter atoms) and by the explored set (the same
  // accumulator difference as the plain loop).  The initial frontier's
  // parameter contribution is recorded before the first pruning, otherwise
  // a risk region meeting I immediately could be pruned and never reported.
  AnalysisResult pspsc_loop() {
    Space& sp = ctx_.space();
    AnalysisResult r;
    NodeRef frontier = seed();
    NodeRef explored = frontier;
    NodeRef params = norm_.normalize(
        project_params(sp.space_intersect(ctx_.init(), frontier)));
    record(r, 0, frontier);
    while (frontier != sp.bot()) {
      if (capped(r.iterations)) {
        r.status = AnalysisStatus::iteration_limit;
        break;
      }
      ++r.iterations;
      NodeRef next = sp.bot();
      for (const TransInfo& t : ctx_.transitions()) {
        next = sp.set_union(next, norm_.normalize(step(frontier, t)));
      }
      next = norm_.normalize(sp.space_intersect(next, sp.complement(params)));
      NodeRef grown = norm_.normalize(sp.set_union(explored, next));
      frontier = grown == explored ? sp.bot() : sp.set_exclude(grown, explored);
      explored = grown;
      params = norm_.normalize(sp.set_union(
          params, project_params(sp.space_intersect(ctx_.init(), frontier))));
      record(r, r.iterations, frontier);
    }
    r.reach = explored;
    r.unsafe_params = params;
    r.solutions = norm_.normalize(sp.complement(params));
    return r;
  }

  ModelContext& ctx_;
  AnalysisConfig cfg_;
  Normalizer norm_;
  std::ostream* stats_out_;
};

}  // namespace hrd
