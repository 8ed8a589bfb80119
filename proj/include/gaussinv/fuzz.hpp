#pragma once

// Randomized invariance trials: a random diagram is walked through random
// Reidemeister moves and every invariant is compared after each step.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussinv/generate.hpp"
#include "gaussinv/knot_invariants.hpp"
#include "gaussinv/link_invariants.hpp"
#include "gaussinv/longflat_invariants.hpp"
#include "gaussinv/moves.hpp"
#include "gaussinv/parity.hpp"
#include "gaussinv/report.hpp"

namespace gaussinv {

enum class FuzzKind { knot, flatlong, link };

inline std::string_view fuzz_kind_name(FuzzKind k) {
  switch (k) {
    case FuzzKind::knot: return "knot";
    case FuzzKind::flatlong: return "flatlong";
    case FuzzKind::link: return "link";
  }
  return "?";
}

inline std::optional<FuzzKind> fuzz_kind_from_name(std::string_view s) {
  if (s == "knot") return FuzzKind::knot;
  if (s == "flatlong") return FuzzKind::flatlong;
  if (s == "link") return FuzzKind::link;
  return std::nullopt;
}

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t steps = 20;
  std::size_t max_chords = 8;
  std::size_t chord_budget = 24;
  FuzzKind kind = FuzzKind::knot;
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::string start;                // code of the starting diagram, as stored
  std::vector<std::string> trace;   // moves up to and including the failing one
  std::string invariant;
  std::string before;
  std::string after;
};

struct FuzzReport {
  FuzzOptions options;
  std::size_t moves_applied = 0;
  std::map<std::string, std::size_t> move_counts;
  std::vector<FuzzFailure> failures;
};

/// Named invariant values; equality of the rendered values is exact equality.
using Snapshot = std::vector<std::pair<std::string, std::string>>;

inline Snapshot snapshot(const KnotDiagram& k) {
  Snapshot s;
  const KnotScalars sc = scalar_invariants(k);
  s.emplace_back("writhe_poly", to_string(writhe_poly(k)));
  s.emplace_back("affine_index_poly", to_string(affine_index_poly(k)));
  s.emplace_back("J", std::to_string(sc.J));
  s.emplace_back("Q", std::to_string(sc.Q));
  for (const auto& [level, p] : f_polys(k)) s.emplace_back("f_" + std::to_string(level), to_string(p));
  return s;
}

inline Snapshot snapshot(const FlatLongDiagram& d) { return {{"flat_writhe_poly", to_string(flat_writhe_poly(d))}}; }

inline Snapshot snapshot(const LinkDiagram& L) {
  const LinkScalars sc = link_scalars(L);
  const FGPair fg = fg_polys(L);
  return {{"two_lk", std::to_string(sc.two_lk)},
          {"span", std::to_string(sc.span)},
          {"F", to_string(fg.F)},
          {"G", to_string(fg.G)},
          {"linking_poly", to_string(linking_poly(L))}};
}

/// Identities that must hold on every single diagram (not only between steps).
inline std::optional<std::string> pointwise_violation(const KnotDiagram& k) {
  const LaurentPoly rhs = poly_shift(affine_index_poly(k) + LaurentPoly::constant(scalar_invariants(k).Q), 1);
  if (!(writhe_poly(k) == rhs)) return "W = (P + Q) t";
  return std::nullopt;
}

inline std::optional<std::string> pointwise_violation(const FlatLongDiagram& d) {
  if (flat_s_value(d) > d.chord_count()) return "s <= chord count";
  return std::nullopt;
}

inline std::optional<std::string> pointwise_violation(const LinkDiagram& L) {
  const LinkScalars sc = link_scalars(L);
  auto [F, G] = raw_fg_polys(L);
  const Integer f1 = poly_eval_at_one(F);
  const Integer g1 = poly_eval_at_one(G);
  if (f1 + g1 != sc.two_lk) return "F(1) + G(1) = 2 lk";
  if (abs(f1 - g1) != sc.span) return "|F(1) - G(1)| = span";
  if (link_s_value(L) > sc.bridge_count) return "s <= bridge count";
  return std::nullopt;
}

namespace detail {

template <Diagram D>
std::optional<FuzzFailure> run_trial(const D& start, Rng& rng, const FuzzOptions& opt, const WalkOptions& walk,
                                     FuzzReport& report) {
  const Snapshot reference = snapshot(start);
  D cur = start;
  FuzzFailure fail;
  fail.start = serialize_raw(start);
  auto failed = [&](std::string invariant, std::string before, std::string after) {
    fail.invariant = std::move(invariant);
    fail.before = std::move(before);
    fail.after = std::move(after);
    return fail;
  };
  if (auto v = pointwise_violation(cur)) return failed(*v, serialize(cur), serialize(cur));
  for (std::size_t step = 0; step < opt.steps; ++step) {
    auto move = random_move(cur, rng, walk);
    if (!move) break;
    D next = apply_move(cur, *move);
    fail.trace.push_back(to_string(*move));
    ++report.moves_applied;
    ++report.move_counts[std::string(move_name(move->kind))];
    if constexpr (D::kind == DiagramKind::knot) {
      if (auto v = parity_axiom_violation(cur, *move, next)) return failed("parity axiom: " + *v, serialize(cur), serialize(next));
    }
    if (auto v = pointwise_violation(next)) return failed(*v, serialize(cur), serialize(next));
    const Snapshot now = snapshot(next);
    if (now != reference) {
      std::string name = "invariant set";
      for (std::size_t i = 0; i < std::min(now.size(), reference.size()); ++i) {
        if (now[i] != reference[i]) {
          name = reference[i].first;
          break;
        }
      }
      return failed(name, serialize(cur), serialize(next));
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

inline FuzzReport run_fuzz(const FuzzOptions& opt) {
  FuzzReport report;
  report.options = opt;
  WalkOptions walk;
  walk.chord_budget = opt.chord_budget;
  walk.allow_switch = opt.kind != FuzzKind::knot;
  walk.switch_self_only = opt.kind == FuzzKind::link;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rng rng(derive_seed(opt.seed, t));
    const std::size_t n = rng.below(std::min(opt.max_chords, opt.chord_budget) + 1);
    std::optional<FuzzFailure> f;
    switch (opt.kind) {
      case FuzzKind::knot: f = detail::run_trial(random_diagram<KnotDiagram>(rng, n), rng, opt, walk, report); break;
      case FuzzKind::flatlong:
        f = detail::run_trial(random_diagram<FlatLongDiagram>(rng, n), rng, opt, walk, report);
        break;
      case FuzzKind::link: f = detail::run_trial(random_link(rng, n), rng, opt, walk, report); break;
    }
    if (f) {
      f->trial = t;
      report.failures.push_back(std::move(*f));
    }
  }
  return report;
}

inline Json to_json(const FuzzReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"start", f.start},
                            {"trace", f.trace},
                            {"invariant", f.invariant},
                            {"before", f.before},
                            {"after", f.after}});
  }
  Json counts = Json::object();
  for (const auto& [k, v] : r.move_counts) counts[k] = v;
  return Json{{"seed", r.options.seed},
              {"trials", r.options.trials},
              {"kind", std::string(fuzz_kind_name(r.options.kind))},
              {"steps", r.options.steps},
              {"max_chords", r.options.max_chords},
              {"moves_applied", r.moves_applied},
              {"move_counts", std::move(counts)},
              {"failures", std::move(failures)}};
}

inline std::string to_text(const FuzzReport& r) {
  std::string out = "fuzz kind=" + std::string(fuzz_kind_name(r.options.kind)) +
                    " seed=" + std::to_string(r.options.seed) + " trials=" + std::to_string(r.options.trials) +
                    " steps=" + std::to_string(r.options.steps) + "\n";
  out += "moves applied: " + std::to_string(r.moves_applied) + "\n";
  for (const auto& [k, v] : r.move_counts) out += "  " + k + ": " + std::to_string(v) + "\n";
  out += "failures: " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures) {
    out += "trial " + std::to_string(f.trial) + " broke " + f.invariant + "\n";
    out += "  start:  " + f.start + "\n";
    for (const auto& m : f.trace) out += "  move:   " + m + "\n";
    out += "  before: " + f.before + "\n";
    out += "  after:  " + f.after + "\n";
  }
  return out;
}

}  // namespace gaussinv
