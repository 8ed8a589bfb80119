#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gaussinv;
using namespace oracle;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

KnotDiagram K(const std::string& code) { return parse_as<KnotDiagram>(code); }

}  // namespace

TEST(R1, InsertDelete) {
  const auto unknot = K("knot:");
  const auto k = r1_insert(unknot, Gap{0, 0}, 1, true);
  EXPECT_TRUE(k == K(K1R));
  EXPECT_EQ(r1_delete(k, ChordId{1}).chord_count(), 0u);
  const auto h = r1_insert(unknot, Gap{0, 0}, -1, false);
  EXPECT_EQ(serialize_raw(h), "knot: U1- O1-");
  EXPECT_EQ(error_of([&] { (void)r1_delete(K(VT), ChordId{1}); }), ErrorKind::not_isolated);
  EXPECT_EQ(error_of([&] { (void)r1_insert(K(VT), Gap{0, 5}, 1, true); }), ErrorKind::index_out_of_range);
  EXPECT_EQ(error_of([&] { (void)r1_insert(K(VT), Gap{1, 0}, 1, true); }), ErrorKind::index_out_of_range);
  EXPECT_EQ(error_of([&] { (void)r1_delete(K(VT), ChordId{3}); }), ErrorKind::unknown_chord);
}

TEST(R1, WrapAroundChordIsIsolated) {
  const auto k = K("knot: U1+ O2- U2- O3+ U3+ O1+");
  EXPECT_TRUE(is_isolated(k, 0));
  EXPECT_TRUE(r1_delete(k, ChordId{1}) == K("knot: O1- U1- O2+ U2+"));
  const auto l = parse_as<LongDiagram>("long: U1+ O2+ U2+ O1+");
  EXPECT_FALSE(is_isolated(l, 0));
}

TEST(R2, InsertDelete) {
  const auto e = r2_insert(K("knot:"), Gap{0, 0}, Gap{0, 0}, 1, true);
  EXPECT_EQ(serialize_raw(e), "knot: O1+ O2- U2- U1+");
  EXPECT_TRUE(r2_delete(e, ChordId{1}, ChordId{2}) == K("knot:"));
  const auto p = r2_insert(K(VT), Gap{0, 1}, Gap{0, 3}, -1, false);
  EXPECT_EQ(serialize_raw(p), "knot: O1+ O3- O4+ O2+ U1+ U3- U4+ U2+");
  EXPECT_TRUE(r2_delete(p, ChordId{3}, ChordId{4}) == K(VT));
  EXPECT_EQ(error_of([&] { (void)r2_delete(K(VT), ChordId{1}, ChordId{2}); }), ErrorKind::pattern_not_found);
  EXPECT_EQ(error_of([&] { (void)r2_insert(K(VT), Gap{0, 9}, Gap{0, 0}, 1, false); }), ErrorKind::index_out_of_range);
}

TEST(R2, AcrossHopfComponents) {
  const auto h = parse_as<LinkDiagram>(HOPF);
  for (bool crossed : {false, true}) {
    for (std::size_t i = 0; i <= 2; ++i) {
      for (std::size_t j = 0; j <= 2; ++j) {
        const auto d = r2_insert(h, Gap{0, i}, Gap{1, j}, 1, crossed);
        EXPECT_EQ(linking_poly(d), LaurentPoly::constant(1));
        EXPECT_EQ(fg_polys(d), fg_polys(h));
        EXPECT_EQ(bridge_n_value(d, ChordId{3}), bridge_n_value(d, ChordId{4}));
        EXPECT_TRUE(r2_delete(d, ChordId{3}, ChordId{4}) == h);
      }
    }
  }
}

TEST(R3, BraidRelationInstance) {
  const auto k = K("knot: O1+ O2+ U1+ O3+ U2+ U3+");
  const auto cands = r3_candidates(k);
  ASSERT_EQ(cands.size(), 1u);
  const auto r = r3_apply(k, {ChordId{1}, ChordId{2}, ChordId{3}});
  EXPECT_EQ(serialize_raw(r), "knot: O2+ O1+ O3+ U1+ U3+ U2+");
  EXPECT_TRUE(r3_apply(r, {ChordId{1}, ChordId{2}, ChordId{3}}).same_storage(k));
  EXPECT_EQ(writhe_poly(r), writhe_poly(k));
}

TEST(R3, SignRule) {
  // Same positions, a sign pattern that no oriented triangle realizes.
  const auto k = K("knot: O1+ O2+ U1+ O3- U2+ U3-");
  EXPECT_TRUE(r3_candidates(k).empty());
  EXPECT_EQ(error_of([&] { (void)r3_apply(k, {ChordId{1}, ChordId{2}, ChordId{3}}); }),
            ErrorKind::pattern_not_applicable);
  EXPECT_EQ(error_of([&] { (void)r3_apply(K(VT), {ChordId{1}, ChordId{2}, ChordId{1}}); }),
            ErrorKind::pattern_not_applicable);
}

TEST(R3, InvolutionOnRandomCandidates) {
  Rng rng(51);
  int applied = 0;
  for (int i = 0; i < 2000 && applied < 200; ++i) {
    const auto k = random_diagram<KnotDiagram>(rng, 3 + rng.below(5));
    for (const auto& m : r3_candidates(k)) {
      const std::array<ChordId, 3> ids{ChordId{static_cast<int>(m.chords[0] + 1)},
                                       ChordId{static_cast<int>(m.chords[1] + 1)},
                                       ChordId{static_cast<int>(m.chords[2] + 1)}};
      const auto r = r3_apply(k, ids);
      ASSERT_TRUE(r3_apply(r, ids).same_storage(k));
      ASSERT_EQ(writhe_poly(r), writhe_poly(k));
      ASSERT_EQ(affine_index_poly(r), affine_index_poly(k));
      ++applied;
    }
  }
  EXPECT_GT(applied, 20);
}

TEST(Switch, TwiceIsIdentity) {
  const auto k = K(T3);
  EXPECT_TRUE(switch_crossing(switch_crossing(k, ChordId{2}), ChordId{2}).same_storage(k));
  EXPECT_EQ(serialize_raw(switch_crossing(k, ChordId{1})), "knot: U1- U2+ O3+ O1- O2+ U3+");
  EXPECT_EQ(error_of([&] { (void)switch_crossing(k, ChordId{4}); }), ErrorKind::unknown_chord);
}

TEST(Switch, SelfChordKeepsLinkingPoly) {
  const auto d = parse_as<LinkDiagram>("link: O1+ O2+ U3+ U2+ / U1+ O3+");
  EXPECT_TRUE(d.is_self_chord(1));
  EXPECT_EQ(linking_poly(switch_crossing(d, ChordId{2})), linking_poly(d));
}

TEST(Moves, ChordCounts) {
  Rng rng(52);
  auto k = random_diagram<KnotDiagram>(rng, 4);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_move(k, rng);
    ASSERT_TRUE(a.has_value());
    const auto n = apply_move(k, *a);
    const auto before = static_cast<int>(k.chord_count()), after = static_cast<int>(n.chord_count());
    switch (a->kind) {
      case MoveKind::r1_insert: ASSERT_EQ(after, before + 1); break;
      case MoveKind::r1_delete: ASSERT_EQ(after, before - 1); break;
      case MoveKind::r2_insert: ASSERT_EQ(after, before + 2); break;
      case MoveKind::r2_delete: ASSERT_EQ(after, before - 2); break;
      default: ASSERT_EQ(after, before);
    }
    ASSERT_LE(n.chord_count(), 24u);
    k = n;
  }
}

TEST(Moves, RebaseOnLineDiagramIsRejected) {
  MoveAction a;
  a.kind = MoveKind::rebase;
  a.gap = Gap{0, 1};
  EXPECT_EQ(error_of([&] { (void)apply_move(parse_as<LongDiagram>("long: O1+ U1+"), a); }),
            ErrorKind::invalid_argument);
}

TEST(Walk, ZeroSteps) {
  const auto w = random_walk(K(VT), 42, 0);
  EXPECT_TRUE(w.diagram.same_storage(K(VT)));
  EXPECT_TRUE(w.trace.empty());
}

TEST(Walk, VirtualTrefoilOrbit) {
  const auto vt = K(VT);
  const auto W = writhe_poly(vt);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto w = random_walk(vt, seed, 20);
    ASSERT_EQ(writhe_poly(w.diagram), W) << seed;
  }
}

TEST(Walk, ReplayAndDeterminism) {
  WalkOptions opt;
  opt.allow_switch = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_walk(parse_as<LinkDiagram>(S4), seed, 30, opt);
    const auto b = random_walk(parse_as<LinkDiagram>(S4), seed, 30, opt);
    ASSERT_TRUE(a.diagram.same_storage(b.diagram));
    ASSERT_EQ(a.trace, b.trace);
    ASSERT_TRUE(replay(parse_as<LinkDiagram>(S4), a.trace).same_storage(a.diagram));
    ASSERT_EQ(linking_poly(a.diagram), LaurentPoly::constant(4));
  }
}

TEST(Parity, AxiomsAlongWalks) {
  Rng rng(53);
  for (int t = 0; t < 200; ++t) {
    auto k = random_diagram<KnotDiagram>(rng, rng.below(8));
    for (int s = 0; s < 20; ++s) {
      const auto a = random_move(k, rng);
      if (!a) break;
      const auto n = apply_move(k, *a);
      const auto v = parity_axiom_violation(k, *a, n);
      ASSERT_FALSE(v.has_value()) << *v << " after " << to_string(*a) << " on " << serialize_raw(k);
      k = n;
    }
  }
}

TEST(Parity, DetectsBrokenMove) {
  // Pretend VT arose from K1R by an R1 insertion: chord 1 changes parity and the new chord is odd.
  MoveAction a;
  a.kind = MoveKind::r1_insert;
  const auto v = parity_axiom_violation(K(K1R), a, K(VT));
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("chord 1"), std::string::npos);
}

TEST(Fuzz, ReproducibleAndClean) {
  for (auto kind : {FuzzKind::knot, FuzzKind::flatlong, FuzzKind::link}) {
    FuzzOptions opt;
    opt.seed = 99;
    opt.trials = 100;
    opt.kind = kind;
    const auto a = run_fuzz(opt);
    const auto b = run_fuzz(opt);
    EXPECT_TRUE(a.failures.empty()) << to_text(a);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(a.moves_applied, 100u * 20u);
    opt.seed = 100;
    EXPECT_NE(to_json(run_fuzz(opt)).dump(), to_json(a).dump());
  }
}

TEST(Fuzz, EmptyRun) {
  FuzzOptions opt;
  opt.trials = 0;
  const auto r = run_fuzz(opt);
  EXPECT_EQ(r.moves_applied, 0u);
  EXPECT_EQ(to_json(r)["failures"].size(), 0u);
}
