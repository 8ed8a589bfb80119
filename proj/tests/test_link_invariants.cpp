#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gaussinv;
using namespace oracle;

namespace {

LaurentPoly P(std::initializer_list<std::pair<Exponent, long long>> terms, std::int64_t m = 0) {
  return LaurentPoly::from_terms(terms, m);
}

LinkDiagram L(const std::string& code) { return parse_as<LinkDiagram>(code); }

std::vector<LinkDiagram> sample(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<LinkDiagram> v;
  for (int i = 0; i < count; ++i) v.push_back(random_link(rng, rng.below(9)));
  return v;
}

/// Bridge value from the oracle labels, before reduction.
std::int64_t bridge_oracle(const LinkDiagram& d, std::size_t c) {
  const std::array<std::vector<std::int64_t>, 2> lab{link_labels(d, 0), link_labels(d, 1)};
  auto into = [&](Location l) { return l.pos == 0 ? 0 : lab[l.strand][l.pos - 1]; };
  return into(d.head(c)) - into(d.tail(c)) - d.sign(c);
}

}  // namespace

TEST(Link, Scalars) {
  EXPECT_EQ(link_scalars(L(HOPF)), (LinkScalars{2, 0, 2}));
  EXPECT_EQ(link_scalars(L(VHOPF)), (LinkScalars{1, 1, 1}));
  EXPECT_EQ(link_scalars(L(MIX)), (LinkScalars{0, 2, 2}));
  EXPECT_EQ(link_scalars(L("link: O1+ U1+ / O2- U2-")), (LinkScalars{0, 0, 0}));
}

TEST(Link, Labels) {
  EXPECT_EQ(component_labels(L(HOPF), 1), (ComponentLabeling{{1, 0}, 0}));
  EXPECT_EQ(component_labels(L(VHOPF), 1), (ComponentLabeling{{1}, 1}));
  EXPECT_EQ(component_labels(L(MIX), 2), (ComponentLabeling{{-1, -2}, -2}));
  EXPECT_THROW((void)component_labels(L(HOPF), 3), Error);
}

TEST(Link, Coloring) {
  const auto c = coloring(L(HOPF));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->first, component_labels(L(HOPF), 1));
  EXPECT_EQ(c->second, component_labels(L(HOPF), 2));
  EXPECT_FALSE(coloring(L(VHOPF)).has_value());
  EXPECT_FALSE(coloring(L(MIX)).has_value());
}

TEST(Link, BridgeValues) {
  EXPECT_EQ(bridge_n_value(L(HOPF), ChordId{1}), -1);
  EXPECT_EQ(bridge_n_value(L(HOPF), ChordId{2}), 1);
  EXPECT_EQ(bridge_n_value(L(VHOPF), ChordId{1}), 0);
  EXPECT_EQ(bridge_n_value(L(MIX), ChordId{1}), 1);
  EXPECT_EQ(bridge_n_value(L(MIX), ChordId{2}), 1);
  try {
    (void)bridge_n_value(L("link: O1+ U1+ O2+ / U2+"), ChordId{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_bridge);
  }
  EXPECT_THROW((void)bridge_n_value(L(HOPF), ChordId{9}), Error);
}

TEST(Link, FGPolys) {
  const auto [hf, hg] = raw_fg_polys(L(HOPF));
  EXPECT_EQ(hf, P({{-1, 1}}));
  EXPECT_EQ(hg, P({{1, 1}}));
  const auto h = fg_polys(L(HOPF));
  EXPECT_EQ(h.F, LaurentPoly::constant(1));
  EXPECT_EQ(h.G, LaurentPoly::constant(1));
  EXPECT_EQ(h.canonical_shift, 1);

  const auto [sf, sg] = raw_fg_polys(L(S4));
  EXPECT_EQ(sf, P({{-1, 2}}));
  EXPECT_EQ(sg, P({{1, 2}}));
  EXPECT_EQ(fg_polys(L(S4)).F, LaurentPoly::constant(2));
  EXPECT_EQ(fg_polys(L(S4)).G, LaurentPoly::constant(2));

  const auto v = fg_polys(L(VHOPF));
  EXPECT_EQ(v.F, LaurentPoly::constant(1, 1));
  EXPECT_TRUE(v.G.is_zero());
  EXPECT_EQ(v.G.modulus(), 1);

  const auto [mf, mg] = raw_fg_polys(L(MIX));
  EXPECT_EQ(mf, P({{1, 1}}, 2));
  EXPECT_EQ(mg, P({{1, -1}}, 2));
}

TEST(Link, LinkingPoly) {
  EXPECT_EQ(linking_poly(L(HOPF)), LaurentPoly::constant(1));
  EXPECT_EQ(linking_poly(L(S4)), LaurentPoly::constant(4));
  EXPECT_TRUE(linking_poly(L(VHOPF)).is_zero());
  EXPECT_EQ(linking_poly(L(MIX)), LaurentPoly::constant(-1, 2));
  EXPECT_TRUE(linking_poly(L("link: O1+ U1+ / O2- U2-")).is_zero());
}

TEST(Link, Canonicalization) {
  EXPECT_EQ(canonicalize(P({{3, 1}}), P({{-3, 2}})).F, LaurentPoly::constant(1));
  EXPECT_EQ(canonicalize(LaurentPoly(), P({{-3, 2}})).G, LaurentPoly::constant(2));
  EXPECT_EQ(canonicalize(LaurentPoly(), LaurentPoly()).canonical_shift, 0);
  const auto c = canonicalize(P({{0, 1}, {2, 1}}, 3), P({{1, 1}}, 3));
  EXPECT_EQ(c.F, P({{1, 1}, {2, 1}}, 3));
  EXPECT_EQ(c.G, P({{2, 1}}, 3));
  EXPECT_EQ(c.canonical_shift, 2);
}

TEST(Link, ReportJson) {
  const Json j = report(parse(VHOPF));
  EXPECT_EQ(j["lk"], "1/2");
  EXPECT_EQ(j["two_lk"], 1);
  EXPECT_EQ(j["span"], 1);
  EXPECT_EQ(j["linking_poly"].dump(), R"({"modulus":1,"terms":[]})");
  EXPECT_EQ(report(parse(HOPF))["lk"], 1);
  EXPECT_NE(report_text(report(parse(VHOPF))).find("lk = 1/2"), std::string::npos);
}

TEST(LinkProperty, MatchesOracles) {
  for (const auto& d : sample(41, 200)) {
    const auto s = link_scalars(d);
    ASSERT_EQ(s.two_lk, two_lk(d));
    ASSERT_EQ(s.span, span(d));
    const auto a = component_labels(d, 1);
    const auto b = component_labels(d, 2);
    ASSERT_EQ(a.values, link_labels(d, 0));
    ASSERT_EQ(b.values, link_labels(d, 1));
    ASSERT_EQ(a.defect, -b.defect);
    ASSERT_EQ(s.span, a.defect < 0 ? -a.defect : a.defect);
    ASSERT_EQ(coloring(d).has_value(), s.span == 0);
    for (std::size_t c = 0; c < d.chord_count(); ++c) {
      if (d.is_self_chord(c)) continue;
      std::int64_t want = bridge_oracle(d, c);
      if (s.span > 0) want = ((want % s.span) + s.span) % s.span;
      ASSERT_EQ(bridge_n_value(d, ChordId{static_cast<int>(c + 1)}), want);
    }
  }
}

TEST(LinkProperty, EvaluationIdentities) {
  for (const auto& d : sample(42, 200)) {
    const auto s = link_scalars(d);
    const auto fg = fg_polys(d);
    const Integer f1 = poly_eval_at_one(fg.F), g1 = poly_eval_at_one(fg.G);
    ASSERT_EQ(f1 + g1, s.two_lk);
    ASSERT_EQ(abs(f1 - g1), s.span);
    ASSERT_LE(link_s_value(d), s.bridge_count);
    ASSERT_EQ(fg.F.modulus(), s.span);
  }
}

TEST(LinkProperty, RebaseAndRecoloring) {
  for (const auto& d : sample(43, 100)) {
    const auto fg = fg_polys(d);
    const auto lp = linking_poly(d);
    const auto [F, G] = raw_fg_polys(d);
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t k = 0; k < d.strand(s).size(); ++k) {
        const auto r = rebase(d, s, k);
        const auto [F2, G2] = raw_fg_polys(r);
        ASSERT_TRUE(shift_equivalent_pair(F, G, F2, G2));
        ASSERT_EQ(fg_polys(r), fg);
        ASSERT_EQ(linking_poly(r), lp);
      }
    }
  }
}

TEST(LinkProperty, SymmetryLaws) {
  auto same_up_to_shift = [](const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a == b;
    return poly_shift_equivalent(a, b).has_value();
  };
  for (const auto& d : sample(44, 100)) {
    const auto [F, G] = raw_fg_polys(d);
    const auto inv = raw_fg_polys(inverse(d));
    ASSERT_TRUE(same_up_to_shift(inv.first, poly_invert_variable(F)));
    ASSERT_TRUE(same_up_to_shift(inv.second, poly_invert_variable(G)));
    ASSERT_EQ(linking_poly(inverse(d)), poly_invert_variable(linking_poly(d)));
    const auto mir = raw_fg_polys(mirror(d));
    ASSERT_TRUE(same_up_to_shift(mir.first, -poly_invert_variable(G)));
    ASSERT_TRUE(same_up_to_shift(mir.second, -poly_invert_variable(F)));
    ASSERT_EQ(linking_poly(mirror(d)), poly_invert_variable(linking_poly(d)));
  }
}

TEST(LinkProperty, SelfSwitchInvariance) {
  Rng rng(45);
  for (const auto& d : sample(45, 200)) {
    std::vector<int> self;
    for (std::size_t c = 0; c < d.chord_count(); ++c)
      if (d.is_self_chord(c)) self.push_back(static_cast<int>(c + 1));
    if (self.empty()) continue;
    const auto s = switch_crossing(d, ChordId{self[rng.below(self.size())]});
    ASSERT_EQ(fg_polys(s), fg_polys(d));
    ASSERT_EQ(linking_poly(s), linking_poly(d));
    ASSERT_EQ(link_scalars(s), link_scalars(d));
  }
}

TEST(LinkProperty, TorusLinks) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto t = torus_link(n);
    EXPECT_EQ(link_scalars(t).two_lk, static_cast<std::int64_t>(2 * n));
    EXPECT_EQ(link_scalars(t).span, 0);
    EXPECT_EQ(linking_poly(t), LaurentPoly::constant(static_cast<long long>(n * n)));
  }
  EXPECT_TRUE(torus_link(1) == L(HOPF));
  EXPECT_TRUE(torus_link(2) == L(S4));
}
