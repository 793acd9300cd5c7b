#include <gtest/gtest.h>

#include "vortex/pairs.hpp"

using namespace vortex;

namespace {

FormalObject B(int r, int d, bool phi = false) { return FormalObject::block(r, d, phi); }
FormalPair P(FormalObject o) { return FormalPair::from(std::move(o)); }

ModuliInput make(int R, int d, int g = 2) {
  ModuliInput in;
  in.rank = R;
  in.degree = d;
  in.genus = g;
  return in;
}

// E_phi -> E -> block, the nonsplit unstable-side representative.
const FormalPair kExtUp = P(FormalObject::ext(B(1, 1, true), B(2, 6)));
// block -> E -> E_phi, the stable-side representative.
const FormalPair kExtDown = P(FormalObject::ext(B(2, 6), B(1, 1, true)));
const FormalPair kFixed = P(FormalObject::sum({B(1, 1, true), B(2, 6)}));

}  // namespace

TEST(FormalObject, Construction) {
  EXPECT_THROW(B(0, 1), InvalidInput);
  EXPECT_THROW(B(1, -1, true), InvalidInput);
  EXPECT_NO_THROW(B(2, -1, true));
  EXPECT_THROW(FormalObject::sum({B(1, 1)}), InvalidInput);
  const auto split = FormalObject::ext(B(1, 1, true), B(2, 6), true);
  EXPECT_EQ(split.kind(), FormalObject::Kind::sum);
  EXPECT_EQ(split, kFixed.object);
  const auto nested = FormalObject::sum({B(1, 1), FormalObject::sum({B(1, 2), B(1, 3)})});
  EXPECT_EQ(nested.summands().size(), 3u);
  EXPECT_EQ(nested.rank(), 3);
  EXPECT_EQ(nested.degree(), 6);
  EXPECT_THROW(FormalPair::from(FormalObject::sum({B(1, 1, true), B(1, 2, true)})), InvalidInput);
  EXPECT_EQ(kExtUp.object.to_string(), "Ext(B(1,1,phi) -> B(2,6))");
  EXPECT_TRUE(kExtUp.has_phi);
  EXPECT_FALSE(P(B(2, 6)).has_phi);
}

TEST(Pairs, VisibleSubobjects) {
  EXPECT_EQ(visible_subobjects(P(B(2, 6))), (std::vector<SubobjectRecord>{{2, 6, false}}));
  EXPECT_EQ(visible_subobjects(kExtUp), (std::vector<SubobjectRecord>{{1, 1, true}, {3, 7, true}}));
  EXPECT_EQ(visible_subobjects(kFixed),
            (std::vector<SubobjectRecord>{{1, 1, true}, {2, 6, false}, {3, 7, true}}));
  EXPECT_EQ(visible_subobjects(kExtDown), (std::vector<SubobjectRecord>{{2, 6, false}, {3, 7, true}}));
}

TEST(Pairs, StabilityInterval) {
  auto iv = stability_interval(kFixed);
  EXPECT_EQ(iv.mu_plus, Rational(3));
  EXPECT_EQ(iv.mu_minus, Rational(3));
  EXPECT_FALSE(iv.stable);
  EXPECT_FALSE(iv.approximate);

  iv = stability_interval(kExtUp);
  EXPECT_EQ(iv.mu_plus, Rational(7, 3));
  EXPECT_EQ(iv.mu_minus, Rational(3));
  EXPECT_TRUE(iv.stable);
  EXPECT_TRUE(iv.approximate);

  iv = stability_interval(kExtDown);
  EXPECT_EQ(iv.mu_plus, Rational(3));
  EXPECT_FALSE(iv.mu_minus.has_value());
  EXPECT_TRUE(iv.approximate);

  // phi = 0: E'' = 0 admitted, so mu_minus <= mu(E)
  iv = stability_interval(P(FormalObject::sum({B(1, 2), B(1, 3)})));
  EXPECT_EQ(iv.mu_plus, Rational(3));
  EXPECT_EQ(iv.mu_minus, Rational(2));
}

TEST(Pairs, TauStability) {
  EXPECT_FALSE(is_tau_stable(kFixed, Rational(3), true));
  EXPECT_TRUE(is_tau_stable(kFixed, Rational(3), false));
  EXPECT_TRUE(is_tau_stable(kExtUp, Rational(8, 3), true));
  EXPECT_FALSE(is_tau_stable(kExtUp, Rational(7, 3), true));
  EXPECT_TRUE(is_tau_stable(kExtDown, Rational(4), true));
  EXPECT_FALSE(is_tau_stable(kExtDown, Rational(3), true));
}

TEST(Pairs, GrMinus) {
  EXPECT_EQ(gr_minus(kExtUp), (Grading{{1, 1, {2}}, {Rational(3), WallKind::interior}}));
  const auto two = P(FormalObject::ext(B(1, 1, true), FormalObject::sum({B(1, 3), B(1, 3)})));
  EXPECT_EQ(gr_minus(two).signature, StratumSignature(1, 1, {1, 1}));
  EXPECT_EQ(gr_minus(two).wall.value, Rational(3));
  try {
    (void)gr_minus(kExtDown);
    FAIL();
  } catch (const Indeterminate& e) {
    EXPECT_NE(std::string(e.what()).find("gr- indeterminate"), std::string::npos);
  }
  // quotient is itself a nonsplit extension of slope-3 pieces
  const auto tangled = P(FormalObject::ext(B(1, 1, true), FormalObject::ext(B(1, 3), B(1, 3))));
  EXPECT_THROW((void)gr_minus(tangled), Indeterminate);
}

TEST(Pairs, GrPlus) {
  EXPECT_EQ(gr_plus(kExtDown), (Grading{{1, 1, {2}}, {Rational(3), WallKind::interior}}));
  EXPECT_EQ(gr_plus(kFixed), (Grading{{1, 1, {2}}, {Rational(3), WallKind::interior}}));
  try {
    (void)gr_plus(kExtUp);
    FAIL();
  } catch (const Indeterminate& e) {
    EXPECT_NE(std::string(e.what()).find("Seshadri data indeterminate"), std::string::npos);
  }
}

TEST(Pairs, FlowLimits) {
  EXPECT_EQ(flow_limit(kExtDown, FlowDirection::down).signature, StratumSignature(1, 1, {2}));
  EXPECT_EQ(flow_limit(kExtUp, FlowDirection::up).signature, StratumSignature(1, 1, {2}));
  for (auto dir : {FlowDirection::up, FlowDirection::down}) {
    const auto g = flow_limit(kFixed, dir);
    EXPECT_EQ(canonical_split_pair(g.signature, g.wall.value).object, kFixed.object);
  }
}

TEST(Pairs, FixedPointWall) {
  auto w = fixed_point_wall(kFixed);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->value, Rational(3));
  EXPECT_EQ(w->kind, WallKind::interior);
  EXPECT_FALSE(fixed_point_wall(kExtUp).has_value());
  EXPECT_FALSE(fixed_point_wall(P(B(2, 5, true))).has_value());
  // blocks of unequal slope
  EXPECT_FALSE(fixed_point_wall(P(FormalObject::sum({B(1, 1, true), B(1, 3), B(1, 4)}))).has_value());
  // section block violating (iii)
  EXPECT_FALSE(fixed_point_wall(P(FormalObject::sum({B(1, 4, true), B(1, 3)}))).has_value());
  // phi = 0 polystable bundle sits at the minimum
  w = fixed_point_wall(P(FormalObject::sum({B(1, 3), B(1, 3)})));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, WallKind::min);
}

TEST(Pairs, MinimalSubobjectLemma) {
  auto rep = check_lemma_4_7(kExtUp, {1, 1, true});
  EXPECT_TRUE(rep.clause_i);
  EXPECT_TRUE(rep.clause_ii);
  EXPECT_TRUE(rep.clause_v);
  EXPECT_EQ(rep.details.size(), 3u);
  rep = check_lemma_4_7(kFixed, {1, 1, true});
  EXPECT_TRUE(rep.clause_v);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_THROW(check_lemma_4_7(kExtUp, {3, 7, true}), InvalidInput);
  EXPECT_THROW(check_lemma_4_7(kFixed, {2, 6, false}), InvalidInput);
}

TEST(Pairs, CanonicalSplitPairsAcrossWalls) {
  for (auto [R, d] : {std::pair{2, 5}, {3, 7}, {4, 13}, {4, 14}}) {
    const auto in = make(R, d);
    for (const auto& w : critical_values(in)) {
      for (const auto& sig : enumerate_signatures(in, w)) {
        const auto pair = canonical_split_pair(sig, w.value);
        const auto iv = stability_interval(pair);
        EXPECT_EQ(iv.mu_plus, w.value) << sig.to_string();
        ASSERT_TRUE(iv.mu_minus.has_value());
        EXPECT_EQ(*iv.mu_minus, w.value);
        EXPECT_TRUE(is_tau_stable(pair, w.value, false));
        EXPECT_FALSE(is_tau_stable(pair, w.value, true));
        const auto fp = fixed_point_wall(pair);
        ASSERT_TRUE(fp.has_value()) << sig.to_string();
        EXPECT_EQ(*fp, w);
        EXPECT_EQ(gr_plus(pair), (Grading{sig, w}));
        EXPECT_EQ(gr_minus(pair), (Grading{sig, w}));
      }
    }
  }
}

TEST(Pairs, TwoStepExtensionsRoundTrip) {
  for (auto [R, d] : {std::pair{2, 5}, {3, 7}, {3, 8}, {4, 13}}) {
    const auto in = make(R, d);
    for (const auto& w : critical_values(in)) {
      if (w.kind != WallKind::interior) continue;
      for (const auto& sig : enumerate_signatures(in, w)) {
        if (sig.block_count() != 1) continue;
        const int r_s = sig.ranks.front();
        const auto phi_block = B(sig.r_phi, sig.d_phi, true);
        const auto s_block = B(r_s, sig.summand_degrees(w.value).front());

        const auto up = P(FormalObject::ext(phi_block, s_block));
        const auto iv = stability_interval(up);
        EXPECT_EQ(iv.mu_plus, Rational(d, R));
        EXPECT_EQ(iv.mu_minus, w.value);
        EXPECT_TRUE(iv.stable);
        EXPECT_EQ(gr_minus(up), (Grading{sig, w}));
        EXPECT_EQ(flow_limit(up, FlowDirection::up), (Grading{sig, w}));
        EXPECT_TRUE(check_lemma_4_7(up, {sig.r_phi, sig.d_phi, true}).all_pass());

        const auto down = P(FormalObject::ext(s_block, phi_block));
        EXPECT_EQ(gr_plus(down), (Grading{sig, w}));
        EXPECT_EQ(flow_limit(down, FlowDirection::down), (Grading{sig, w}));
      }
    }
  }
}

TEST(Pairs, VisibleLatticeMonotonicity) {
  const std::vector<FormalObject> bases = {
      FormalObject::sum({B(1, 1, true), B(2, 6)}),
      FormalObject::sum({B(1, 2, true), B(1, 3), B(1, 5)}),
      FormalObject::sum({B(2, 3, true), B(1, 4)}),
      FormalObject::sum({B(1, 2), B(2, 3)}),
  };
  for (const auto& base : bases) {
    const auto before = stability_interval(P(base));
    for (int r = 1; r <= 2; ++r)
      for (int deg = -3; deg <= 8; ++deg) {
        std::vector<FormalObject> parts(base.summands().begin(), base.summands().end());
        parts.push_back(B(r, deg));
        const auto after = stability_interval(P(FormalObject::sum(parts)));
        EXPECT_GE(after.mu_plus, before.mu_plus);
        if (before.mu_minus) {
          ASSERT_TRUE(after.mu_minus.has_value());
          EXPECT_LE(*after.mu_minus, *before.mu_minus);
        }
      }
  }
}
