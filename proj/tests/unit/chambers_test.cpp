#include <gtest/gtest.h>

#include "../oracles/oracles.hpp"
#include "sweep.hpp"
#include "vortex/chambers.hpp"

using namespace vortex;

namespace {

ModuliInput make(int R, int d, int g = 2, bool fixed = false) {
  ModuliInput in;
  in.rank = R;
  in.degree = d;
  in.genus = g;
  in.fixed_det = fixed;
  return in;
}

std::vector<std::string> wall_strings(const std::vector<Wall>& walls) {
  std::vector<std::string> out;
  for (const auto& w : walls) out.push_back(w.value.to_string() + ":" + to_string(w.kind));
  return out;
}

}  // namespace

TEST(Chambers, Validation) {
  EXPECT_THROW(make(1, 5).validate(), InvalidInput);
  EXPECT_THROW(make(2, 5, 1).validate(), InvalidInput);
  EXPECT_THROW(make(2, 4).validate(), InvalidInput);
  auto low = make(2, 4);
  low.allow_low_degree = true;
  EXPECT_NO_THROW(low.validate());
  EXPECT_TRUE(low.low_degree());
}

TEST(Chambers, TauLine) {
  EXPECT_EQ(tau_line(make(2, 5)), std::make_pair(Rational(5, 2), Rational(5)));
  EXPECT_EQ(tau_line(make(3, 7)), std::make_pair(Rational(7, 3), Rational(7, 2)));
  auto low = make(2, 4);
  low.allow_low_degree = true;
  EXPECT_EQ(tau_line(low), std::make_pair(Rational(2), Rational(4)));
}

TEST(Chambers, CriticalValues) {
  EXPECT_EQ(wall_strings(critical_values(make(2, 5))),
            (std::vector<std::string>{"5/2:min", "3:interior", "4:interior", "5:max"}));
  EXPECT_EQ(wall_strings(critical_values(make(3, 7))),
            (std::vector<std::string>{"7/3:min", "5/2:interior", "3:interior", "7/2:max"}));
  EXPECT_EQ(wall_strings(critical_values(2, 4)), (std::vector<std::string>{"2:min", "3:interior", "4:max"}));
}

TEST(Chambers, Chambers) {
  const auto c = enumerate_chambers(make(3, 7));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (Chamber{Rational(7, 3), Rational(5, 2)}));
  EXPECT_EQ(c[1], (Chamber{Rational(5, 2), Rational(3)}));
  EXPECT_EQ(c[2], (Chamber{Rational(3), Rational(7, 2)}));
  EXPECT_EQ(enumerate_chambers(make(2, 5)).size(), 3u);
  EXPECT_EQ(enumerate_chambers(2, 4).size(), 2u);
  EXPECT_TRUE(c[1].contains(c[1].midpoint()));
  EXPECT_FALSE(c[1].contains(Rational(3)));
}

TEST(Chambers, Dimensions) {
  EXPECT_EQ(dim_pairs_moduli(make(2, 5)), 7);
  EXPECT_EQ(dim_pairs_moduli(make(3, 7)), 13);
  EXPECT_EQ(dim_pairs_moduli(make(2, 5, 2, true)), 5);
  EXPECT_EQ(dim_master(make(2, 5)), 8);
  EXPECT_EQ(dim_master(make(3, 7)), 14);
  EXPECT_EQ(dim_master(make(2, 5, 2, true)), 6);
}

TEST(Chambers, MomentValue) {
  EXPECT_EQ(moment_value(0, Rational(5, 2), 2), Rational(5, 2));
  EXPECT_EQ(moment_value(1, Rational(5, 2), 2), Rational(3));
  EXPECT_EQ(moment_value(Rational(3, 2), Rational(7, 3), 3), Rational(17, 6));
  EXPECT_THROW(moment_value(-1, Rational(1), 2), InvalidInput);
}

TEST(Chambers, TauScale) {
  TauScale s{Rational(1, 2)};
  EXPECT_EQ(s.to_tau_hat(Rational(6)), Rational(3));
  EXPECT_EQ(s.to_tau(Rational(3)), Rational(6));
  EXPECT_THROW(TauScale{Rational(0)}.to_tau(1), InvalidInput);
}

TEST(ChambersSweep, WallsMatchOracleAndInvariants) {
  sweep::for_each_sweep_input([](const ModuliInput& in) {
    const auto walls = critical_values(in);
    const auto expected = oracle::walls(in.rank, in.degree);
    ASSERT_EQ(walls.size(), expected.size()) << in.rank << "," << in.degree;
    for (std::size_t i = 0; i < walls.size(); ++i) {
      EXPECT_EQ(walls[i].value, Rational(expected[i].first, expected[i].second));
      if (i > 0) EXPECT_LT(walls[i - 1].value, walls[i].value);
      if (walls[i].kind == WallKind::interior) {
        EXPECT_GE(walls[i].value.denominator(), 1);
        EXPECT_LE(walls[i].value.denominator(), in.rank - 1);
      }
    }
    EXPECT_EQ(walls.front().kind, WallKind::min);
    EXPECT_EQ(walls.front().value, Rational(in.degree, in.rank));
    EXPECT_EQ(walls.back().kind, WallKind::max);
    EXPECT_EQ(walls.back().value, Rational(in.degree, in.rank - 1));
    EXPECT_EQ(dim_master(in), dim_pairs_moduli(in) + 1);
    auto fixed = in;
    fixed.fixed_det = true;
    EXPECT_EQ(dim_master(fixed), dim_pairs_moduli(fixed) + 1);
  });
}
