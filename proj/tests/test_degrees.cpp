#include <gtest/gtest.h>

#include "segre/degrees.hpp"
#include "segre/problem.hpp"
#include "segre/render.hpp"

using namespace segre;

namespace {

ProblemFile data(const std::string& name) { return load_problem(std::string(SEGRE_DATA_DIR) + "/" + name); }

RunConfig config(std::uint64_t seed = 1234) {
  RunConfig c;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Degrees, DimensionOfTwistedCubic) {
  ProblemFile pf = data("twisted_cubic.txt");
  EXPECT_EQ(dimension_of(pf.scheme("X"), config()), 1);
  EXPECT_EQ(dimension_of(pf.scheme("Y"), config()), 1);
}

TEST(Degrees, DimensionOfMultiprojectiveThreefold) {
  ProblemFile pf = data("p2p3_divisor.txt");
  EXPECT_EQ(dimension_of(pf.scheme("Y"), config()), 3);
}

TEST(Degrees, DimensionOfAmbientAndEmpty) {
  Ambient p3({3});
  EXPECT_EQ(dimension_of(SchemeSpec(Ideal(p3, {Poly(p3)})), config()), 3);
  ProblemFile pf = parse_input("ambient P1\nvars s, t\nideal E = s, t");
  EXPECT_EQ(dimension_of(pf.scheme("E"), config()), -1);
  EXPECT_TRUE(class_of(pf.scheme("E"), config()).is_zero());
}

TEST(Degrees, AssertedDimensionShortCircuits) {
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal I dim 0 = x0");
  EXPECT_EQ(dimension_of(pf.scheme("I"), config()), 0);
}

TEST(Degrees, ClassOfTwistedCubic) {
  ProblemFile pf = data("twisted_cubic.txt");
  EXPECT_EQ(to_plain(class_of(pf.scheme("X"), config())), "3*h^2");
  EXPECT_EQ(to_plain(class_of(pf.scheme("Y"), config())), "6*h^2");
}

TEST(Degrees, ClassOfThreefoldInP2xP3) {
  ProblemFile pf = data("p2p3_divisor.txt");
  EXPECT_EQ(to_plain(class_of(pf.scheme("Y"), config())), "2*h1*h2 + h2^2");
}

TEST(Degrees, ClassOfAmbient) {
  Ambient p4({4});
  EXPECT_EQ(class_of(SchemeSpec(Ideal(p4, {Poly(p4)})), config()), ChowClass::one(p4));
}

TEST(Degrees, NodalCubicProjectiveDegrees) {
  ProblemFile pf = data("p2_nodal_cubic.txt");
  LambdaData d = lambda_data(pf.scheme("X").ideal, pf.scheme("Y"), config(), AlphaPolicy::Joint, std::nullopt, 1);
  EXPECT_EQ(d.dim_x, 0);
  EXPECT_EQ(d.dim_y, 1);
  EXPECT_EQ(d.table.entries.at({0}), 7U);
  EXPECT_EQ(d.table.entries.at({1}), 3U);
  EXPECT_EQ(to_plain(shadow(d.table)), "7*h^2 + 3*h");
  EXPECT_EQ(to_plain(d.lambda), "2*h^2");
}

TEST(Degrees, MultiprojectiveTableAndLambda) {
  ProblemFile pf = data("p2p3_divisor.txt");
  LambdaData d = lambda_data(pf.scheme("X").ideal, pf.scheme("Y"), config(), AlphaPolicy::Joint, std::nullopt, 3);
  EXPECT_EQ(d.alpha.entries, (std::vector<int>{2, 1}));
  const std::map<MultiIndex, std::uint64_t> expected{{{0, 0}, 0}, {{1, 0}, 0}, {{0, 1}, 1}, {{2, 0}, 0}, {{1, 1}, 1},
                                                    {{0, 2}, 2}, {{2, 1}, 1}, {{1, 2}, 2}, {{0, 3}, 0}};
  EXPECT_EQ(d.table.entries, expected);
  EXPECT_EQ(to_plain(shadow(d.table)), "h1^2*h2^2 + 2*h1^2*h2 + h1*h2^2 + 2*h1*h2 + h2^2");
  EXPECT_EQ(to_plain(d.lambda), "24*h1^2*h2^3 + 11*h1^2*h2^2 + 6*h1*h2^3 + 2*h1^2*h2 + 3*h1*h2^2 + h2^3");
}

TEST(Degrees, CoordinatePointInP2) {
  // X a coordinate point with linear generators, Y = P^2.
  Ambient p2({2});
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal X = x0, x1");
  SchemeSpec y(Ideal(p2, {Poly(p2)}));
  const Ideal& x = pf.scheme("X").ideal;
  EXPECT_EQ(projective_degree(x, y, {0}, 2, config()), 0U);
  EXPECT_EQ(projective_degree(x, y, {1}, 2, config()), 1U);
  EXPECT_EQ(projective_degree(x, y, {2}, 2, config()), 1U);
}

TEST(Degrees, HypersurfaceTableAndLambda) {
  for (int d = 1; d <= 3; ++d) {
    Ambient p3({3});
    Rng rng(static_cast<std::uint64_t>(d));
    Poly f = Poly::constant(p3, Rational(1));
    for (int k = 0; k < d; ++k) f *= general_linear_form(RationalField{}, p3, 0, rng);
    f += general_linear_form(RationalField{}, p3, 0, rng).pow(static_cast<unsigned>(d), Rational(1));
    Ideal x(p3, {f});
    SchemeSpec y(Ideal(p3, {Poly(p3)}));
    LambdaData data = lambda_data(x, y, config(), AlphaPolicy::Joint, std::nullopt, 3);
    EXPECT_EQ(data.dim_x, 2);
    EXPECT_EQ(data.table.entries.at({0}), 0U);
    EXPECT_EQ(data.table.entries.at({1}), 0U);
    EXPECT_EQ(data.table.entries.at({2}), 0U);
    EXPECT_EQ(data.table.entries.at({3}), 1U);
    ChowClass expected(p3);
    for (int k = 1; k <= 3; ++k) {
      BigInt dk = 1;
      for (int i = 0; i < k; ++i) dk *= d;
      expected.add_term({k}, dk);
    }
    EXPECT_EQ(data.lambda, expected) << "d = " << d;
  }
}

TEST(Degrees, RequiresAlphaHomogeneousX) {
  Ambient p2({2});
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal X = x0, x1^2");
  SchemeSpec y(Ideal(p2, {Poly(p2)}));
  EXPECT_THROW(projective_degree(pf.scheme("X").ideal, y, {0}, 2, config()), PreconditionError);
  EXPECT_THROW(projective_degree(pf.scheme("X").ideal, y, {3}, 2, config()), PreconditionError);
}

TEST(Degrees, ReproducibleAcrossSeeds) {
  ProblemFile pf = data("p2p3_divisor.txt");
  LambdaData a = lambda_data(pf.scheme("X").ideal, pf.scheme("Y"), config(1), AlphaPolicy::Joint, std::nullopt, 3);
  LambdaData b = lambda_data(pf.scheme("X").ideal, pf.scheme("Y"), config(99), AlphaPolicy::Joint, std::nullopt, 3);
  EXPECT_EQ(a.table.entries, b.table.entries);
  RunConfig other = config(7);
  other.prime = kSecondPrime;
  LambdaData c = lambda_data(pf.scheme("X").ideal, pf.scheme("Y"), other, AlphaPolicy::Joint, std::nullopt, 3);
  EXPECT_EQ(a.table.entries, c.table.entries);
}

TEST(Degrees, GenericityFailureIsReported) {
  RunConfig cfg = config();
  int calls = 0;
  EXPECT_THROW(agreed_count(cfg, "test", {0},
                            [&](std::uint64_t, std::uint64_t) { return CountResult::finite(static_cast<std::uint64_t>(calls++)); }),
               GenericityError);
  EXPECT_EQ(calls, cfg.max_attempts());
  calls = 0;
  EXPECT_EQ(agreed_count(cfg, "test", {0},
                         [&](std::uint64_t, std::uint64_t) {
                           return ++calls == 1 ? CountResult::infinite() : CountResult::finite(5);
                         }),
            5U);
}
