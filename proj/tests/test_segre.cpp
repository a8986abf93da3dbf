#include <gtest/gtest.h>

#include "segre/problem.hpp"
#include "segre/render.hpp"
#include "segre/segre_class.hpp"

using namespace segre;

namespace {

ProblemFile data(const std::string& name) { return load_problem(std::string(SEGRE_DATA_DIR) + "/" + name); }

RunConfig config(std::uint64_t seed = 77) {
  RunConfig c;
  c.seed = seed;
  return c;
}

Poly random_form(const Ambient& a, int degree, Rng& rng) {
  Poly f = Poly::constant(a, Rational(1));
  for (int k = 0; k < degree; ++k) f *= general_linear_form(RationalField{}, a, 0, rng);
  Poly g = Poly::constant(a, Rational(1));
  for (int k = 0; k < degree; ++k) g *= general_linear_form(RationalField{}, a, 0, rng);
  return f + g;
}

// prod_k d_k h / (1 + d_k h), i.e. [X] * c(N)^{-1} for a complete intersection.
ChowClass ci_segre(const Ambient& a, const std::vector<int>& degrees) {
  ChowClass s = ChowClass::one(a);
  for (int d : degrees) {
    const ChowClass dh = ChowClass::divisor(a, Multidegree{{d}});
    s *= dh * series_inverse(ChowClass::one(a) + dh);
  }
  return s;
}

}  // namespace

TEST(Segre, TwistedCubicInQuadricCubicScheme) {
  ProblemFile pf = data("twisted_cubic.txt");
  const ChowClass s = segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config());
  EXPECT_EQ(to_plain(s), "6*h^2");
}

TEST(Segre, ReducibleYIsRejected) {
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal X = x0, x1\nideal Y = x0*x1");
  EXPECT_THROW(segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config()), PreconditionError);
}

TEST(Segre, HypersurfaceInProjectiveSpace) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const Ambient a({n});
      Rng rng(static_cast<std::uint64_t>(10 * n + d));
      Ideal x(a, {random_form(a, d, rng)});
      SchemeSpec pn = SchemeSpec::variety(Ideal(a, {Poly(a)}));
      EXPECT_EQ(segre_class(x, pn, config()), ci_segre(a, {d})) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Segre, CompleteIntersectionInsideHypersurface) {
  // s(X,Y) = [X] / prod(1 + d_k h) when X is cut from Y by a regular sequence.
  const Ambient a({4});
  Rng rng(5);
  const Poly f = random_form(a, 2, rng);
  const Poly g1 = random_form(a, 2, rng);
  const Poly g2 = random_form(a, 1, rng);
  SchemeSpec y = SchemeSpec::variety(Ideal(a, {f}));
  Ideal x(a, {f, g1, g2});
  ChowClass expected = ChowClass::divisor(a, Multidegree{{2}}) * ci_segre(a, {2, 1});
  EXPECT_EQ(segre_class(x, y, config()), expected);
}

TEST(Segre, SelfSegreClassIsFundamentalClass) {
  ProblemFile pf = data("twisted_cubic.txt");
  EXPECT_EQ(segre_class(pf.scheme("X").ideal, pf.scheme("X"), config()), class_of(pf.scheme("X"), config()));
}

TEST(Segre, ScalesWithGeometricMultiplicity) {
  const Ambient a({3});
  Rng rng(11);
  const Poly f = random_form(a, 2, rng);
  const Poly g = random_form(a, 1, rng);
  Ideal x(a, {f, g});
  const ChowClass reduced = segre_class(x, SchemeSpec::variety(Ideal(a, {f})), config());
  const ChowClass doubled = segre_class(x, SchemeSpec::irreducible(Ideal(a, {f * f}), 2), config());
  EXPECT_EQ(doubled, BigInt(2) * reduced);
  EXPECT_EQ(to_plain(reduced), "-2*h^3 + 2*h^2");
}

TEST(Segre, MultiprojectivePointInProduct) {
  // A point in P^1 x P^2 has s = [pt].
  ProblemFile pf = parse_input("ambient P1xP2\nvars s[0..1]; y[0..2]\nideal X = s0, y0, y1");
  const Ambient& a = pf.ambient;
  SchemeSpec t = SchemeSpec::variety(Ideal(a, {Poly(a)}));
  EXPECT_EQ(to_plain(segre_class(pf.scheme("X").ideal, t, config())), "h1*h2^2");
}

TEST(Segre, MultiprojectiveDivisorClass) {
  // A (1,1) divisor D: s(D, P^1 x P^2) = D / (1 + D).
  const Ambient a({1, 2});
  ProblemFile pf = parse_input("ambient P1xP2\nvars s[0..1]; y[0..2]\nideal D = s0*y0 + s1*y2");
  SchemeSpec t = SchemeSpec::variety(Ideal(a, {Poly(a)}));
  const ChowClass d = ChowClass::divisor(a, Multidegree{{1, 1}});
  EXPECT_EQ(segre_class(pf.scheme("D").ideal, t, config()), d * series_inverse(ChowClass::one(a) + d));
}

TEST(Segre, EmptyXGivesZero) {
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal X = x0, x1, x2\nideal Y variety = x0*x2 - x1^2");
  EXPECT_TRUE(segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config()).is_zero());
}

TEST(Segre, ClosedFormAgreesWithRecursion) {
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 2;
    const Ambient a({n});
    Rng rng(static_cast<std::uint64_t>(1000 + trial));
    const int dy = 1 + trial % 3;
    const Poly f = random_form(a, dy, rng);
    std::vector<Poly> xs{f};
    const int extra = 1 + (trial / 3) % 2;
    for (int k = 0; k < extra; ++k) xs.push_back(random_form(a, 1 + (trial + k) % 2, rng));
    SchemeSpec y = SchemeSpec::variety(Ideal(a, {f}));
    Ideal x(a, xs);
    const RunConfig cfg = config(static_cast<std::uint64_t>(trial));
    EXPECT_EQ(segre_closed_form_pn(x, y, cfg), segre_class(x, y, cfg)) << "trial " << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 20);
}

TEST(Segre, TopPartForReducibleScheme) {
  // Z = two planes meeting in a line in P^3; X = that line.
  ProblemFile pf = parse_input("ambient P3\nvars x[0..3]\nideal X = x0, x1\nideal Z = x0*x1");
  // Each plane contributes s(line, plane) = h^2 - h^3; the dim-1 part is 2h^2.
  EXPECT_EQ(to_plain(segre_top_part(pf.scheme("X").ideal, pf.scheme("Z"), config())), "2*h^2");
}

TEST(Segre, ReproducibleForFixedSeed) {
  ProblemFile pf = data("p2_nodal_cubic.txt");
  EXPECT_EQ(segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config(3)),
            segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config(3)));
  // The node: s = 2[pt].
  EXPECT_EQ(to_plain(segre_class(pf.scheme("X").ideal, pf.scheme("Y"), config(3))), "2*h^2");
}
