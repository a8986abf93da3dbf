#include <gtest/gtest.h>

#include "segre/intersect.hpp"
#include "segre/problem.hpp"
#include "segre/render.hpp"

using namespace segre;

namespace {

ProblemFile data(const std::string& name) { return load_problem(std::string(SEGRE_DATA_DIR) + "/" + name); }

RunConfig config(std::uint64_t seed = 5) {
  RunConfig c;
  c.seed = seed;
  return c;
}

Poly random_form(const Ambient& a, int degree, Rng& rng) {
  Poly f = Poly::constant(a, Rational(1)), g = Poly::constant(a, Rational(1));
  for (int k = 0; k < degree; ++k) {
    f *= general_linear_form(RationalField{}, a, 0, rng);
    g *= general_linear_form(RationalField{}, a, 0, rng);
  }
  return f + g;
}

}  // namespace

TEST(Intersect, EmbedProductOfLines) {
  ProblemFile pf = data("quadric_lines.txt");
  const Ideal p = embed_product(pf.scheme("L").ideal, pf.scheme("K").ideal);
  EXPECT_EQ(p.ambient.factor_dims(), (std::vector<int>{3, 3}));
  std::vector<std::string> names{"x1", "y1", "z1", "w1", "x2", "y2", "z2", "w2"};
  std::vector<std::string> shown;
  for (const auto& g : p.generators) shown.push_back(format_poly(g, names));
  EXPECT_EQ(shown, (std::vector<std::string>{"x1", "w1", "y2", "w2"}));
  const Ambient a({3});
  EXPECT_TRUE(embed_product(Ideal(a, {Poly(a)}), Ideal(a, {Poly(a)})).is_zero_ideal());
}

TEST(Intersect, EmbedProductClassIsExteriorProduct) {
  const Ambient a({2});
  for (int trial = 0; trial < 3; ++trial) {
    Rng rng(static_cast<std::uint64_t>(40 + trial));
    SchemeSpec x = SchemeSpec::variety(Ideal(a, {random_form(a, 1 + trial, rng)}));
    SchemeSpec v = SchemeSpec::variety(Ideal(a, {random_form(a, 1, rng), random_form(a, 2, rng)}));
    const ChowClass cx = class_of(x, config()), cv = class_of(v, config());
    const Ambient d = a.doubled();
    ChowClass expected(d);
    for (const auto& [e, c] : cx.terms()) {
      for (const auto& [f, k] : cv.terms()) expected.add_term({e[0], f[0]}, c * k);
    }
    EXPECT_EQ(class_of(SchemeSpec(embed_product(x.ideal, v.ideal)), config()), expected) << trial;
  }
}

TEST(Intersect, DiagonalIdeal) {
  EXPECT_EQ(diagonal_ideal(Ambient({1})).generators.size(), 1U);
  EXPECT_EQ(format_poly(diagonal_ideal(Ambient({1})).generators[0], {"x0", "x1", "y0", "y1"}), "x0*y1 - x1*y0");
  const Ideal d3 = diagonal_ideal(Ambient({3}));
  EXPECT_EQ(d3.generators.size(), 6U);
  // (p,p) lies on every minor; (p,q) with p != q misses one.
  const std::vector<Rational> p{1, 2, -3, 5}, q{1, 2, -3, 4};
  auto eval = [](const Poly& f, const std::vector<Rational>& pt) {
    Rational s = 0;
    for (const auto& [e, c] : f.terms()) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) t *= pt[i];
      }
      s += t;
    }
    return s;
  };
  std::vector<Rational> pp(p), pq(p);
  pp.insert(pp.end(), p.begin(), p.end());
  pq.insert(pq.end(), q.begin(), q.end());
  bool misses = false;
  for (const auto& g : d3.generators) {
    EXPECT_EQ(eval(g, pp), 0);
    misses = misses || eval(g, pq) != 0;
  }
  EXPECT_TRUE(misses);
  EXPECT_THROW(diagonal_ideal(Ambient({1, 1})), PreconditionError);
}

TEST(Intersect, LinesOnQuadric) {
  ProblemFile pf = data("quadric_lines.txt");
  const CISpec q(pf.ambient, pf.scheme("Q").ideal.generators);
  EXPECT_EQ(to_plain(chern_ci(pf.ambient, q.degrees())), "2*h^2 + 2*h + 1");

  const IntersectionData lk = intersection_data(pf.scheme("L"), pf.scheme("K"), q, config());
  EXPECT_EQ(to_plain(lk.segre_doubled), "h1^3*h2^3");
  EXPECT_EQ(to_plain(lk.segre_pulled), "h^3");
  EXPECT_EQ(to_plain(lk.product), "h^3");

  const IntersectionData ll = intersection_data(pf.scheme("L"), pf.scheme("L"), q, config());
  EXPECT_EQ(to_plain(ll.segre_doubled), "-2*h1^3*h2^3 + h1^3*h2^2 + h1^2*h2^3");
  EXPECT_EQ(to_plain(ll.segre_pulled), "-2*h^3 + h^2");
  EXPECT_TRUE(ll.product.is_zero());
}

TEST(Intersect, TwoLinesInPlane) {
  ProblemFile pf = parse_input("ambient P2\nvars x[0..2]\nideal A variety = x0\nideal B variety = x1");
  const CISpec plane(pf.ambient, {});
  EXPECT_EQ(to_plain(intersection_product(pf.scheme("A"), pf.scheme("B"), plane, config())), "h^2");
}

TEST(Intersect, BezoutAndSymmetry) {
  const Ambient a({2});
  Rng rng(3);
  SchemeSpec c1 = SchemeSpec::variety(Ideal(a, {random_form(a, 2, rng)}));
  SchemeSpec c2 = SchemeSpec::variety(Ideal(a, {random_form(a, 3, rng)}));
  const CISpec plane(a, {});
  const ChowClass xy = intersection_product(c1, c2, plane, config());
  EXPECT_EQ(to_plain(xy), "6*h^2");
  EXPECT_EQ(intersection_product(c2, c1, plane, config()), xy);
}

TEST(Intersect, TransverseMatchesClassOfIntersection) {
  // A quadric surface and a plane in P^3 meet transversally in a conic.
  const Ambient a({3});
  Rng rng(12);
  const Poly f = random_form(a, 2, rng), l = random_form(a, 1, rng);
  SchemeSpec x = SchemeSpec::variety(Ideal(a, {f})), v = SchemeSpec::variety(Ideal(a, {l}));
  const ChowClass prod = intersection_product(x, v, CISpec(a, {}), config());
  EXPECT_EQ(prod, class_of(SchemeSpec(Ideal(a, {f, l})), config()));
  EXPECT_EQ(to_plain(prod), "2*h^2");
}

TEST(Intersect, DisjointGivesZero) {
  ProblemFile pf = parse_input("ambient P3\nvars x[0..3]\nideal A variety = x0, x1\nideal B variety = x2, x3");
  const IntersectionData d = intersection_data(pf.scheme("A"), pf.scheme("B"), CISpec(pf.ambient, {}), config());
  EXPECT_TRUE(d.disjoint);
  EXPECT_TRUE(d.product.is_zero());
}
