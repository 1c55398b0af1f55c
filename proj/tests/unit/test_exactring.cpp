#include <gtest/gtest.h>

#include <random>

#include "random_tuples.hpp"
#include "uavg/error.hpp"
#include "uavg/galois.hpp"

namespace uavg {
namespace {

using testing::random_rational;

FieldPtr sqrt2() { return ScalarField::extension("a", {Rational(-2), Rational(0), Rational(1)}); }

SimplexPoly t(int q, int j) { return make_simplex_coordinate(q, j); }
SimplexPoly constant(int q, const Rational& c) { return SimplexPoly(make_ring(q), Scalar(c)); }

SimplexPoly random_poly(int q, std::mt19937& rng, int degree = 2) {
  SimplexPoly p = constant(q, random_rational(rng));
  SimplexPoly mono = constant(q, 1);
  for (int d = 0; d < degree; ++d) {
    SimplexPoly lin = constant(q, random_rational(rng));
    for (int j = 0; j <= q; ++j) lin += t(q, j) * Scalar(random_rational(rng));
    mono = mono * lin;
    p += mono;
  }
  return p;
}

std::vector<Scalar> random_weights(int q, std::mt19937& rng) {
  std::vector<Scalar> w;
  Scalar rest(1);
  for (int i = 0; i < q; ++i) {
    w.emplace_back(random_rational(rng, 5, 7));
    rest -= w.back();
  }
  w.push_back(rest);
  return w;
}

TEST(ScalarField, RejectsReducibleAndNonMonic) {
  EXPECT_THROW(ScalarField::extension("a", {Rational(-4), Rational(0), Rational(1)}), InputError);
  EXPECT_THROW(ScalarField::extension("a", {Rational(-2), Rational(0), Rational(2)}), InputError);
  EXPECT_THROW(ScalarField::extension("a", {Rational(1), Rational(1)}), InputError);
  EXPECT_NO_THROW(ScalarField::extension("a", {Rational(-1), Rational(-2), Rational(1), Rational(1)}));
}

TEST(Scalar, ExtensionArithmetic) {
  const FieldPtr f = sqrt2();
  const Scalar a = Scalar::generator(f);
  EXPECT_EQ(a * a, Scalar(2));
  const Scalar x = Scalar(3) + a;
  EXPECT_EQ(x * x.inverse(), Scalar(1));
  EXPECT_FALSE(x.is_rational());
  EXPECT_TRUE((x - a).is_rational());
  EXPECT_EQ(Scalar(Rational(2, 4)), Scalar(Rational(1, 2)));
}

TEST(SimplexCoordinate, Examples) {
  EXPECT_EQ(t(1, 0).to_string(), SimplexPoly::coordinate(make_ring(1), 0).to_string());
  EXPECT_EQ(t(1, 1), constant(1, 1) - t(1, 0));
  EXPECT_EQ(t(2, 2), constant(2, 1) - t(2, 0) - t(2, 1));
  EXPECT_THROW(make_simplex_coordinate(2, 3), InputError);
  EXPECT_THROW(make_simplex_coordinate(2, -1), InputError);
}

TEST(PolyArith, Examples) {
  EXPECT_EQ(t(1, 0) + t(1, 1), constant(1, 1));
  EXPECT_TRUE((t(1, 0) + t(1, 1)).is_constant());
  EXPECT_TRUE((t(1, 0) * constant(1, 0)).is_zero());
  const SimplexPoly sq = t(2, 0) * t(2, 0);
  ASSERT_EQ(sq.terms().size(), 1u);
  EXPECT_EQ(sq.terms().begin()->first, (Exponent{2, 0}));
  EXPECT_THROW(t(1, 0) + t(2, 0), InputError);
}

TEST(Pullback, Examples) {
  EXPECT_TRUE(t(1, 1).pullback(SimplexMap::coface(1, 1)).is_zero());
  // s^0 : [2] -> [1] hits 0 twice, so t_1 becomes t_2 = 1 - t_0 - t_1
  EXPECT_EQ(t(1, 1).pullback(SimplexMap::codegeneracy(1, 0)), t(2, 2));
  EXPECT_EQ(constant(1, 1).pullback(SimplexMap::codegeneracy(1, 0)), constant(2, 1));
}

TEST(Pullback, AgreesWithAffineExtensionOnVertices) {
  // oracle: the affine map sends vertex e_i to e_{alpha(i)}
  for (const auto& alpha : simplicial_generators(3)) {
    for (int j = 0; j <= alpha.target(); ++j) {
      const SimplexPoly pulled = t(alpha.target(), j).pullback(alpha);
      for (int i = 0; i <= alpha.source(); ++i) {
        std::vector<Scalar> w(static_cast<size_t>(alpha.source()) + 1, Scalar(0));
        w[static_cast<size_t>(i)] = Scalar(1);
        EXPECT_EQ(pulled.evaluate(w), Scalar(alpha(i) == j ? 1 : 0)) << alpha.name();
      }
    }
  }
}

TEST(Pullback, Functorial) {
  std::mt19937 rng(3);
  for (int q = 0; q <= 3; ++q) {
    const SimplexPoly p = random_poly(q, rng);
    for (int r = 0; r <= 3; ++r)
      for (int s = 0; s <= 3; ++s)
        for (const auto& beta : simplicial_generators(3)) {
          if (beta.target() != q || beta.source() != r) continue;
          for (const auto& alpha : simplicial_generators(3)) {
            if (alpha.target() != r || alpha.source() != s) continue;
            EXPECT_EQ(p.pullback(beta).pullback(alpha), p.pullback(beta.after(alpha)));
          }
        }
  }
}

TEST(Evaluate, Examples) {
  const std::vector<Scalar> vertex{Scalar(1), Scalar(0)};
  EXPECT_EQ(t(1, 0).evaluate(vertex), Scalar(1));
  const std::vector<Scalar> half{Scalar(Rational(1, 2)), Scalar(Rational(1, 2))};
  EXPECT_EQ((constant(1, 1) - t(1, 0)).evaluate(half), Scalar(Rational(1, 2)));
  const std::vector<Scalar> third(3, Scalar(Rational(1, 3)));
  EXPECT_EQ((t(2, 0) * t(2, 1)).evaluate(third), Scalar(Rational(1, 9)));
  const std::vector<Scalar> bad{Scalar(1), Scalar(1)};
  EXPECT_THROW(t(1, 0).evaluate(bad), InputError);
  const RingPtr with_param = make_ring(1, {"y"});
  EXPECT_THROW(SimplexPoly::parameter(with_param, 0).evaluate(vertex), InputError);
  const std::vector<Scalar> y{Scalar(7)};
  EXPECT_EQ(SimplexPoly::parameter(with_param, 0).evaluate(vertex, y), Scalar(7));
}

TEST(Evaluate, RingHomomorphism) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int q = trial % 4;
    const SimplexPoly a = random_poly(q, rng);
    const SimplexPoly b = random_poly(q, rng);
    const auto w = random_weights(q, rng);
    EXPECT_EQ((a * b).evaluate(w), a.evaluate(w) * b.evaluate(w));
    EXPECT_EQ((a + b).evaluate(w), a.evaluate(w) + b.evaluate(w));
  }
}

TEST(CanonicalForm, EqualAsFunctionsIffEqualForms) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = 1 + trial % 3;
    const SimplexPoly a = random_poly(q, rng);
    // the same function written through t_q
    SimplexPoly sum(make_ring(q));
    for (int j = 0; j <= q; ++j) sum += t(q, j);
    const SimplexPoly b = a * sum;
    EXPECT_EQ(a, b);
    const SimplexPoly c = a + t(q, 0) * t(q, q) - t(q, q) * t(q, 0) + t(q, q) * Scalar(Rational(1, 5));
    EXPECT_FALSE(a == c);
    bool differs = false;
    for (int k = 0; k < 10 && !differs; ++k) {
      const auto w = random_weights(q, rng);
      differs = !(a.evaluate(w) == c.evaluate(w));
    }
    EXPECT_TRUE(differs);
  }
}

TEST(Galois, QuadraticConjugation) {
  const FieldPtr f = sqrt2();
  const GaloisAction g(f, {Scalar(f, {Rational(0), Rational(-1)})});
  const Scalar x = Scalar(3) + Scalar::generator(f);
  EXPECT_EQ(g.apply(0, x), Scalar(3) - Scalar::generator(f));
  EXPECT_EQ(g.apply(0, Scalar(5)), Scalar(5));
  EXPECT_EQ(g.apply(0, g.apply(0, x)), x);
}

TEST(Galois, RejectsNonRoots) {
  const FieldPtr f = sqrt2();
  EXPECT_THROW(GaloisAction(f, {Scalar(f, {Rational(1), Rational(0)})}), InputError);
}

TEST(Galois, CyclicCubicIsAutomorphism) {
  const FieldPtr f = ScalarField::extension("a", {Rational(-1), Rational(-2), Rational(1), Rational(1)});
  const Scalar a = Scalar::generator(f);
  const GaloisAction g(f, {a * a - Scalar(2)});
  std::mt19937 rng(2);
  for (int k = 0; k < 10; ++k) {
    const Scalar x(f, {random_rational(rng), random_rational(rng), random_rational(rng)});
    const Scalar y(f, {random_rational(rng), random_rational(rng), random_rational(rng)});
    EXPECT_EQ(g.apply(0, x * y), g.apply(0, x) * g.apply(0, y));
    EXPECT_EQ(g.apply(0, x + y), g.apply(0, x) + g.apply(0, y));
    EXPECT_EQ(g.apply(0, g.apply(0, g.apply(0, x))), x);
  }
}

TEST(Galois, AppliesToPolynomials) {
  const FieldPtr f = sqrt2();
  const GaloisAction g(f, {Scalar(f, {Rational(0), Rational(-1)})});
  const RingPtr ring = make_ring(1, {}, f);
  const SimplexPoly p = SimplexPoly::coordinate(ring, 0) * Scalar::generator(f) + SimplexPoly(ring, Scalar(1));
  const SimplexPoly expected = SimplexPoly::coordinate(ring, 0) * (-Scalar::generator(f)) + SimplexPoly(ring, Scalar(1));
  EXPECT_EQ(g.apply(0, p), expected);
}

}  // namespace
}  // namespace uavg
