#include <gtest/gtest.h>

#include "random_tuples.hpp"
#include "uavg/error.hpp"

namespace uavg {
namespace {

using testing::heisenberg;
using testing::load_fixture;
using testing::random_element;
using testing::random_rational;
using testing::random_simplex_tuple;
using testing::random_tuple;
using testing::upper;

const RingPtr kQ = make_ring(0);

NilMatrix elem(int n, int i, int j, const Rational& c = 1) { return NilMatrix::elementary(n, i, j, kQ, Scalar(c)); }

LieSpanPtr line() { return upper(2); }

UniMatrix line_point(const Rational& a) { return exp_nilpotent(elem(2, 0, 1, a)); }

/// Σ_j t_j a_j on Δ^q as a U_2 element.
UniMatrix affine_line(const std::vector<Rational>& a) {
  const int q = static_cast<int>(a.size()) - 1;
  const RingPtr ring = make_ring(q);
  SimplexPoly s(ring);
  for (int j = 0; j <= q; ++j) s += SimplexPoly::coordinate(ring, j) * Scalar(a[static_cast<size_t>(j)]);
  PolyMatrix m = PolyMatrix::identity(2, ring);
  m.set(0, 1, s);
  return UniMatrix(m);
}

UniMatrix on_simplex(const UniMatrix& u, int q) { return UniMatrix(u.matrix().pullback(SimplexMap::to_point(q))); }

/// Sections pulled back from a point stay constant; move them onto Δ^q.
SectionTuple embedded(const SectionTuple& t) {
  if (t.domain_degree() == t.degree()) return t;
  std::vector<UniMatrix> out;
  for (const auto& s : t.sections()) out.push_back(on_simplex(s, t.degree()));
  return SectionTuple(t.group(), out);
}

UniMatrix at_vertex(const UniMatrix& u, int q, int i) {
  const auto w = WeightSeq::vertex(q, i);
  return evaluate(u, w.weights());
}

TEST(Transition, Examples) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(1);
  const UniMatrix f = random_element(*h, rng);
  EXPECT_TRUE(transition(*h, f, f).is_identity());
  EXPECT_EQ(transition(*h, UniMatrix::identity(3, kQ), f), f);
  for (int trial = 0; trial < 10; ++trial) {
    const UniMatrix a = random_element(*h, rng);
    const UniMatrix b = random_element(*h, rng);
    const UniMatrix c = random_element(*h, rng);
    EXPECT_EQ(transition(a, b) * a, b);
    EXPECT_EQ(transition(a, c), transition(b, c) * transition(a, b));
  }
  const LieSpan center(3, {elem(3, 0, 2)});
  EXPECT_THROW(transition(center, f, f), InputError);
}

TEST(Wsym, ConstantTupleIsFixed) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(2);
  const UniMatrix f = on_simplex(random_element(*h, rng), 2);
  const SectionTuple t(h, {f, f, f});
  EXPECT_EQ(wsym(t), t);
}

TEST(Wsym, DegreeZeroIsIdentity) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(3);
  const SectionTuple t(h, {random_element(*h, rng)});
  EXPECT_EQ(wsym(t), t);
  EXPECT_EQ(lift_w(t), t);
}

TEST(Wsym, AbelianAffineCombination) {
  const std::vector<Rational> a{Rational(2), Rational(-1), Rational(1, 3), Rational(5)};
  for (int q = 1; q <= 3; ++q) {
    std::vector<Rational> head(a.begin(), a.begin() + q + 1);
    std::vector<UniMatrix> pts;
    for (const auto& x : head) pts.push_back(on_simplex(line_point(x), q));
    const SectionTuple out = wsym(SectionTuple(line(), pts));
    ASSERT_TRUE(out.is_constant());
    EXPECT_EQ(out[0], affine_line(head));
  }
}

TEST(Wsym, RequiresSimplexDomain) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(4);
  EXPECT_THROW(wsym(random_tuple(h, 2, rng)), InputError);
  EXPECT_THROW(lift_w(random_simplex_tuple(h, 2, rng)), InputError);
}

TEST(LiftW, TwoPointAbelian) {
  const SectionTuple t(line(), {line_point(0), line_point(1)});
  const SectionTuple out = lift_w(t);
  EXPECT_EQ(out.domain_degree(), 1);
  EXPECT_EQ(out[0], affine_line({Rational(0), Rational(1)}));
  EXPECT_EQ(out[1], out[0]);
}

TEST(LiftW, ConstantTuple) {
  const LieSpanPtr g = upper(4);
  std::mt19937 rng(5);
  const UniMatrix f = random_element(*g, rng);
  const SectionTuple out = lift_w(SectionTuple(g, {f, f, f}));
  EXPECT_TRUE(out.is_constant());
  EXPECT_EQ(out[0], on_simplex(f, 2));
}

TEST(Wav, DegreeZero) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(6);
  const UniMatrix f = random_element(*h, rng);
  EXPECT_EQ(wav(SectionTuple(h, {f})), f);
}

TEST(Wav, HeisenbergTwoPointsIsOneParameterSubgroup) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const UniMatrix z1 = random_element(*h, rng);
    const NilMatrix l = log_unipotent(z1);
    const RingPtr ring = make_ring(1);
    const NilMatrix tl(l.matrix().pullback(SimplexMap::to_point(1)) * SimplexPoly::coordinate(ring, 1));
    EXPECT_EQ(wav(SectionTuple(h, {UniMatrix::identity(3, kQ), z1})), exp_nilpotent(tl));
  }
}

class OracleFixture : public ::testing::TestWithParam<std::string> {};

TEST_P(OracleFixture, MatchesFrozenOracle) {
  const SectionTuple t = io::tuple_from_json(load_fixture(GetParam() + ".json"));
  const auto expected_doc = load_fixture("oracle/" + GetParam() + ".wav.json");
  const UniMatrix expected = io::uni_from_json(expected_doc, io::Context{});
  EXPECT_EQ(expected_doc.at("iterations").get<int>(), derived_series_length(*t.group()));
  EXPECT_EQ(wav(t), expected);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, OracleFixture,
                         ::testing::Values("heisenberg_q1", "heisenberg_q2_a", "heisenberg_q2_b", "upper4_q2"));

TEST(Wav, IterationOverride) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(8);
  const SectionTuple t = random_tuple(h, 2, rng);
  EXPECT_EQ(wav(t, 3), wav(t));
  EXPECT_THROW(wav(t, 1), InputError);
  EXPECT_THROW(wav(random_simplex_tuple(h, 1, rng)), InputError);
}

TEST(Wav, VertexRecovery) {
  std::mt19937 rng(9);
  for (const auto& g : {heisenberg(), upper(4)}) {
    for (int q = 1; q <= 3; ++q) {
      const SectionTuple t = random_tuple(g, q, rng);
      const UniMatrix w = wav(t);
      for (int i = 0; i <= q; ++i) EXPECT_EQ(at_vertex(w, q, i), t[static_cast<size_t>(i)]);
    }
  }
}

TEST(Wav, ConvergenceAndStability) {
  std::mt19937 rng(10);
  for (const auto& g : {heisenberg(), upper(4), upper(5)}) {
    const int d = derived_series_length(*g);
    for (int q = 1; q <= 2; ++q) {
      const SectionTuple lifted = lift_w(random_tuple(g, q, rng));
      const SectionTuple settled = wsym_iterate(lifted, d);
      EXPECT_TRUE(settled.is_constant());
      EXPECT_EQ(wsym(settled), settled);
      const SectionTuple general = random_simplex_tuple(g, q, rng);
      EXPECT_TRUE(wsym_iterate(general, d).is_constant());
      EXPECT_EQ(wsym_iterate(general, d + 1), wsym_iterate(general, d));
    }
  }
}

TEST(Wav, HeisenbergSettlesInOnePass) {
  // in a 2-step nilpotent group BCH truncates after the first bracket, and
  // exp(Σ t_j log(f_j f_i^{-1})) f_i = exp(Σ t_j log f_j) for every i
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const SectionTuple t = random_tuple(h, 2, rng);
    const SectionTuple lifted = lift_w(t);
    EXPECT_TRUE(lifted.is_constant());
    EXPECT_TRUE(wsym(random_simplex_tuple(h, 2, rng)).is_constant());
    const RingPtr ring = make_ring(2);
    NilMatrix mean = NilMatrix::zero(3, ring);
    for (int j = 0; j <= 2; ++j)
      mean = mean + NilMatrix(log_unipotent(t[static_cast<size_t>(j)]).matrix().pullback(SimplexMap::to_point(2))) *
                        SimplexPoly::coordinate(ring, j);
    EXPECT_EQ(lifted[0], exp_nilpotent(mean));
  }
}

TEST(Wav, UpperFourLiftIsNotConstant) {
  const LieSpanPtr g = upper(4);
  const SectionTuple t = io::tuple_from_json(load_fixture("upper4_q2.json"));
  EXPECT_FALSE(lift_w(t).is_constant());
  EXPECT_TRUE(wsym_iterate(lift_w(t), 2).is_constant());
}

TEST(Wav, AbelianCollapse) {
  std::mt19937 rng(13);
  const LieSpanPtr column = std::make_shared<const LieSpan>(LieSpan::abelian_column(4));
  for (int q = 1; q <= 3; ++q) {
    const SectionTuple t = random_simplex_tuple(column, q, rng);
    EXPECT_TRUE(wsym(t).is_constant());
    // the abelian group is a vector group: the average is Σ t_j log f_j
    NilMatrix mean = NilMatrix::zero(4, t.ring());
    for (int j = 0; j <= q; ++j)
      mean = mean + log_unipotent(t[static_cast<size_t>(j)]) * SimplexPoly::coordinate(t.ring(), j);
    EXPECT_EQ(wsym(t)[0], exp_nilpotent(mean));
  }
}

TEST(ActSimplexMap, Identity) {
  std::mt19937 rng(14);
  const SectionTuple t = random_simplex_tuple(heisenberg(), 2, rng);
  EXPECT_EQ(act_simplex_map(t, SimplexMap::identity(2)), t);
}

TEST(ActSimplexMap, LastCofaceDropsSectionAndZeroesLastCoordinate) {
  std::mt19937 rng(15);
  const int q = 2;
  const SectionTuple t = random_simplex_tuple(heisenberg(), q, rng);
  const SectionTuple out = act_simplex_map(t, SimplexMap::coface(q, q));
  ASSERT_EQ(out.degree(), q - 1);
  // evaluate at (w_0, w_1) ↦ (w_0, w_1, 0)
  const std::vector<Scalar> w{Scalar(Rational(1, 3)), Scalar(Rational(2, 3))};
  const std::vector<Scalar> v{Scalar(Rational(1, 3)), Scalar(Rational(2, 3)), Scalar(0)};
  for (int i = 0; i < q; ++i)
    EXPECT_EQ(evaluate(out[static_cast<size_t>(i)], w), evaluate(t[static_cast<size_t>(i)], v));
}

TEST(ActSimplexMap, LastCodegeneracyRepeatsAndMerges) {
  std::mt19937 rng(16);
  const int q = 1;
  const SectionTuple t = random_simplex_tuple(heisenberg(), q, rng);
  const SectionTuple out = act_simplex_map(t, SimplexMap::codegeneracy(q, q));
  ASSERT_EQ(out.degree(), q + 1);
  EXPECT_EQ(out[1], out[2]);
  // t_1(v) = t_1(w) + t_2(w)
  const std::vector<Scalar> w{Scalar(Rational(1, 5)), Scalar(Rational(1, 2)), Scalar(Rational(3, 10))};
  const std::vector<Scalar> v{Scalar(Rational(1, 5)), Scalar(Rational(4, 5))};
  EXPECT_EQ(evaluate(out[2], w), evaluate(t[1], v));
  EXPECT_THROW(act_simplex_map(t, SimplexMap::coface(2, 0)), InputError);
}

TEST(ActPermutation, Examples) {
  std::mt19937 rng(17);
  const SectionTuple t = random_simplex_tuple(heisenberg(), 1, rng);
  EXPECT_EQ(act_permutation(t, Permutation::identity(1)), t);
  const SectionTuple s = act_permutation(t, Permutation({1, 0}));
  const std::vector<Scalar> w{Scalar(Rational(1, 4)), Scalar(Rational(3, 4))};
  const std::vector<Scalar> swapped{Scalar(Rational(3, 4)), Scalar(Rational(1, 4))};
  EXPECT_EQ(evaluate(s[0], w), evaluate(t[1], swapped));
  EXPECT_EQ(evaluate(s[1], w), evaluate(t[0], swapped));
  const SectionTuple u = random_simplex_tuple(heisenberg(), 3, rng);
  for (const auto& p : Permutation::all(3)) EXPECT_EQ(act_permutation(act_permutation(u, p), p.inverse()), u);
}

TEST(Symmetry, PermutationCommutesWithWav) {
  std::mt19937 rng(18);
  for (int q = 1; q <= 3; ++q) {
    const SectionTuple t = random_tuple(heisenberg(), q, rng);
    const UniMatrix w = wav(t);
    for (const auto& p : Permutation::all(q)) {
      const UniMatrix lhs = wav(act_permutation(t, p));
      EXPECT_EQ(lhs, UniMatrix(w.matrix().pullback_function(p.images(), q)));
    }
  }
}

TEST(Simpliciality, GeneratorsCommute) {
  std::mt19937 rng(19);
  const LieSpanPtr h = heisenberg();
  for (const auto& alpha : simplicial_generators(3)) {
    const SectionTuple on_simplex_tuple = random_simplex_tuple(h, alpha.target(), rng);
    EXPECT_EQ(embedded(act_simplex_map(wsym(on_simplex_tuple), alpha)), wsym(embedded(act_simplex_map(on_simplex_tuple, alpha))))
        << alpha.name();
    const SectionTuple t = random_tuple(h, alpha.target(), rng);
    EXPECT_EQ(embedded(act_simplex_map(lift_w(t), alpha)), lift_w(act_simplex_map(t, alpha))) << alpha.name();
    EXPECT_EQ(UniMatrix(wav(t).matrix().pullback(alpha)), wav(act_simplex_map(t, alpha))) << alpha.name();
  }
}

TEST(Functoriality, QuotientByCenter) {
  const LieSpanPtr h = heisenberg();
  const Quotient q = quotient_span(h, LieSpan(3, {elem(3, 0, 2)}));
  std::mt19937 rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const SectionTuple t = random_tuple(h, 1 + trial % 3, rng);
    EXPECT_EQ(apply_hom(q.projection, wav(t)), wav(apply_hom(q.projection, t)));
  }
}

TEST(WavAtWeights, Examples) {
  const LieSpanPtr h = heisenberg();
  std::mt19937 rng(21);
  const std::vector<UniMatrix> pts{random_element(*h, rng), random_element(*h, rng), random_element(*h, rng)};
  for (int i = 0; i <= 2; ++i) EXPECT_EQ(wav_at_weights(h, pts, WeightSeq::vertex(2, i)), pts[static_cast<size_t>(i)]);
  const std::vector<UniMatrix> same(3, pts[0]);
  EXPECT_EQ(wav_at_weights(h, same, WeightSeq({Scalar(Rational(1, 7)), Scalar(Rational(5, 7)), Scalar(Rational(1, 7))})),
            pts[0]);
  const std::vector<UniMatrix> line_pts{line_point(2), line_point(-1), line_point(Rational(1, 2))};
  const WeightSeq w({Scalar(Rational(1, 2)), Scalar(Rational(1, 3)), Scalar(Rational(1, 6))});
  EXPECT_EQ(wav_at_weights(line(), line_pts, w), line_point(Rational(1) - Rational(1, 3) + Rational(1, 12)));
  EXPECT_THROW(WeightSeq({Scalar(1), Scalar(1)}), InputError);
}

TEST(WavAtWeights, RightTranslationEquivariance) {
  std::mt19937 rng(22);
  for (const auto& g : {heisenberg(), upper(4)}) {
    const UniMatrix c = random_element(*g, rng);
    const std::vector<UniMatrix> pts{random_element(*g, rng), random_element(*g, rng), random_element(*g, rng)};
    std::vector<UniMatrix> moved;
    for (const auto& p : pts) moved.push_back(p * c);
    const WeightSeq w({Scalar(Rational(2, 5)), Scalar(Rational(-1, 5)), Scalar(Rational(4, 5))});
    EXPECT_EQ(wav_at_weights(g, moved, w), wav_at_weights(g, pts, w) * c);
  }
}

TEST(SectionTuple, MembershipChecked) {
  const LieSpanPtr center = std::make_shared<const LieSpan>(3, std::vector<NilMatrix>{elem(3, 0, 2)});
  EXPECT_THROW(SectionTuple(center, {exp_nilpotent(elem(3, 0, 1))}), InputError);
  EXPECT_THROW(SectionTuple(heisenberg(), {UniMatrix::identity(4, kQ)}), InputError);
}

}  // namespace
}  // namespace uavg
