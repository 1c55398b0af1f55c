#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "random_tuples.hpp"
#include "uavg/error.hpp"

namespace uavg {
namespace {

using nlohmann::json;
using testing::fixture_path;
using testing::heisenberg;
using testing::load_fixture;
using testing::random_element;
using testing::random_simplex_element;

struct CliResult {
  int code;
  json out;
  json err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  CliResult r{code, json(), json()};
  if (!out.str().empty()) r.out = json::parse(out.str());
  if (!err.str().empty()) r.err = json::parse(err.str());
  return r;
}

std::string write_temp(const std::string& name, const json& doc) {
  const auto dir = std::filesystem::temp_directory_path() / "uavg_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << doc.dump();
  return path.string();
}

TEST(Io, IntegersAndScalars) {
  EXPECT_EQ(io::integer_to_json(mpz_class(42)), json(42));
  const mpz_class big("123456789012345678901234567890");
  EXPECT_EQ(io::integer_to_json(big), json("123456789012345678901234567890"));
  EXPECT_EQ(io::integer_from_json(io::integer_to_json(big)), big);
  const io::Context q;
  EXPECT_EQ(io::scalar_from_json(json("3/6"), q), Scalar(Rational(1, 2)));
  EXPECT_EQ(io::scalar_from_json(json(-4), q), Scalar(-4));
  EXPECT_EQ(io::scalar_from_json(json{{"num", "-7"}, {"den", 3}}, q), Scalar(Rational(-7, 3)));
  EXPECT_THROW(io::scalar_from_json(json("1/0"), q), InputError);
  EXPECT_THROW(io::scalar_from_json(json{{"coords", {1, 2}}}, q), InputError);
  const Scalar x(Rational(big, 7));
  EXPECT_EQ(io::scalar_from_json(io::to_json(x), q), x);
}

TEST(Io, ExtensionScalars) {
  const io::Context ctx = io::read_context(json::parse(R"({"field":{"variable":"a","modulus":[-2,0,1]}})"));
  ASSERT_EQ(ctx.field->degree(), 2);
  const Scalar x = io::scalar_from_json(json{{"coords", {"1/2", 3}}}, ctx);
  EXPECT_EQ(x * x, Scalar(ctx.field, {Rational(1, 4) + Rational(18), Rational(3)}));
  EXPECT_EQ(io::scalar_from_json(io::to_json(x), ctx), x);
  EXPECT_EQ(io::scalar_from_json(json(5), ctx), Scalar(ctx.field, {Rational(5), Rational(0)}));
}

TEST(Io, MatrixRoundTrip) {
  std::mt19937 rng(1);
  for (int q = 0; q <= 3; ++q) {
    const UniMatrix u = random_simplex_element(*testing::upper(4), q, rng);
    EXPECT_EQ(io::uni_from_json(io::to_json(u), io::Context{}), u);
    const NilMatrix n = log_unipotent(u);
    EXPECT_EQ(io::nil_from_json(io::to_json(n), io::Context{}), n);
  }
  const RingPtr ring = make_ring(1, {"y"});
  PolyMatrix m = PolyMatrix::identity(2, ring);
  m.set(0, 1, SimplexPoly::parameter(ring, 0) * SimplexPoly::coordinate(ring, 0));
  EXPECT_EQ(io::uni_from_json(io::to_json(UniMatrix(m)), io::Context{}), UniMatrix(m));
  EXPECT_THROW(io::uni_from_json(json::parse(R"({"entries":[[2,0],[0,1]]})"), io::Context{}), InputError);
  EXPECT_THROW(io::nil_from_json(json::parse(R"({"entries":[[0,0],[1,0]]})"), io::Context{}), InputError);
}

TEST(Io, LieSpans) {
  const io::Context q;
  EXPECT_EQ(io::lie_from_json(json("heisenberg"), q)->dim(), 3);
  EXPECT_EQ(io::lie_from_json(json{{"preset", "upper_triangular"}, {"n", 5}}, q)->dim(), 10);
  EXPECT_EQ(io::lie_from_json(json{{"preset", "abelian_column"}, {"n", 4}}, q)->dim(), 3);
  const LieSpanPtr g = io::lie_from_json(io::to_json(*heisenberg()), q);
  EXPECT_TRUE(g->contains(*heisenberg()) && heisenberg()->contains(*g));
  EXPECT_THROW(io::lie_from_json(json("nope"), q), InputError);
  EXPECT_THROW(io::lie_from_json(json::parse(R"({"n":2,"basis":[{"entries":[[0,1],[0,0]]},{"entries":[[0,2],[0,0]]}]})"), q),
               InputError);
}

TEST(Io, TupleRoundTrip) {
  const SectionTuple t = io::tuple_from_json(load_fixture("heisenberg_q2_a.json"));
  EXPECT_EQ(io::tuple_from_json(io::to_json(t)), t);
  EXPECT_THROW(io::tuple_from_json(json::parse(R"({"group":"heisenberg","sections":[]})")), InputError);
}

TEST(Io, WeightsAndDecimals) {
  const WeightSeq w = io::weights_from_string("1/3, 2/3");
  EXPECT_EQ(w.weights()[1], Scalar(Rational(2, 3)));
  EXPECT_THROW(io::weights_from_string("1/2,1/3"), InputError);
  EXPECT_THROW(io::weights_from_string("x"), InputError);
  EXPECT_EQ(io::decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(io::decimal(Rational(-5, 2), 3), "-2.5");
  EXPECT_EQ(io::decimal(Rational(2, 3), 3), "0.667");
  EXPECT_EQ(io::decimal(Rational(4), 3), "4");
}

TEST(Cli, WavMatchesOracle) {
  const CliResult r = run_cli({"wav", "-i", fixture_path("heisenberg_q2_a.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto expected = io::uni_from_json(load_fixture("oracle/heisenberg_q2_a.wav.json"), io::Context{});
  EXPECT_EQ(io::uni_from_json(r.out.at("wav"), io::Context{}), expected);
  EXPECT_EQ(r.out.at("q"), 2);
  EXPECT_EQ(r.out.at("derived_length"), 2);
}

TEST(Cli, WavAtVertexWeights) {
  const SectionTuple t = io::tuple_from_json(load_fixture("upper4_q2.json"));
  const CliResult r = run_cli({"wav", "-i", fixture_path("upper4_q2.json"), "--weights", "0,1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::uni_from_json(r.out.at("point"), io::Context{}), t[1]);
  EXPECT_EQ(run_cli({"wav", "-i", fixture_path("upper4_q2.json"), "--weights", "1/2,1/2"}).code, 2);
  EXPECT_EQ(run_cli({"wav", "-i", fixture_path("upper4_q2.json"), "--iterations", "1"}).code, 2);
}

TEST(Cli, Wsym) {
  const CliResult lifted = run_cli({"wsym", "-i", fixture_path("upper4_q2.json"), "--lift", "--iterations", "2"});
  ASSERT_EQ(lifted.code, 0) << lifted.err;
  EXPECT_TRUE(lifted.out.at("constant").get<bool>());
  const CliResult once = run_cli({"wsym", "-i", fixture_path("upper4_q2.json"), "--lift", "--iterations", "0"});
  ASSERT_EQ(once.code, 0) << once.err;
  EXPECT_FALSE(once.out.at("constant").get<bool>());
  EXPECT_EQ(run_cli({"wsym", "-i", fixture_path("upper4_q2.json")}).code, 2);
}

TEST(Cli, ExpLogBch) {
  std::mt19937 rng(2);
  const UniMatrix u = random_element(*heisenberg(), rng);
  const NilMatrix x = log_unipotent(u);
  const std::string m = write_temp("m.json", json{{"matrix", io::to_json(x)}});
  const CliResult e = run_cli({"exp", "-i", m});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(io::uni_from_json(e.out.at("result"), io::Context{}), u);
  const CliResult l = run_cli({"log", "-i", write_temp("u.json", io::to_json(u))});
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(io::nil_from_json(l.out.at("result"), io::Context{}), x);
  const NilMatrix y = log_unipotent(random_element(*heisenberg(), rng));
  const CliResult b = run_cli({"bch", "-i", write_temp("ab.json", json{{"a", io::to_json(x)}, {"b", io::to_json(y)}})});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(io::nil_from_json(b.out.at("result"), io::Context{}), log_unipotent(exp_nilpotent(x) * exp_nilpotent(y)));
}

TEST(Cli, Sections) {
  const CliResult ok = run_cli({"sections", "-i", fixture_path("cover3.json"), "--max-q", "2"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(ok.out.at("report").at("ok").get<bool>());
  const CliResult bad = run_cli({"sections", "-i", fixture_path("cover3_corrupt.json")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(bad.out.at("report").at("map"), "d^0:[0]->[1]");
  EXPECT_EQ(bad.out.at("report").at("point"), "p2");
}

TEST(Cli, Galois) {
  const CliResult r = run_cli({"galois", "-i", fixture_path("galois_sqrt2_heisenberg.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.at("orbit_size"), 2);
  const auto p = io::uni_from_json(r.out.at("point"), io::Context{});
  EXPECT_EQ(p(0, 2), SimplexPoly(p.ring(), Scalar(1)));
  const CliResult bad = run_cli({"galois", "-i", fixture_path("galois_sqrt2_heisenberg_corrupt.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err.at("error").at("kind"), "input_error");
}

TEST(Cli, FigureData) {
  std::mt19937 rng(3);
  const UniMatrix z1 = random_element(*heisenberg(), rng);
  const SectionTuple t(heisenberg(), {UniMatrix::identity(3, make_ring(0)), z1});
  const std::string path = write_temp("line.json", io::to_json(t));
  const CliResult coarse = run_cli({"figure-data", "-i", path, "--resolution", "1"});
  ASSERT_EQ(coarse.code, 0) << coarse.err;
  ASSERT_EQ(coarse.out.at("samples").size(), 2u);
  const CliResult fine = run_cli({"figure-data", "-i", path, "-r", "4"});
  ASSERT_EQ(fine.code, 0) << fine.err;
  const auto& samples = fine.out.at("samples");
  ASSERT_EQ(samples.size(), 5u);
  const NilMatrix l = log_unipotent(z1);
  for (int k = 0; k <= 4; ++k) {
    // weight on z1 is (4 - k) / 4
    const UniMatrix expected = exp_nilpotent(l * Scalar(Rational(4 - k, 4)));
    EXPECT_EQ(io::uni_from_json(samples[static_cast<size_t>(k)].at("value"), io::Context{}), expected);
  }
  const CliResult tri = run_cli({"figure-data", "-i", fixture_path("heisenberg_q2_a.json"), "-r", "2"});
  ASSERT_EQ(tri.code, 0);
  EXPECT_EQ(tri.out.at("samples").size(), 6u);
  EXPECT_EQ(run_cli({"figure-data", "-i", fixture_path("heisenberg_q2_a.json"), "-r", "0"}).code, 2);
}

TEST(Cli, ErrorsAndOutputFile) {
  EXPECT_EQ(run_cli({}).code, 2);
  const CliResult unknown = run_cli({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_EQ(unknown.err.at("error").at("kind"), "usage");
  EXPECT_EQ(run_cli({"wav"}).code, 2);
  EXPECT_EQ(run_cli({"wav", "-i", "/nonexistent/file.json"}).code, 2);
  const auto dir = std::filesystem::temp_directory_path() / "uavg_tests";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_EQ(run_cli({"wav", "-i", (dir / "broken.json").string()}).code, 2);
  const std::string out = (dir / "out.json").string();
  std::filesystem::remove(out);
  EXPECT_EQ(run_cli({"wav", "-i", fixture_path("heisenberg_q1.json"), "-o", out}).code, 0);
  std::ifstream in(out);
  EXPECT_TRUE(json::parse(in).contains("wav"));
}

}  // namespace
}  // namespace uavg
