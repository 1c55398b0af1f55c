#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uavg/error.hpp"
#include "uavg/io.hpp"

namespace uavg::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::string weights;
  std::optional<int> iterations;
  int resolution = 4;
  int max_q = 3;
  bool lift = false;
};

json read_json(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

json weights_json(const WeightSeq& w) {
  json out = json::array();
  for (const auto& x : w.weights()) out.push_back(io::to_json(x));
  return out;
}

/// Matrix entries as decimal strings; null where an entry is not a rational constant.
json decimal_matrix(const UniMatrix& u) {
  json rows = json::array();
  for (int i = 0; i < u.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < u.size(); ++j) {
      const SimplexPoly& e = u(i, j);
      if (e.is_constant() && e.constant_value().is_rational())
        row.push_back(io::decimal(e.constant_value().to_rational()));
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

NilMatrix nil_input(const json& doc, const char* key) {
  const io::Context ctx = io::read_context(doc);
  if (doc.contains(key)) return io::nil_from_json(doc.at(key), ctx);
  if (std::string(key) == "matrix" && doc.contains("entries")) return io::nil_from_json(doc, ctx);
  throw InputError(std::string("missing field \"") + key + "\"");
}

json cmd_wav(const Options& o) {
  const SectionTuple t = io::tuple_from_json(read_json(o.input));
  const int d_min = derived_series_length(*t.group());
  const UniMatrix w = wav(t, o.iterations);
  json out = {{"wav", io::to_json(w)},
              {"q", t.degree()},
              {"derived_length", d_min},
              {"iterations", o.iterations.value_or(d_min)}};
  if (!o.weights.empty()) {
    const WeightSeq ws = io::weights_from_string(o.weights);
    if (ws.degree() != t.degree()) throw InputError("expected " + std::to_string(t.degree() + 1) + " weights");
    const UniMatrix p = evaluate(w, ws.weights());
    out["weights"] = weights_json(ws);
    out["point"] = io::to_json(p);
  }
  return out;
}

json cmd_wsym(const Options& o) {
  SectionTuple t = io::tuple_from_json(read_json(o.input));
  if (o.lift) t = lift_w(t);
  const int passes = o.iterations.value_or(1);
  const SectionTuple r = wsym_iterate(t, passes);
  json out = io::to_json(r);
  out["passes"] = passes;
  out["lifted"] = o.lift;
  out["constant"] = r.is_constant();
  return out;
}

json cmd_exp(const Options& o) { return {{"result", io::to_json(exp_nilpotent(nil_input(read_json(o.input), "matrix")))}}; }

json cmd_log(const Options& o) {
  const json doc = read_json(o.input);
  const io::Context ctx = io::read_context(doc);
  const json& m = doc.contains("matrix") ? doc.at("matrix") : doc;
  return {{"result", io::to_json(log_unipotent(io::uni_from_json(m, ctx)))}};
}

json cmd_bch(const Options& o) {
  const json doc = read_json(o.input);
  return {{"result", io::to_json(bch(nil_input(doc, "a"), nil_input(doc, "b")))}};
}

json cmd_sections(const Options& o, int& code) {
  const json doc = read_json(o.input);
  std::optional<SimplicialSection> s;
  if (doc.contains("levels")) {
    s = io::section_from_json(doc);
  } else {
    const io::Context ctx = io::read_context(doc);
    const FiniteCover cover = io::cover_from_json(doc.at("cover"));
    const LieSpanPtr group = io::lie_from_json(doc.at("group"), ctx);
    const json& locals = doc.contains("locals") ? doc.at("locals") : throw InputError("missing field \"locals\"");
    std::vector<LocalSection> parsed;
    for (const auto& l : locals) parsed.push_back(io::local_from_json(l, ctx));
    s = build_simplicial_section(cover, parsed, group, o.max_q);
  }
  const SimplicialReport report = validate_simplicial_section(*s, o.max_q);
  if (!report.ok) code = kInvariantViolation;
  return {{"cover", io::to_json(s->cover())}, {"levels", io::levels_to_json(*s)}, {"report", io::to_json(report)}};
}

json cmd_galois(const Options& o) {
  const GaloisOrbit orbit = io::orbit_from_json(read_json(o.input));
  const UniMatrix p = rational_point(orbit);
  json perms = json::array();
  for (size_t g = 0; g < orbit.action().num_generators(); ++g) perms.push_back(orbit.permutation(g));
  return {{"point", io::to_json(p)},
          {"point_decimal", decimal_matrix(p)},
          {"orbit_size", orbit.points().size()},
          {"generator_permutations", perms}};
}

json cmd_figure_data(const Options& o) {
  const SectionTuple t = io::tuple_from_json(read_json(o.input));
  const int q = t.degree();
  if (q != 1 && q != 2) throw InputError("figure-data supports q = 1 or q = 2, got q = " + std::to_string(q));
  if (o.resolution < 1) throw InputError("--resolution must be positive");
  const int r = o.resolution;
  const UniMatrix w = wav(t, o.iterations);
  json samples = json::array();
  auto emit = [&](std::vector<Scalar> weights) {
    const WeightSeq ws(std::move(weights));
    const UniMatrix v = evaluate(w, ws.weights());
    json dec = json::array();
    for (const auto& x : ws.weights()) dec.push_back(io::decimal(x.to_rational()));
    samples.push_back({{"weights", weights_json(ws)},
                       {"weights_decimal", dec},
                       {"value", io::to_json(v)},
                       {"value_decimal", decimal_matrix(v)}});
  };
  for (int k = 0; k <= r; ++k) {
    if (q == 1) {
      emit({Scalar(Rational(k, r)), Scalar(Rational(r - k, r))});
    } else {
      for (int l = 0; k + l <= r; ++l) emit({Scalar(Rational(k, r)), Scalar(Rational(l, r)), Scalar(Rational(r - k - l, r))});
    }
  }
  return {{"q", q}, {"resolution", r}, {"wav", io::to_json(w)}, {"samples", samples}};
}

void write_result(const Options& o, const json& result, std::ostream& out) {
  if (o.output.empty()) {
    out << result.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw InputError("cannot write '" + o.output + "'");
  f << result.dump(2) << "\n";
}

void write_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted averages on unipotent matrix groups, with exact arithmetic", "uavg"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Input JSON file")->required();
    sub->add_option("--output,-o", o.output, "Write the result here instead of stdout");
  };
  std::function<json(int&)> job;

  auto* wav_cmd = app.add_subcommand("wav", "Weighted average of a section tuple");
  add_io(wav_cmd);
  wav_cmd->add_option("--weights,-w", o.weights, "Comma-separated weights, e.g. 1/3,2/3");
  wav_cmd->add_option("--iterations,-d", o.iterations, "Symmetrization passes (at least the derived length)");
  wav_cmd->callback([&] { job = [&](int&) { return cmd_wav(o); }; });

  auto* wsym_cmd = app.add_subcommand("wsym", "Symmetrization passes on a tuple living on the simplex");
  add_io(wsym_cmd);
  wsym_cmd->add_option("--iterations,-d", o.iterations, "Number of passes (default 1)");
  wsym_cmd->add_flag("--lift", o.lift, "Lift a tuple of constant sections onto the simplex first");
  wsym_cmd->callback([&] { job = [&](int&) { return cmd_wsym(o); }; });

  auto* exp_cmd = app.add_subcommand("exp", "Exponential of a strictly upper-triangular matrix");
  add_io(exp_cmd);
  exp_cmd->callback([&] { job = [&](int&) { return cmd_exp(o); }; });

  auto* log_cmd = app.add_subcommand("log", "Logarithm of a unit upper-triangular matrix");
  add_io(log_cmd);
  log_cmd->callback([&] { job = [&](int&) { return cmd_log(o); }; });

  auto* bch_cmd = app.add_subcommand("bch", "log(exp a exp b)");
  add_io(bch_cmd);
  bch_cmd->callback([&] { job = [&](int&) { return cmd_bch(o); }; });

  auto* sec_cmd = app.add_subcommand("sections", "Build or validate a simplicial section over a finite cover");
  add_io(sec_cmd);
  sec_cmd->add_option("--max-q", o.max_q, "Highest simplex degree to build and check")->check(CLI::NonNegativeNumber);
  sec_cmd->callback([&] { job = [&](int& code) { return cmd_sections(o, code); }; });

  auto* gal_cmd = app.add_subcommand("galois", "Rational point from a Galois orbit");
  add_io(gal_cmd);
  gal_cmd->callback([&] { job = [&](int&) { return cmd_galois(o); }; });

  auto* fig_cmd = app.add_subcommand("figure-data", "Samples of the weighted average on a grid in the simplex");
  add_io(fig_cmd);
  fig_cmd->add_option("--resolution,-r", o.resolution, "Grid denominator R");
  fig_cmd->add_option("--iterations,-d", o.iterations, "Symmetrization passes");
  fig_cmd->callback([&] { job = [&](int&) { return cmd_figure_data(o); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kInputError;
  }

  int code = kOk;
  try {
    write_result(o, job(code), out);
  } catch (const InvariantViolation& e) {
    write_error(err, "invariant_violation", e.what());
    return kInvariantViolation;
  } catch (const InputError& e) {
    write_error(err, "input_error", e.what());
    return kInputError;
  } catch (const json::exception& e) {
    write_error(err, "input_error", e.what());
    return kInputError;
  }
  if (code == kInvariantViolation) write_error(err, "invariant_violation", "simplicial section failed validation");
  return code;
}

}  // namespace uavg::cli
