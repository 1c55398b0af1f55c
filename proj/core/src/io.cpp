#include "uavg/io.hpp"

#include <limits>

#include "uavg/error.hpp"

namespace uavg::io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

RingPtr ring_from(const json& j, const Context& ctx, int default_q, const std::vector<std::string>& default_params) {
  const int q = j.is_object() && j.contains("q") ? int_member(j, "q") : default_q;
  if (q < 0) throw InputError("simplex degree must be non-negative");
  auto params = j.is_object() && j.contains("params") ? string_list(j.at("params"), "params") : default_params;
  return make_ring(q, std::move(params), ctx.field);
}

SimplexPoly poly_in_ring(const json& j, const RingPtr& ring, const Context& ctx) {
  if (j.is_object() && j.contains("terms")) {
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw InputError("\"terms\" must be an array");
    std::vector<std::pair<std::vector<uint32_t>, Scalar>> parsed;
    for (const auto& t : terms) {
      const json& e = member(t, "exp");
      if (!e.is_array()) throw InputError("\"exp\" must be an array");
      std::vector<uint32_t> exp;
      for (const auto& k : e) {
        if (!k.is_number_integer() || k.get<long long>() < 0) throw InputError("exponents must be non-negative integers");
        exp.push_back(k.get<uint32_t>());
      }
      parsed.emplace_back(std::move(exp), scalar_from_json(member(t, "coef"), ctx));
    }
    return SimplexPoly::from_terms(ring, parsed);
  }
  return SimplexPoly(ring, scalar_from_json(j, ctx));
}

}  // namespace

Context read_context(const json& doc) {
  Context ctx;
  if (doc.is_object() && doc.contains("field")) {
    const json& f = doc.at("field");
    const std::string var = f.contains("variable") ? member(f, "variable").get<std::string>() : "a";
    const json& m = member(f, "modulus");
    if (!m.is_array()) throw InputError("\"modulus\" must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : m) coeffs.push_back(rational_from_json(c));
    ctx.field = ScalarField::extension(var, std::move(coeffs));
  }
  return ctx;
}

json field_to_json(const FieldPtr& field) {
  json m = json::array();
  for (const auto& c : field->modulus()) m.push_back(to_json(Scalar(c)));
  return {{"variable", field->variable()}, {"modulus", m}};
}

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
  if (j.is_object()) {
    const mpz_class num = integer_from_json(member(j, "num"));
    const mpz_class den = j.contains("den") ? integer_from_json(j.at("den")) : mpz_class(1);
    if (den == 0) throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    const mpz_class num = integer_from_json(s.substr(0, slash));
    const mpz_class den = integer_from_json(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  throw InputError("expected an exact rational, got " + j.dump());
}

json to_json(const Scalar& s) {
  if (s.is_rational()) {
    const Rational r = s.to_rational();
    return {{"num", integer_to_json(r.get_num())}, {"den", integer_to_json(r.get_den())}};
  }
  json coords = json::array();
  for (const auto& c : s.coords()) coords.push_back(to_json(Scalar(c)));
  return {{"coords", coords}};
}

Scalar scalar_from_json(const json& j, const Context& ctx) {
  if (j.is_object() && j.contains("coords")) {
    const json& c = j.at("coords");
    if (!c.is_array()) throw InputError("\"coords\" must be an array");
    if (ctx.field->is_rational()) {
      if (c.size() != 1) throw InputError("coordinates given but the document declares no extension field");
      return Scalar(rational_from_json(c.at(0)));
    }
    if (c.size() != static_cast<size_t>(ctx.field->degree()))
      throw InputError("expected " + std::to_string(ctx.field->degree()) + " coordinates, got " +
                       std::to_string(c.size()));
    Coords coords;
    for (const auto& x : c) coords.push_back(rational_from_json(x));
    return Scalar(ctx.field, std::move(coords));
  }
  return Scalar(rational_from_json(j));
}

json to_json(const SimplexPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"exp", e}, {"coef", to_json(Scalar(p.ring()->field, c))}});
  return {{"q", p.ring()->q}, {"params", p.ring()->params}, {"terms", terms}};
}

SimplexPoly poly_from_json(const json& j, const Context& ctx) {
  return poly_in_ring(j, ring_from(j, ctx, 0, {}), ctx);
}

json to_json(const PolyMatrix& m) {
  const RingPtr& ring = m.ring();
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) {
      const SimplexPoly& e = m(i, j);
      row.push_back(e.is_constant() ? to_json(e.constant_value()) : to_json(e));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", m.size()}, {"q", ring->q}, {"params", ring->params}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const json& j, const Context& ctx) {
  const json& rows = member(j, "entries");
  if (!rows.is_array()) throw InputError("\"entries\" must be an array of rows");
  const int n = j.contains("n") ? int_member(j, "n") : static_cast<int>(rows.size());
  if (rows.size() != static_cast<size_t>(n)) throw InputError("matrix must have n rows");
  const RingPtr ring = ring_from(j, ctx, 0, {});
  PolyMatrix m(n, ring);
  for (int r = 0; r < n; ++r) {
    const json& row = rows.at(static_cast<size_t>(r));
    if (!row.is_array() || row.size() != static_cast<size_t>(n)) throw InputError("matrix rows must have n entries");
    for (int c = 0; c < n; ++c) {
      const json& e = row.at(static_cast<size_t>(c));
      const RingPtr er = e.is_object() && e.contains("terms") ? ring_from(e, ctx, ring->q, ring->params) : ring;
      if (er->q != ring->q || er->params != ring->params)
        throw InputError("matrix entry lives on a different ring than the matrix");
      m.set(r, c, poly_in_ring(e, ring, ctx));
    }
  }
  return m;
}

json to_json(const NilMatrix& m) { return to_json(m.matrix()); }
json to_json(const UniMatrix& m) { return to_json(m.matrix()); }
NilMatrix nil_from_json(const json& j, const Context& ctx) { return NilMatrix(matrix_from_json(j, ctx)); }
UniMatrix uni_from_json(const json& j, const Context& ctx) { return UniMatrix(matrix_from_json(j, ctx)); }

json to_json(const LieSpan& g) {
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back(to_json(b));
  return {{"n", g.ambient_size()}, {"basis", basis}};
}

LieSpanPtr lie_from_json(const json& j, const Context& ctx) {
  if (j.is_string() || (j.is_object() && j.contains("preset"))) {
    const std::string preset = j.is_string() ? j.get<std::string>() : j.at("preset").get<std::string>();
    if (preset == "heisenberg") return std::make_shared<const LieSpan>(LieSpan::heisenberg());
    const int n = j.is_object() && j.contains("n") ? int_member(j, "n") : 3;
    if (preset == "upper_triangular") return std::make_shared<const LieSpan>(LieSpan::upper_triangular(n));
    if (preset == "abelian_column") return std::make_shared<const LieSpan>(LieSpan::abelian_column(n));
    throw InputError("unknown group preset '" + preset + "'");
  }
  const int n = int_member(j, "n");
  const json& basis = member(j, "basis");
  if (!basis.is_array()) throw InputError("\"basis\" must be an array");
  std::vector<NilMatrix> mats;
  for (const auto& b : basis) {
    NilMatrix m = nil_from_json(b, ctx);
    if (m.size() != n) throw InputError("basis matrix size does not match n");
    mats.push_back(std::move(m));
  }
  return std::make_shared<const LieSpan>(n, std::move(mats));
}

json to_json(const SectionTuple& t) {
  json sections = json::array();
  for (const auto& s : t.sections()) sections.push_back(to_json(s));
  json out = {{"group", to_json(*t.group())}, {"sections", sections}};
  if (!t.ring()->field->is_rational()) out["field"] = field_to_json(t.ring()->field);
  return out;
}

SectionTuple tuple_from_json(const json& doc) {
  const Context ctx = read_context(doc);
  const LieSpanPtr group = lie_from_json(member(doc, "group"), ctx);
  const json& sections = member(doc, "sections");
  if (!sections.is_array() || sections.empty()) throw InputError("\"sections\" must be a non-empty array");
  std::vector<UniMatrix> out;
  for (const auto& s : sections) out.push_back(uni_from_json(s, ctx));
  return SectionTuple(group, std::move(out));
}

json to_json(const FiniteCover& c) {
  json opens = json::array();
  for (int j = 0; j < c.num_opens(); ++j) {
    json o = json::array();
    for (int p : c.open(j)) o.push_back(c.points()[static_cast<size_t>(p)]);
    opens.push_back(std::move(o));
  }
  return {{"points", c.points()}, {"opens", opens}};
}

FiniteCover cover_from_json(const json& j) {
  const json& opens = member(j, "opens");
  if (!opens.is_array()) throw InputError("\"opens\" must be an array");
  std::vector<std::vector<std::string>> parsed;
  for (const auto& o : opens) parsed.push_back(string_list(o, "an open"));
  return FiniteCover(string_list(member(j, "points"), "\"points\""), std::move(parsed));
}

LocalSection local_from_json(const json& j, const Context& ctx) {
  LocalSection l;
  l.open_index = int_member(j, "open");
  const json& values = member(j, "values");
  if (!values.is_object()) throw InputError("\"values\" must map point labels to matrices");
  for (const auto& [label, m] : values.items()) l.values.emplace(label, uni_from_json(m, ctx));
  return l;
}

json levels_to_json(const SimplicialSection& s) {
  json out = json::object();
  for (int q = 0; q <= s.max_level(); ++q)
    for (const auto& [index, values] : s.level(q)) {
      json v = json::object();
      for (const auto& [label, m] : values) v[label] = to_json(m);
      out[multi_index_key(index)] = std::move(v);
    }
  return out;
}

SimplicialSection section_from_json(const json& doc) {
  const Context ctx = read_context(doc);
  SimplicialSection s(cover_from_json(member(doc, "cover")), lie_from_json(member(doc, "group"), ctx));
  const json& levels = member(doc, "levels");
  if (!levels.is_object()) throw InputError("\"levels\" must map multi-index keys to point values");
  for (const auto& [key, values] : levels.items()) {
    const MultiIndex index = parse_multi_index(key);
    if (!values.is_object()) throw InputError("level entry '" + key + "' must map point labels to matrices");
    for (const auto& [label, m] : values.items()) {
      const int q = static_cast<int>(index.size()) - 1;
      json mj = m;
      if (!mj.contains("q")) mj["q"] = q;
      s.set(index, label, uni_from_json(mj, ctx));
    }
  }
  return s;
}

json to_json(const SimplicialReport& r) {
  json out = {{"ok", r.ok}, {"checks", r.checks}};
  if (!r.ok) {
    out["map"] = r.map_name;
    out["multi_index"] = multi_index_key(r.multi_index);
    out["point"] = r.point;
    out["message"] = r.message;
  }
  return out;
}

json to_json(const TowerReport& r) {
  json out = {{"ok", r.ok}, {"checks", r.checks}};
  if (!r.ok) out["message"] = r.message;
  return out;
}

GaloisOrbit orbit_from_json(const json& doc) {
  const Context ctx = read_context(doc);
  if (ctx.field->is_rational()) throw InputError("a Galois orbit needs an extension \"field\"");
  const json& gens = member(member(doc, "field"), "generators");
  if (!gens.is_array()) throw InputError("\"generators\" must be an array");
  std::vector<Scalar> images;
  for (const auto& g : gens) images.push_back(scalar_from_json(g, ctx).promoted(ctx.field));
  GaloisAction action(ctx.field, std::move(images));
  const LieSpanPtr group = lie_from_json(member(doc, "group"), ctx);
  const json& points = member(doc, "points");
  if (!points.is_array()) throw InputError("\"points\" must be an array");
  std::vector<UniMatrix> pts;
  for (const auto& p : points) pts.emplace_back(uni_from_json(p, ctx).matrix().promoted(ctx.field));
  return GaloisOrbit(group, std::move(action), std::move(pts));
}

WeightSeq weights_from_string(const std::string& s) {
  std::vector<Scalar> w;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = std::min(s.find(',', pos), s.size());
    std::string part = s.substr(pos, comma - pos);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    if (part.empty()) throw InputError("empty weight in '" + s + "'");
    w.emplace_back(rational_from_json(json(part)));
    pos = comma + 1;
  }
  return WeightSeq(std::move(w));
}

std::string decimal(const Rational& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class rounded = num / (2 * r.get_den());
  std::string s = rounded.get_str();
  if (s.size() <= static_cast<size_t>(digits)) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (r < 0 && s != "0") s.insert(0, "-");
  return s;
}

}  // namespace uavg::io
