#include "uavg/simplex_poly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "uavg/error.hpp"

namespace uavg {

bool SimplexRing::same_as(const SimplexRing& other) const {
  return q == other.q && params == other.params && field->same_as(*other.field);
}

RingPtr make_ring(int q, std::vector<std::string> params, FieldPtr field) {
  if (q < 0) throw InputError("simplex dimension must be non-negative");
  auto r = std::make_shared<SimplexRing>();
  r->q = q;
  r->params = std::move(params);
  r->field = std::move(field);
  return r;
}

RingPtr ring_with_degree(const RingPtr& ring, int q) {
  if (ring->q == q) return ring;
  return make_ring(q, ring->params, ring->field);
}

RingPtr ring_with_field(const RingPtr& ring, const FieldPtr& field) {
  if (ring->field == field) return ring;
  return make_ring(ring->q, ring->params, field);
}

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return a;
  if (a->q != b->q) throw InputError("ring mismatch: simplex dimensions differ");
  if (a->params != b->params) throw InputError("ring mismatch: parameter lists differ");
  auto f = common_field(a->field, b->field);
  if (f == a->field || f->same_as(*a->field)) return a;
  return b;
}

SimplexPoly::SimplexPoly(RingPtr ring) : ring_(std::move(ring)) {}

SimplexPoly::SimplexPoly(RingPtr ring, const Scalar& constant) : ring_(std::move(ring)) {
  auto f = common_field(ring_->field, constant.field());
  ring_ = ring_with_field(ring_, f);
  Coords c = constant.promoted(f).coords();
  if (!uavg::is_zero(c)) terms_.emplace(Exponent(static_cast<size_t>(ring_->num_vars())), std::move(c));
}

SimplexPoly SimplexPoly::coordinate(RingPtr ring, int j) {
  const int q = ring->q;
  if (j < 0 || j > q) throw InputError("simplex coordinate index " + std::to_string(j) + " out of range for q=" +
                                       std::to_string(q));
  const auto& f = ring->field;
  SimplexPoly out(ring);
  const size_t n = static_cast<size_t>(ring->num_vars());
  if (j < q) {
    Exponent e(n);
    e[static_cast<size_t>(j)] = 1;
    out.terms_.emplace(std::move(e), f->one());
    return out;
  }
  out.terms_.emplace(Exponent(n), f->one());
  for (int i = 0; i < q; ++i) {
    Exponent e(n);
    e[static_cast<size_t>(i)] = 1;
    out.terms_.emplace(std::move(e), f->lift(-1));
  }
  return out;
}

SimplexPoly SimplexPoly::parameter(RingPtr ring, int k) {
  if (k < 0 || k >= static_cast<int>(ring->params.size())) throw InputError("parameter index out of range");
  SimplexPoly out(ring);
  Exponent e(static_cast<size_t>(ring->num_vars()));
  e[static_cast<size_t>(ring->q + k)] = 1;
  out.terms_.emplace(std::move(e), ring->field->one());
  return out;
}

SimplexPoly SimplexPoly::from_terms(RingPtr ring, const std::vector<std::pair<std::vector<uint32_t>, Scalar>>& terms) {
  const size_t nv = static_cast<size_t>(ring->num_vars());
  const size_t q = static_cast<size_t>(ring->q);
  SimplexPoly out(ring);
  for (const auto& [exp, coef] : terms) {
    if (exp.size() == nv) {
      SimplexPoly mono(ring);
      mono.terms_.emplace(Exponent(exp.begin(), exp.end()), ring->field->one());
      out += mono * coef;
      continue;
    }
    if (exp.size() != nv + 1) throw InputError("exponent vector has the wrong length");
    // exp = (t_0..t_q, params...): rewrite t_q^k as (1 - sum t_i)^k
    Exponent reduced;
    for (size_t i = 0; i < q; ++i) reduced.push_back(exp[i]);
    for (size_t i = q + 1; i < exp.size(); ++i) reduced.push_back(exp[i]);
    SimplexPoly mono(ring);
    mono.terms_.emplace(std::move(reduced), ring->field->one());
    const SimplexPoly last = coordinate(ring, ring->q);
    for (uint32_t k = 0; k < exp[q]; ++k) mono *= last;
    out += mono * coef;
  }
  return out;
}

bool SimplexPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first)
    if (x) return false;
  return true;
}

Scalar SimplexPoly::constant_value() const {
  if (!is_constant()) throw InputError("polynomial " + to_string() + " is not constant");
  if (terms_.empty()) return Scalar(ring_->field, ring_->field->zero());
  return Scalar(ring_->field, terms_.begin()->second);
}

int SimplexPoly::simplex_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < ring_->q; ++i) d += static_cast<int>(e[static_cast<size_t>(i)]);
    best = std::max(best, d);
  }
  return best;
}

int SimplexPoly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

std::optional<SimplexPoly> SimplexPoly::to_rationals() const {
  SimplexPoly out(ring_with_field(ring_, ScalarField::rationals()));
  for (const auto& [e, c] : terms_) {
    for (size_t k = 1; k < c.size(); ++k)
      if (c[k] != 0) return std::nullopt;
    out.terms_.emplace(e, Coords{c[0]});
  }
  return out;
}

void SimplexPoly::promote_to(const FieldPtr& f) {
  if (ring_->field == f || ring_->field->same_as(*f)) return;
  if (!ring_->field->is_rational()) throw InputError("cannot move polynomial into " + f->to_string());
  ring_ = ring_with_field(ring_, f);
  for (auto& [e, c] : terms_) c = f->lift(c[0]);
}

void SimplexPoly::add_term(const Exponent& e, const Coords& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = ring_->field->add(it->second, c);
  if (uavg::is_zero(it->second)) terms_.erase(it);
}

SimplexPoly SimplexPoly::operator-() const {
  SimplexPoly out(*this);
  for (auto& [e, c] : out.terms_) c = ring_->field->neg(c);
  return out;
}

SimplexPoly& SimplexPoly::operator+=(const SimplexPoly& other) {
  auto r = common_ring(ring_, other.ring_);
  promote_to(r->field);
  if (ring_->field == other.ring_->field || ring_->field->same_as(*other.ring_->field)) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : other.terms_) add_term(e, ring_->field->lift(c[0]));
  }
  return *this;
}

SimplexPoly& SimplexPoly::operator-=(const SimplexPoly& other) { return *this += -other; }

SimplexPoly operator*(const SimplexPoly& a, const SimplexPoly& b) {
  auto r = common_ring(a.ring_, b.ring_);
  if (!(a.ring_->field == r->field) && !a.ring_->field->same_as(*r->field)) return a.promoted(r->field) * b;
  if (!(b.ring_->field == r->field) && !b.ring_->field->same_as(*r->field)) return a * b.promoted(r->field);
  SimplexPoly out(a.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const auto& f = *r->field;
  Exponent e;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e);
      if (inserted) it->second = f.mul(ca, cb);
      else it->second = f.add(it->second, f.mul(ca, cb));
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return uavg::is_zero(kv.second); });
  return out;
}

SimplexPoly& SimplexPoly::operator*=(const SimplexPoly& other) { return *this = *this * other; }

SimplexPoly& SimplexPoly::operator*=(const Scalar& c) {
  promote_to(common_field(ring_->field, c.field()));
  const Coords cc = c.promoted(ring_->field).coords();
  if (uavg::is_zero(cc)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v = ring_->field->mul(v, cc);
  return *this;
}

bool operator==(const SimplexPoly& a, const SimplexPoly& b) {
  if (a.ring_->q != b.ring_->q || a.ring_->params != b.ring_->params) return false;
  FieldPtr f;
  try {
    f = common_field(a.ring_->field, b.ring_->field);
  } catch (const InputError&) {
    return false;
  }
  if (!f->same_as(*a.ring_->field)) return a.promoted(f) == b;
  if (!f->same_as(*b.ring_->field)) return a == b.promoted(f);
  return a.terms_ == b.terms_;
}

SimplexPoly SimplexPoly::pullback(const SimplexMap& alpha) const {
  if (alpha.target() != ring_->q)
    throw InputError("pullback along a map into [" + std::to_string(alpha.target()) + "] of a polynomial on Δ^" +
                     std::to_string(ring_->q));
  return pullback_function(alpha.values(), alpha.source());
}

SimplexPoly SimplexPoly::pullback_function(std::span<const int> values, int p) const {
  const int q = ring_->q;
  if (static_cast<int>(values.size()) != p + 1) throw InputError("malformed simplex map");
  for (int v : values)
    if (v < 0 || v > q) throw InputError("malformed simplex map");
  auto target = ring_with_degree(ring_, p);
  const int np = static_cast<int>(ring_->params.size());

  // images of the source variables: t_j -> sum_{alpha(i) = j} t_i, y_k -> y_k
  std::vector<SimplexPoly> image;
  for (int j = 0; j < q; ++j) {
    SimplexPoly s(target);
    for (int i = 0; i <= p; ++i)
      if (values[static_cast<size_t>(i)] == j) s += coordinate(target, i);
    image.push_back(std::move(s));
  }
  for (int k = 0; k < np; ++k) image.push_back(parameter(target, k));

  std::vector<std::vector<SimplexPoly>> powers(image.size());
  auto power = [&](size_t var, uint32_t k) -> const SimplexPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.emplace_back(target, Scalar(1));
    while (cache.size() <= k) cache.push_back(cache.back() * image[var]);
    return cache[k];
  };

  SimplexPoly out(target);
  for (const auto& [e, c] : terms_) {
    SimplexPoly term(target, Scalar(ring_->field, c));
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v]) term *= power(v, e[v]);
    out += term;
  }
  return out;
}

Scalar SimplexPoly::evaluate(std::span<const Scalar> weights, std::span<const Scalar> param_values) const {
  const int q = ring_->q;
  if (static_cast<int>(weights.size()) != q + 1)
    throw InputError("expected " + std::to_string(q + 1) + " weights, got " + std::to_string(weights.size()));
  if (param_values.size() != ring_->params.size()) throw InputError("missing parameter value");
  Scalar sum(0);
  for (const auto& w : weights) sum += w;
  if (!(sum == Scalar(1))) throw InputError("weights sum to " + sum.to_string() + ", not 1");

  std::vector<Scalar> values(weights.begin(), weights.begin() + q);
  values.insert(values.end(), param_values.begin(), param_values.end());
  Scalar acc(ring_->field, ring_->field->zero());
  for (const auto& [e, c] : terms_) {
    Scalar term(ring_->field, c);
    for (size_t v = 0; v < e.size(); ++v)
      for (uint32_t k = 0; k < e[v]; ++k) term *= values[v];
    acc += term;
  }
  return acc;
}

SimplexPoly SimplexPoly::substitute_params(std::span<const Scalar> param_values) const {
  if (param_values.size() != ring_->params.size()) throw InputError("missing parameter value");
  auto target = make_ring(ring_->q, {}, ring_->field);
  const size_t q = static_cast<size_t>(ring_->q);
  SimplexPoly out(target);
  for (const auto& [e, c] : terms_) {
    Scalar coef(ring_->field, c);
    for (size_t k = 0; k < param_values.size(); ++k)
      for (uint32_t i = 0; i < e[q + k]; ++i) coef *= param_values[k];
    SimplexPoly mono(target);
    mono.terms_.emplace(Exponent(e.begin(), e.begin() + static_cast<long>(q)), target->field->one());
    out += mono * coef;
  }
  return out;
}

SimplexPoly SimplexPoly::derivative(int var) const {
  if (var < 0 || var >= ring_->num_vars()) throw InputError("derivative variable out of range");
  SimplexPoly out(ring_);
  const auto v = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    --d[v];
    out.add_term(d, ring_->field->mul(c, ring_->field->lift(e[v])));
  }
  return out;
}

SimplexPoly SimplexPoly::promoted(const FieldPtr& field) const {
  SimplexPoly out(*this);
  out.promote_to(field);
  return out;
}

std::string SimplexPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (int i = 0; i < ring_->q; ++i) names.push_back("t" + std::to_string(i));
  for (const auto& p : ring_->params) names.push_back(p);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar s(ring_->field, c);
    std::string coef = s.to_string();
    bool mono = false;
    std::string m;
    for (size_t v = 0; v < e.size(); ++v) {
      if (!e[v]) continue;
      if (mono) m += "*";
      m += names[v];
      if (e[v] > 1) m += "^" + std::to_string(e[v]);
      mono = true;
    }
    const bool compound = !s.is_rational();
    if (!first) os << " + ";
    first = false;
    if (!mono) os << (compound ? "(" + coef + ")" : coef);
    else if (coef == "1") os << m;
    else if (coef == "-1") os << "-" << m;
    else os << (compound ? "(" + coef + ")" : coef) << "*" << m;
  }
  return os.str();
}

SimplexPoly make_simplex_coordinate(int q, int j) { return SimplexPoly::coordinate(make_ring(q), j); }

std::ostream& operator<<(std::ostream& os, const SimplexPoly& p) { return os << p.to_string(); }

}  // namespace uavg
