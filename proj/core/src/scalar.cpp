#include "uavg/scalar.hpp"

#include <ostream>
#include <sstream>

#include "uavg/error.hpp"

namespace uavg {

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

bool has_rational_root(const std::vector<Rational>& m) {
  // clear denominators to get an integer polynomial with the same roots
  mpz_class l = 1;
  for (const auto& c : m) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(mpz_class(c * l));
  if (z.front() == 0) return true;
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const auto& p : divisors(z.front())) {
    for (const auto& q : divisors(z.back())) {
      Rational cand(p, q);
      cand.canonicalize();
      if (eval(cand) == 0 || eval(-cand) == 0) return true;
    }
  }
  return false;
}

}  // namespace

FieldPtr ScalarField::rationals() {
  static const FieldPtr q{new ScalarField()};
  return q;
}

FieldPtr ScalarField::extension(std::string variable, std::vector<Rational> modulus) {
  for (auto& c : modulus) c.canonicalize();
  if (modulus.size() < 3) throw InputError("field extension needs a defining polynomial of degree >= 2");
  if (modulus.back() != 1) throw InputError("defining polynomial must be monic");
  if (variable.empty()) throw InputError("field extension needs a variable name");
  const int d = static_cast<int>(modulus.size()) - 1;
  if (d <= 3 && has_rational_root(modulus))
    throw InputError("defining polynomial of degree <= 3 has a rational root, so it is reducible");

  std::shared_ptr<ScalarField> f{new ScalarField()};
  f->variable_ = std::move(variable);
  f->modulus_ = std::move(modulus);
  // x^d = -sum_{k<d} m_k x^k, then shift repeatedly
  Coords cur(d);
  for (int k = 0; k < d; ++k) cur[k] = -f->modulus_[k];
  f->reduction_.push_back(cur);
  for (int e = d + 1; e <= 2 * d - 2; ++e) {
    Coords next(d);
    const Rational top = cur[d - 1];
    for (int k = d - 1; k >= 1; --k) next[k] = cur[k - 1];
    for (int k = 0; k < d; ++k) next[k] += top * f->reduction_[0][k];
    f->reduction_.push_back(next);
    cur = std::move(next);
  }
  return f;
}

bool ScalarField::same_as(const ScalarField& other) const {
  return this == &other || (variable_ == other.variable_ && modulus_ == other.modulus_);
}

Coords ScalarField::add(const Coords& a, const Coords& b) const {
  Coords r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Coords ScalarField::sub(const Coords& a, const Coords& b) const {
  Coords r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coords ScalarField::neg(const Coords& a) const {
  Coords r(a);
  for (auto& c : r) c = -c;
  return r;
}

Coords ScalarField::one() const {
  Coords r = zero();
  r[0] = 1;
  return r;
}

Coords ScalarField::lift(const Rational& v) const {
  Coords r = zero();
  r[0] = v;
  return r;
}

Coords ScalarField::mul(const Coords& a, const Coords& b) const {
  const int d = degree();
  if (d == 1) return Coords{a[0] * b[0]};
  std::vector<Rational> full(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) full[i + j] += a[i] * b[j];
  }
  Coords r(full.begin(), full.begin() + d);
  for (int e = d; e <= 2 * d - 2; ++e) {
    if (full[e] == 0) continue;
    const auto& red = reduction_[e - d];
    for (int k = 0; k < d; ++k) r[k] += full[e] * red[k];
  }
  return r;
}

Coords ScalarField::inverse(const Coords& a) const {
  if (uavg::is_zero(a)) throw InputError("division by zero");
  const int d = degree();
  if (d == 1) return Coords{1 / a[0]};
  // Solve (a * c) = 1 for c: column k of the system is a * x^k.
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d + 1));
  Coords col = a;
  Coords x = zero();
  x[1] = 1;
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) rows[i][k] = col[i];
    col = mul(col, x);
  }
  rows[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && rows[piv][c] == 0) ++piv;
    if (piv == d) throw InvariantViolation("element is not invertible; modulus is reducible");
    std::swap(rows[c], rows[piv]);
    const Rational inv = 1 / rows[c][c];
    for (auto& v : rows[c]) v *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (int k = c; k <= d; ++k) rows[r][k] -= f * rows[c][k];
    }
  }
  Coords out(d);
  for (int i = 0; i < d; ++i) out[i] = rows[i][d];
  return out;
}

std::string ScalarField::to_string() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q[" << variable_ << "]/(";
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (k == 0 || a != 1) os << a;
    if (k > 0) os << variable_;
    if (k > 1) os << "^" << k;
  }
  os << ")";
  return os.str();
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || b->is_rational()) return a;
  if (a->is_rational()) return b;
  if (a->same_as(*b)) return a;
  throw InputError("field mismatch: " + a->to_string() + " vs " + b->to_string());
}

bool is_zero(const Coords& c) {
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

Scalar::Scalar() : field_(ScalarField::rationals()), coords_{Rational(0)} {}
Scalar::Scalar(long value) : field_(ScalarField::rationals()), coords_{Rational(value)} {}
Scalar::Scalar(const Rational& value) : field_(ScalarField::rationals()), coords_{value} { coords_[0].canonicalize(); }

Scalar::Scalar(FieldPtr field, Coords coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != field_->degree())
    throw InputError("scalar has " + std::to_string(coords_.size()) + " coordinates, field degree is " +
                     std::to_string(field_->degree()));
  for (auto& c : coords_) c.canonicalize();
}

Scalar Scalar::generator(const FieldPtr& field) {
  if (field->is_rational()) throw InputError("Q has no generator");
  Coords c = field->zero();
  c[1] = 1;
  return Scalar(field, std::move(c));
}

bool Scalar::is_zero() const { return uavg::is_zero(coords_); }

bool Scalar::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw InputError("scalar " + to_string() + " is not rational");
  return coords_[0];
}

Scalar Scalar::promoted(const FieldPtr& field) const {
  if (field == field_ || field->same_as(*field_)) return *this;
  if (!field_->is_rational()) throw InputError("cannot move " + field_->to_string() + " into " + field->to_string());
  return Scalar(field, field->lift(coords_[0]));
}

Scalar Scalar::inverse() const { return Scalar(field_, field_->inverse(coords_)); }

Scalar Scalar::operator-() const { return Scalar(field_, field_->neg(coords_)); }

Scalar& Scalar::operator+=(const Scalar& other) {
  auto f = common_field(field_, other.field_);
  *this = promoted(f);
  coords_ = f->add(coords_, other.promoted(f).coords_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  auto f = common_field(field_, other.field_);
  *this = promoted(f);
  coords_ = f->sub(coords_, other.promoted(f).coords_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  auto f = common_field(field_, other.field_);
  *this = promoted(f);
  coords_ = f->mul(coords_, other.promoted(f).coords_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  auto f = common_field(field_, other.field_);
  *this = promoted(f);
  coords_ = f->mul(coords_, f->inverse(other.promoted(f).coords_));
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto f = common_field(a.field_, b.field_);
  return a.promoted(f).coords_ == b.promoted(f).coords_;
}

std::string Scalar::to_string() const {
  if (field_->is_rational() || is_rational()) return coords_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << field_->variable();
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace uavg
