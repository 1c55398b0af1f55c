#include "uavg/matrix.hpp"

#include <ostream>

#include "uavg/error.hpp"

namespace uavg {

PolyMatrix::PolyMatrix(int n, RingPtr ring) : n_(n), ring_(std::move(ring)) {
  if (n < 1) throw InputError("matrix size must be positive");
  entries_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), SimplexPoly(ring_));
}

PolyMatrix PolyMatrix::identity(int n, RingPtr ring) {
  PolyMatrix m(n, ring);
  for (int i = 0; i < n; ++i) m.set(i, i, SimplexPoly(ring, Scalar(1)));
  return m;
}

void PolyMatrix::set(int i, int j, SimplexPoly value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InputError("matrix index out of range");
  auto r = common_ring(ring_, value.ring());
  if (!r->field->same_as(*ring_->field)) {
    ring_ = ring_with_field(ring_, r->field);
    for (auto& e : entries_) e = e.promoted(r->field);
  }
  if (!value.ring()->field->same_as(*ring_->field)) value = value.promoted(ring_->field);
  entries_[index(i, j)] = std::move(value);
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_strictly_upper() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_unit_upper() const {
  const SimplexPoly one(ring_, Scalar(1));
  for (int i = 0; i < n_; ++i) {
    if (!((*this)(i, i) == one)) return false;
    for (int j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& e : entries_)
    if (!e.is_constant()) return false;
  return true;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (n_ != other.n_) throw InputError("matrix size mismatch");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!other(i, j).is_zero()) set(i, j, (*this)(i, j) + other(i, j));
  ring_ = common_ring(ring_, other.ring_);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) { return *this += -other; }

PolyMatrix& PolyMatrix::operator*=(const SimplexPoly& c) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) set(i, j, (*this)(i, j) * c);
  ring_ = common_ring(ring_, c.ring());
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Scalar& c) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!(*this)(i, j).is_zero()) set(i, j, (*this)(i, j) * c);
  ring_ = ring_with_field(ring_, common_field(ring_->field, c.field()));
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw InputError("matrix size mismatch");
  PolyMatrix out(a.n_, common_ring(a.ring_, b.ring_));
  for (int i = 0; i < a.n_; ++i) {
    for (int j = 0; j < a.n_; ++j) {
      SimplexPoly acc(out.ring_);
      for (int k = 0; k < a.n_; ++k) {
        const auto& x = a(i, k);
        if (x.is_zero()) continue;
        const auto& y = b(k, j);
        if (y.is_zero()) continue;
        acc += x * y;
      }
      if (!acc.is_zero()) out.set(i, j, std::move(acc));
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (size_t k = 0; k < a.entries_.size(); ++k)
    if (!(a.entries_[k] == b.entries_[k])) return false;
  return true;
}

PolyMatrix PolyMatrix::pullback(const SimplexMap& alpha) const {
  return pullback_function(alpha.values(), alpha.source());
}

PolyMatrix PolyMatrix::pullback_function(std::span<const int> values, int p) const {
  PolyMatrix out(n_, ring_with_degree(ring_, p));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const auto& e = (*this)(i, j);
      if (e.is_zero()) continue;
      out.set(i, j, e.pullback_function(values, p));
    }
  return out;
}

PolyMatrix PolyMatrix::evaluate(std::span<const Scalar> weights, std::span<const Scalar> param_values) const {
  auto target = make_ring(0, {}, ring_->field);
  PolyMatrix out(n_, target);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, SimplexPoly(target, (*this)(i, j).evaluate(weights, param_values)));
  return out;
}

PolyMatrix PolyMatrix::promoted(const FieldPtr& field) const {
  PolyMatrix out(*this);
  out.ring_ = ring_with_field(ring_, common_field(ring_->field, field));
  for (auto& e : out.entries_) e = e.promoted(out.ring_->field);
  return out;
}

std::optional<PolyMatrix> PolyMatrix::to_rationals() const {
  PolyMatrix out(n_, ring_with_field(ring_, ScalarField::rationals()));
  for (size_t k = 0; k < entries_.size(); ++k) {
    auto e = entries_[k].to_rationals();
    if (!e) return std::nullopt;
    out.entries_[k] = std::move(*e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  os << "[";
  for (int i = 0; i < m.size(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.size(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << "]";
}

NilMatrix::NilMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (!m_.is_strictly_upper()) throw InputError("matrix is not strictly upper triangular");
}

NilMatrix NilMatrix::zero(int n, RingPtr ring) { return NilMatrix(PolyMatrix(n, std::move(ring))); }

NilMatrix NilMatrix::elementary(int n, int i, int j, RingPtr ring, const Scalar& c) {
  if (!(0 <= i && i < j && j < n)) throw InputError("elementary nilpotent matrix needs i < j < n");
  PolyMatrix m(n, ring);
  m.set(i, j, SimplexPoly(ring, c));
  return NilMatrix(std::move(m));
}

NilMatrix bracket(const NilMatrix& a, const NilMatrix& b) {
  return NilMatrix(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

UniMatrix::UniMatrix(PolyMatrix m) : m_(std::move(m)) {
  if (!m_.is_unit_upper()) throw InputError("matrix is not unit upper triangular");
}

UniMatrix UniMatrix::identity(int n, RingPtr ring) { return UniMatrix(PolyMatrix::identity(n, std::move(ring))); }

bool UniMatrix::is_identity() const { return m_ == PolyMatrix::identity(m_.size(), m_.ring()); }

UniMatrix UniMatrix::inverse() const {
  // (I + N)^{-1} = sum_k (-N)^k
  const PolyMatrix id = PolyMatrix::identity(size(), ring());
  const PolyMatrix minus_n = id - m_;
  PolyMatrix acc = id;
  PolyMatrix power = id;
  for (int k = 1; k < size(); ++k) {
    power = power * minus_n;
    if (power.is_zero()) break;
    acc += power;
  }
  return UniMatrix(std::move(acc));
}

UniMatrix exp_nilpotent(const NilMatrix& n) {
  const int size = n.size();
  PolyMatrix acc = PolyMatrix::identity(size, n.ring());
  PolyMatrix term = acc;
  for (int k = 1; k < size; ++k) {
    term = term * n.matrix();
    if (term.is_zero()) break;
    term *= Scalar(Rational(1, k));
    acc += term;
  }
  return UniMatrix(std::move(acc));
}

NilMatrix log_unipotent(const UniMatrix& u) {
  const int size = u.size();
  const PolyMatrix m = u.matrix() - PolyMatrix::identity(size, u.ring());
  PolyMatrix acc(size, u.ring());
  PolyMatrix power = PolyMatrix::identity(size, u.ring());
  for (int k = 1; k < size; ++k) {
    power = power * m;
    if (power.is_zero()) break;
    acc += power * Scalar(Rational(k % 2 ? 1 : -1, k));
  }
  return NilMatrix(std::move(acc));
}

NilMatrix bch(const NilMatrix& a, const NilMatrix& b) {
  if (a.size() != b.size()) throw InputError("bch: matrix size mismatch");
  return log_unipotent(exp_nilpotent(a) * exp_nilpotent(b));
}

}  // namespace uavg
