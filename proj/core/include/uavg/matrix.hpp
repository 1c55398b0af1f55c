#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "uavg/simplex_poly.hpp"

namespace uavg {

/// Square matrix with SimplexPoly entries over a common ring.
class PolyMatrix {
 public:
  PolyMatrix(int n, RingPtr ring);
  static PolyMatrix identity(int n, RingPtr ring);

  int size() const { return n_; }
  const RingPtr& ring() const { return ring_; }

  const SimplexPoly& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, SimplexPoly value);

  bool is_zero() const;
  bool is_strictly_upper() const;
  bool is_unit_upper() const;
  /// All entries are constants (no simplex variables or parameters).
  bool is_constant() const;

  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  PolyMatrix& operator*=(const SimplexPoly& c);
  PolyMatrix& operator*=(const Scalar& c);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(PolyMatrix a, const SimplexPoly& c) { return a *= c; }
  friend PolyMatrix operator*(PolyMatrix a, const Scalar& c) { return a *= c; }
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  PolyMatrix pullback(const SimplexMap& alpha) const;
  PolyMatrix pullback_function(std::span<const int> values, int p) const;
  /// Entrywise evaluation; the result lives on Δ^0 with no parameters.
  PolyMatrix evaluate(std::span<const Scalar> weights, std::span<const Scalar> param_values = {}) const;
  PolyMatrix promoted(const FieldPtr& field) const;
  /// The same matrix over Q, if every entry has rational coefficients.
  std::optional<PolyMatrix> to_rationals() const;

  template <class Fn>
  PolyMatrix map_entries(Fn&& fn) const {
    PolyMatrix out(n_, ring_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.set(i, j, fn((*this)(i, j)));
    return out;
  }

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i * n_ + j); }

  int n_;
  RingPtr ring_;
  std::vector<SimplexPoly> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

/// Strictly upper-triangular matrix: an element of a nilpotent Lie algebra.
class NilMatrix {
 public:
  /// Throws InputError if \p m has a nonzero entry on or below the diagonal.
  explicit NilMatrix(PolyMatrix m);
  static NilMatrix zero(int n, RingPtr ring);
  /// c * E_{ij}, i < j.
  static NilMatrix elementary(int n, int i, int j, RingPtr ring, const Scalar& c = Scalar(1));

  const PolyMatrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  const RingPtr& ring() const { return m_.ring(); }
  const SimplexPoly& operator()(int i, int j) const { return m_(i, j); }
  bool is_zero() const { return m_.is_zero(); }

  NilMatrix operator-() const { return NilMatrix(-m_); }
  friend NilMatrix operator+(const NilMatrix& a, const NilMatrix& b) { return NilMatrix(a.m_ + b.m_); }
  friend NilMatrix operator-(const NilMatrix& a, const NilMatrix& b) { return NilMatrix(a.m_ - b.m_); }
  friend NilMatrix operator*(const NilMatrix& a, const SimplexPoly& c) { return NilMatrix(a.m_ * c); }
  friend NilMatrix operator*(const NilMatrix& a, const Scalar& c) { return NilMatrix(a.m_ * c); }
  friend bool operator==(const NilMatrix& a, const NilMatrix& b) { return a.m_ == b.m_; }

 private:
  PolyMatrix m_;
};

/// [a, b] = ab - ba.
NilMatrix bracket(const NilMatrix& a, const NilMatrix& b);

/// Unit upper-triangular matrix: an element of a unipotent group.
class UniMatrix {
 public:
  /// Throws InputError unless \p m is unit upper triangular.
  explicit UniMatrix(PolyMatrix m);
  static UniMatrix identity(int n, RingPtr ring);

  const PolyMatrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  const RingPtr& ring() const { return m_.ring(); }
  const SimplexPoly& operator()(int i, int j) const { return m_(i, j); }
  bool is_identity() const;

  /// Finite Neumann series.
  UniMatrix inverse() const;

  friend UniMatrix operator*(const UniMatrix& a, const UniMatrix& b) { return UniMatrix(a.m_ * b.m_); }
  friend bool operator==(const UniMatrix& a, const UniMatrix& b) { return a.m_ == b.m_; }

 private:
  PolyMatrix m_;
};

/// sum_k N^k / k!, terminating because N is nilpotent.
UniMatrix exp_nilpotent(const NilMatrix& n);
/// sum_k (-1)^{k+1} (U - I)^k / k.
NilMatrix log_unipotent(const UniMatrix& u);
/// log(exp(a) exp(b)), the Baker-Campbell-Hausdorff product a * b.
NilMatrix bch(const NilMatrix& a, const NilMatrix& b);

}  // namespace uavg
