#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uavg/scalar.hpp"
#include "uavg/simplex_map.hpp"

namespace uavg {

/// The coordinate ring of Δ^q × A^k over a ScalarField:
/// F[t_0, ..., t_q, y_1, ..., y_k] / (t_0 + ... + t_q - 1).
struct SimplexRing {
  int q = 0;
  std::vector<std::string> params;
  FieldPtr field = ScalarField::rationals();

  /// Variables kept in normal form: t_0 .. t_{q-1}, then the parameters.
  int num_vars() const { return q + static_cast<int>(params.size()); }
  bool same_as(const SimplexRing& other) const;
};

using RingPtr = std::shared_ptr<const SimplexRing>;

RingPtr make_ring(int q, std::vector<std::string> params = {}, FieldPtr field = ScalarField::rationals());
RingPtr ring_with_degree(const RingPtr& ring, int q);
RingPtr ring_with_field(const RingPtr& ring, const FieldPtr& field);
/// Rings must agree on q and params; the fields may differ only by Q vs an
/// extension. Throws InputError otherwise.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

using Exponent = std::vector<uint32_t>;

/// A polynomial on the geometric simplex, kept in the normal form in which
/// t_q never appears (it is rewritten as 1 - t_0 - ... - t_{q-1}). Two
/// polynomials over the same ring are equal iff their term maps are.
class SimplexPoly {
 public:
  using TermMap = std::map<Exponent, Coords>;

  /// The zero polynomial.
  explicit SimplexPoly(RingPtr ring);
  /// A constant. The ring's field is enlarged if the constant needs it.
  SimplexPoly(RingPtr ring, const Scalar& constant);

  /// Builds from (exponent, coefficient) pairs. An exponent either has
  /// num_vars() entries (normal form) or q + 1 + #params entries, in which
  /// case the t_q power is eliminated.
  static SimplexPoly from_terms(RingPtr ring, const std::vector<std::pair<std::vector<uint32_t>, Scalar>>& terms);
  /// t_j for 0 <= j <= q.
  static SimplexPoly coordinate(RingPtr ring, int j);
  static SimplexPoly parameter(RingPtr ring, int k);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws InputError unless is_constant().
  Scalar constant_value() const;
  /// Degree in the simplex coordinates only.
  int simplex_degree() const;
  int total_degree() const;

  SimplexPoly operator-() const;
  SimplexPoly& operator+=(const SimplexPoly& other);
  SimplexPoly& operator-=(const SimplexPoly& other);
  SimplexPoly& operator*=(const SimplexPoly& other);
  SimplexPoly& operator*=(const Scalar& c);

  friend SimplexPoly operator+(SimplexPoly a, const SimplexPoly& b) { return a += b; }
  friend SimplexPoly operator-(SimplexPoly a, const SimplexPoly& b) { return a -= b; }
  friend SimplexPoly operator*(const SimplexPoly& a, const SimplexPoly& b);
  friend SimplexPoly operator*(SimplexPoly a, const Scalar& c) { return a *= c; }
  friend SimplexPoly operator*(const Scalar& c, SimplexPoly a) { return a *= c; }

  /// Same shape of ring and identical normal forms (after field promotion).
  friend bool operator==(const SimplexPoly& a, const SimplexPoly& b);

  /// Pullback along the affine map Δ^p -> Δ^q extending alpha: each t_j
  /// becomes the sum of t_i over alpha^{-1}(j). Parameters are untouched.
  SimplexPoly pullback(const SimplexMap& alpha) const;
  /// Same, for an arbitrary function [p] -> [q] (e.g. a permutation).
  SimplexPoly pullback_function(std::span<const int> values, int p) const;

  /// Evaluates at a weight sequence (sum exactly 1) and parameter values.
  Scalar evaluate(std::span<const Scalar> weights, std::span<const Scalar> param_values = {}) const;
  /// Evaluates only the parameters, keeping the simplex variables.
  SimplexPoly substitute_params(std::span<const Scalar> param_values) const;

  /// Partial derivative with respect to normal-form variable \p var.
  SimplexPoly derivative(int var) const;

  SimplexPoly promoted(const FieldPtr& field) const;
  /// The same polynomial over Q, if every coefficient is rational.
  std::optional<SimplexPoly> to_rationals() const;
  /// Applies a coordinate map (e.g. a field automorphism) to every coefficient.
  template <class Fn>
  SimplexPoly map_coefficients(Fn&& fn) const {
    SimplexPoly out(ring_);
    for (const auto& [e, c] : terms_) {
      Coords v = fn(c);
      if (!uavg::is_zero(v)) out.terms_.emplace(e, std::move(v));
    }
    return out;
  }

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Coords& c);
  void promote_to(const FieldPtr& f);

  RingPtr ring_;
  TermMap terms_;
};

/// t_j on Δ^q over Q; for j = q this is 1 - t_0 - ... - t_{q-1}.
SimplexPoly make_simplex_coordinate(int q, int j);

std::ostream& operator<<(std::ostream& os, const SimplexPoly& p);

}  // namespace uavg
