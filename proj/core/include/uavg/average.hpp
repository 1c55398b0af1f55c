#pragma once

#include <optional>
#include <vector>

#include "uavg/lie.hpp"
#include "uavg/simplex_map.hpp"

namespace uavg {

/// A (q+1)-tuple of sections (f_0, ..., f_q) of the trivial torsor G → G,
/// each a group element whose entries are polynomials on Δ^r × Y.
///
/// r is the domain degree: r = 0 for plain morphisms Y → G, r = q once the
/// tuple has been lifted onto the simplex.
class SectionTuple {
 public:
  /// Validates shapes and, when \p check_membership is set, that every
  /// section lies in exp(group).
  SectionTuple(LieSpanPtr group, std::vector<UniMatrix> sections, bool check_membership = true);

  int degree() const { return static_cast<int>(sections_.size()) - 1; }
  int domain_degree() const { return ring_->q; }
  const RingPtr& ring() const { return ring_; }
  const LieSpanPtr& group() const { return group_; }
  const std::vector<UniMatrix>& sections() const { return sections_; }
  const UniMatrix& operator[](size_t i) const { return sections_.at(i); }

  /// All sections are equal.
  bool is_constant() const;

  friend bool operator==(const SectionTuple& a, const SectionTuple& b) { return a.sections_ == b.sections_; }

 private:
  LieSpanPtr group_;
  std::vector<UniMatrix> sections_;
  RingPtr ring_;
};

/// A weight sequence (w_0, ..., w_q) with sum exactly 1.
class WeightSeq {
 public:
  explicit WeightSeq(std::vector<Scalar> weights);
  static WeightSeq uniform(int q);
  static WeightSeq vertex(int q, int i);

  int degree() const { return static_cast<int>(weights_.size()) - 1; }
  const std::vector<Scalar>& weights() const { return weights_; }

 private:
  std::vector<Scalar> weights_;
};

/// g_{i,j} = f_j f_i^{-1}, the unique element with f_j = g_{i,j} · f_i.
UniMatrix transition(const UniMatrix& f_i, const UniMatrix& f_j);
/// As above, first checking both sections lie in exp(group).
UniMatrix transition(const LieSpan& group, const UniMatrix& f_i, const UniMatrix& f_j);

/// One symmetrization pass on a tuple with r = q:
/// f'_i = exp(sum_j t_j log g_{i,j}) · f_i.
SectionTuple wsym(const SectionTuple& t);
/// wsym applied \p passes times.
SectionTuple wsym_iterate(const SectionTuple& t, int passes);
/// The lift of a tuple with r = 0 onto Δ^q by the same formula with
/// t-independent transitions.
SectionTuple lift_w(const SectionTuple& t);

/// The weighted average: the common value of wsym^d(lift_w(t)), where d is
/// the derived length of the group unless overridden by a larger value.
/// Throws InvariantViolation if the tuple is not constant after d passes.
UniMatrix wav(const SectionTuple& t, std::optional<int> passes = std::nullopt);

/// α_*: section i of the result is α^*(f_{α(i)}); for r = q the entries are
/// pulled back to Δ^p, for r = 0 only the indices move.
SectionTuple act_simplex_map(const SectionTuple& t, const SimplexMap& alpha);
/// The same reindex-and-pullback along a permutation of [q].
SectionTuple act_permutation(const SectionTuple& t, const Permutation& perm);

/// Componentwise image of a tuple under exp o dφ o log; the result lives in
/// φ's target group.
SectionTuple apply_hom(const LieHom& phi, const SectionTuple& t);

/// wav of constant points, evaluated at a weight sequence.
UniMatrix wav_at_weights(const LieSpanPtr& group, const std::vector<UniMatrix>& points, const WeightSeq& w,
                         std::optional<int> passes = std::nullopt);

/// Entrywise evaluation of a group element at weights (and parameter values).
UniMatrix evaluate(const UniMatrix& u, std::span<const Scalar> weights, std::span<const Scalar> param_values = {});

}  // namespace uavg
