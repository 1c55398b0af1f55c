#pragma once

#include <vector>

#include "uavg/average.hpp"
#include "uavg/galois.hpp"

namespace uavg {

/// Entrywise application of Galois generator \p g.
UniMatrix apply_galois(const GaloisAction& action, size_t g, const UniMatrix& u);

/// Points z_0, ..., z_q of G over an extension L that each Galois generator
/// permutes.
class GaloisOrbit {
 public:
  /// Throws InputError if a point is outside the group or some generator
  /// does not permute the list.
  GaloisOrbit(LieSpanPtr group, GaloisAction action, std::vector<UniMatrix> points);

  const LieSpanPtr& group() const { return group_; }
  const GaloisAction& action() const { return action_; }
  const std::vector<UniMatrix>& points() const { return points_; }
  /// permutation(g)[i] = index of g(z_i).
  const std::vector<int>& permutation(size_t g) const { return perms_.at(g); }

 private:
  LieSpanPtr group_;
  GaloisAction action_;
  std::vector<UniMatrix> points_;
  std::vector<std::vector<int>> perms_;
};

/// wav at the uniform weights, returned over Q. Throws InvariantViolation if
/// the average has an irrational coordinate or is moved by a generator.
UniMatrix rational_point(const GaloisOrbit& orbit);

}  // namespace uavg
