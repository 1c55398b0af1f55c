#pragma once

#include <vector>

#include "uavg/scalar.hpp"
#include "uavg/simplex_poly.hpp"

namespace uavg {

/// A set of automorphisms of a simple extension Q[x]/(m), each given by the
/// image of x (which must again be a root of m).
class GaloisAction {
 public:
  GaloisAction(FieldPtr field, std::vector<Scalar> generator_images);

  const FieldPtr& field() const { return field_; }
  size_t num_generators() const { return images_.size(); }
  /// Image of x under generator \p g.
  const Scalar& generator_image(size_t g) const { return generator_images_.at(g); }

  Coords apply(size_t g, const Coords& c) const;
  Scalar apply(size_t g, const Scalar& v) const;
  SimplexPoly apply(size_t g, const SimplexPoly& p) const;

 private:
  FieldPtr field_;
  std::vector<Scalar> generator_images_;
  // images_[g][k]: coordinates of sigma_g(x^k)
  std::vector<std::vector<Coords>> images_;
};

}  // namespace uavg
