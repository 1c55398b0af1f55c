#include "uavg/descent.hpp"

#include "uavg/error.hpp"

namespace uavg {

UniMatrix apply_galois(const GaloisAction& action, size_t g, const UniMatrix& u) {
  if (!common_field(u.ring()->field, action.field())->same_as(*action.field()))
    throw InputError("matrix does not live over the action's field");
  PolyMatrix m = u.matrix().promoted(action.field());
  return UniMatrix(m.map_entries([&](const SimplexPoly& p) { return action.apply(g, p); }));
}

GaloisOrbit::GaloisOrbit(LieSpanPtr group, GaloisAction action, std::vector<UniMatrix> points)
    : group_(std::move(group)), action_(std::move(action)), points_(std::move(points)) {
  if (!group_) throw InputError("orbit needs a group");
  if (points_.empty()) throw InputError("orbit has no points");
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != group_->ambient_size()) throw InputError("orbit point size does not match the group");
    if (!points_[i].matrix().is_constant()) throw InputError("orbit points must be constant matrices");
    if (!group_->contains(points_[i])) throw InputError("orbit point " + std::to_string(i) + " is not in the group");
  }
  for (size_t g = 0; g < action_.num_generators(); ++g) {
    std::vector<int> perm;
    std::vector<bool> hit(points_.size(), false);
    for (size_t i = 0; i < points_.size(); ++i) {
      const UniMatrix image = apply_galois(action_, g, points_[i]);
      int found = -1;
      for (size_t j = 0; j < points_.size(); ++j)
        if (!hit[j] && image == points_[j]) {
          found = static_cast<int>(j);
          break;
        }
      if (found < 0)
        throw InputError("orbit is not closed: generator " + std::to_string(g) + " sends point " + std::to_string(i) +
                         " outside the list");
      hit[static_cast<size_t>(found)] = true;
      perm.push_back(found);
    }
    perms_.push_back(std::move(perm));
  }
}

UniMatrix rational_point(const GaloisOrbit& orbit) {
  const int q = static_cast<int>(orbit.points().size()) - 1;
  const UniMatrix avg = wav_at_weights(orbit.group(), orbit.points(), WeightSeq::uniform(q));
  for (size_t g = 0; g < orbit.action().num_generators(); ++g)
    if (!(apply_galois(orbit.action(), g, avg) == avg))
      throw InvariantViolation("average is moved by Galois generator " + std::to_string(g));
  auto rational = avg.matrix().to_rationals();
  if (!rational) throw InvariantViolation("average has irrational coordinates");
  return UniMatrix(std::move(*rational));
}

}  // namespace uavg
