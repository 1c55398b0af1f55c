#include "uavg/galois.hpp"

#include <random>

#include "uavg/error.hpp"

namespace uavg {

namespace {

Scalar random_element(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Coords c(static_cast<size_t>(f->degree()));
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return Scalar(f, std::move(c));
}

}  // namespace

GaloisAction::GaloisAction(FieldPtr field, std::vector<Scalar> generator_images)
    : field_(std::move(field)), generator_images_(std::move(generator_images)) {
  if (field_->is_rational()) throw InputError("a Galois action needs a field extension");
  const int d = field_->degree();
  for (auto& r : generator_images_) {
    r = r.promoted(field_);
    // m(r) = 0
    Scalar acc(field_, field_->zero());
    for (int k = d; k >= 0; --k) acc = acc * r + Scalar(field_->modulus()[static_cast<size_t>(k)]);
    if (!acc.is_zero()) throw InputError("Galois generator sends x to " + r.to_string() + ", which is not a root");
    std::vector<Coords> powers;
    Scalar p(field_, field_->one());
    for (int k = 0; k < d; ++k) {
      powers.push_back(p.coords());
      p *= r;
    }
    images_.push_back(std::move(powers));
  }
  std::mt19937 rng(20240611);
  for (size_t g = 0; g < images_.size(); ++g) {
    for (int trial = 0; trial < 8; ++trial) {
      const Scalar a = random_element(field_, rng);
      const Scalar b = random_element(field_, rng);
      if (!(apply(g, a * b) == apply(g, a) * apply(g, b)) || !(apply(g, a + b) == apply(g, a) + apply(g, b)))
        throw InputError("Galois generator is not a ring homomorphism");
    }
  }
}

Coords GaloisAction::apply(size_t g, const Coords& c) const {
  const auto& img = images_.at(g);
  Coords out = field_->zero();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    for (size_t i = 0; i < out.size(); ++i) out[i] += c[k] * img[k][i];
  }
  return out;
}

Scalar GaloisAction::apply(size_t g, const Scalar& v) const {
  return Scalar(field_, apply(g, v.promoted(field_).coords()));
}

SimplexPoly GaloisAction::apply(size_t g, const SimplexPoly& p) const {
  const SimplexPoly lifted = p.promoted(field_);
  return lifted.map_coefficients([&](const Coords& c) { return apply(g, c); });
}

}  // namespace uavg
