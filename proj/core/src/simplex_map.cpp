#include "uavg/simplex_map.hpp"

#include <algorithm>
#include <numeric>

#include "uavg/error.hpp"

namespace uavg {

SimplexMap::SimplexMap(int p, int q, std::vector<int> values) : p_(p), q_(q), values_(std::move(values)) {
  if (p < 0 || q < 0) throw InputError("simplex map degrees must be non-negative");
  if (static_cast<int>(values_.size()) != p + 1)
    throw InputError("simplex map [" + std::to_string(p) + "]->[" + std::to_string(q) + "] needs " +
                     std::to_string(p + 1) + " values");
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > q) throw InputError("simplex map value out of range");
    if (i > 0 && values_[i] < values_[i - 1]) throw InputError("simplex map is not order-preserving");
  }
}

SimplexMap SimplexMap::identity(int q) {
  std::vector<int> v(static_cast<size_t>(q) + 1);
  std::iota(v.begin(), v.end(), 0);
  return SimplexMap(q, q, std::move(v));
}

SimplexMap SimplexMap::coface(int q, int i) {
  if (q < 1 || i < 0 || i > q) throw InputError("coface index out of range");
  std::vector<int> v;
  for (int k = 0; k <= q; ++k)
    if (k != i) v.push_back(k);
  return SimplexMap(q - 1, q, std::move(v));
}

SimplexMap SimplexMap::codegeneracy(int q, int i) {
  if (q < 0 || i < 0 || i > q) throw InputError("codegeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= q + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return SimplexMap(q + 1, q, std::move(v));
}

SimplexMap SimplexMap::to_point(int p) { return SimplexMap(p, 0, std::vector<int>(static_cast<size_t>(p) + 1, 0)); }

SimplexMap SimplexMap::after(const SimplexMap& inner) const {
  if (inner.q_ != p_) throw InputError("simplex maps are not composable");
  std::vector<int> v;
  for (int x : inner.values_) v.push_back(values_[static_cast<size_t>(x)]);
  return SimplexMap(inner.p_, q_, std::move(v));
}

std::string SimplexMap::name() const {
  const std::string sig = ":[" + std::to_string(p_) + "]->[" + std::to_string(q_) + "]";
  if (p_ + 1 == q_) {
    for (int i = 0; i <= q_; ++i)
      if (*this == coface(q_, i)) return "d^" + std::to_string(i) + sig;
  }
  if (p_ == q_ + 1) {
    for (int i = 0; i <= q_; ++i)
      if (*this == codegeneracy(q_, i)) return "s^" + std::to_string(i) + sig;
  }
  std::string s = "(";
  for (size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s + ")" + sig;
}

std::vector<SimplexMap> simplicial_generators(int max_q) {
  std::vector<SimplexMap> out;
  for (int q = 0; q <= max_q; ++q) {
    if (q >= 1)
      for (int i = 0; i <= q; ++i) out.push_back(SimplexMap::coface(q, i));
    if (q + 1 <= max_q)
      for (int i = 0; i <= q; ++i) out.push_back(SimplexMap::codegeneracy(q, i));
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InputError("permutation of an empty set");
  std::vector<bool> seen(images_.size());
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(x)])
      throw InputError("malformed permutation");
    seen[static_cast<size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int q) {
  std::vector<int> v(static_cast<size_t>(q) + 1);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int q) {
  std::vector<int> v(static_cast<size_t>(q) + 1);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) v[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(v));
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.images_.size() != images_.size()) throw InputError("permutation degree mismatch");
  std::vector<int> v;
  for (int x : inner.images_) v.push_back(images_[static_cast<size_t>(x)]);
  return Permutation(std::move(v));
}

}  // namespace uavg
