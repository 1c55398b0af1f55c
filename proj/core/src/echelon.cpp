#include "uavg/detail/echelon.hpp"

#include "uavg/error.hpp"

namespace uavg::detail {

bool Echelon::insert(const Vec& v) {
  if (v.size() != dim_) throw InputError("vector has the wrong dimension");
  const size_t count = rows_.size();
  Vec row = v;
  Vec combo(count + 1);
  combo[count] = Scalar(1);
  for (size_t r = 0; r < count; ++r) {
    const Scalar a = row[pivots_[r]];
    if (a.is_zero()) continue;
    for (size_t k = 0; k < dim_; ++k)
      if (!rows_[r][k].is_zero()) row[k] -= a * rows_[r][k];
    for (size_t k = 0; k < count; ++k)
      if (!combos_[r][k].is_zero()) combo[k] -= a * combos_[r][k];
  }
  size_t piv = 0;
  while (piv < dim_ && row[piv].is_zero()) ++piv;
  if (piv == dim_) return false;

  const Scalar inv = row[piv].inverse();
  for (auto& x : row) x *= inv;
  for (auto& x : combo) x *= inv;
  for (auto& c : combos_) c.emplace_back();
  for (size_t r = 0; r < count; ++r) {
    const Scalar a = rows_[r][piv];
    if (a.is_zero()) continue;
    for (size_t k = 0; k < dim_; ++k) rows_[r][k] -= a * row[k];
    for (size_t k = 0; k <= count; ++k) combos_[r][k] -= a * combo[k];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  combos_.push_back(std::move(combo));
  return true;
}

std::optional<Vec> Echelon::solve(const Vec& v) const {
  if (v.size() != dim_) throw InputError("vector has the wrong dimension");
  Vec residual = v;
  Vec coords(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar a = v[pivots_[r]];
    if (a.is_zero()) continue;
    for (size_t k = 0; k < dim_; ++k)
      if (!rows_[r][k].is_zero()) residual[k] -= a * rows_[r][k];
    for (size_t k = 0; k < coords.size(); ++k)
      if (!combos_[r][k].is_zero()) coords[k] += a * combos_[r][k];
  }
  for (const auto& x : residual)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

}  // namespace uavg::detail
