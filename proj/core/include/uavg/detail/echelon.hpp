#pragma once

#include <optional>
#include <vector>

#include "uavg/scalar.hpp"

namespace uavg::detail {

using Vec = std::vector<Scalar>;

/// Incremental reduced row echelon form that remembers how each row was
/// built from the vectors accepted so far, so membership tests also return
/// coordinates in the accepted basis.
class Echelon {
 public:
  explicit Echelon(size_t dim) : dim_(dim) {}

  /// Appends \p v if it is independent of what is already there.
  bool insert(const Vec& v);
  /// Coordinates of \p v in the accepted vectors, if v lies in their span.
  std::optional<Vec> solve(const Vec& v) const;

  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

 private:
  size_t dim_;
  std::vector<Vec> rows_;
  std::vector<size_t> pivots_;
  std::vector<Vec> combos_;
};

}  // namespace uavg::detail
