#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uavg/average.hpp"

namespace uavg {

using MultiIndex = std::vector<int>;

/// Weakly increasing sequences 0 <= i_0 <= ... <= i_q <= m, in lexicographic order.
std::vector<MultiIndex> multi_indices(int m, int q);
/// "i0.i1.….iq"
std::string multi_index_key(const MultiIndex& index);
MultiIndex parse_multi_index(const std::string& key);
/// α_*(i) = i o α.
MultiIndex compose(const MultiIndex& index, const SimplexMap& alpha);

/// A finite base X with an open cover U_(0), ..., U_(m) given as subsets.
class FiniteCover {
 public:
  FiniteCover(std::vector<std::string> points, std::vector<std::vector<std::string>> opens);

  const std::vector<std::string>& points() const { return points_; }
  /// Open j as a sorted list of point indices.
  const std::vector<int>& open(int j) const { return opens_.at(static_cast<size_t>(j)); }
  int num_opens() const { return static_cast<int>(opens_.size()); }
  int point_index(const std::string& label) const;
  bool contains(int open, int point) const;
  /// U_i = ∩_j U_(i_j), as sorted point indices.
  std::vector<int> intersection(const MultiIndex& index) const;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<int>> opens_;
};

/// σ_(i) : U_(i) -> G on the points of one open.
struct LocalSection {
  int open_index = 0;
  std::map<std::string, UniMatrix> values;
};

/// Data σ_i : Δ^q × U_i -> G for every multi-index up to some level.
class SimplicialSection {
 public:
  using PointValues = std::map<std::string, UniMatrix>;

  SimplicialSection(FiniteCover cover, LieSpanPtr group);

  const FiniteCover& cover() const { return cover_; }
  const LieSpanPtr& group() const { return group_; }
  /// Highest level with any data, or -1.
  int max_level() const { return static_cast<int>(levels_.size()) - 1; }

  void set(const MultiIndex& index, const std::string& point, UniMatrix value);
  /// Null if no value is stored.
  const UniMatrix* find(const MultiIndex& index, const std::string& point) const;
  /// Stored values at level q, by multi-index.
  const std::map<MultiIndex, PointValues>& level(int q) const { return levels_.at(static_cast<size_t>(q)); }

 private:
  FiniteCover cover_;
  LieSpanPtr group_;
  std::vector<std::map<MultiIndex, PointValues>> levels_;
};

/// Levels 0..max_q: at index i and x ∈ U_i the value is wav(σ_(i_0)(x), ..., σ_(i_q)(x)).
SimplicialSection build_simplicial_section(const FiniteCover& cover, const std::vector<LocalSection>& locals,
                                           const LieSpanPtr& group, int max_q);

struct SimplicialReport {
  bool ok = true;
  int checks = 0;
  /// First failure, if any.
  std::string map_name;
  MultiIndex multi_index;
  std::string point;
  std::string message;
};

/// Checks that each level-q datum is defined on exactly U_i, and that
/// α^* σ_i = σ_{i o α} on U_i for every coface and codegeneracy α with
/// source and target degree at most max_q.
SimplicialReport validate_simplicial_section(const SimplicialSection& s, int max_q);

struct TowerReport {
  bool ok = true;
  int checks = 0;
  std::string message;
};

/// For a descending chain of ideals N_1 ⊇ N_2 ⊇ ... of the tuple's group,
/// checks that projecting wav(t) to each G/N_k equals wav of the projected
/// tuple, and that the projections are compatible along G/N_{k+1} -> G/N_k.
TowerReport tower_compatibility(const SectionTuple& t, const std::vector<LieSpan>& ideals);

}  // namespace uavg
