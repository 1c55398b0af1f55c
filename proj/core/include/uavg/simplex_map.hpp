#pragma once

#include <span>
#include <string>
#include <vector>

namespace uavg {

/// An order-preserving map [p] -> [q], stored as its value list
/// (alpha(0), ..., alpha(p)).
class SimplexMap {
 public:
  SimplexMap(int p, int q, std::vector<int> values);

  static SimplexMap identity(int q);
  /// The coface d^i : [q-1] -> [q], the injection that misses i.
  static SimplexMap coface(int q, int i);
  /// The codegeneracy s^i : [q+1] -> [q], the surjection hitting i twice.
  static SimplexMap codegeneracy(int q, int i);
  /// The unique map [p] -> [0].
  static SimplexMap to_point(int p);

  int source() const { return p_; }
  int target() const { return q_; }
  int operator()(int i) const { return values_.at(static_cast<size_t>(i)); }
  std::span<const int> values() const { return values_; }

  /// (*this) o inner, i.e. i -> this(inner(i)).
  SimplexMap after(const SimplexMap& inner) const;

  /// e.g. "d^1:[1]->[2]", "s^0:[2]->[1]" for generators, otherwise the value list.
  std::string name() const;

  friend bool operator==(const SimplexMap&, const SimplexMap&) = default;

 private:
  int p_;
  int q_;
  std::vector<int> values_;
};

/// Every coface and codegeneracy whose source and target lie in [0, max_q].
std::vector<SimplexMap> simplicial_generators(int max_q);

/// A bijection of [q] = {0, ..., q}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int q);
  /// All (q+1)! permutations of [q] in lexicographic order.
  static std::vector<Permutation> all(int q);

  int degree() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int i) const { return images_.at(static_cast<size_t>(i)); }
  std::span<const int> images() const { return images_; }
  Permutation inverse() const;
  Permutation after(const Permutation& inner) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace uavg
