#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "uavg/detail/echelon.hpp"
#include "uavg/matrix.hpp"

namespace uavg {

/// A nilpotent Lie algebra given as the span of constant strictly-upper
/// n×n matrices. It doubles as the presentation of the unipotent group
/// exp(span) ⊂ U_n.
///
/// The basis is checked to be linearly independent and closed under the
/// commutator bracket.
class LieSpan {
 public:
  LieSpan(int n, std::vector<NilMatrix> basis);

  /// All strictly upper-triangular n×n matrices (basis E_ij, i < j, row-major).
  static LieSpan upper_triangular(int n);
  /// The 3×3 Heisenberg algebra, basis E01, E12, E02.
  static LieSpan heisenberg();
  /// span{E_{i,n-1} : i < n-1}, an abelian algebra of dimension n-1.
  static LieSpan abelian_column(int n);
  /// The zero algebra inside 1×1 matrices.
  static LieSpan zero();

  int ambient_size() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<NilMatrix>& basis() const { return basis_; }
  const FieldPtr& field() const { return field_; }
  /// Ring of the basis matrices: Δ^0, no parameters.
  const RingPtr& ring() const { return ring_; }

  /// Coordinates of a constant matrix in the basis.
  std::optional<std::vector<Scalar>> coordinates(const NilMatrix& x) const;
  /// Coordinates of a matrix with polynomial entries: polynomial coefficients
  /// c_k with x = sum_k c_k b_k. Solved monomial by monomial.
  std::optional<std::vector<SimplexPoly>> polynomial_coordinates(const NilMatrix& x) const;

  bool contains(const NilMatrix& x) const { return polynomial_coordinates(x).has_value(); }
  /// exp(span) membership, via log.
  bool contains(const UniMatrix& u) const { return contains(log_unipotent(u)); }
  /// Every basis element of \p other lies in this span.
  bool contains(const LieSpan& other) const;

  NilMatrix combine(std::span<const SimplexPoly> coeffs, const RingPtr& ring) const;
  NilMatrix combine(std::span<const Scalar> coeffs) const;

  bool is_abelian() const;

 private:
  int n_;
  std::vector<NilMatrix> basis_;
  FieldPtr field_;
  RingPtr ring_;
  detail::Echelon echelon_;
};

using LieSpanPtr = std::shared_ptr<const LieSpan>;

/// Flattens the strictly upper part of a constant matrix, row-major.
detail::Vec upper_entries(const NilMatrix& x);

/// Subalgebra spanned by \p generators (which must already be bracket-closed
/// as a span); dependent generators are dropped.
LieSpan span_of(int n, const std::vector<NilMatrix>& generators);

/// [a, b] for two subspaces: spanned by all brackets of basis elements.
LieSpan bracket_span(const LieSpan& a, const LieSpan& b);

/// g = g_0 ⊇ g_1 ⊇ ... ⊇ 0 with g_{k+1} = [g, g_k]; the final 0 is included.
std::vector<LieSpan> lower_central_series(const LieSpan& g);
/// g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... ⊇ 0, the final 0 included.
std::vector<LieSpan> derived_series(const LieSpan& g);
/// Number of steps the derived series takes to reach 0. This is the number
/// of symmetrization passes the weighted average uses.
int derived_series_length(const LieSpan& g);

/// A Lie algebra homomorphism between two spans, as a matrix on basis
/// coordinates: matrix[i][k] is coordinate i of the image of source basis k.
/// Bracket preservation is verified on construction.
class LieHom {
 public:
  LieHom(LieSpanPtr source, LieSpanPtr target, std::vector<std::vector<Scalar>> matrix);

  static LieHom identity(LieSpanPtr g);
  static LieHom zero(LieSpanPtr source, LieSpanPtr target);

  const LieSpanPtr& source() const { return source_; }
  const LieSpanPtr& target() const { return target_; }
  const std::vector<std::vector<Scalar>>& matrix() const { return matrix_; }
  /// Image of source basis element k, as a matrix in the target.
  const NilMatrix& image(size_t k) const { return images_.at(k); }

  /// dφ on a (possibly polynomial) element of the source span.
  NilMatrix apply(const NilMatrix& x) const;
  /// (*this) o inner.
  LieHom after(const LieHom& inner) const;

 private:
  LieSpanPtr source_;
  LieSpanPtr target_;
  std::vector<std::vector<Scalar>> matrix_;
  std::vector<NilMatrix> images_;
};

/// The group homomorphism exp o dφ o log. Throws InputError if log(u) is
/// not in the source span.
UniMatrix apply_hom(const LieHom& phi, const UniMatrix& u);

struct Quotient {
  LieSpanPtr algebra;
  LieHom projection;
  /// lift[k]: index of the source basis element whose image is quotient basis k.
  std::vector<int> lift;
};

/// Realizes g / ideal as a matrix Lie algebra, together with the projection.
///
/// The quotient basis is the image of a complement of the ideal chosen among
/// g's basis elements. Its matrices come from the right-regular action on
/// polynomial functions in exponential coordinates, truncated to the smallest
/// invariant subspace containing the constants and the coordinate functions;
/// that representation is faithful and strictly upper triangular when
/// ordered by weighted degree.
///
/// Throws InputError unless ideal ⊆ g and [g, ideal] ⊆ ideal.
Quotient quotient_span(const LieSpanPtr& g, const LieSpan& ideal);

/// For nested ideals fine ⊆ coarse of the same algebra g, the induced
/// map g/fine -> g/coarse.
LieHom induced_quotient_map(const Quotient& fine, const Quotient& coarse);

}  // namespace uavg
