#include "uavg/lie.hpp"

#include <algorithm>
#include <deque>

#include "uavg/error.hpp"

namespace uavg {

namespace {

using detail::Echelon;
using detail::Vec;

NilMatrix constant_in(const NilMatrix& m, const RingPtr& ring) {
  PolyMatrix out(m.size(), ring);
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (!m(i, j).is_zero()) out.set(i, j, SimplexPoly(ring, m(i, j).constant_value()));
  return NilMatrix(std::move(out));
}

/// sum_k coeffs[k] * mats[k], with the constant matrices moved into \p ring.
NilMatrix combine_matrices(int n, const std::vector<NilMatrix>& mats, std::span<const SimplexPoly> coeffs,
                           const RingPtr& ring) {
  if (coeffs.size() != mats.size()) throw InputError("coefficient count does not match basis size");
  PolyMatrix out(n, ring);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SimplexPoly acc(ring);
      for (size_t k = 0; k < mats.size(); ++k) {
        const auto& b = mats[k](i, j);
        if (b.is_zero() || coeffs[k].is_zero()) continue;
        acc += coeffs[k] * b.constant_value();
      }
      if (!acc.is_zero()) out.set(i, j, std::move(acc));
    }
  }
  return NilMatrix(std::move(out));
}

}  // namespace

detail::Vec upper_entries(const NilMatrix& x) {
  Vec v;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) v.push_back(x(i, j).constant_value());
  return v;
}

LieSpan::LieSpan(int n, std::vector<NilMatrix> basis)
    : n_(n), field_(ScalarField::rationals()), echelon_(static_cast<size_t>(n * (n - 1) / 2)) {
  if (n < 1) throw InputError("Lie span needs a positive matrix size");
  for (const auto& b : basis) {
    if (b.size() != n) throw InputError("basis matrix has the wrong size");
    if (!b.matrix().is_constant()) throw InputError("Lie span basis must be constant matrices");
    field_ = common_field(field_, b.ring()->field);
  }
  ring_ = make_ring(0, {}, field_);
  for (auto& b : basis) {
    NilMatrix c = constant_in(b, ring_);
    if (!echelon_.insert(upper_entries(c))) throw InputError("Lie span basis is linearly dependent");
    basis_.push_back(std::move(c));
  }
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!coordinates(bracket(basis_[i], basis_[j])))
        throw InputError("span is not closed under the bracket (basis " + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
}

LieSpan LieSpan::upper_triangular(int n) {
  auto ring = make_ring(0);
  std::vector<NilMatrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(NilMatrix::elementary(n, i, j, ring));
  return LieSpan(n, std::move(basis));
}

LieSpan LieSpan::heisenberg() {
  auto ring = make_ring(0);
  return LieSpan(3, {NilMatrix::elementary(3, 0, 1, ring), NilMatrix::elementary(3, 1, 2, ring),
                     NilMatrix::elementary(3, 0, 2, ring)});
}

LieSpan LieSpan::abelian_column(int n) {
  auto ring = make_ring(0);
  std::vector<NilMatrix> basis;
  for (int i = 0; i + 1 < n; ++i) basis.push_back(NilMatrix::elementary(n, i, n - 1, ring));
  return LieSpan(n, std::move(basis));
}

LieSpan LieSpan::zero() { return LieSpan(1, {}); }

std::optional<std::vector<Scalar>> LieSpan::coordinates(const NilMatrix& x) const {
  if (x.size() != n_) return std::nullopt;
  if (!x.matrix().is_constant()) return std::nullopt;
  return echelon_.solve(upper_entries(x));
}

std::optional<std::vector<SimplexPoly>> LieSpan::polynomial_coordinates(const NilMatrix& x) const {
  if (x.size() != n_) return std::nullopt;
  const auto& ring = x.ring();
  const size_t d = static_cast<size_t>(n_ * (n_ - 1) / 2);
  // coefficient vector of each monomial across the upper entries
  std::map<Exponent, Vec> by_monomial;
  size_t pos = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++pos) {
      for (const auto& [e, c] : x(i, j).terms()) {
        auto [it, inserted] = by_monomial.try_emplace(e);
        if (inserted) it->second.assign(d, Scalar());
        it->second[pos] = Scalar(ring->field, c);
      }
    }
  }
  std::vector<std::vector<std::pair<std::vector<uint32_t>, Scalar>>> terms(basis_.size());
  for (const auto& [e, v] : by_monomial) {
    auto coords = echelon_.solve(v);
    if (!coords) return std::nullopt;
    for (size_t k = 0; k < basis_.size(); ++k)
      if (!(*coords)[k].is_zero()) terms[k].emplace_back(std::vector<uint32_t>(e.begin(), e.end()), (*coords)[k]);
  }
  auto out_ring = ring_with_field(ring, common_field(ring->field, field_));
  std::vector<SimplexPoly> out;
  for (const auto& t : terms) out.push_back(SimplexPoly::from_terms(out_ring, t));
  return out;
}

bool LieSpan::contains(const LieSpan& other) const {
  if (other.n_ != n_) return false;
  for (const auto& b : other.basis_)
    if (!coordinates(b)) return false;
  return true;
}

NilMatrix LieSpan::combine(std::span<const SimplexPoly> coeffs, const RingPtr& ring) const {
  return combine_matrices(n_, basis_, coeffs, ring);
}

NilMatrix LieSpan::combine(std::span<const Scalar> coeffs) const {
  std::vector<SimplexPoly> polys;
  for (const auto& c : coeffs) polys.emplace_back(ring_, c);
  return combine_matrices(n_, basis_, polys, ring_);
}

bool LieSpan::is_abelian() const {
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!bracket(basis_[i], basis_[j]).is_zero()) return false;
  return true;
}

LieSpan span_of(int n, const std::vector<NilMatrix>& generators) {
  Echelon e(static_cast<size_t>(n * (n - 1) / 2));
  std::vector<NilMatrix> basis;
  for (const auto& g : generators)
    if (e.insert(upper_entries(g))) basis.push_back(g);
  return LieSpan(n, std::move(basis));
}

LieSpan bracket_span(const LieSpan& a, const LieSpan& b) {
  if (a.ambient_size() != b.ambient_size()) throw InputError("bracket of spans in different matrix sizes");
  std::vector<NilMatrix> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(bracket(x, y));
  return span_of(a.ambient_size(), gens);
}

std::vector<LieSpan> lower_central_series(const LieSpan& g) {
  std::vector<LieSpan> out{g};
  while (out.back().dim() > 0) {
    LieSpan next = bracket_span(g, out.back());
    if (next.dim() == out.back().dim()) throw InvariantViolation("lower central series stalled: algebra is not nilpotent");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<LieSpan> derived_series(const LieSpan& g) {
  std::vector<LieSpan> out{g};
  while (out.back().dim() > 0) {
    LieSpan next = bracket_span(out.back(), out.back());
    if (next.dim() == out.back().dim()) throw InvariantViolation("derived series stalled: algebra is not solvable");
    out.push_back(std::move(next));
  }
  return out;
}

int derived_series_length(const LieSpan& g) { return static_cast<int>(derived_series(g).size()) - 1; }

LieHom::LieHom(LieSpanPtr source, LieSpanPtr target, std::vector<std::vector<Scalar>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const size_t sd = static_cast<size_t>(source_->dim());
  const size_t td = static_cast<size_t>(target_->dim());
  if (matrix_.size() != td) throw InputError("Lie hom matrix has the wrong number of rows");
  for (const auto& row : matrix_)
    if (row.size() != sd) throw InputError("Lie hom matrix has the wrong number of columns");
  for (size_t k = 0; k < sd; ++k) {
    std::vector<Scalar> col;
    for (size_t i = 0; i < td; ++i) col.push_back(matrix_[i][k]);
    images_.push_back(target_->combine(col));
  }
  const auto& sb = source_->basis();
  for (size_t i = 0; i < sd; ++i) {
    for (size_t j = i + 1; j < sd; ++j) {
      const NilMatrix lhs = apply(bracket(sb[i], sb[j]));
      if (!(lhs == bracket(images_[i], images_[j])))
        throw InputError("linear map does not preserve the bracket on basis pair (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
    }
  }
}

LieHom LieHom::identity(LieSpanPtr g) {
  const size_t d = static_cast<size_t>(g->dim());
  std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d));
  for (size_t i = 0; i < d; ++i) m[i][i] = Scalar(1);
  return LieHom(g, g, std::move(m));
}

LieHom LieHom::zero(LieSpanPtr source, LieSpanPtr target) {
  std::vector<std::vector<Scalar>> m(static_cast<size_t>(target->dim()),
                                     std::vector<Scalar>(static_cast<size_t>(source->dim())));
  return LieHom(std::move(source), std::move(target), std::move(m));
}

NilMatrix LieHom::apply(const NilMatrix& x) const {
  auto coords = source_->polynomial_coordinates(x);
  if (!coords) throw InputError("element is not in the source Lie span");
  return combine_matrices(target_->ambient_size(), images_, *coords, (*coords).empty() ? x.ring() : (*coords)[0].ring());
}

LieHom LieHom::after(const LieHom& inner) const {
  if (inner.target_->dim() != source_->dim() || inner.target_->ambient_size() != source_->ambient_size())
    throw InputError("Lie homs are not composable");
  const size_t rows = matrix_.size();
  const size_t cols = inner.matrix_.empty() ? static_cast<size_t>(inner.source_->dim()) : inner.matrix_[0].size();
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner.matrix_.size(); ++k)
      for (size_t j = 0; j < cols; ++j) m[i][j] += matrix_[i][k] * inner.matrix_[k][j];
  return LieHom(inner.source_, target_, std::move(m));
}

UniMatrix apply_hom(const LieHom& phi, const UniMatrix& u) { return exp_nilpotent(phi.apply(log_unipotent(u))); }

namespace {

/// Structure constants: table[a][b] = coordinates of [e_a, e_b].
struct StructureConstants {
  size_t dim = 0;
  std::vector<std::vector<Vec>> table;

  Vec bracket(const Vec& u, const Vec& v) const {
    Vec out(dim);
    for (size_t a = 0; a < dim; ++a) {
      if (u[a].is_zero()) continue;
      for (size_t b = 0; b < dim; ++b) {
        if (v[b].is_zero()) continue;
        const Scalar f = u[a] * v[b];
        for (size_t c = 0; c < dim; ++c)
          if (!table[a][b][c].is_zero()) out[c] += f * table[a][b][c];
      }
    }
    return out;
  }
};

Vec unit(size_t dim, size_t k) {
  Vec v(dim);
  v[k] = Scalar(1);
  return v;
}

/// Generating-function coefficients of z / (1 - e^{-z}): 1, 1/2, 1/12, 0, -1/720, ...
std::vector<Rational> bernoulli_plus_over_factorial(size_t count) {
  std::vector<Rational> beta{Rational(1)};
  std::vector<Rational> inv_fact{Rational(1)};
  for (size_t n = 1; n <= count + 1; ++n) inv_fact.push_back(inv_fact.back() / Rational(static_cast<long>(n)));
  for (size_t n = 1; n < count; ++n) {
    Rational s = 0;
    for (size_t k = 2; k <= n + 1; ++k) s += (k % 2 ? 1 : -1) * inv_fact[k] * beta[n + 1 - k];
    beta.push_back(-s);
  }
  return beta;
}

struct PolyRow {
  SimplexPoly poly;
  Exponent pivot;
  int weight;
};

/// Faithful strictly-upper-triangular representation of an abstract
/// nilpotent Lie algebra, via left-invariant derivations on polynomial
/// functions in exponential coordinates.
std::vector<NilMatrix> regular_representation(const StructureConstants& sc, const FieldPtr& field) {
  const size_t m = sc.dim;

  // lower central series of the abstract algebra
  std::vector<std::vector<Vec>> layers;
  {
    std::vector<Vec> cur;
    for (size_t k = 0; k < m; ++k) cur.push_back(unit(m, k));
    while (!cur.empty()) {
      layers.push_back(cur);
      Echelon e(m);
      std::vector<Vec> next;
      for (size_t a = 0; a < m; ++a)
        for (const auto& v : cur) {
          Vec b = sc.bracket(unit(m, a), v);
          if (e.insert(b)) next.push_back(std::move(b));
        }
      if (next.size() == cur.size()) throw InvariantViolation("quotient algebra is not nilpotent");
      cur = std::move(next);
    }
  }

  // basis adapted to the series, deepest layer first; weight = layer + 1
  Echelon adapted(m);
  std::vector<Vec> basis;
  std::vector<int> weight;
  for (size_t l = layers.size(); l-- > 0;)
    for (const auto& v : layers[l])
      if (adapted.insert(v)) {
        basis.push_back(v);
        weight.push_back(static_cast<int>(l) + 1);
      }

  // structure constants in the adapted basis
  std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) c[a][b] = *adapted.solve(sc.bracket(basis[a], basis[b]));

  std::vector<std::string> names;
  for (size_t a = 0; a < m; ++a) names.push_back("y" + std::to_string(a));
  auto ring = make_ring(0, names, field);
  std::vector<SimplexPoly> y;
  for (size_t a = 0; a < m; ++a) y.push_back(SimplexPoly::parameter(ring, static_cast<int>(a)));

  auto ad_y = [&](const std::vector<SimplexPoly>& v) {
    std::vector<SimplexPoly> out(m, SimplexPoly(ring));
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b) {
        if (v[b].is_zero()) continue;
        const SimplexPoly yv = y[a] * v[b];
        for (size_t k = 0; k < m; ++k)
          if (!c[a][b][k].is_zero()) out[k] += yv * c[a][b][k];
      }
    return out;
  };
  auto all_zero = [](const std::vector<SimplexPoly>& v) {
    return std::all_of(v.begin(), v.end(), [](const SimplexPoly& p) { return p.is_zero(); });
  };

  // V_b(y) = sum_k beta_k ad_y^k (e_b): d/ds log(exp(y) exp(s e_b)) at s = 0
  const auto beta = bernoulli_plus_over_factorial(layers.size() + 1);
  std::vector<std::vector<SimplexPoly>> fields;
  for (size_t b = 0; b < m; ++b) {
    std::vector<SimplexPoly> v(m, SimplexPoly(ring));
    v[b] = SimplexPoly(ring, Scalar(1));
    std::vector<SimplexPoly> acc = v;
    for (size_t k = 1; !all_zero(v = ad_y(v)); ++k) {
      if (k >= beta.size()) throw InvariantViolation("adjoint action failed to terminate");
      for (size_t a = 0; a < m; ++a) acc[a] += v[a] * Scalar(beta[k]);
    }
    fields.push_back(std::move(acc));
  }
  auto derive = [&](size_t b, const SimplexPoly& f) {
    SimplexPoly out(ring);
    for (size_t a = 0; a < m; ++a) {
      if (fields[b][a].is_zero()) continue;
      SimplexPoly d = f.derivative(static_cast<int>(a));
      if (!d.is_zero()) out += d * fields[b][a];
    }
    return out;
  };

  auto wdeg = [&](const Exponent& e) {
    int w = 0;
    for (size_t a = 0; a < m; ++a) w += static_cast<int>(e[a]) * weight[a];
    return w;
  };
  auto leading = [&](const SimplexPoly& p) {
    const Exponent* best = nullptr;
    for (const auto& [e, cf] : p.terms())
      if (!best || std::make_pair(wdeg(e), e) > std::make_pair(wdeg(*best), *best)) best = &e;
    return *best;
  };
  auto coeff = [&](const SimplexPoly& p, const Exponent& e) {
    auto it = p.terms().find(e);
    return it == p.terms().end() ? Scalar(field, field->zero()) : Scalar(field, it->second);
  };

  std::vector<PolyRow> rows;
  auto reduce = [&](SimplexPoly p) {
    for (const auto& r : rows) {
      const Scalar a = coeff(p, r.pivot);
      if (!a.is_zero()) p -= r.poly * a;
    }
    return p;
  };

  std::deque<SimplexPoly> queue;
  queue.emplace_back(ring, Scalar(1));
  for (const auto& v : y) queue.push_back(v);
  while (!queue.empty()) {
    SimplexPoly p = reduce(queue.front());
    queue.pop_front();
    if (p.is_zero()) continue;
    Exponent piv = leading(p);
    p *= coeff(p, piv).inverse();
    for (auto& r : rows) {
      const Scalar a = coeff(r.poly, piv);
      if (!a.is_zero()) r.poly -= p * a;
    }
    for (size_t b = 0; b < m; ++b) {
      SimplexPoly d = derive(b, p);
      if (!d.is_zero()) queue.push_back(std::move(d));
    }
    rows.push_back({std::move(p), piv, wdeg(piv)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PolyRow& a, const PolyRow& b) { return a.weight < b.weight; });

  const int n = static_cast<int>(rows.size());
  auto mring = make_ring(0, {}, field);
  std::vector<NilMatrix> out;
  for (size_t b = 0; b < m; ++b) {
    PolyMatrix mat(n, mring);
    for (int j = 0; j < n; ++j) {
      SimplexPoly img = derive(b, rows[static_cast<size_t>(j)].poly);
      for (int i = 0; i < n; ++i) {
        const Scalar a = coeff(img, rows[static_cast<size_t>(i)].pivot);
        if (a.is_zero()) continue;
        mat.set(i, j, SimplexPoly(mring, a));
        img -= rows[static_cast<size_t>(i)].poly * a;
      }
      if (!img.is_zero()) throw InvariantViolation("invariant subspace is not closed");
    }
    out.emplace_back(std::move(mat));
  }

  // back to the caller's basis: e_k = sum_a (coords of e_k in adapted basis)_a u_a
  std::vector<NilMatrix> result;
  for (size_t k = 0; k < m; ++k) {
    const Vec coords = *adapted.solve(unit(m, k));
    PolyMatrix acc(n, mring);
    for (size_t a = 0; a < m; ++a)
      if (!coords[a].is_zero()) acc += out[a].matrix() * coords[a];
    result.emplace_back(std::move(acc));
  }
  return result;
}

}  // namespace

Quotient quotient_span(const LieSpanPtr& g, const LieSpan& ideal) {
  if (!g->contains(ideal)) throw InputError("ideal is not contained in the algebra");
  for (const auto& x : g->basis())
    for (const auto& y : ideal.basis())
      if (!ideal.coordinates(bracket(x, y))) throw InputError("subspace is not an ideal");

  const size_t k = static_cast<size_t>(g->dim());
  if (ideal.dim() == 0) {
    std::vector<int> lift(k);
    for (size_t i = 0; i < k; ++i) lift[i] = static_cast<int>(i);
    return {g, LieHom::identity(g), std::move(lift)};
  }
  if (static_cast<size_t>(ideal.dim()) == k) {
    auto zero = std::make_shared<const LieSpan>(LieSpan::zero());
    return {zero, LieHom::zero(g, zero), {}};
  }

  // ideal first, then a complement drawn from g's own basis
  Echelon e(k);
  for (const auto& y : ideal.basis()) e.insert(*g->coordinates(y));
  std::vector<int> complement;
  for (size_t j = 0; j < k; ++j)
    if (e.insert(unit(k, j))) complement.push_back(static_cast<int>(j));
  const size_t off = static_cast<size_t>(ideal.dim());
  const size_t m = complement.size();
  auto quotient_coords = [&](const Vec& v) {
    const Vec all = *e.solve(v);
    return Vec(all.begin() + static_cast<long>(off), all.end());
  };

  StructureConstants sc;
  sc.dim = m;
  sc.table.assign(m, std::vector<Vec>(m));
  const auto& gb = g->basis();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      sc.table[a][b] = quotient_coords(*g->coordinates(
          bracket(gb[static_cast<size_t>(complement[a])], gb[static_cast<size_t>(complement[b])])));

  std::vector<std::vector<Scalar>> proj(m, std::vector<Scalar>(k));
  for (size_t j = 0; j < k; ++j) {
    const Vec qc = quotient_coords(unit(k, j));
    for (size_t i = 0; i < m; ++i) proj[i][j] = qc[i];
  }

  auto mats = regular_representation(sc, g->field());
  const int n = mats.front().size();
  auto algebra = std::make_shared<const LieSpan>(n, std::move(mats));
  return {algebra, LieHom(g, algebra, std::move(proj)), std::move(complement)};
}

LieHom induced_quotient_map(const Quotient& fine, const Quotient& coarse) {
  const auto& src = fine.projection.source();
  const auto& other = coarse.projection.source();
  if (src != other && (src->dim() != other->dim() || !src->contains(*other)))
    throw InputError("quotients are of different algebras");
  const size_t rows = static_cast<size_t>(coarse.algebra->dim());
  std::vector<std::vector<Scalar>> m(rows);
  for (size_t i = 0; i < rows; ++i)
    for (int j : fine.lift) m[i].push_back(coarse.projection.matrix()[i][static_cast<size_t>(j)]);
  return LieHom(fine.algebra, coarse.algebra, std::move(m));
}

}  // namespace uavg
