#include "uavg/average.hpp"

#include "uavg/error.hpp"

namespace uavg {

SectionTuple::SectionTuple(LieSpanPtr group, std::vector<UniMatrix> sections, bool check_membership)
    : group_(std::move(group)), sections_(std::move(sections)) {
  if (!group_) throw InputError("section tuple needs a group");
  if (sections_.empty()) throw InputError("section tuple needs at least one section");
  ring_ = sections_.front().ring();
  for (const auto& s : sections_) {
    if (s.size() != group_->ambient_size()) throw InputError("section size does not match the group");
    ring_ = common_ring(ring_, s.ring());
  }
  if (check_membership)
    for (size_t i = 0; i < sections_.size(); ++i)
      if (!group_->contains(sections_[i])) throw InputError("section " + std::to_string(i) + " is not in the group");
}

bool SectionTuple::is_constant() const {
  for (size_t i = 1; i < sections_.size(); ++i)
    if (!(sections_[i] == sections_[0])) return false;
  return true;
}

WeightSeq::WeightSeq(std::vector<Scalar> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("empty weight sequence");
  Scalar sum(0);
  for (const auto& w : weights_) sum += w;
  if (!(sum == Scalar(1))) throw InputError("weights sum to " + sum.to_string() + ", not 1");
}

WeightSeq WeightSeq::uniform(int q) {
  return WeightSeq(std::vector<Scalar>(static_cast<size_t>(q) + 1, Scalar(Rational(1, q + 1))));
}

WeightSeq WeightSeq::vertex(int q, int i) {
  if (i < 0 || i > q) throw InputError("vertex index out of range");
  std::vector<Scalar> w(static_cast<size_t>(q) + 1);
  w[static_cast<size_t>(i)] = Scalar(1);
  return WeightSeq(std::move(w));
}

UniMatrix transition(const UniMatrix& f_i, const UniMatrix& f_j) { return f_j * f_i.inverse(); }

UniMatrix transition(const LieSpan& group, const UniMatrix& f_i, const UniMatrix& f_j) {
  if (!group.contains(f_i) || !group.contains(f_j)) throw InputError("transition: section is not in the group");
  return transition(f_i, f_j);
}

namespace {

/// The shared averaging formula on sections already living on Δ^q.
std::vector<UniMatrix> averaging_pass(const std::vector<UniMatrix>& f, const RingPtr& ring) {
  const size_t count = f.size();
  std::vector<UniMatrix> inv;
  for (const auto& s : f) inv.push_back(s.inverse());
  // log g_{i,j}, with log g_{j,i} = -log g_{i,j}
  std::vector<std::vector<std::optional<NilMatrix>>> logs(count, std::vector<std::optional<NilMatrix>>(count));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = i + 1; j < count; ++j) {
      NilMatrix l = log_unipotent(f[j] * inv[i]);
      logs[j][i] = -l;
      logs[i][j] = std::move(l);
    }
  const int n = f.front().size();
  std::vector<UniMatrix> out;
  for (size_t i = 0; i < count; ++i) {
    NilMatrix x = NilMatrix::zero(n, ring);
    for (size_t j = 0; j < count; ++j) {
      if (j == i || logs[i][j]->is_zero()) continue;
      x = x + *logs[i][j] * SimplexPoly::coordinate(ring, static_cast<int>(j));
    }
    out.push_back(x.is_zero() ? f[i] : exp_nilpotent(x) * f[i]);
  }
  return out;
}

}  // namespace

SectionTuple wsym(const SectionTuple& t) {
  if (t.domain_degree() != t.degree())
    throw InputError("wsym needs sections on Δ^" + std::to_string(t.degree()) + ", got Δ^" +
                     std::to_string(t.domain_degree()));
  if (t.degree() == 0) return t;
  return SectionTuple(t.group(), averaging_pass(t.sections(), t.ring()), false);
}

SectionTuple wsym_iterate(const SectionTuple& t, int passes) {
  if (passes < 0) throw InputError("negative number of passes");
  SectionTuple cur = t;
  for (int k = 0; k < passes; ++k) cur = wsym(cur);
  return cur;
}

SectionTuple lift_w(const SectionTuple& t) {
  if (t.domain_degree() != 0) throw InputError("lift_w needs sections constant in t (domain Δ^0)");
  const int q = t.degree();
  if (q == 0) return t;
  const SimplexMap collapse = SimplexMap::to_point(q);
  std::vector<UniMatrix> lifted;
  for (const auto& s : t.sections()) lifted.emplace_back(s.matrix().pullback(collapse));
  return SectionTuple(t.group(), averaging_pass(lifted, ring_with_degree(t.ring(), q)), false);
}

UniMatrix wav(const SectionTuple& t, std::optional<int> passes) {
  if (t.domain_degree() != 0) throw InputError("wav needs sections constant in t (domain Δ^0)");
  const int d_min = derived_series_length(*t.group());
  int d = d_min;
  if (passes) {
    if (*passes < d_min)
      throw InputError("iteration count " + std::to_string(*passes) + " is below the derived length " +
                       std::to_string(d_min));
    d = *passes;
  }
  if (t.degree() == 0) return t[0];
  const SectionTuple result = wsym_iterate(lift_w(t), d);
  if (!result.is_constant())
    throw InvariantViolation("tuple is not constant after " + std::to_string(d) + " symmetrization passes");
  return result[0];
}

SectionTuple act_simplex_map(const SectionTuple& t, const SimplexMap& alpha) {
  if (alpha.target() != t.degree())
    throw InputError("simplex map into [" + std::to_string(alpha.target()) + "] applied to a tuple of degree " +
                     std::to_string(t.degree()));
  const int r = t.domain_degree();
  if (r != 0 && r != t.degree()) throw InputError("tuple domain degree must be 0 or its own degree");
  std::vector<UniMatrix> out;
  for (int i = 0; i <= alpha.source(); ++i) {
    const UniMatrix& s = t[static_cast<size_t>(alpha(i))];
    out.push_back(r == 0 || t.degree() == 0 ? s : UniMatrix(s.matrix().pullback(alpha)));
  }
  return SectionTuple(t.group(), std::move(out), false);
}

SectionTuple act_permutation(const SectionTuple& t, const Permutation& perm) {
  if (perm.degree() != t.degree()) throw InputError("permutation degree does not match the tuple");
  const int r = t.domain_degree();
  if (r != 0 && r != t.degree()) throw InputError("tuple domain degree must be 0 or its own degree");
  std::vector<UniMatrix> out;
  for (int i = 0; i <= perm.degree(); ++i) {
    const UniMatrix& s = t[static_cast<size_t>(perm(i))];
    out.push_back(r == 0 ? s : UniMatrix(s.matrix().pullback_function(perm.images(), perm.degree())));
  }
  return SectionTuple(t.group(), std::move(out), false);
}

SectionTuple apply_hom(const LieHom& phi, const SectionTuple& t) {
  std::vector<UniMatrix> out;
  for (const auto& s : t.sections()) out.push_back(apply_hom(phi, s));
  return SectionTuple(phi.target(), std::move(out), false);
}

UniMatrix evaluate(const UniMatrix& u, std::span<const Scalar> weights, std::span<const Scalar> param_values) {
  return UniMatrix(u.matrix().evaluate(weights, param_values));
}

UniMatrix wav_at_weights(const LieSpanPtr& group, const std::vector<UniMatrix>& points, const WeightSeq& w,
                         std::optional<int> passes) {
  if (static_cast<size_t>(w.degree()) + 1 != points.size())
    throw InputError("weight sequence length does not match the number of points");
  const SectionTuple t(group, points);
  if (t.domain_degree() != 0 || !t.ring()->params.empty())
    throw InputError("wav_at_weights expects constant points");
  return evaluate(wav(t, passes), w.weights());
}

}  // namespace uavg
