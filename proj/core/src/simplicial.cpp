#include "uavg/simplicial.hpp"

#include <algorithm>
#include <set>

#include "uavg/error.hpp"

namespace uavg {

std::vector<MultiIndex> multi_indices(int m, int q) {
  if (m < 0 || q < 0) throw InputError("multi_indices: negative bound");
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<size_t>(q) + 1, 0);
  while (true) {
    out.push_back(cur);
    int k = q;
    while (k >= 0 && cur[static_cast<size_t>(k)] == m) --k;
    if (k < 0) break;
    const int v = cur[static_cast<size_t>(k)] + 1;
    for (int l = k; l <= q; ++l) cur[static_cast<size_t>(l)] = v;
  }
  return out;
}

std::string multi_index_key(const MultiIndex& index) {
  std::string s;
  for (size_t k = 0; k < index.size(); ++k) s += (k ? "." : "") + std::to_string(index[k]);
  return s;
}

MultiIndex parse_multi_index(const std::string& key) {
  MultiIndex out;
  size_t pos = 0;
  while (pos <= key.size()) {
    const size_t dot = std::min(key.find('.', pos), key.size());
    const std::string part = key.substr(pos, dot - pos);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("malformed multi-index '" + key + "'");
    out.push_back(std::stoi(part));
    pos = dot + 1;
  }
  if (!std::is_sorted(out.begin(), out.end())) throw InputError("multi-index '" + key + "' is not weakly increasing");
  return out;
}

MultiIndex compose(const MultiIndex& index, const SimplexMap& alpha) {
  if (static_cast<int>(index.size()) != alpha.target() + 1) throw InputError("multi-index length does not match map");
  MultiIndex out;
  for (int v : alpha.values()) out.push_back(index[static_cast<size_t>(v)]);
  return out;
}

FiniteCover::FiniteCover(std::vector<std::string> points, std::vector<std::vector<std::string>> opens)
    : points_(std::move(points)) {
  std::set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) throw InputError("duplicate point label '" + p + "'");
  if (opens.empty()) throw InputError("cover has no opens");
  std::vector<bool> covered(points_.size(), false);
  for (const auto& open : opens) {
    std::vector<int> idx;
    for (const auto& label : open) idx.push_back(point_index(label));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw InputError("open lists a point twice");
    for (int i : idx) covered[static_cast<size_t>(i)] = true;
    opens_.push_back(std::move(idx));
  }
  for (size_t i = 0; i < points_.size(); ++i)
    if (!covered[i]) throw InputError("point '" + points_[i] + "' is not covered");
}

int FiniteCover::point_index(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw InputError("unknown point '" + label + "'");
  return static_cast<int>(it - points_.begin());
}

bool FiniteCover::contains(int open, int point) const {
  const auto& o = opens_.at(static_cast<size_t>(open));
  return std::binary_search(o.begin(), o.end(), point);
}

std::vector<int> FiniteCover::intersection(const MultiIndex& index) const {
  if (index.empty()) throw InputError("empty multi-index");
  for (int i : index)
    if (i < 0 || i >= num_opens()) throw InputError("open index out of range");
  std::vector<int> out;
  for (int p : open(index.front()))
    if (std::all_of(index.begin(), index.end(), [&](int i) { return contains(i, p); })) out.push_back(p);
  return out;
}

SimplicialSection::SimplicialSection(FiniteCover cover, LieSpanPtr group)
    : cover_(std::move(cover)), group_(std::move(group)) {
  if (!group_) throw InputError("simplicial section needs a group");
}

void SimplicialSection::set(const MultiIndex& index, const std::string& point, UniMatrix value) {
  if (index.empty()) throw InputError("empty multi-index");
  if (!std::is_sorted(index.begin(), index.end())) throw InputError("multi-index is not weakly increasing");
  for (int i : index)
    if (i < 0 || i >= cover_.num_opens()) throw InputError("open index out of range");
  cover_.point_index(point);
  const size_t q = index.size() - 1;
  if (value.ring()->q != static_cast<int>(q))
    throw InputError("value at " + multi_index_key(index) + " must live on Δ^" + std::to_string(q));
  if (value.size() != group_->ambient_size()) throw InputError("value size does not match the group");
  if (levels_.size() <= q) levels_.resize(q + 1);
  levels_[q][index].insert_or_assign(point, std::move(value));
}

const UniMatrix* SimplicialSection::find(const MultiIndex& index, const std::string& point) const {
  const size_t q = index.size() - 1;
  if (index.empty() || q >= levels_.size()) return nullptr;
  auto it = levels_[q].find(index);
  if (it == levels_[q].end()) return nullptr;
  auto jt = it->second.find(point);
  return jt == it->second.end() ? nullptr : &jt->second;
}

SimplicialSection build_simplicial_section(const FiniteCover& cover, const std::vector<LocalSection>& locals,
                                           const LieSpanPtr& group, int max_q) {
  if (max_q < 0) throw InputError("max_q must be non-negative");
  if (static_cast<int>(locals.size()) != cover.num_opens())
    throw InputError("expected one local section per open, got " + std::to_string(locals.size()));
  std::vector<const LocalSection*> by_open(locals.size(), nullptr);
  for (const auto& l : locals) {
    if (l.open_index < 0 || l.open_index >= cover.num_opens()) throw InputError("local section open out of range");
    if (by_open[static_cast<size_t>(l.open_index)]) throw InputError("two local sections for one open");
    by_open[static_cast<size_t>(l.open_index)] = &l;
    const auto& pts = cover.open(l.open_index);
    if (l.values.size() != pts.size())
      throw InputError("local section " + std::to_string(l.open_index) + " is not defined on exactly its open");
    for (int p : pts) {
      auto it = l.values.find(cover.points()[static_cast<size_t>(p)]);
      if (it == l.values.end())
        throw InputError("local section " + std::to_string(l.open_index) + " misses point '" +
                         cover.points()[static_cast<size_t>(p)] + "'");
      if (!it->second.matrix().is_constant() || it->second.ring()->q != 0)
        throw InputError("local section values must be constant");
      if (!group->contains(it->second)) throw InputError("local section value is not in the group");
    }
  }
  SimplicialSection out(cover, group);
  for (int q = 0; q <= max_q; ++q) {
    for (const auto& index : multi_indices(cover.num_opens() - 1, q)) {
      for (int p : cover.intersection(index)) {
        const std::string& label = cover.points()[static_cast<size_t>(p)];
        std::vector<UniMatrix> pts;
        for (int i : index) pts.push_back(by_open[static_cast<size_t>(i)]->values.at(label));
        out.set(index, label, wav(SectionTuple(group, std::move(pts), false)));
      }
    }
  }
  return out;
}

SimplicialReport validate_simplicial_section(const SimplicialSection& s, int max_q) {
  SimplicialReport report;
  const FiniteCover& cover = s.cover();
  const int m = cover.num_opens() - 1;
  auto fail = [&](std::string map, MultiIndex index, std::string point, std::string msg) {
    report.ok = false;
    report.map_name = std::move(map);
    report.multi_index = std::move(index);
    report.point = std::move(point);
    report.message = std::move(msg);
    return report;
  };
  // condition (i): each datum lives on exactly U_i
  for (int q = 0; q <= max_q; ++q) {
    for (const auto& index : multi_indices(m, q)) {
      const auto domain = cover.intersection(index);
      for (int p : domain) {
        ++report.checks;
        const std::string& label = cover.points()[static_cast<size_t>(p)];
        if (!s.find(index, label)) return fail("", index, label, "missing value");
      }
      if (q <= s.max_level()) {
        auto it = s.level(q).find(index);
        if (it != s.level(q).end())
          for (const auto& [label, v] : it->second)
            if (!std::binary_search(domain.begin(), domain.end(), cover.point_index(label)))
              return fail("", index, label, "value outside the intersection");
      }
    }
  }
  // condition (ii) for the generators of Δ
  for (const auto& alpha : simplicial_generators(max_q)) {
    for (const auto& index : multi_indices(m, alpha.target())) {
      const MultiIndex image = compose(index, alpha);
      for (int p : cover.intersection(index)) {
        ++report.checks;
        const std::string& label = cover.points()[static_cast<size_t>(p)];
        const UniMatrix* hi = s.find(index, label);
        const UniMatrix* lo = s.find(image, label);
        if (!(UniMatrix(hi->matrix().pullback(alpha)) == *lo))
          return fail(alpha.name(), index, label,
                      "pullback of " + multi_index_key(index) + " differs from " + multi_index_key(image));
      }
    }
  }
  return report;
}

TowerReport tower_compatibility(const SectionTuple& t, const std::vector<LieSpan>& ideals) {
  TowerReport report;
  const LieSpanPtr& g = t.group();
  for (size_t k = 0; k + 1 < ideals.size(); ++k)
    if (!ideals[k].contains(ideals[k + 1])) throw InputError("ideal chain is not descending");
  const UniMatrix top = wav(t);
  std::vector<Quotient> quotients;
  std::vector<UniMatrix> rho;
  for (size_t k = 0; k < ideals.size(); ++k) {
    quotients.push_back(quotient_span(g, ideals[k]));
    const Quotient& qk = quotients.back();
    ++report.checks;
    rho.push_back(wav(apply_hom(qk.projection, t)));
    if (!(apply_hom(qk.projection, top) == rho.back())) {
      report.ok = false;
      report.message = "projection to quotient " + std::to_string(k) + " does not commute with wav";
      return report;
    }
    if (k > 0) {
      ++report.checks;
      const LieHom down = induced_quotient_map(qk, quotients[k - 1]);
      if (!(apply_hom(down, rho[k]) == rho[k - 1])) {
        report.ok = false;
        report.message = "quotients " + std::to_string(k) + " and " + std::to_string(k - 1) + " are not compatible";
        return report;
      }
    }
  }
  return report;
}

}  // namespace uavg
