#include "bigpoly/module.hpp"

#include <algorithm>
#include <map>

namespace bigpoly {

GradedMap::GradedMap(FreeModule source, FreeModule target, std::vector<std::vector<Poly>> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (source_.ring != target_.ring) fail(ErrorKind::kRingMismatch, "source and target over different rings");
  if (columns_.size() != source_.rank()) fail(ErrorKind::kInvalidArgument, "one column per source generator");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].size() != target_.rank()) fail(ErrorKind::kInvalidArgument, "column length must match target");
    for (std::size_t i = 0; i < columns_[j].size(); ++i) {
      const Poly& e = columns_[j][i];
      if (e.ring() != target_.ring) fail(ErrorKind::kRingMismatch, "matrix entry outside the ring");
      const auto h = e.homogeneous_degree();
      if (h.kind == HomogeneousDegree::Kind::kZero) continue;
      if (!h.ok() || static_cast<std::int64_t>(h.degree) != source_.degrees[j] - target_.degrees[i]) {
        fail(ErrorKind::kNotHomogeneous, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") has the wrong degree: " + e.to_string());
      }
    }
  }
}

GradedMap GradedMap::row(const Ring& ring, const std::vector<Poly>& fs) {
  std::vector<std::int64_t> degrees;
  std::vector<std::vector<Poly>> cols;
  for (const auto& f : fs) {
    if (f.ring() != ring) fail(ErrorKind::kRingMismatch, "generator outside the ring");
    const auto h = f.homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
      fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + f.to_string());
    }
    // A zero generator sits in degree 0 by convention; it never survives
    // minimization.
    degrees.push_back(h.ok() ? h.degree : 0);
    cols.push_back({f});
  }
  return GradedMap(FreeModule{ring, degrees}, FreeModule{ring, {0}}, std::move(cols));
}

std::vector<Poly> GradedMap::apply(const std::vector<Poly>& v) const {
  if (v.size() != cols()) fail(ErrorKind::kInvalidArgument, "vector length must match source rank");
  std::vector<Poly> out(rows(), Poly(ring()));
  for (std::size_t j = 0; j < cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows(); ++i) out[i] += columns_[j][i] * v[j];
  }
  return out;
}

GradedMap GradedMap::after(const GradedMap& first) const {
  if (first.target().degrees != source_.degrees) fail(ErrorKind::kInvalidArgument, "maps do not compose");
  std::vector<std::vector<Poly>> cols;
  for (const auto& c : first.columns()) cols.push_back(apply(c));
  return GradedMap(first.source(), target_, std::move(cols));
}

bool GradedMap::is_zero() const {
  for (const auto& c : columns_) {
    for (const auto& e : c) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

bool GradedMap::has_unit_entry() const {
  for (const auto& c : columns_) {
    for (const auto& e : c) {
      if (!e.is_zero() && e.is_constant()) return true;
    }
  }
  return false;
}

GradedMap GradedMap::embedded(const Ring& bigger) const {
  std::vector<std::vector<Poly>> cols;
  for (const auto& c : columns_) {
    std::vector<Poly> col;
    for (const auto& e : c) col.push_back(e.embedded(bigger));
    cols.push_back(std::move(col));
  }
  return GradedMap(FreeModule{bigger, source_.degrees}, FreeModule{bigger, target_.degrees}, std::move(cols));
}

ModVec to_modvec(const std::vector<Poly>& v, const TermOrder& order, std::uint32_t offset) {
  ModVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [m, c] : v[i].terms()) out.push_back({m, static_cast<std::uint32_t>(i) + offset, c});
  }
  sort_vec(out, order);
  return out;
}

std::vector<Poly> from_modvec(const Ring& ring, const ModVec& v, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Poly::Term>> terms(rank);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp - offset >= rank) fail(ErrorKind::kInvalidArgument, "component out of range");
    terms[t.comp - offset].emplace_back(t.m, t.c);
  }
  std::vector<Poly> out;
  for (auto& ts : terms) out.push_back(Poly::from_terms(ring, std::move(ts)));
  return out;
}

namespace {

std::int64_t vec_degree(const ModVec& v, const std::vector<std::int64_t>& shifts) {
  return v.front().m.degree() + shifts[v.front().comp];
}

}  // namespace

std::vector<ModVec> minimal_generators(const Ring& ring, const std::vector<std::int64_t>& shifts,
                                       std::vector<ModVec> vectors, const GbLimits& limits,
                                       NonvanishingTracker* tracker) {
  TermOrder order{MonomialOrder::grevlex(), shifts, 0, ring.weights()};
  std::vector<std::pair<std::int64_t, ModVec>> cands;
  for (auto& v : vectors) {
    if (v.empty()) continue;
    sort_vec(v, order);
    cands.emplace_back(vec_degree(v, shifts), std::move(v));
  }
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<ModVec> selected;
  std::size_t k = 0;
  while (k < cands.size()) {
    const std::int64_t d = cands[k].first;
    std::optional<ModuleGB> gb;
    if (!selected.empty()) {
      GbLimits lim = limits;
      lim.truncate_degree = static_cast<std::uint32_t>(std::max<std::int64_t>(d, 0));
      gb.emplace(ring, order, selected, lim, tracker);
    }
    std::vector<ModVec> echelon;
    for (; k < cands.size() && cands[k].first == d; ++k) {
      ModVec r = gb ? gb->reduce(cands[k].second) : cands[k].second;
      for (bool progress = true; !r.empty() && progress;) {
        progress = false;
        for (const auto& row : echelon) {
          if (row.front().comp == r.front().comp && row.front().m == r.front().m) {
            const FieldElem c = r.front().c;
            ModVec next;
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < row.size()) {
              const int cmp = i == r.size()   ? -1
                              : j == row.size() ? 1
                                                : order.compare(r[i].m, r[i].comp, row[j].m, row[j].comp);
              if (cmp > 0) {
                next.push_back(r[i++]);
              } else if (cmp < 0) {
                next.push_back({row[j].m, row[j].comp, -(c * row[j].c)});
                ++j;
              } else {
                FieldElem s = r[i].c - c * row[j].c;
                if (!s.is_zero()) next.push_back({r[i].m, r[i].comp, std::move(s)});
                ++i;
                ++j;
              }
            }
            r = std::move(next);
            progress = true;
            break;
          }
        }
      }
      if (r.empty()) continue;
      const FieldElem lc = r.front().c;
      if (tracker) tracker->record(lc);
      const FieldElem inv = lc.inverse();
      for (auto& t : r) t.c *= inv;
      echelon.push_back(std::move(r));
      selected.push_back(cands[k].second);
    }
  }
  return selected;
}

GradedMap syzygies(const GradedMap& phi, const GbLimits& limits, NonvanishingTracker* tracker) {
  const Ring& ring = phi.ring();
  const std::size_t a = phi.rows();
  const std::size_t b = phi.cols();
  if (b == 0) return GradedMap(FreeModule{ring, {}}, phi.source(), {});

  // Tagged module F0 + F1: an element (phi(v), v) for each source vector;
  // with F0 ranked above F1, the basis elements inside F1 generate ker(phi).
  std::vector<std::int64_t> shifts = phi.target().degrees;
  shifts.insert(shifts.end(), phi.source().degrees.begin(), phi.source().degrees.end());
  TermOrder order{MonomialOrder::grevlex(), shifts, a, ring.weights()};
  std::vector<ModVec> gens;
  for (std::size_t j = 0; j < b; ++j) {
    ModVec v = to_modvec(phi.columns()[j], order, 0);
    v.push_back({ring.one(), static_cast<std::uint32_t>(a + j), ring.field().one()});
    sort_vec(v, order);
    gens.push_back(std::move(v));
  }
  ModuleGB gb(ring, order, std::move(gens), limits, tracker);

  std::vector<ModVec> kernel;
  for (const auto& v : gb.basis()) {
    if (v.front().comp < a) continue;
    ModVec w;
    for (const auto& t : v) w.push_back({t.m, static_cast<std::uint32_t>(t.comp - a), t.c});
    kernel.push_back(std::move(w));
  }
  const auto minimal = minimal_generators(ring, phi.source().degrees, std::move(kernel), limits, tracker);

  std::vector<std::int64_t> degrees;
  std::vector<std::vector<Poly>> cols;
  for (const auto& v : minimal) {
    degrees.push_back(vec_degree(v, phi.source().degrees));
    cols.push_back(from_modvec(ring, v, b));
  }
  return GradedMap(FreeModule{ring, std::move(degrees)}, phi.source(), std::move(cols));
}

}  // namespace bigpoly
