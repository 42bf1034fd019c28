#include "bigpoly/resolution.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bigpoly {

bool Resolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].after(maps[i + 1]).is_zero()) return false;
  }
  return true;
}

bool Resolution::has_unit_entry() const {
  return std::any_of(maps.begin(), maps.end(), [](const GradedMap& m) { return m.has_unit_entry(); });
}

BettiTable::BettiTable(const Resolution& res) {
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (std::int64_t d : res.modules[i].degrees) add(i, d);
  }
}

std::size_t BettiTable::at(std::size_t i, std::int64_t j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(std::size_t i, std::int64_t j, std::size_t count) {
  if (count) entries_[{i, j}] += count;
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

std::size_t BettiTable::total(std::size_t i) const {
  std::size_t sum = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) sum += count;
  }
  return sum;
}

std::vector<long long> BettiTable::alternating_sum() const {
  std::vector<long long> out;
  for (const auto& [key, count] : entries_) {
    const auto [i, j] = key;
    if (j < 0) fail(ErrorKind::kInvalidArgument, "negative twist in alternating sum");
    if (out.size() <= static_cast<std::size_t>(j)) out.resize(j + 1, 0);
    out[j] += (i % 2 ? -1 : 1) * static_cast<long long>(count);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string BettiTable::to_csv() const {
  std::string out = "i,j,count\n";
  for (const auto& [key, count] : entries_) {
    out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "total:\n";
  const std::size_t pd = projective_dimension();
  const auto& first = entries_.begin()->first;
  std::int64_t lo = first.second - static_cast<std::int64_t>(first.first), hi = lo;
  for (const auto& [key, count] : entries_) {
    const std::int64_t row = key.second - static_cast<std::int64_t>(key.first);
    lo = std::min(lo, row);
    hi = std::max(hi, row);
  }
  // Row labels are right-aligned to the width of "total:".
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  cells.emplace_back();
  labels.push_back("");
  for (std::size_t i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(i));
  cells.emplace_back();
  labels.push_back("total:");
  for (std::size_t i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(total(i)));
  for (std::int64_t row = lo; row <= hi; ++row) {
    cells.emplace_back();
    labels.push_back(std::to_string(row) + ":");
    for (std::size_t i = 0; i <= pd; ++i) {
      const std::size_t v = at(i, row + static_cast<std::int64_t>(i));
      cells.back().push_back(v ? std::to_string(v) : ".");
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(pd + 1, 0);
  for (const auto& r : cells) {
    for (std::size_t i = 0; i <= pd; ++i) widths[i] = std::max(widths[i], r[i].size());
  }
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    std::string line(label_width - labels[k].size(), ' ');
    line += labels[k];
    for (std::size_t i = 0; i <= pd; ++i) {
      line += ' ';
      line += std::string(widths[i] - cells[k][i].size(), ' ') + cells[k][i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string BettiTable::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_csv()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const GradedMap& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Poly& e = m.entry(i, j);
      if (!e.is_zero() && e.is_constant()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t k) {
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k) out.push_back(v[i]);
  }
  return out;
}

GradedMap drop_row(const GradedMap& m, std::size_t r, const FreeModule& new_target) {
  std::vector<std::vector<Poly>> cols;
  for (const auto& c : m.columns()) cols.push_back(without(c, r));
  return GradedMap(m.source(), new_target, std::move(cols));
}

GradedMap drop_col(const GradedMap& m, std::size_t c, const FreeModule& new_source) {
  return GradedMap(new_source, m.target(), without(m.columns(), c));
}

void trim(Resolution& res) {
  while (res.modules.size() > 1 && res.modules.back().rank() == 0) {
    res.modules.pop_back();
    res.maps.pop_back();
  }
}

}  // namespace

void minimize(Resolution& res, NonvanishingTracker* tracker) {
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    while (auto unit = find_unit(res.maps[i])) {
      const auto [r, c] = *unit;
      const GradedMap& d = res.maps[i];
      const FieldElem u = d.entry(r, c).leading().second;
      if (tracker) tracker->record(u);
      const FieldElem uinv = u.inverse();

      FreeModule src{d.ring(), without(d.source().degrees, c)};
      FreeModule tgt{d.ring(), without(d.target().degrees, r)};
      std::vector<std::vector<Poly>> cols;
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (j == c) continue;
        const Poly factor = d.entry(r, j).scaled(uinv);
        std::vector<Poly> col;
        for (std::size_t k = 0; k < d.rows(); ++k) {
          if (k == r) continue;
          col.push_back(factor.is_zero() ? d.entry(k, j) : d.entry(k, j) - d.entry(k, c) * factor);
        }
        cols.push_back(std::move(col));
      }
      GradedMap reduced(src, tgt, std::move(cols));
      if (i > 0) res.maps[i - 1] = drop_col(res.maps[i - 1], r, tgt);
      if (i + 1 < res.maps.size()) res.maps[i + 1] = drop_row(res.maps[i + 1], c, src);
      res.maps[i] = std::move(reduced);
      res.modules[i] = tgt;
      res.modules[i + 1] = src;
    }
  }
  trim(res);
  res.minimal = !res.has_unit_entry();
}

Resolution minimal_free_resolution(const GradedMap& presentation, const GbLimits& limits,
                                   NonvanishingTracker* tracker) {
  const Ring& ring = presentation.ring();
  Resolution res;
  res.modules = {presentation.target(), presentation.source()};
  res.maps = {presentation};
  minimize(res, tracker);

  if (res.maps.size() == 1) {
    // Keep a minimal generating set of the relations.
    const GradedMap& d = res.maps[0];
    const auto& shifts = d.target().degrees;
    TermOrder order{MonomialOrder::grevlex(), shifts, 0, ring.weights()};
    std::vector<ModVec> vecs;
    for (const auto& c : d.columns()) vecs.push_back(to_modvec(c, order));
    const auto kept = minimal_generators(ring, shifts, std::move(vecs), limits, tracker);
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<Poly>> cols;
    for (const auto& v : kept) {
      degrees.push_back(static_cast<std::int64_t>(v.front().m.degree()) + shifts[v.front().comp]);
      cols.push_back(from_modvec(ring, v, d.rows()));
    }
    FreeModule src{ring, std::move(degrees)};
    res.maps[0] = GradedMap(src, d.target(), std::move(cols));
    res.modules[1] = src;
    trim(res);
  }

  const std::size_t bound = ring.nvars() + 1;
  while (res.modules.size() > 1) {
    GradedMap next = syzygies(res.maps.back(), limits, tracker);
    if (next.cols() == 0) break;
    if (res.maps.size() >= bound) {
      fail(ErrorKind::kInvariantViolated, "resolution longer than the number of variables");
    }
    res.modules.push_back(next.source());
    res.maps.push_back(std::move(next));
  }
  minimize(res, tracker);
  return res;
}

Resolution minimal_free_resolution(const Ideal& ideal, const GbLimits& limits, NonvanishingTracker* tracker) {
  return minimal_free_resolution(GradedMap::row(ideal.ring(), ideal.generators()), limits, tracker);
}

BettiTable betti(const GradedMap& presentation, const GbLimits& limits) {
  return BettiTable(minimal_free_resolution(presentation, limits));
}

BettiTable betti(const Ideal& ideal, const GbLimits& limits) {
  return BettiTable(minimal_free_resolution(ideal, limits));
}

std::size_t projective_dimension(const GradedMap& presentation, const GbLimits& limits) {
  return minimal_free_resolution(presentation, limits).length();
}

std::size_t projective_dimension(const Ideal& ideal, const GbLimits& limits) {
  return minimal_free_resolution(ideal, limits).length();
}

BettiTable betti_over_subalgebra(const std::vector<Poly>& exprs, const GbLimits& limits) {
  if (exprs.empty()) fail(ErrorKind::kInvalidArgument, "no expressions given");
  return betti(Ideal(exprs.front().ring(), exprs), limits);
}

std::vector<long long> module_hilbert_numerator(const GradedMap& presentation, const GbLimits& limits) {
  const Ring& ring = presentation.ring();
  const auto& shifts = presentation.target().degrees;
  TermOrder order{MonomialOrder::grevlex(), shifts, 0, ring.weights()};
  std::vector<ModVec> gens;
  for (const auto& c : presentation.columns()) {
    ModVec v = to_modvec(c, order);
    if (!v.empty()) gens.push_back(std::move(v));
  }
  ModuleGB gb(ring, order, std::move(gens), limits);
  std::vector<std::vector<Monomial>> lts(presentation.rows());
  for (const auto& v : gb.basis()) lts[v.front().comp].push_back(v.front().m);

  std::vector<long long> out;
  for (std::size_t c = 0; c < lts.size(); ++c) {
    if (shifts[c] < 0) fail(ErrorKind::kInvalidArgument, "negative twist");
    const auto n = hilbert_numerator(ring, lts[c]);
    const std::size_t s = static_cast<std::size_t>(shifts[c]);
    if (out.size() < n.size() + s) out.resize(n.size() + s, 0);
    for (std::size_t k = 0; k < n.size(); ++k) out[k + s] += n[k];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace bigpoly
