#include "bigpoly/groebner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "bigpoly/param_poly.hpp"

namespace bigpoly {

std::string MonomialOrder::key() const {
  switch (kind) {
    case Kind::kGrevlex:
      return "grevlex";
    case Kind::kLex:
      return "lex";
    case Kind::kElimination: {
      std::string k = "elim:";
      for (bool b : block) k += b ? '1' : '0';
      return k;
    }
  }
  return {};
}

namespace {

std::int64_t block_degree(const Monomial& a, const std::vector<bool>& block, const std::vector<std::uint32_t>& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i < block.size() && block[i]) d += static_cast<std::int64_t>(a[i]) * (w.empty() ? 1 : w[i]);
  }
  return d;
}

}  // namespace

int TermOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
  if (high_block) {
    const bool ha = ca < high_block;
    const bool hb = cb < high_block;
    if (ha != hb) return ha ? 1 : -1;
  }
  const std::size_t n = a.size();
  switch (base.kind) {
    case MonomialOrder::Kind::kGrevlex: {
      const std::int64_t da = a.degree() + shifts[ca];
      const std::int64_t db = b.degree() + shifts[cb];
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      break;
    }
    case MonomialOrder::Kind::kLex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      break;
    case MonomialOrder::Kind::kElimination: {
      const std::int64_t ba = block_degree(a, base.block, weights);
      const std::int64_t bb = block_degree(b, base.block, weights);
      if (ba != bb) return ba > bb ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (i < base.block.size() && base.block[i] && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      const std::int64_t ra = a.degree() - ba + shifts[ca];
      const std::int64_t rb = b.degree() - bb + shifts[cb];
      if (ra != rb) return ra > rb ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (!(i < base.block.size() && base.block[i]) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      break;
    }
  }
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

void NonvanishingTracker::record(const FieldElem& c) {
  if (c.field().kind() != FieldKind::kRationalFunctions) return;
  const RatFunc& r = c.ratfunc();
  if (r.num().is_constant() && r.den().is_constant()) return;
  for (const auto& v : values_) {
    if (v == c) return;
  }
  values_.push_back(c);
}

void sort_vec(ModVec& v, const TermOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) {
    return order.compare(a.m, a.comp, b.m, b.comp) > 0;
  });
}

ModVec to_modvec(const Poly& f, std::uint32_t comp, const TermOrder& order) {
  ModVec v;
  v.reserve(f.size());
  for (const auto& [m, c] : f.terms()) v.push_back({m, comp, c});
  sort_vec(v, order);
  return v;
}

Poly component(const Ring& ring, const ModVec& v, std::uint32_t comp) {
  std::vector<Poly::Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.emplace_back(t.m, t.c);
  }
  return Poly::from_terms(ring, std::move(terms));
}

namespace {

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) mask |= 1ULL << (i % 64);
  }
  return mask;
}

// a - c * m * b, all descending under order.
ModVec sub_mul(const ModVec& a, const FieldElem& c, const Monomial& m, const ModVec& b, const TermOrder& order) {
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].m * m;
    const int cmp = i == a.size() ? -1 : order.compare(a[i].m, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), b[j].comp, -(c * b[j].c)});
      ++j;
    } else {
      FieldElem s = a[i].c - c * b[j].c;
      if (!s.is_zero()) out.push_back({std::move(bm), a[i].comp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(ModVec& v, NonvanishingTracker* tracker) {
  const FieldElem lc = v.front().c;
  if (lc.is_one()) return;
  if (tracker) tracker->record(lc);
  const FieldElem inv = lc.inverse();
  for (auto& t : v) t.c *= inv;
}

std::int64_t vec_sugar(const ModVec& v, const TermOrder& order) {
  std::int64_t s = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : v) s = std::max<std::int64_t>(s, t.m.degree() + order.shifts[t.comp]);
  return s;
}

class Engine {
 public:
  Engine(const Ring& ring, const TermOrder& order, const GbLimits& limits, NonvanishingTracker* tracker)
      : ring_(ring), order_(order), limits_(limits), tracker_(tracker) {
    ideal_case_ = order_.shifts.size() == 1;
  }

  std::vector<ModVec> run(std::vector<ModVec> inputs) {
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].empty()) continue;
      sort_vec(inputs[k], order_);
      const std::int64_t sugar = vec_sugar(inputs[k], order_);
      queue_.insert({sugar, seq_++, kInput, k});
    }
    inputs_ = std::move(inputs);

    while (!queue_.empty()) {
      const Item item = *queue_.begin();
      queue_.erase(queue_.begin());
      if (limits_.truncate_degree && item.sugar > static_cast<std::int64_t>(*limits_.truncate_degree)) {
        truncated_ = true;
        continue;
      }
      if (item.sugar > static_cast<std::int64_t>(limits_.max_degree)) {
        throw BudgetExceeded("Groebner basis degree limit " + std::to_string(limits_.max_degree) + " exceeded");
      }
      ModVec h;
      if (item.kind == kInput) {
        h = std::move(inputs_[item.index]);
      } else {
        if (++pairs_processed_ > limits_.max_pairs) {
          throw BudgetExceeded("Groebner basis pair limit " + std::to_string(limits_.max_pairs) + " exceeded");
        }
        const Pair& p = pairs_[item.index];
        if (!p.alive) continue;
        h = spoly(p);
      }
      h = reduce_full(std::move(h));
      if (h.empty()) continue;
      make_monic(h, tracker_);
      insert(std::move(h), item.sugar);
    }
    return finish();
  }

  std::size_t pairs_processed() const { return pairs_processed_; }

  ModVec reduce_full(ModVec p, std::size_t skip = std::numeric_limits<std::size_t>::max()) const {
    ModVec result;
    while (!p.empty()) {
      const ModTerm& lead = p.front();
      const std::uint64_t lm = divmask(lead.m);
      bool reduced = false;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == skip) continue;
        const ModTerm& g = basis_[k].v.front();
        if (g.comp != lead.comp || (masks_[k] & ~lm) != 0 || !g.m.divides(lead.m)) continue;
        const FieldElem c = lead.c;
        const Monomial q = lead.m / g.m;
        p = sub_mul(p, c, q, basis_[k].v, order_);
        reduced = true;
        break;
      }
      if (!reduced) {
        result.push_back(p.front());
        p.erase(p.begin());
      }
    }
    return result;
  }

 private:
  enum ItemKind { kInput = 0, kPair = 1 };
  struct Item {
    std::int64_t sugar;
    std::uint64_t seq;
    int kind;
    std::size_t index;
    bool operator<(const Item& o) const { return std::tie(sugar, seq) < std::tie(o.sugar, o.seq); }
  };
  struct Element {
    ModVec v;
    std::int64_t sugar;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    std::int64_t sugar;
    bool alive;
  };

  ModVec spoly(const Pair& p) const {
    const ModVec& a = basis_[p.i].v;
    const ModVec& b = basis_[p.j].v;
    ModVec left;
    const Monomial ma = p.lcm / a.front().m;
    left.reserve(a.size());
    for (const auto& t : a) left.push_back({t.m * ma, t.comp, t.c});
    return sub_mul(left, ring_.field().one(), p.lcm / b.front().m, b, order_);
  }

  void insert(ModVec h, std::int64_t sugar) {
    const std::size_t hi = basis_.size();
    const Monomial& hm = h.front().m;
    const std::uint32_t hc = h.front().comp;

    // Criterion B on existing pairs.
    for (std::size_t idx : live_pairs_) {
      Pair& p = pairs_[idx];
      if (!p.alive || p.comp != hc || !hm.divides(p.lcm)) continue;
      const Monomial li = ring_.lcm(basis_[p.i].v.front().m, hm);
      const Monomial lj = ring_.lcm(basis_[p.j].v.front().m, hm);
      if (li != p.lcm && lj != p.lcm) p.alive = false;
    }

    // Candidate new pairs.
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!basis_[i].active) continue;
      const ModTerm& g = basis_[i].v.front();
      if (g.comp != hc) continue;
      cands.push_back({i, ring_.lcm(g.m, hm), ideal_case_ && g.m.coprime(hm), true});
    }
    // Criterion M: drop pairs whose lcm is properly divisible by another's.
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
      }
    }
    // Criterion F with the product criterion: among pairs sharing an lcm
    // keep one, and none at all if any of them is coprime.
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].keep && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].keep = false;
        }
      }
      if (any_coprime) cands[x].keep = false;
    }
    for (const auto& c : cands) {
      if (!c.keep) continue;
      const Element& g = basis_[c.i];
      const std::int64_t s =
          std::max(g.sugar + (c.lcm.degree() - static_cast<std::int64_t>(g.v.front().m.degree())),
                   sugar + (c.lcm.degree() - static_cast<std::int64_t>(hm.degree())));
      pairs_.push_back({c.i, hi, c.lcm, hc, s, true});
      live_pairs_.push_back(pairs_.size() - 1);
      queue_.insert({s, seq_++, kPair, pairs_.size() - 1});
    }
    if (live_pairs_.size() > 4096) {
      std::vector<std::size_t> keep;
      for (auto idx : live_pairs_) {
        if (pairs_[idx].alive) keep.push_back(idx);
      }
      live_pairs_ = std::move(keep);
    }

    // Older elements whose leading term h divides stop spawning pairs.
    for (auto& g : basis_) {
      if (g.active && g.v.front().comp == hc && hm.divides(g.v.front().m)) g.active = false;
    }
    masks_.push_back(divmask(hm));
    basis_.push_back({std::move(h), sugar, true});
  }

  std::vector<ModVec> finish() {
    // Minimalize: keep elements whose leading term no other divides.
    std::vector<ModVec> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const ModTerm& li = basis_[i].v.front();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const ModTerm& lj = basis_[j].v.front();
        if (lj.comp != li.comp || !lj.m.divides(li.m)) continue;
        if (lj.m != li.m || j < i) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i].v);
    }
    // Interreduce tails.
    basis_.clear();
    masks_.clear();
    for (auto& v : minimal) {
      masks_.push_back(divmask(v.front().m));
      basis_.push_back({std::move(v), 0, true});
    }
    std::vector<ModVec> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      ModVec tail(basis_[i].v.begin() + 1, basis_[i].v.end());
      ModVec reduced = reduce_full(std::move(tail), i);
      ModVec full;
      full.push_back(basis_[i].v.front());
      full.insert(full.end(), reduced.begin(), reduced.end());
      basis_[i].v = full;
    }
    for (auto& e : basis_) out.push_back(std::move(e.v));
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
      return order_.compare(a.front().m, a.front().comp, b.front().m, b.front().comp) < 0;
    });
    return out;
  }

  const Ring& ring_;
  const TermOrder& order_;
  GbLimits limits_;
  NonvanishingTracker* tracker_;
  bool ideal_case_ = false;
  bool truncated_ = false;

  std::vector<ModVec> inputs_;
  std::vector<Element> basis_;
  std::vector<std::uint64_t> masks_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> live_pairs_;
  std::set<Item> queue_;
  std::uint64_t seq_ = 0;
  std::size_t pairs_processed_ = 0;
};

}  // namespace

ModuleGB::ModuleGB(Ring ring, TermOrder order, std::vector<ModVec> generators, const GbLimits& limits,
                   NonvanishingTracker* tracker)
    : ring_(std::move(ring)), order_(std::move(order)) {
  order_.weights = ring_.weights();
  std::uint32_t max_comp = 0;
  for (const auto& g : generators) {
    for (const auto& t : g) {
      if (&t.c.field() != &ring_.field()) fail(ErrorKind::kDescriptorMismatch, "coefficient from another field");
      max_comp = std::max(max_comp, t.comp);
    }
  }
  if (!generators.empty() && max_comp >= order_.shifts.size()) {
    for (const auto& g : generators) {
      if (!g.empty()) fail(ErrorKind::kInvalidArgument, "component index without a degree shift");
    }
  }
  Engine engine(ring_, order_, limits, tracker);
  basis_ = engine.run(std::move(generators));
  pairs_processed_ = engine.pairs_processed();
  for (const auto& v : basis_) masks_.push_back(divmask(v.front().m));
}

ModVec ModuleGB::reduce(ModVec p) const {
  sort_vec(p, order_);
  ModVec result;
  while (!p.empty()) {
    const ModTerm& lead = p.front();
    const std::uint64_t lm = divmask(lead.m);
    bool reduced = false;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const ModTerm& g = basis_[k].front();
      if (g.comp != lead.comp || (masks_[k] & ~lm) != 0 || !g.m.divides(lead.m)) continue;
      const FieldElem c = lead.c;
      p = sub_mul(p, c, lead.m / g.m, basis_[k], order_);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return result;
}

ModVec ModuleGB::top_reduce(ModVec p) const {
  sort_vec(p, order_);
  for (;;) {
    if (p.empty()) return p;
    const ModTerm& lead = p.front();
    bool reduced = false;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const ModTerm& g = basis_[k].front();
      if (g.comp != lead.comp || !g.m.divides(lead.m)) continue;
      const FieldElem c = lead.c;
      p = sub_mul(p, c, lead.m / g.m, basis_[k], order_);
      reduced = true;
      break;
    }
    if (!reduced) return p;
  }
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order, const GbLimits& limits,
                                 NonvanishingTracker* tracker) {
  if (gens.empty()) return {};
  const Ring& ring = gens.front().ring();
  TermOrder to{order, {0}, 0, {}};
  std::vector<ModVec> vecs;
  for (const auto& g : gens) {
    if (g.ring() != ring) fail(ErrorKind::kRingMismatch, "generators live in different rings");
    vecs.push_back(to_modvec(g, 0, to));
  }
  ModuleGB gb(ring, to, std::move(vecs), limits, tracker);
  std::vector<Poly> out;
  for (const auto& v : gb.basis()) out.push_back(component(ring, v, 0));
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  TermOrder to{order, {0}, 0, f.ring().weights()};
  std::vector<ModVec> vecs;
  std::vector<std::uint64_t> masks;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    vecs.push_back(to_modvec(g, 0, to));
    make_monic(vecs.back(), nullptr);
    masks.push_back(divmask(vecs.back().front().m));
  }
  ModVec p = to_modvec(f, 0, to);
  ModVec result;
  while (!p.empty()) {
    const ModTerm& lead = p.front();
    const std::uint64_t lm = divmask(lead.m);
    bool reduced = false;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      const ModTerm& g = vecs[k].front();
      if ((masks[k] & ~lm) != 0 || !g.m.divides(lead.m)) continue;
      const FieldElem c = lead.c;
      p = sub_mul(p, c, lead.m / g.m, vecs[k], to);
      reduced = true;
      break;
    }
    if (!reduced) {
      result.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return component(f.ring(), result, 0);
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  if (f.is_zero()) fail(ErrorKind::kZeroInput, "leading monomial of zero");
  TermOrder to{order, {0}, 0, {}};
  to.weights = f.ring().weights();
  const Monomial* best = &f.terms().front().first;
  for (const auto& [m, c] : f.terms()) {
    if (to.compare(m, 0, *best, 0) > 0) best = &m;
  }
  return *best;
}

}  // namespace bigpoly
