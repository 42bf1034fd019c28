#include "bigpoly/ideal.hpp"

#include <algorithm>
#include <functional>

#include "bigpoly/hom.hpp"
#include "bigpoly/module.hpp"

namespace bigpoly {

Ideal::Ideal(Ring ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.ring() != ring_) fail(ErrorKind::kRingMismatch, "generator outside the ring: " + g.to_string());
  }
}

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order, const GbLimits& limits) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  // Computed outside the lock; a racing duplicate yields the same basis.
  auto gb = std::make_shared<const std::vector<Poly>>(groebner_basis(generators_, order, limits));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return *cache_->bases.emplace(key, std::move(gb)).first->second;
}

Poly Ideal::normal_form(const Poly& f, const MonomialOrder& order) const {
  if (f.ring() != ring_) fail(ErrorKind::kRingMismatch, "polynomial outside the ring");
  return bigpoly::normal_form(f, groebner(order), order);
}

bool Ideal::contains(const Poly& f) const { return normal_form(f).is_zero(); }

bool Ideal::is_unit() const {
  for (const auto& g : groebner()) {
    if (g.is_constant() && !g.is_zero()) return true;
  }
  return false;
}

bool membership(const Poly& f, const Ideal& ideal) { return ideal.contains(f); }

std::optional<std::vector<Poly>> lift(const Poly& f, const std::vector<Poly>& gens, const GbLimits& limits) {
  const Ring& ring = f.ring();
  const std::size_t r = gens.size();
  std::vector<std::int64_t> shifts{0};
  for (const auto& g : gens) {
    if (g.ring() != ring) fail(ErrorKind::kRingMismatch, "generator outside the ring");
    shifts.push_back(g.max_degree());
  }
  TermOrder order{MonomialOrder::grevlex(), shifts, 1, ring.weights()};
  std::vector<ModVec> tagged;
  for (std::size_t i = 0; i < r; ++i) {
    ModVec v = to_modvec(gens[i], 0, order);
    v.push_back({ring.one(), static_cast<std::uint32_t>(i + 1), ring.field().one()});
    sort_vec(v, order);
    tagged.push_back(std::move(v));
  }
  ModuleGB gb(ring, order, std::move(tagged), limits);
  const ModVec rem = gb.reduce(to_modvec(f, 0, order));
  for (const auto& t : rem) {
    if (t.comp == 0) return std::nullopt;
  }
  std::vector<Poly> cof = from_modvec(ring, rem, r, 1);
  for (auto& c : cof) c = -c;
  return cof;
}

// ---------------------------------------------------------------------------

namespace {

using IntPoly = std::vector<long long>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_shifted(IntPoly& a, const IntPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void trim(IntPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex_compare(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

IntPoly numerator_rec(const Ring& ring, std::vector<Monomial> gens) {
  gens = minimize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {0};
  }
  const std::size_t n = ring.nvars();
  std::vector<std::size_t> count(n, 0);
  bool coprime = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : gens) {
      if (g[i]) ++count[i];
    }
    if (count[i] > 1) coprime = false;
  }
  if (coprime) {
    IntPoly out{1};
    for (const auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      out = poly_mul(out, f);
    }
    return out;
  }
  const std::size_t v = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  std::uint32_t e = UINT32_MAX;
  for (const auto& g : gens) {
    if (g[v]) e = std::min(e, g[v]);
  }
  const Monomial pivot = ring.var_monomial(v, e);
  // N(J) = N(J + (p)) + t^deg(p) N(J : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial::Exps ex = g.exps();
    ex[v] = ex[v] > e ? ex[v] - e : 0;
    colon.push_back(ring.monomial(std::move(ex)));
  }
  IntPoly out = numerator_rec(ring, std::move(plus));
  poly_add_shifted(out, numerator_rec(ring, std::move(colon)), pivot.degree());
  trim(out);
  return out;
}

std::size_t pole_reduction(IntPoly n) {
  // Multiplicity of t = 1 as a root of n.
  trim(n);
  if (n.size() == 1 && n[0] == 0) return 0;
  std::size_t k = 0;
  for (;;) {
    long long s = 0;
    for (auto c : n) s += c;
    if (s != 0) return k;
    // Divide by (1 - t): q_i = sum_{j <= i} n_j.
    IntPoly q(n.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[i];
      q[i] = acc;
    }
    n = std::move(q);
    ++k;
  }
}

std::vector<Monomial> leading_monomials(const std::vector<Poly>& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb) out.push_back(g.leading().first);
  return out;
}

void require_proper(const std::vector<Poly>& gb) {
  for (const auto& g : gb) {
    if (g.is_constant() && !g.is_zero()) fail(ErrorKind::kUnitIdeal, "the ideal is the whole ring");
  }
}

}  // namespace

std::vector<long long> hilbert_numerator(const Ring& ring, const std::vector<Monomial>& monomials) {
  return numerator_rec(ring, monomials);
}

std::size_t monomial_dimension(std::size_t nvars, const std::vector<Monomial>& monomials) {
  // Minimum hitting set of the generator supports, by branching on the
  // first generator not yet hit.
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : monomials) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) s.push_back(i);
    }
    if (s.empty()) return 0;
    supports.push_back(std::move(s));
  }
  std::size_t best = nvars;
  std::vector<bool> chosen(nvars, false);
  std::function<void(std::size_t)> search = [&](std::size_t used) {
    if (used >= best) return;
    const std::vector<std::size_t>* open = nullptr;
    for (const auto& s : supports) {
      if (std::none_of(s.begin(), s.end(), [&](std::size_t i) { return chosen[i]; })) {
        open = &s;
        break;
      }
    }
    if (!open) {
      best = used;
      return;
    }
    for (std::size_t i : *open) {
      chosen[i] = true;
      search(used + 1);
      chosen[i] = false;
    }
  };
  search(0);
  return nvars - best;
}

HilbertData hilbert(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  require_proper(gb);
  const auto lts = leading_monomials(gb);
  HilbertData out;
  out.numerator = hilbert_numerator(ideal.ring(), lts);
  out.dimension = monomial_dimension(ideal.ring().nvars(), lts);
  out.dimension_from_series = ideal.ring().nvars() - pole_reduction(out.numerator);
  out.codimension = ideal.ring().nvars() - out.dimension;
  if (out.dimension != out.dimension_from_series) {
    fail(ErrorKind::kInvariantViolated, "dimension from independent sets disagrees with the Hilbert series");
  }
  return out;
}

std::size_t codimension(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  require_proper(gb);
  return ideal.ring().nvars() - monomial_dimension(ideal.ring().nvars(), leading_monomials(gb));
}

std::size_t codimension(const std::vector<Poly>& gens, NonvanishingTracker* tracker, const GbLimits& limits) {
  if (gens.empty()) return 0;
  const auto gb = groebner_basis(gens, MonomialOrder::grevlex(), limits, tracker);
  require_proper(gb);
  const std::size_t n = gens.front().ring().nvars();
  return n - monomial_dimension(n, leading_monomials(gb));
}

bool is_regular_sequence(const std::vector<Poly>& fs, RegSeqMethod method, const GbLimits& limits) {
  if (fs.empty()) return true;
  const Ring& ring = fs.front().ring();
  for (const auto& f : fs) {
    if (f.ring() != ring) fail(ErrorKind::kRingMismatch, "sequence entries live in different rings");
    const auto h = f.homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kZero) return false;
    if (!h.ok()) fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + f.to_string());
    if (h.degree == 0) return false;
  }
  if (method == RegSeqMethod::kCodim) {
    Ideal ideal(ring, fs);
    return codimension(ideal) == fs.size();
  }
  // Every syzygy must lie in the submodule of Koszul syzygies.
  const GradedMap row = GradedMap::row(ring, fs);
  const GradedMap syz = syzygies(row, limits);
  if (syz.cols() == 0) return true;
  TermOrder order{MonomialOrder::grevlex(), row.source().degrees, 0, ring.weights()};
  std::vector<ModVec> koszul;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      std::vector<Poly> v(fs.size(), Poly(ring));
      v[i] = fs[j];
      v[j] = -fs[i];
      koszul.push_back(to_modvec(v, order));
    }
  }
  if (koszul.empty()) return false;
  ModuleGB gb(ring, order, std::move(koszul), limits);
  for (const auto& col : syz.columns()) {
    if (!gb.reduces_to_zero(to_modvec(col, order))) return false;
  }
  return true;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GbLimits& limits) {
  const Ring& ring = ideal.ring();
  std::vector<bool> block(ring.nvars(), false);
  for (auto i : drop) {
    if (i >= ring.nvars()) fail(ErrorKind::kIndexOutOfRange, "variable index out of range");
    block[i] = true;
  }
  std::vector<Variable> keep_vars;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!block[i]) {
      keep.push_back(i);
      keep_vars.push_back(ring.vars()[i]);
    }
  }
  const Ring sub(ring.field(), keep_vars);
  std::vector<Poly> out;
  for (const auto& g : groebner_basis(ideal.generators(), MonomialOrder::elimination(block), limits)) {
    bool free = true;
    for (auto i : drop) free = free && !g.involves(i);
    if (!free) continue;
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : g.terms()) {
      Monomial::Exps e;
      for (auto i : keep) e.push_back(m[i]);
      terms.emplace_back(sub.monomial(std::move(e)), c);
    }
    out.push_back(Poly::from_terms(sub, std::move(terms)));
  }
  return Ideal(sub, std::move(out));
}

// ---------------------------------------------------------------------------

Ring presentation_ring(const Ring& ring, const std::vector<Poly>& fs) {
  std::string prefix = "Y";
  auto clashes = [&](const std::string& p) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (ring.find(p + std::to_string(i + 1))) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "Y";
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto h = fs[i].homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
      fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + fs[i].to_string());
    }
    vars.push_back({prefix + std::to_string(i + 1), h.ok() && h.degree > 0 ? h.degree : 1});
  }
  return Ring(ring.field(), std::move(vars));
}

namespace {

struct EliminationSetup {
  Ring big;
  Ring yring;
  std::vector<Poly> gb;
  std::vector<bool> block;
  std::size_t n;
};

EliminationSetup elimination_setup(const Ring& ring, const std::vector<Poly>& fs, const GbLimits& limits) {
  for (const auto& f : fs) {
    if (f.ring() != ring) fail(ErrorKind::kRingMismatch, "forms live in different rings");
  }
  Ring yring = presentation_ring(ring, fs);
  Ring big = ring.extended(yring.vars());
  const std::size_t n = ring.nvars();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < fs.size(); ++i) gens.push_back(Poly::variable(big, n + i) - fs[i].embedded(big));
  std::vector<bool> block(big.nvars(), false);
  for (std::size_t i = 0; i < n; ++i) block[i] = true;
  auto gb = gens.empty() ? std::vector<Poly>{} : groebner_basis(gens, MonomialOrder::elimination(block), limits);
  return {big, yring, std::move(gb), std::move(block), n};
}

std::optional<Poly> to_yring(const EliminationSetup& s, const Poly& g) {
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : g.terms()) {
    for (std::size_t i = 0; i < s.n; ++i) {
      if (m[i]) return std::nullopt;
    }
    Monomial::Exps e(m.exps().begin() + static_cast<std::ptrdiff_t>(s.n), m.exps().end());
    terms.emplace_back(s.yring.monomial(std::move(e)), c);
  }
  return Poly::from_terms(s.yring, std::move(terms));
}

}  // namespace

IndependenceResult algebraically_independent(const std::vector<Poly>& fs, const GbLimits& limits) {
  if (fs.empty()) return {};
  const auto setup = elimination_setup(fs.front().ring(), fs, limits);
  IndependenceResult out;
  for (const auto& g : setup.gb) {
    auto r = to_yring(setup, g);
    if (!r) continue;
    if (!out.relation || r->max_degree() < out.relation->max_degree()) out.relation = std::move(r);
  }
  out.independent = !out.relation.has_value();
  return out;
}

std::vector<std::optional<Poly>> subalgebra_membership(const std::vector<Poly>& fs, const std::vector<Poly>& gs,
                                                       const GbLimits& limits) {
  std::vector<std::optional<Poly>> out;
  if (fs.empty()) return out;
  const Ring& ring = fs.front().ring();
  const auto setup = elimination_setup(ring, gs, limits);
  for (const auto& f : fs) {
    if (f.ring() != ring) fail(ErrorKind::kRingMismatch, "form outside the ring");
    const Poly nf = normal_form(f.embedded(setup.big), setup.gb, MonomialOrder::elimination(setup.block));
    out.push_back(to_yring(setup, nf));
  }
  return out;
}

std::optional<Poly> subalgebra_membership(const Poly& f, const std::vector<Poly>& gs, const GbLimits& limits) {
  return subalgebra_membership(std::vector<Poly>{f}, gs, limits).front();
}

Poly substitute(const Poly& expr, const std::vector<Poly>& gs) {
  if (gs.empty()) fail(ErrorKind::kInvalidArgument, "substitution needs at least one form to fix the target ring");
  return GradedHom(expr.ring(), gs.front().ring(), gs).apply(expr);
}

}  // namespace bigpoly
