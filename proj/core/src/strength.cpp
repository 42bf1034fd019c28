#include "bigpoly/strength.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "bigpoly/derivations.hpp"

namespace bigpoly {

int StrengthValue::value() const {
  if (infinite_) fail(ErrorKind::kInvalidArgument, "infinite strength has no integer value");
  return k_;
}

std::string StrengthValue::to_string() const { return infinite_ ? "inf" : std::to_string(k_); }

bool verify_certificate(const Poly& f, const StrengthCertificate& cert) {
  const auto fd = f.homogeneous_degree();
  if (fd.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
    fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + f.to_string());
  }
  Poly sum(f.ring());
  std::optional<std::uint32_t> total;
  for (const auto& [g, h] : cert.pairs) {
    if (g.ring() != f.ring() || h.ring() != f.ring()) fail(ErrorKind::kRingMismatch, "certificate outside the ring");
    const auto gd = g.homogeneous_degree();
    const auto hd = h.homogeneous_degree();
    if (!gd.ok() || !hd.ok() || gd.degree == 0 || hd.degree == 0) return false;
    const std::uint32_t d = gd.degree + hd.degree;
    if (fd.ok() && d != fd.degree) return false;
    if (total && *total != d) return false;
    total = d;
    sum += g * h;
  }
  return sum == f;
}

bool has_unsplittable_term(const Poly& f) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [](const Poly::Term& t) { return t.first.total_degree() <= 1; });
}

StrengthCertificate strength_upper_split(const Poly& f) {
  if (f.is_zero()) return {};
  f.require_homogeneous();
  if (has_unsplittable_term(f)) fail(ErrorKind::kDegreeTooLow, "a term has degree at most one: " + f.to_string());
  const Ring& ring = f.ring();
  std::map<std::size_t, std::vector<Poly::Term>> groups;
  for (const auto& [m, c] : f.terms()) {
    std::size_t j = 0;
    while (m[j] == 0) ++j;
    groups[j].emplace_back(m / ring.var_monomial(j), c);
  }
  StrengthCertificate cert;
  for (auto& [j, terms] : groups) {
    cert.pairs.emplace_back(Poly::variable(ring, j), Poly::from_terms(ring, std::move(terms)));
  }
  return cert;
}

namespace {

void require_quadric(const Poly& f) {
  if (!f.ring().standard_graded()) fail(ErrorKind::kNotQuadric, "quadric bounds need the standard grading");
  const auto h = f.homogeneous_degree();
  if (h.kind == HomogeneousDegree::Kind::kZero) return;
  if (!h.ok() || h.degree != 2) fail(ErrorKind::kNotQuadric, "not a quadratic form: " + f.to_string());
}

std::optional<FieldElem> square_root(const FieldElem& a) {
  const Field& F = a.field();
  if (a.is_zero()) return a;
  const auto sq = F.is_square(a);
  if (!sq || !*sq) return std::nullopt;
  switch (F.kind()) {
    case FieldKind::kRationals: {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), a.rational().get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), a.rational().get_den_mpz_t());
      return F.from_rational(mpq_class(num, den));
    }
    case FieldKind::kPrime:
    case FieldKind::kExtension: {
      const std::uint64_t q = *F.size();
      if (F.kind() == FieldKind::kExtension || q <= (1u << 16)) {
        for (std::uint64_t i = 0; i < q; ++i) {
          const FieldElem r = F.element(i);
          if (r * r == a) return r;
        }
        return std::nullopt;
      }
      // Tonelli-Shanks.
      std::uint64_t s = 0, odd = q - 1;
      while (odd % 2 == 0) {
        odd /= 2;
        ++s;
      }
      FieldElem z = F.from_int(2);
      while (*F.is_square(z)) z += F.one();
      FieldElem c = z.pow(odd), t = a.pow(odd), r = a.pow((odd + 1) / 2);
      std::uint64_t m = s;
      while (!t.is_one()) {
        std::uint64_t i = 0;
        FieldElem t2 = t;
        while (!t2.is_one()) {
          t2 *= t2;
          ++i;
        }
        FieldElem b = c;
        for (std::uint64_t k = 0; k + i + 1 < m; ++k) b *= b;
        m = i;
        c = b * b;
        t *= c;
        r *= b;
      }
      return r;
    }
    case FieldKind::kRationalFunctions:
      break;
  }
  return std::nullopt;
}

std::size_t matrix_rank(std::vector<std::vector<FieldElem>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const FieldElem inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const FieldElem factor = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t polar_rank(const Poly& f) {
  require_quadric(f);
  const Ring& ring = f.ring();
  const Field& F = ring.field();
  const std::size_t n = ring.nvars();
  std::vector<std::vector<FieldElem>> b(n, std::vector<FieldElem>(n, F.zero()));
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      b[idx[0]][idx[0]] = c + c;
    } else {
      b[idx[0]][idx[1]] = c;
      b[idx[1]][idx[0]] = c;
    }
  }
  return matrix_rank(std::move(b));
}

int quadric_lower_bound(const Poly& f) { return static_cast<int>((polar_rank(f) + 1) / 2) - 1; }

QuadricBounds quadric_bounds(const Poly& f) {
  require_quadric(f);
  const Ring& ring = f.ring();
  const Field& F = ring.field();
  if (F.characteristic() == 2) fail(ErrorKind::kCharTwo, "Gram matrix undefined in characteristic 2");
  const FieldElem two = F.from_int(2);

  // Complete squares: q = sum a_i l_i^2 + sum u_j v_j with independent
  // linear forms; each hyperbolic u v accounts for rank 2.
  std::vector<std::pair<FieldElem, Poly>> squares;
  QuadricBounds out;
  Poly q = f;
  while (!q.is_zero()) {
    std::optional<std::size_t> diag;
    for (std::size_t i = 0; i < ring.nvars() && !diag; ++i) {
      if (!q.coefficient(ring.var_monomial(i, 2)).is_zero()) diag = i;
    }
    if (diag) {
      const FieldElem a = q.coefficient(ring.var_monomial(*diag, 2));
      const Poly l = partial(q, *diag).scaled((two * a).inverse());
      q -= (l * l).scaled(a);
      squares.emplace_back(a, l);
      continue;
    }
    const Monomial& m = q.leading().first;
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    std::size_t j = i + 1;
    while (m[j] == 0) ++j;
    const FieldElem c = q.leading().second;
    const Poly u = partial(q, i).scaled(c.inverse());
    const Poly v = partial(q, j);
    q -= u * v;
    out.certificate.pairs.emplace_back(u, v);
    out.rank += 2;
  }
  out.rank += squares.size();

  // Pair a l^2 + b m^2 = a (l - s m)(l + s m) whenever s^2 = -b/a exists.
  std::vector<bool> used(squares.size(), false);
  for (std::size_t i = 0; i < squares.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      if (used[j]) continue;
      const auto s = square_root(-(squares[j].first / squares[i].first));
      if (!s) continue;
      const Poly sm = squares[j].second.scaled(*s);
      out.certificate.pairs.emplace_back((squares[i].second - sm).scaled(squares[i].first),
                                         squares[i].second + sm);
      used[i] = used[j] = true;
      break;
    }
    if (!used[i]) {
      out.certificate.pairs.emplace_back(squares[i].second.scaled(squares[i].first), squares[i].second);
      used[i] = true;
    }
  }
  out.bounds.lower = static_cast<int>((out.rank + 1) / 2) - 1;
  out.bounds.upper = out.certificate.bound();
  return out;
}

std::vector<std::vector<FieldElem>> projective_vectors(const Field& field, std::size_t m) {
  const auto q = field.size();
  if (!q) fail(ErrorKind::kUnsupportedField, "projective enumeration needs a finite field");
  std::vector<std::vector<FieldElem>> out;
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::vector<std::uint64_t> digits(m - lead - 1, 0);
    while (true) {
      std::vector<FieldElem> v(m, field.zero());
      v[lead] = field.one();
      for (std::size_t k = 0; k < digits.size(); ++k) v[lead + 1 + k] = field.element(digits[k]);
      out.push_back(std::move(v));
      std::size_t k = digits.size();
      while (k > 0 && ++digits[k - 1] == *q) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

namespace {

std::optional<Poly> exact_quotient(const Poly& f, const Poly& g) {
  const auto& [lm, lc] = g.leading();
  const FieldElem inv = lc.inverse();
  Poly r = f;
  std::vector<Poly::Term> quotient;
  while (!r.is_zero()) {
    const auto& [m, c] = r.leading();
    if (!lm.divides(m)) return std::nullopt;
    const Monomial t = m / lm;
    const FieldElem s = c * inv;
    r -= g.mul_term(t, s);
    quotient.emplace_back(t, s);
  }
  return Poly::from_terms(f.ring(), std::move(quotient));
}

class Oracle {
 public:
  Oracle(const Ring& ring, const OracleLimits& limits) : ring_(ring), limits_(limits) {}

  /// f is a sum of at most k + 1 products; on success the products are
  /// appended to cert.
  bool search(const Poly& f, int k, StrengthCertificate& cert) {
    if (f.is_zero()) return true;
    if (k < 0) return false;
    const std::uint32_t d = f.leading().first.degree();
    for (std::uint32_t a = 1; 2 * a <= d; ++a) {
      const auto& gs = forms(a, true);
      if (gs.empty() || forms(d - a, false).empty()) continue;
      if (k == 0) {
        for (const auto& g : gs) {
          tick();
          if (auto h = exact_quotient(f, g)) {
            cert.pairs.emplace_back(g, std::move(*h));
            return true;
          }
        }
        continue;
      }
      const auto& hs = forms(d - a, false);
      for (const auto& g : gs) {
        for (const auto& h : hs) {
          tick();
          if (search(f - g * h, k - 1, cert)) {
            cert.pairs.emplace_back(g, h);
            return true;
          }
        }
      }
    }
    return false;
  }

  int current_lower = -1;
  int current_upper = -1;

 private:
  void tick() {
    if (++nodes_ > limits_.max_nodes) {
      throw BudgetExceeded("strength search exceeded " + std::to_string(limits_.max_nodes) + " nodes",
                           current_lower, current_upper);
    }
  }

  const std::vector<Poly>& forms(std::uint32_t d, bool projective) {
    auto& cache = projective ? projective_ : all_;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    const Field& F = ring_.field();
    const auto monos = monomials_of_degree(ring_, d);
    const std::uint64_t q = *F.size();
    long double count = 1;
    for (std::size_t i = 0; i < monos.size(); ++i) count *= q;
    if (count > limits_.max_forms) {
      throw BudgetExceeded("too many forms of degree " + std::to_string(d) + " to enumerate", current_lower,
                           current_upper);
    }
    std::vector<Poly> out;
    const auto scalars = projective ? std::vector<FieldElem>{F.one()} : nonzero_scalars();
    for (const auto& v : projective_vectors(F, monos.size())) {
      for (const auto& s : scalars) {
        std::vector<Poly::Term> terms;
        for (std::size_t i = 0; i < monos.size(); ++i) {
          if (!v[i].is_zero()) terms.emplace_back(monos[i], v[i] * s);
        }
        out.push_back(Poly::from_terms(ring_, std::move(terms)));
      }
    }
    return cache.emplace(d, std::move(out)).first->second;
  }

  std::vector<FieldElem> nonzero_scalars() const {
    std::vector<FieldElem> out;
    for (std::uint64_t i = 0; i < *ring_.field().size(); ++i) {
      FieldElem c = ring_.field().element(i);
      if (!c.is_zero()) out.push_back(std::move(c));
    }
    return out;
  }

  Ring ring_;
  OracleLimits limits_;
  std::uint64_t nodes_ = 0;
  std::map<std::uint32_t, std::vector<Poly>> projective_;
  std::map<std::uint32_t, std::vector<Poly>> all_;
};

void require_finite(const Ring& ring) {
  if (!ring.field().is_finite()) {
    fail(ErrorKind::kUnsupportedField, "exhaustive search needs a finite field, got " + ring.field().descriptor());
  }
}

StrengthResult exact_strength(Oracle& oracle, const Poly& f, int cap) {
  if (f.is_zero()) return {StrengthValue::of(-1), {}};
  if (has_unsplittable_term(f)) return {StrengthValue::infinity(), {}};
  StrengthCertificate split = strength_upper_split(f);
  oracle.current_upper = split.bound();
  for (int k = -1; k < split.bound() && k <= cap; ++k) {
    oracle.current_lower = k;
    StrengthCertificate cert;
    if (oracle.search(f, k, cert)) {
      std::reverse(cert.pairs.begin(), cert.pairs.end());
      return {StrengthValue::of(k), std::move(cert)};
    }
  }
  // Above the cap: only the fact matters, not the value.
  if (split.bound() > cap) return {StrengthValue::of(cap + 1), {}};
  return {StrengthValue::of(split.bound()), std::move(split)};
}

}  // namespace

StrengthResult strength_exact_small(const Poly& f, const OracleLimits& limits) {
  require_finite(f.ring());
  if (!f.is_zero()) f.require_homogeneous();
  Oracle oracle(f.ring(), limits);
  return exact_strength(oracle, f, std::numeric_limits<int>::max());
}

CollectiveStrengthResult collective_strength(const std::vector<Poly>& fs, const OracleLimits& limits) {
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "collective strength of an empty tuple");
  const Ring& ring = fs.front().ring();
  CollectiveStrengthResult out{StrengthValue::infinity(), {}, Poly(ring), {}};
  require_finite(ring);
  const Field& F = ring.field();
  std::map<std::uint32_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].ring() != ring) fail(ErrorKind::kRingMismatch, "forms live in different rings");
    const auto h = fs[i].homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
      fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + fs[i].to_string());
    }
    if (h.kind == HomogeneousDegree::Kind::kZero) {
      out.value = StrengthValue::of(-1);
      out.coefficients.assign(fs.size(), F.zero());
      out.coefficients[i] = F.one();
      out.combination = Poly(ring);
      return out;
    }
    classes[h.degree].push_back(i);
  }

  struct Candidate {
    std::vector<FieldElem> coefficients;
    Poly combination;
  };
  std::vector<Candidate> candidates;
  for (const auto& [d, idx] : classes) {
    for (const auto& v : projective_vectors(F, idx.size())) {
      Candidate c{std::vector<FieldElem>(fs.size(), F.zero()), Poly(ring)};
      for (std::size_t k = 0; k < idx.size(); ++k) {
        c.coefficients[idx[k]] = v[k];
        if (!v[k].is_zero()) c.combination += fs[idx[k]].scaled(v[k]);
      }
      if (c.combination.is_zero()) {
        out.value = StrengthValue::of(-1);
        out.coefficients = std::move(c.coefficients);
        out.combination = std::move(c.combination);
        return out;
      }
      candidates.push_back(std::move(c));
    }
  }

  // Strength is at least 0 from here on; each search only has to beat the
  // best value so far.
  Oracle oracle(ring, limits);
  bool found = false;
  for (auto& c : candidates) {
    const int cap = out.value.is_infinite() ? std::numeric_limits<int>::max() : out.value.value() - 1;
    if (cap < 0) break;
    auto r = exact_strength(oracle, c.combination, cap);
    if (!found || r.value < out.value) {
      if (!r.value.is_infinite() && r.value.value() > cap) continue;
      found = true;
      out.value = r.value;
      out.coefficients = std::move(c.coefficients);
      out.combination = std::move(c.combination);
      out.certificate = std::move(r.certificate);
    }
  }
  return out;
}

}  // namespace bigpoly
