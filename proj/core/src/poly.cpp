#include "bigpoly/poly.hpp"

#include <algorithm>

#include "bigpoly/param_poly.hpp"

namespace bigpoly {

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return grevlex_compare(a.first, b.first) > 0; }

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring()) fail(ErrorKind::kRingMismatch, "polynomials live in different rings");
}

}  // namespace

Poly Poly::constant(const Ring& ring, const FieldElem& c) { return term(ring, ring.one(), c); }

Poly Poly::variable(const Ring& ring, std::size_t i) {
  return term(ring, ring.var_monomial(i), ring.field().one());
}

Poly Poly::term(const Ring& ring, const Monomial& m, const FieldElem& c) {
  if (&c.field() != &ring.field()) fail(ErrorKind::kDescriptorMismatch, "coefficient from another field");
  Poly out(ring);
  if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly out(ring);
  for (auto& t : terms) {
    if (&t.second.field() != &ring.field()) fail(ErrorKind::kDescriptorMismatch, "coefficient from another field");
    if (t.first.size() != ring.nvars()) fail(ErrorKind::kRingMismatch, "monomial length does not match ring");
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) fail(ErrorKind::kZeroInput, "leading term of the zero polynomial");
  return terms_.front();
}

FieldElem Poly::coefficient(const Monomial& m) const {
  for (const auto& [mono, c] : terms_) {
    if (mono == m) return c;
  }
  return field().zero();
}

HomogeneousDegree Poly::homogeneous_degree() const {
  if (terms_.empty()) return {HomogeneousDegree::Kind::kZero, 0};
  const std::uint32_t d = terms_.front().first.degree();
  for (const auto& t : terms_) {
    if (t.first.degree() != d) return {HomogeneousDegree::Kind::kNotHomogeneous, 0};
  }
  return {HomogeneousDegree::Kind::kDegree, d};
}

std::uint32_t Poly::require_homogeneous() const {
  const auto h = homogeneous_degree();
  if (h.kind == HomogeneousDegree::Kind::kZero) fail(ErrorKind::kZeroInput, "zero polynomial");
  if (h.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
    fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + to_string());
  }
  return h.degree;
}

std::uint32_t Poly::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

bool Poly::involves(std::size_t var) const { return degree_in(var) > 0; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly out(a.ring_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    const int c = grevlex_compare(i->first, j->first);
    if (c > 0) {
      out.terms_.push_back(*i++);
    } else if (c < 0) {
      out.terms_.push_back(*j++);
    } else {
      FieldElem s = i->second + j->second;
      if (!s.is_zero()) out.terms_.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), i, a.terms_.end());
  out.terms_.insert(out.terms_.end(), j, b.terms_.end());
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly out(a.ring_);
  for (const auto& [mb, cb] : b.terms_) out = out + a.mul_term(mb, cb);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

Poly Poly::scaled(const FieldElem& c) const {
  if (c.is_zero()) return Poly(ring_);
  Poly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Poly Poly::mul_term(const Monomial& m, const FieldElem& c) const {
  Poly out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& [mono, coeff] : terms_) {
    FieldElem p = coeff * c;
    if (!p.is_zero()) out.terms_.emplace_back(mono * m, std::move(p));
  }
  return out;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(ring_, field().one());
  Poly b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().second.inverse());
}

Poly Poly::embedded(const Ring& bigger) const {
  if (&bigger.field() != &field() || bigger.nvars() < ring_.nvars()) {
    fail(ErrorKind::kRingMismatch, "cannot embed into " + bigger.to_string());
  }
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    if (bigger.var_degree(i) != ring_.var_degree(i)) fail(ErrorKind::kRingMismatch, "variable degrees differ");
  }
  std::vector<Term> terms;
  for (const auto& [m, c] : terms_) {
    Monomial::Exps e(m.exps().begin(), m.exps().end());
    e.resize(bigger.nvars(), 0);
    terms.emplace_back(bigger.monomial(std::move(e)), c);
  }
  return from_terms(bigger, std::move(terms));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.vars()[i].name;
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    std::string coeff = c.to_string();
    bool negative = false;
    if (field().kind() == FieldKind::kRationals && sgn(c.rational()) < 0) {
      negative = true;
      coeff = mpq_class(-c.rational()).get_str();
    }
    if (field().kind() == FieldKind::kRationalFunctions && !c.ratfunc().den().is_one()) {
      coeff = "(" + coeff + ")";
    } else if (field().kind() == FieldKind::kRationalFunctions && c.ratfunc().num().terms().size() > 1) {
      coeff = "(" + coeff + ")";
    }
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

Poly truncate_vars(const Poly& f, std::size_t n) {
  const Ring target = f.ring().prefix(n);
  if (target.nvars() == f.ring().nvars()) return f;
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    bool keep = true;
    for (std::size_t i = n; i < m.size(); ++i) keep = keep && m[i] == 0;
    if (!keep) continue;
    Monomial::Exps e(m.exps().begin(), m.exps().begin() + static_cast<std::ptrdiff_t>(n));
    terms.emplace_back(Monomial(std::move(e), m.degree()), c);
  }
  return Poly::from_terms(target, std::move(terms));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Poly random_homogeneous(const Ring& ring, std::uint32_t degree, Rng& rng, long long box) {
  const Field& k = ring.field();
  if (k.kind() == FieldKind::kRationalFunctions) {
    fail(ErrorKind::kUnsupportedField, "random forms over rational-function fields are not supported");
  }
  std::vector<Poly::Term> terms;
  for (const auto& m : monomials_of_degree(ring, degree)) {
    FieldElem c = k.is_finite()
                      ? k.element(rng.below(*k.size()))
                      : k.from_int(static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * box + 1))) - box);
    terms.emplace_back(m, std::move(c));
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace bigpoly
