#include "bigpoly/derivations.hpp"

namespace bigpoly {

namespace {

void check_index(const Poly& f, std::size_t j) {
  if (j >= f.ring().nvars()) fail(ErrorKind::kIndexOutOfRange, "variable index " + std::to_string(j) + " out of range");
}

}  // namespace

Poly partial(const Poly& f, std::size_t j) {
  check_index(f, j);
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[j] == 0) continue;
    Monomial::Exps e = m.exps();
    --e[j];
    terms.emplace_back(Monomial(std::move(e), m.degree() - f.ring().var_degree(j)), c * f.field().from_int(m[j]));
  }
  return Poly::from_terms(f.ring(), std::move(terms));
}

Poly hasse(const Poly& f, std::size_t j, std::uint64_t n) {
  check_index(f, j);
  if (n == 0) return f;
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[j] < n) continue;
    FieldElem b = binomial_in_field(f.field(), m[j], n);
    if (b.is_zero()) continue;
    Monomial::Exps e = m.exps();
    e[j] -= static_cast<std::uint32_t>(n);
    terms.emplace_back(Monomial(std::move(e), m.degree() - static_cast<std::uint32_t>(n) * f.ring().var_degree(j)),
                       c * b);
  }
  return Poly::from_terms(f.ring(), std::move(terms));
}

std::vector<Poly> hasse_series(const Poly& f, std::size_t j, std::uint64_t order) {
  std::vector<Poly> out;
  for (std::uint64_t n = 0; n <= order; ++n) out.push_back(hasse(f, j, n));
  return out;
}

std::optional<std::size_t> enough_witness(const Poly& f) {
  f.require_homogeneous();
  const std::uint64_t p = f.field().characteristic();
  for (std::size_t j = 0; j < f.ring().nvars(); ++j) {
    for (const auto& [m, c] : f.terms()) {
      if (m[j] == 0) continue;
      if (p == 0 || m[j] % p != 0) return j;
    }
  }
  return std::nullopt;
}

std::optional<Poly> pth_power_root(const Poly& f) {
  const Field& k = f.field();
  const std::uint64_t p = k.characteristic();
  if (p == 0) fail(ErrorKind::kCharZero, "p-th roots need positive characteristic");
  if (!k.is_perfect()) {
    fail(ErrorKind::kNotApplicable, "p-th roots of polynomials need a perfect coefficient field");
  }
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial::Exps e = m.exps();
    for (auto& x : e) {
      if (x % p != 0) return std::nullopt;
      x /= static_cast<std::uint32_t>(p);
    }
    terms.emplace_back(f.ring().monomial(std::move(e)), k.pth_root(c));
  }
  return Poly::from_terms(f.ring(), std::move(terms));
}

}  // namespace bigpoly
