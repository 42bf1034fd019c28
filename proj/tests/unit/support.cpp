#include "support.hpp"

namespace bigpoly::testing {

FieldElem random_element(const Field& field, Rng& rng) {
  switch (field.kind()) {
    case FieldKind::kPrime:
    case FieldKind::kExtension:
      return field.element(rng.below(*field.size()));
    case FieldKind::kRationals: {
      const long num = static_cast<long>(rng.below(41)) - 20;
      const long den = static_cast<long>(rng.below(9)) + 1;
      return field.from_rational(mpq_class(num, den));
    }
    case FieldKind::kRationalFunctions: {
      const Field& base = field.base();
      auto small_poly = [&](bool nonzero) {
        for (;;) {
          FieldElem acc = field.zero();
          FieldElem power = field.one();
          for (int k = 0; k < 3; ++k) {
            acc += field.embed_base(random_element(base, rng)) * power;
            power *= field.param(rng.below(field.params().size()));
          }
          if (!nonzero || !acc.is_zero()) return acc;
        }
      };
      return small_poly(false) / small_poly(true);
    }
  }
  return field.zero();
}

Poly random_poly(const Ring& ring, std::uint32_t max_degree, Rng& rng) {
  Poly out(ring);
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    std::vector<Poly::Term> terms;
    for (const auto& m : monomials_of_degree(ring, d)) {
      if (rng.below(3) == 0) terms.emplace_back(m, random_element(ring.field(), rng));
    }
    out += Poly::from_terms(ring, std::move(terms));
  }
  return out;
}

std::size_t rank(std::vector<std::vector<FieldElem>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldElem inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const FieldElem factor = rows[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::vector<FieldElem> coefficients(const Poly& f, std::uint32_t d) {
  std::vector<FieldElem> out;
  for (const auto& m : monomials_of_degree(f.ring(), d)) out.push_back(f.coefficient(m));
  return out;
}

std::size_t ideal_dimension_in_degree(const std::vector<Poly>& gens, std::uint32_t d) {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::uint32_t e = g.require_homogeneous();
    if (e > d) continue;
    for (const auto& m : monomials_of_degree(g.ring(), d - e)) {
      rows.push_back(coefficients(g.mul_term(m, g.field().one()), d));
    }
  }
  return rank(std::move(rows));
}

}  // namespace bigpoly::testing
