#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bigpoly/field.hpp"
#include "bigpoly/parse.hpp"
#include "bigpoly/poly.hpp"

namespace bigpoly {
inline std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }
}  // namespace bigpoly

namespace bigpoly::testing {

inline Poly P(const Ring& ring, const std::string& text) { return parse_poly(ring, text); }

inline std::vector<Poly> Ps(const Ring& ring, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

inline const Field& F(const std::string& descriptor) { return parse_field_descriptor(descriptor); }

/// Random element: uniform over finite fields, small fractions over QQ, and
/// small ratios of parameter polynomials over rational-function fields.
FieldElem random_element(const Field& field, Rng& rng);

/// Sum of random homogeneous parts of degrees 0..max_degree.
Poly random_poly(const Ring& ring, std::uint32_t max_degree, Rng& rng);

/// Rank of a matrix over a field by Gaussian elimination.
std::size_t rank(std::vector<std::vector<FieldElem>> rows);

/// Coefficient vector of a form of degree d against monomials_of_degree.
std::vector<FieldElem> coefficients(const Poly& f, std::uint32_t d);

/// dim_k (ideal generated by gens)_d, by spanning m * g over all monomials m.
std::size_t ideal_dimension_in_degree(const std::vector<Poly>& gens, std::uint32_t d);

}  // namespace bigpoly::testing
