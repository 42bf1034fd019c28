#pragma once

// Text forms for fields, coefficients and polynomials.
//
// Field descriptors: "QQ", "GF(p)", "GF(p^e)" (first irreducible modulus in
// canonical order), "GF(p^e;c0,...,ce)" (modulus low-to-high) and
// rational-function fields "Frac(BASE[t,u])" or the shorthand "BASE(t,u)".
//
// Expressions: sums and products of integers, names, parenthesized
// expressions, powers with non-negative integer exponents and division by
// nonzero constants. "[c0,c1,...]" denotes an extension-field constant
// c0 + c1*w + ... in the generator w.

#include <string_view>

#include "bigpoly/field.hpp"
#include "bigpoly/poly.hpp"

namespace bigpoly {

const Field& parse_field_descriptor(std::string_view text);
FieldElem parse_field_element(const Field& field, std::string_view text);
/// Names resolve to ring variables first, then to field parameters.
Poly parse_poly(const Ring& ring, std::string_view text);

}  // namespace bigpoly
