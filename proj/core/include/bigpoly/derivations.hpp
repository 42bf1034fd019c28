#pragma once

// Coordinate derivations: partial and Hasse derivatives, the witness search
// for a nonvanishing first Hasse derivative, and p-th roots of polynomials.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bigpoly/poly.hpp"

namespace bigpoly {

Poly partial(const Poly& f, std::size_t j);

/// n-th Hasse derivative in the direction x_j: c x_j^k m -> c C(k,n) x_j^(k-n) m.
Poly hasse(const Poly& f, std::size_t j, std::uint64_t n);

/// [hasse(f, j, 0), ..., hasse(f, j, order)], the coefficients of f under
/// x_j -> x_j + t modulo t^(order+1).
std::vector<Poly> hasse_series(const Poly& f, std::size_t j, std::uint64_t order);

/// Least j with hasse(f, j, 1) != 0; nullopt when every exponent is
/// divisible by the characteristic (in characteristic 0: when f is constant).
std::optional<std::size_t> enough_witness(const Poly& f);

/// g with g^p = f, or nullopt when some exponent is not divisible by p.
/// Throws CharZero in characteristic 0 and NotApplicable over imperfect fields.
std::optional<Poly> pth_power_root(const Poly& f);

}  // namespace bigpoly
