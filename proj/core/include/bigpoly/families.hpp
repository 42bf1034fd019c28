#pragma once

// Finite avatars of limit constructions: elements in infinitely many
// variables given by an explicit head plus a power-sum tail, and families
// of polynomials whose coefficients are polynomials in parameters t.

#include <cstdint>
#include <optional>
#include <vector>

#include "bigpoly/ideal.hpp"
#include "bigpoly/param_poly.hpp"
#include "bigpoly/resolution.hpp"

namespace bigpoly {

/// c * sum_{i > start} w_i x_i^d with w_i = 1, or w_i = i when index_weighted.
struct PowerSumTail {
  FieldElem c;
  std::uint32_t degree = 1;
  std::size_t start = 0;
  bool index_weighted = false;
};

class LimitElement {
 public:
  /// head lives in x1..x_{n0}; the tail defaults to starting after n0.
  explicit LimitElement(Poly head, std::optional<PowerSumTail> tail = std::nullopt);

  const Poly& head() const { return head_; }
  const std::optional<PowerSumTail>& tail() const { return tail_; }
  const Field& field() const { return head_.field(); }
  /// Degree as a formal element; nullopt for the zero element.
  std::optional<std::uint32_t> degree() const;

 private:
  Poly head_;
  std::optional<PowerSumTail> tail_;
};

/// Image in k[x1..xn]: head with x_i (i > n) set to zero, plus the tail
/// terms with start < i <= n.
Poly truncate_limit(const LimitElement& e, std::size_t n);

struct Stabilization {
  std::size_t n = 0;              // least n with regular truncations
  std::vector<bool> regular;      // regular[m - 1] for m = 1..n_max
};

/// Scans n = 1..n_max. Throws NotFound when no level is regular and
/// InvariantViolated if regularity is lost again below n_max.
Stabilization regseq_stabilization(const std::vector<LimitElement>& es, std::size_t n_max,
                                   const GbLimits& limits = {});

/// D(g) in the parameter space: the points where g does not vanish.
struct DistinguishedOpen {
  ParamPoly g;

  /// g evaluated at y, with y in any field the base maps into.
  bool contains(const std::vector<FieldElem>& y) const;
  bool is_everything() const { return g.is_constant(); }
};

/// Image of a base-field element in target; throws CharacteristicMismatch
/// when no such map exists.
FieldElem map_base_element(const FieldElem& c, const Field& target);
/// Value of p at y, computed in y's field.
FieldElem evaluate_param(const ParamPoly& p, const std::vector<FieldElem>& y);

/// Substitute t = y into a polynomial over Frac(k[t]) (or over k itself);
/// the result lives over y's field. Throws DivisionByZero when a
/// coefficient denominator vanishes at y.
Poly specialize(const Poly& f, const std::vector<FieldElem>& y, const Field& target);
GradedMap specialize(const GradedMap& phi, const std::vector<FieldElem>& y, const Field& target);

/// Least common multiple of the numerators and denominators of the
/// tracked values and of the denominators of the inputs, made monic.
ParamPoly nonvanishing_product(const Field& field, const NonvanishingTracker& tracker,
                               const std::vector<Poly>& inputs = {});

/// fs over Frac(k[t]) forming a regular sequence there. Returns g such that
/// fs specialized at any y with g(y) != 0 is still a regular sequence: the
/// Groebner computation at y then repeats the generic one step by step.
/// Throws GenericNotRegular otherwise.
DistinguishedOpen regular_locus(const std::vector<Poly>& fs, const GbLimits& limits = {});

struct ConstantBetti {
  DistinguishedOpen open;
  BettiTable table;
};

/// Generic Betti table of coker(phi) over Frac(k[t]) and an open set where
/// every specialization has that table.
ConstantBetti constant_betti_open(const GradedMap& phi, const GbLimits& limits = {});

/// Up to count points of target^m (m = number of parameters of field) with
/// g(y) != 0, drawn from rng; coordinates are small integers for QQ and
/// uniform elements for finite fields.
std::vector<std::vector<FieldElem>> sample_open(const DistinguishedOpen& open, const Field& field,
                                                const Field& target, std::size_t count, Rng& rng);

}  // namespace bigpoly
