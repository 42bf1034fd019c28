#pragma once

// Buchberger's algorithm for submodules of graded free modules R^r (ideals
// are the case r = 1), with sugar-degree pair selection and the
// Gebauer-Moeller criteria.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bigpoly/poly.hpp"

namespace bigpoly {

struct MonomialOrder {
  enum class Kind { kGrevlex, kLex, kElimination };
  Kind kind = Kind::kGrevlex;
  /// Elimination only: variables ranked above all others.
  std::vector<bool> block;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::kLex, {}}; }
  static MonomialOrder elimination(std::vector<bool> block) { return {Kind::kElimination, std::move(block)}; }

  std::string key() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// A monomial order extended to module terms x^a e_c. Component c carries
/// degree shift shifts[c]; components below high_block outrank every term
/// of the remaining components (an elimination order on components);
/// ties are broken by the smaller component index.
struct TermOrder {
  MonomialOrder base;
  std::vector<std::int64_t> shifts{0};
  std::size_t high_block = 0;
  /// Variable weights for elimination block degrees; filled from the ring.
  std::vector<std::uint32_t> weights;

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
};

struct ModTerm {
  Monomial m;
  std::uint32_t comp = 0;
  FieldElem c;
};
/// Module element: terms strictly descending under the order in use.
using ModVec = std::vector<ModTerm>;

struct GbLimits {
  std::size_t max_pairs = 2'000'000;
  std::uint32_t max_degree = 1000;
  /// Discard pairs above this degree (a degree-truncated basis).
  std::optional<std::uint32_t> truncate_degree;
};

/// Collects field elements a computation divided by. Over rational-function
/// fields, any specialization where all of them stay nonzero (and defined)
/// reproduces the computation step by step.
class NonvanishingTracker {
 public:
  void record(const FieldElem& c);
  const std::vector<FieldElem>& values() const { return values_; }

 private:
  std::vector<FieldElem> values_;
};

void sort_vec(ModVec& v, const TermOrder& order);
ModVec to_modvec(const Poly& f, std::uint32_t comp, const TermOrder& order);
/// Component comp of v as a polynomial.
Poly component(const Ring& ring, const ModVec& v, std::uint32_t comp);

class ModuleGB {
 public:
  ModuleGB(Ring ring, TermOrder order, std::vector<ModVec> generators, const GbLimits& limits = {},
           NonvanishingTracker* tracker = nullptr);

  const Ring& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  /// Reduced basis, monic, ascending by leading term.
  const std::vector<ModVec>& basis() const { return basis_; }
  std::size_t pairs_processed() const { return pairs_processed_; }

  /// Fully reduced normal form.
  ModVec reduce(ModVec v) const;
  /// Reduce only while the leading term is divisible.
  ModVec top_reduce(ModVec v) const;
  bool reduces_to_zero(const ModVec& v) const { return reduce(v).empty(); }

 private:
  Ring ring_;
  TermOrder order_;
  std::vector<ModVec> basis_;
  std::vector<std::uint64_t> masks_;
  std::size_t pairs_processed_ = 0;
};

/// Reduced Groebner basis of an ideal; polynomials are stored in canonical
/// grevlex term order whatever the order used.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const MonomialOrder& order = MonomialOrder::grevlex(),
                                 const GbLimits& limits = {}, NonvanishingTracker* tracker = nullptr);

/// Full reduction of f by a monic Groebner basis under order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order = MonomialOrder::grevlex());

/// Leading monomial of f under order.
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

}  // namespace bigpoly
