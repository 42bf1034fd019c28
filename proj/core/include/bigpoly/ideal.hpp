#pragma once

// Ideals with memoized Groebner bases, and the dimension theory built on
// them: membership, codimension, Hilbert series, regular sequences,
// elimination, algebraic independence and subalgebra membership.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bigpoly/groebner.hpp"
#include "bigpoly/poly.hpp"

namespace bigpoly {

class Ideal {
 public:
  Ideal(Ring ring, std::vector<Poly> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }

  /// Reduced Groebner basis, computed once per order and cached.
  const std::vector<Poly>& groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                                    const GbLimits& limits = {}) const;
  Poly normal_form(const Poly& f, const MonomialOrder& order = MonomialOrder::grevlex()) const;
  bool contains(const Poly& f) const;
  bool is_unit() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Poly>>> bases;
  };
  Ring ring_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_;
};

bool membership(const Poly& f, const Ideal& ideal);

/// Cofactors c_i with sum c_i * gens_i = f, or nullopt when f is not in the ideal.
std::optional<std::vector<Poly>> lift(const Poly& f, const std::vector<Poly>& gens, const GbLimits& limits = {});

struct HilbertData {
  /// Numerator N(t) of HS(R/I) = N(t) / prod_i (1 - t^deg(x_i)), by degree.
  std::vector<long long> numerator;
  std::size_t dimension = 0;           // from independent sets
  std::size_t dimension_from_series = 0;  // from the pole order at t = 1
  std::size_t codimension = 0;
};

/// Numerator of the Hilbert series of R/(monomials).
std::vector<long long> hilbert_numerator(const Ring& ring, const std::vector<Monomial>& monomials);
/// Krull dimension of R/(monomials): largest variable set containing the
/// support of no generator.
std::size_t monomial_dimension(std::size_t nvars, const std::vector<Monomial>& monomials);

HilbertData hilbert(const Ideal& ideal);
/// Throws UnitIdeal when 1 is in the ideal.
std::size_t codimension(const Ideal& ideal);
/// Codimension of (gens) computed afresh, recording divisions in tracker.
std::size_t codimension(const std::vector<Poly>& gens, NonvanishingTracker* tracker, const GbLimits& limits = {});

enum class RegSeqMethod { kCodim, kKoszul };

/// Zero entries make the answer false; non-homogeneous entries throw.
bool is_regular_sequence(const std::vector<Poly>& fs, RegSeqMethod method, const GbLimits& limits = {});

/// Generators of the contraction to the ring on the remaining variables.
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop, const GbLimits& limits = {});

/// k[Y1..Ys] with deg Y_i = deg f_i, named to avoid clashes with ring.
Ring presentation_ring(const Ring& ring, const std::vector<Poly>& fs);

struct IndependenceResult {
  bool independent = true;
  std::optional<Poly> relation;  // in presentation_ring(ring, fs)
};
IndependenceResult algebraically_independent(const std::vector<Poly>& fs, const GbLimits& limits = {});

/// f as a polynomial in the gs (in presentation_ring), or nullopt.
std::optional<Poly> subalgebra_membership(const Poly& f, const std::vector<Poly>& gs, const GbLimits& limits = {});
/// Batch form sharing one elimination basis.
std::vector<std::optional<Poly>> subalgebra_membership(const std::vector<Poly>& fs, const std::vector<Poly>& gs,
                                                       const GbLimits& limits = {});

/// Substitute Y_i -> gs[i] into an expression over presentation_ring.
Poly substitute(const Poly& expr, const std::vector<Poly>& gs);

}  // namespace bigpoly
