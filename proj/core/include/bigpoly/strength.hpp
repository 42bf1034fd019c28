#pragma once

// Strength of homogeneous forms: the least k >= -1 with f a sum of k + 1
// products of forms of positive degree. Certificates, bounds, and an
// exhaustive oracle over finite fields.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigpoly/poly.hpp"

namespace bigpoly {

/// An integer >= -1 or infinity.
class StrengthValue {
 public:
  StrengthValue() = default;
  static StrengthValue of(int k) { return StrengthValue(k, false); }
  static StrengthValue infinity() { return StrengthValue(0, true); }

  bool is_infinite() const { return infinite_; }
  int value() const;
  std::string to_string() const;  // "inf" for infinity

  friend bool operator==(const StrengthValue&, const StrengthValue&) = default;
  friend bool operator<(const StrengthValue& a, const StrengthValue& b) {
    if (a.infinite_ || b.infinite_) return !a.infinite_ && b.infinite_;
    return a.k_ < b.k_;
  }

 private:
  StrengthValue(int k, bool infinite) : k_(k), infinite_(infinite) {}
  int k_ = -1;
  bool infinite_ = false;
};

struct StrengthCertificate {
  std::vector<std::pair<Poly, Poly>> pairs;

  /// pairs.size() - 1.
  int bound() const { return static_cast<int>(pairs.size()) - 1; }
};

/// sum g_i h_i == f with every factor homogeneous of positive degree and
/// deg g_i + deg h_i = deg f.
bool verify_certificate(const Poly& f, const StrengthCertificate& cert);

/// True when some term of f is a constant or a single variable. Such forms
/// lie outside the square of the irrelevant ideal: infinite strength.
bool has_unsplittable_term(const Poly& f);

/// f = sum_j x_j h_j grouping each term under the least-index variable
/// whose removal leaves a term of positive degree. At most n pairs.
StrengthCertificate strength_upper_split(const Poly& f);

struct StrengthBounds {
  int lower = -1;
  std::optional<int> upper;  // nullopt: infinity
  bool exact() const { return upper && *upper == lower; }
};

struct QuadricBounds {
  std::size_t rank = 0;  // rank of the Gram matrix
  StrengthBounds bounds;
  StrengthCertificate certificate;  // witnesses bounds.upper
};

/// Bounds for a quadratic form in characteristic not 2: ceil(rank / 2) - 1
/// below, and a certificate from pairing the diagonalized form above.
QuadricBounds quadric_bounds(const Poly& f);

/// Rank of the polar bilinear form f(x + y) - f(x) - f(y) of a quadric.
/// Equals the Gram rank away from characteristic 2.
std::size_t polar_rank(const Poly& f);

/// ceil(polar_rank / 2) - 1, valid in every characteristic.
int quadric_lower_bound(const Poly& f);

struct OracleLimits {
  /// Candidate products examined before giving up.
  std::uint64_t max_nodes = 50'000'000;
  /// Largest number of forms of one degree the oracle will enumerate.
  std::uint64_t max_forms = 1u << 20;
};

struct StrengthResult {
  StrengthValue value;
  StrengthCertificate certificate;  // empty for infinity and for -1
};

/// Exact strength over a finite field by exhaustive search. Throws
/// BudgetExceeded with the bracket found so far when limits run out.
StrengthResult strength_exact_small(const Poly& f, const OracleLimits& limits = {});

struct CollectiveStrengthResult {
  StrengthValue value;
  /// Coefficients of the witnessing combination, one per input form.
  std::vector<FieldElem> coefficients;
  Poly combination;
  StrengthCertificate certificate;
};

/// Minimum strength over nonzero combinations supported on one degree
/// class, enumerated projectively (first nonzero coefficient 1).
CollectiveStrengthResult collective_strength(const std::vector<Poly>& fs, const OracleLimits& limits = {});

/// All nonzero coefficient vectors of length m with first nonzero entry 1,
/// in the canonical element order.
std::vector<std::vector<FieldElem>> projective_vectors(const Field& field, std::size_t m);

}  // namespace bigpoly
