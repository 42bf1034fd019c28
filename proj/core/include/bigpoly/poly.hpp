#pragma once

// Sparse multivariate polynomials over a Ring, terms kept grevlex-descending.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bigpoly/ring.hpp"

namespace bigpoly {

/// Outcome of a homogeneity check. The zero polynomial has no degree.
struct HomogeneousDegree {
  enum class Kind { kDegree, kZero, kNotHomogeneous };
  Kind kind;
  std::uint32_t degree = 0;

  bool ok() const { return kind == Kind::kDegree; }
};

class Poly {
 public:
  using Term = std::pair<Monomial, FieldElem>;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, const FieldElem& c);
  static Poly variable(const Ring& ring, std::size_t i);
  static Poly term(const Ring& ring, const Monomial& m, const FieldElem& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  /// Leading term under grevlex. Requires nonzero.
  const Term& leading() const;
  FieldElem coefficient(const Monomial& m) const;
  HomogeneousDegree homogeneous_degree() const;
  /// Degree or throws NotHomogeneous / ZeroInput.
  std::uint32_t require_homogeneous() const;
  std::uint32_t max_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const FieldElem& c) const;
  Poly mul_term(const Monomial& m, const FieldElem& c) const;
  Poly pow(std::uint64_t e) const;
  /// Divide by the leading coefficient.
  Poly monic() const;
  /// Same terms in another ring with the same field and at least as many
  /// variables (extra variables unused).
  Poly embedded(const Ring& bigger) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Kill the variables beyond the first n; the result lives in ring.prefix(n).
Poly truncate_vars(const Poly& f, std::size_t n);

/// Deterministic pseudo-random source with an explicit, portable bounded
/// sampler (standard distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform coefficients over finite fields; integers in [-box, box] over QQ.
/// Zero-variable rings yield 0.
Poly random_homogeneous(const Ring& ring, std::uint32_t degree, Rng& rng, long long box = 5);

}  // namespace bigpoly
