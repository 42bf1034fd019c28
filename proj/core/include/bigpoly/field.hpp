#pragma once

// Exact coefficient fields: QQ, prime fields GF(p), small extensions
// GF(p^e) and rational-function fields k(t1..tm) over one of those.
//
// Fields are interned: every distinct descriptor maps to exactly one
// immutable Field object that lives for the whole program, so elements
// can carry a plain pointer to their field and descriptor equality is
// pointer equality.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "bigpoly/error.hpp"

namespace bigpoly {

class Field;
class RatFunc;

enum class FieldKind { kRationals, kPrime, kExtension, kRationalFunctions };

class FieldElem {
 public:
  FieldElem() = default;

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t exponent) const;
  std::string to_string() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& b);
  FieldElem& operator-=(const FieldElem& b);
  FieldElem& operator*=(const FieldElem& b);

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Payload access. Each throws if the element is of another kind.
  std::uint64_t residue() const;            // GF(p) value or packed GF(p^e) index
  const mpq_class& rational() const;
  const RatFunc& ratfunc() const;

 private:
  friend class Field;
  using Payload = std::variant<std::uint64_t, mpq_class, std::shared_ptr<const RatFunc>>;
  FieldElem(const Field* field, Payload value) : field_(field), value_(std::move(value)) {}

  const Field* field_ = nullptr;
  Payload value_;
};

class Field {
 public:
  static const Field& rationals();
  static const Field& prime(std::uint64_t p);
  /// min_poly is given low-to-high and must be monic of degree e.
  static const Field& extension(std::uint64_t p, unsigned e, std::vector<std::uint64_t> min_poly);
  static const Field& rational_functions(std::vector<std::string> params, const Field& base);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  /// Number of elements, or nullopt for infinite fields.
  std::optional<std::uint64_t> size() const;
  bool is_finite() const { return kind_ == FieldKind::kPrime || kind_ == FieldKind::kExtension; }
  bool is_perfect() const { return kind_ != FieldKind::kRationalFunctions || p_ == 0; }
  unsigned extension_degree() const { return e_; }
  const std::vector<std::uint64_t>& min_poly() const { return min_poly_; }
  const std::vector<std::string>& params() const { return params_; }
  const Field& base() const;
  const std::string& descriptor() const { return descriptor_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long value) const;
  FieldElem from_integer(const mpz_class& value) const;
  FieldElem from_rational(const mpq_class& value) const;
  /// GF(p) residue or packed GF(p^e) index (sum of c_i p^i).
  FieldElem from_residue(std::uint64_t value) const;
  FieldElem from_ratfunc(RatFunc value) const;
  /// Generator t_i of a rational-function field.
  FieldElem param(std::size_t i) const;
  /// Image of an element of base() (rational-function fields only).
  FieldElem embed_base(const FieldElem& c) const;

  /// Canonical enumeration of elements. Finite fields: index < size().
  /// QQ: 0, 1, -1, 2, -2, ... Rational functions over GF(q): base elements
  /// first, then polynomials in t1 read off the base-q digits of the index.
  FieldElem element(std::uint64_t index) const;
  /// Inverse of element() on finite fields.
  std::uint64_t index_of(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, std::uint64_t exponent) const;
  bool is_zero(const FieldElem& a) const;
  bool equal(const FieldElem& a, const FieldElem& b) const;

  /// b with b^p = a. Throws CharZero in characteristic 0, NotAPthPower when
  /// a rational function has no p-th root.
  FieldElem pth_root(const FieldElem& a) const;
  /// Whether a is a square; nullopt when undecidable here (rational functions).
  std::optional<bool> is_square(const FieldElem& a) const;

  std::string format(const FieldElem& a) const;
  FieldElem parse(std::string_view text) const;

 private:
  Field(FieldKind kind, std::uint64_t p, unsigned e, std::vector<std::uint64_t> min_poly,
        std::vector<std::string> params, const Field* base);
  friend class FieldRegistry;

  void check(const FieldElem& a) const;
  std::vector<std::uint64_t> unpack(std::uint64_t index) const;
  std::uint64_t pack(const std::vector<std::uint64_t>& digits) const;
  std::uint64_t ext_mul(std::uint64_t a, std::uint64_t b) const;

  FieldKind kind_;
  std::uint64_t p_ = 0;
  unsigned e_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> min_poly_;
  std::vector<std::string> params_;
  const Field* base_ = nullptr;
  std::string descriptor_;
};

bool is_prime(std::uint64_t n);

/// Integer binomial coefficient C(k, n) reduced into the field by Pascal
/// recursion carried out with field arithmetic.
FieldElem binomial_in_field(const Field& field, std::uint64_t k, std::uint64_t n);

/// Common denominator of rational-function elements: returns the scaled
/// elements (denominator 1) and the least common multiple g of the
/// denominators, as an element of the field.
struct ClearedDenominators {
  std::vector<FieldElem> scaled;
  FieldElem multiplier;
};
ClearedDenominators clear_denominators(const std::vector<FieldElem>& elems);

}  // namespace bigpoly
