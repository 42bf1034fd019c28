#pragma once

// Polynomials in the parameters t1..tm of a rational-function field, with
// coefficients in its (non-parametric) base field, and reduced fractions of
// them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bigpoly/field.hpp"

namespace bigpoly {

class ParamPoly {
 public:
  using Exps = std::vector<std::uint32_t>;
  using Term = std::pair<Exps, FieldElem>;

  ParamPoly(const Field& base, std::size_t nparams);

  static ParamPoly constant(const Field& base, std::size_t nparams, const FieldElem& c);
  static ParamPoly variable(const Field& base, std::size_t nparams, std::size_t i);

  const Field& base() const { return *base_; }
  std::size_t nparams() const { return nparams_; }
  /// Terms sorted lex-descending (t1 > t2 > ...), no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  FieldElem leading_coeff() const;
  const Exps& leading_exps() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  ParamPoly scaled(const FieldElem& c) const;
  ParamPoly shifted(std::size_t var, std::uint32_t power) const;  // times t_var^power
  ParamPoly pow(std::uint64_t e) const;
  /// Divide by the leading coefficient (zero stays zero).
  ParamPoly monic() const;
  /// Evaluate at a point of base(). values.size() == nparams().
  FieldElem evaluate(const std::vector<FieldElem>& values) const;
  /// Coefficient of t_var^k, as a polynomial free of t_var.
  ParamPoly coeff_in(std::size_t var, std::uint32_t k) const;

  /// Parameter names default to t1, t2, ...
  std::string to_string(const std::vector<std::string>* names = nullptr) const;

 private:
  void normalize();
  const Field* base_;
  std::size_t nparams_;
  std::vector<Term> terms_;
};

/// Exact division; throws if b does not divide a.
ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b);
/// Monic greatest common divisor (recursive primitive remainder sequences).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);
ParamPoly lcm(const ParamPoly& a, const ParamPoly& b);

/// num/den with gcd(num, den) = 1 and den monic; zero is 0/1.
class RatFunc {
 public:
  RatFunc(ParamPoly num, ParamPoly den);
  explicit RatFunc(ParamPoly num);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace bigpoly
