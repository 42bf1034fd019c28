#pragma once

// Graded polynomial ring contexts and monomials.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bigpoly/field.hpp"

namespace bigpoly {

struct Variable {
  std::string name;
  std::uint32_t degree = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class Monomial {
 public:
  using Exps = boost::container::small_vector<std::uint32_t, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// degree must be the weighted degree of exps; prefer Ring::monomial.
  Monomial(Exps exps, std::uint32_t degree) : exps_(std::move(exps)), degree_(degree) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const Exps& exps() const { return exps_; }
  /// Weighted degree.
  std::uint32_t degree() const { return degree_; }
  std::uint32_t total_degree() const;
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  Exps exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison (weighted degree first):
/// returns <0, 0, >0 as a is smaller, equal, greater than b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Immutable ring context: coefficient field plus ordered, graded variables.
/// Copies share state; equality is structural.
class Ring {
 public:
  Ring(const Field& field, std::vector<Variable> vars);
  /// x1..xn over field, all of degree 1.
  static Ring standard(const Field& field, std::size_t n, const std::string& prefix = "x");

  const Field& field() const { return *data_->field; }
  std::size_t nvars() const { return data_->vars.size(); }
  const std::vector<Variable>& vars() const { return data_->vars; }
  const std::vector<std::uint32_t>& weights() const { return data_->weights; }
  std::uint32_t var_degree(std::size_t i) const { return data_->weights.at(i); }
  bool standard_graded() const;
  std::optional<std::size_t> find(std::string_view name) const;

  Monomial monomial(Monomial::Exps exps) const;
  Monomial one() const { return Monomial(nvars()); }
  Monomial var_monomial(std::size_t i, std::uint32_t power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  /// The subring on the first n variables.
  Ring prefix(std::size_t n) const;
  /// This ring with further variables appended.
  Ring extended(const std::vector<Variable>& extra) const;
  Ring with_field(const Field& field) const;

  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  struct Data {
    const Field* field;
    std::vector<Variable> vars;
    std::vector<std::uint32_t> weights;
  };
  std::shared_ptr<const Data> data_;
};

/// All monomials of weighted degree d, grevlex-descending.
std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t d);

}  // namespace bigpoly
