#pragma once

// Minimal graded free resolutions of cokernels and their Betti tables.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigpoly/ideal.hpp"
#include "bigpoly/module.hpp"

namespace bigpoly {

/// 0 <- F_0 <- F_1 <- ... <- F_p <- 0 with maps[i] : F_{i+1} -> F_i.
struct Resolution {
  std::vector<FreeModule> modules;
  std::vector<GradedMap> maps;
  bool minimal = false;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  /// Every composite maps[i] * maps[i+1] is zero.
  bool is_complex() const;
  /// No matrix has a nonzero constant entry.
  bool has_unit_entry() const;
};

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const Resolution& res);

  std::size_t at(std::size_t i, std::int64_t j) const;
  void add(std::size_t i, std::int64_t j, std::size_t count = 1);
  const std::map<std::pair<std::size_t, std::int64_t>, std::size_t>& entries() const { return entries_; }
  /// Largest i with a nonzero entry; 0 for the empty table.
  std::size_t projective_dimension() const;
  std::size_t total(std::size_t i) const;
  /// sum_i (-1)^i sum_j beta_{i,j} t^j, indexed by j (entries assumed j >= 0).
  std::vector<long long> alternating_sum() const;

  /// "i,j,count" lines after an "i,j,count" header.
  std::string to_csv() const;
  /// Grid with columns i and rows j - i, dots for zeros, and a total row.
  std::string to_text() const;
  /// FNV-1a of to_csv(), as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> entries_;
};

/// Split off unit entries: for a constant entry u at (r, c) of maps[i],
/// replace maps[i] by its Schur complement, drop generator c of F_{i+1} and
/// generator r of F_i. Repeats until no unit entry is left. Pivots are
/// recorded in tracker.
void minimize(Resolution& res, NonvanishingTracker* tracker = nullptr);

/// Resolution of coker(presentation).
Resolution minimal_free_resolution(const GradedMap& presentation, const GbLimits& limits = {},
                                   NonvanishingTracker* tracker = nullptr);
/// Resolution of R/I.
Resolution minimal_free_resolution(const Ideal& ideal, const GbLimits& limits = {},
                                   NonvanishingTracker* tracker = nullptr);

BettiTable betti(const GradedMap& presentation, const GbLimits& limits = {});
BettiTable betti(const Ideal& ideal, const GbLimits& limits = {});
std::size_t projective_dimension(const GradedMap& presentation, const GbLimits& limits = {});
std::size_t projective_dimension(const Ideal& ideal, const GbLimits& limits = {});

/// Betti table of R/(exprs) where exprs live in a (weighted) presentation
/// ring k[Y_1..Y_s]. When the Y_i stand for a regular sequence g_i, this is
/// the Betti table of R/(f_1..f_r) with f_i = exprs_i(g).
BettiTable betti_over_subalgebra(const std::vector<Poly>& exprs, const GbLimits& limits = {});

/// Numerator of the Hilbert series of coker(presentation) over
/// prod_i (1 - t^deg(x_i)), from the leading terms of a module basis.
/// Twists must be non-negative.
std::vector<long long> module_hilbert_numerator(const GradedMap& presentation, const GbLimits& limits = {});

}  // namespace bigpoly
