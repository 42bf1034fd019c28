#pragma once

// Desk-scale experiments: threshold search for the collective strength that
// forces regular sequences, small subalgebras generated by regular
// sequences, projective-dimension bounds, and Betti-table censuses.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigpoly/resolution.hpp"
#include "bigpoly/strength.hpp"

namespace bigpoly {

enum class SearchMode { kExhaustive, kSample };

struct ExperimentOptions {
  SearchMode mode = SearchMode::kExhaustive;
  std::size_t samples = 100;  // sample mode only
  std::uint64_t seed = 1;
  std::uint64_t max_tuples = 1'000'000;
  GbLimits limits;
  OracleLimits oracle;
};

/// Number of nonzero forms of degree d in n standard-graded variables over
/// a finite field; nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> nonzero_form_count(const Field& field, std::size_t n, std::uint32_t d);
/// The index-th nonzero form (0-based) in the canonical order: coefficient
/// vector = base-q digits of index + 1 over the grevlex-descending
/// monomials, last monomial least significant.
Poly nonzero_form(const Ring& ring, std::uint32_t d, std::uint64_t index);
/// Tuples of nonzero forms of the given degrees: all of them in canonical
/// order (exhaustive) or options.samples random ones. Throws BudgetExceeded
/// above options.max_tuples.
std::vector<std::vector<Poly>> enumerate_tuples(const Ring& ring, const std::vector<std::uint32_t>& degrees,
                                                const ExperimentOptions& options);

struct ThresholdRecord {
  std::size_t tuple_id = 0;
  std::vector<Poly> fs;
  StrengthValue collective_strength;
  bool regular = false;
};

struct ThresholdReport {
  std::vector<std::uint32_t> degrees;
  std::string field;
  std::size_t n = 0;
  ExperimentOptions options;
  std::vector<ThresholdRecord> records;
  /// 1 + the largest collective strength of a non-regular tuple (0 when
  /// every tuple is regular).
  int n_hat = 0;
  /// Checked independently of n_hat's construction: every tuple with
  /// collective strength >= n_hat is regular.
  bool consistent = true;
  /// (collective strength, regular) -> number of tuples.
  std::map<std::pair<StrengthValue, bool>, std::size_t> histogram;
};

ThresholdReport threshold_search(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n,
                                 const ExperimentOptions& options = {});

struct SubalgebraStep {
  std::vector<std::size_t> type;  // type[d - 1] = number of generators of degree d
  std::string action;
};

struct SmallSubalgebra {
  std::vector<Poly> gs;
  /// fs[i] = expressions[i](gs), over presentation_ring(ring, gs).
  std::vector<Poly> expressions;
  std::size_t s = 0;
  std::vector<SubalgebraStep> trace;
};

struct SubalgebraOptions {
  std::size_t max_iterations = 1000;
  GbLimits limits;
  OracleLimits oracle;
};

/// Replace tuples by lower-degree factors of minimal-strength combinations
/// until they form a regular sequence; the result is verified (regularity
/// and membership of every input) before returning.
SmallSubalgebra small_subalgebra(const std::vector<Poly>& fs, const SubalgebraOptions& options = {});

/// Revlex comparison of type vectors: the one with the smaller count at
/// the highest degree where they differ is greater.
int type_compare(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

struct PdRecord {
  std::size_t n = 0;
  std::size_t sample = 0;
  std::vector<Poly> fs;
  std::size_t s = 0;
  std::size_t pd = 0;  // projective dimension of R/(fs)
};

struct PdReport {
  std::vector<std::uint32_t> degrees;
  std::string field;
  std::size_t n_min = 0, n_max = 0;
  ExperimentOptions options;
  std::vector<PdRecord> records;
  std::map<std::size_t, std::size_t> max_pd_by_n;
  bool bound_holds = true;  // pd <= s on every record
};

PdReport pd_experiment(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n_min,
                       std::size_t n_max, const ExperimentOptions& options = {});

struct CensusEntry {
  BettiTable table;
  std::size_t count = 0;
  std::size_t first_tuple = 0;
  std::vector<Poly> example;
};

struct CensusReport {
  std::vector<std::uint32_t> degrees;
  std::string field;
  std::size_t n = 0;
  ExperimentOptions options;
  std::size_t tuples = 0;
  std::vector<CensusEntry> entries;  // in order of first occurrence
};

CensusReport betti_census(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n,
                          const ExperimentOptions& options = {});

}  // namespace bigpoly
