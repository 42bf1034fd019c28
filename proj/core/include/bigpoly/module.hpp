#pragma once

// Graded free modules, graded maps between them, and kernels (syzygies).

#include <cstdint>
#include <vector>

#include "bigpoly/groebner.hpp"
#include "bigpoly/poly.hpp"

namespace bigpoly {

/// R(-d_1) + ... + R(-d_r), recorded by the generator degrees d_i.
struct FreeModule {
  Ring ring;
  std::vector<std::int64_t> degrees;

  std::size_t rank() const { return degrees.size(); }
};

class GradedMap {
 public:
  /// columns[j][i] is the (i, j) entry: the image of source generator j
  /// has coordinate columns[j][i] on target generator i. Each entry must be
  /// zero or homogeneous of degree source.degrees[j] - target.degrees[i].
  GradedMap(FreeModule source, FreeModule target, std::vector<std::vector<Poly>> columns);

  /// The 1 x r map R(-deg f_1) + ... -> R presenting R/(f_1..f_r).
  static GradedMap row(const Ring& ring, const std::vector<Poly>& fs);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const Ring& ring() const { return target_.ring; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const Poly& entry(std::size_t i, std::size_t j) const { return columns_[j][i]; }
  const std::vector<std::vector<Poly>>& columns() const { return columns_; }

  /// Image of a source vector (one coordinate per source generator).
  std::vector<Poly> apply(const std::vector<Poly>& v) const;
  /// this after first: first.target() must equal source().
  GradedMap after(const GradedMap& first) const;
  bool is_zero() const;
  /// Some entry is a nonzero constant.
  bool has_unit_entry() const;
  /// Same matrix over a ring with extra unused variables.
  GradedMap embedded(const Ring& bigger) const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<std::vector<Poly>> columns_;
};

/// A minimal homogeneous generating set of the kernel of phi, as the
/// columns of a map into phi.source().
GradedMap syzygies(const GradedMap& phi, const GbLimits& limits = {}, NonvanishingTracker* tracker = nullptr);

/// Module element helpers for vectors in a free module with given degrees.
ModVec to_modvec(const std::vector<Poly>& v, const TermOrder& order, std::uint32_t offset = 0);
std::vector<Poly> from_modvec(const Ring& ring, const ModVec& v, std::size_t rank, std::uint32_t offset = 0);

/// Keep a minimal generating subset of homogeneous vectors (degrees taken
/// with the given generator shifts), scanning in order of degree.
std::vector<ModVec> minimal_generators(const Ring& ring, const std::vector<std::int64_t>& shifts,
                                       std::vector<ModVec> vectors, const GbLimits& limits = {},
                                       NonvanishingTracker* tracker = nullptr);

}  // namespace bigpoly
