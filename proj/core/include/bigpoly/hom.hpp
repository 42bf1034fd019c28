#pragma once

// Degree-preserving ring homomorphisms given by the images of variables,
// and the monicizing change of coordinates.

#include <cstddef>
#include <vector>

#include "bigpoly/poly.hpp"

namespace bigpoly {

class GradedHom {
 public:
  /// images[i] must be zero or homogeneous of degree deg(source var i).
  GradedHom(Ring source, Ring target, std::vector<Poly> images);
  static GradedHom identity(const Ring& ring);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  const std::vector<Poly>& images() const { return images_; }

  Poly apply(const Poly& f) const;
  GradedHom then(const GradedHom& next) const;  // next after this

 private:
  Ring source_;
  Ring target_;
  std::vector<Poly> images_;
};

inline Poly apply_hom(const GradedHom& phi, const Poly& f) { return phi.apply(f); }

struct Monicization {
  GradedHom gamma;             // x_i -> x_i - a_i x_pivot
  std::vector<FieldElem> a;    // a[pivot] == 0
  FieldElem unit;              // coefficient of x_pivot^d in gamma(f)
  Poly monic;                  // unit^-1 * gamma(f)
};

/// Deterministic search over shift tuples, lexicographic in the field's
/// canonical element order restricted to the first min(#k, d+1) elements,
/// which always contains a solution when #k > d.
Monicization monicize(const Poly& f, std::size_t pivot);
/// x_i -> x_i + a_i x_pivot, the inverse of m.gamma.
GradedHom monicize_inverse(const Monicization& m, std::size_t pivot);

}  // namespace bigpoly
