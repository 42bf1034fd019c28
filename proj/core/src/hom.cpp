#include "bigpoly/hom.hpp"

#include <map>

namespace bigpoly {

GradedHom::GradedHom(Ring source, Ring target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.nvars()) fail(ErrorKind::kInvalidArgument, "one image per source variable required");
  if (&source_.field() != &target_.field()) fail(ErrorKind::kRingMismatch, "homomorphism changes the field");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].ring() != target_) fail(ErrorKind::kRingMismatch, "image outside the target ring");
    const auto h = images_[i].homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kZero) continue;
    if (!h.ok() || h.degree != source_.var_degree(i)) {
      fail(ErrorKind::kNotHomogeneous, "image of " + source_.vars()[i].name + " does not preserve degree");
    }
  }
}

GradedHom GradedHom::identity(const Ring& ring) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring.nvars(); ++i) images.push_back(Poly::variable(ring, i));
  return GradedHom(ring, ring, std::move(images));
}

Poly GradedHom::apply(const Poly& f) const {
  if (f.ring() != source_) fail(ErrorKind::kRingMismatch, "polynomial outside the source ring");
  std::map<std::pair<std::size_t, std::uint32_t>, Poly> powers;
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, images_[i].pow(e)).first;
    return it->second;
  };
  Poly out(target_);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(target_, c);
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i]) t = t * power(i, m[i]);
    }
    out += t;
  }
  return out;
}

GradedHom GradedHom::then(const GradedHom& next) const {
  std::vector<Poly> images;
  for (const auto& p : images_) images.push_back(next.apply(p));
  return GradedHom(source_, next.target_, std::move(images));
}

namespace {

GradedHom shift_hom(const Ring& ring, const std::vector<FieldElem>& a, std::size_t pivot, bool inverse) {
  std::vector<Poly> images;
  const Poly xp = Poly::variable(ring, pivot);
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    Poly xi = Poly::variable(ring, i);
    if (i != pivot) xi = inverse ? xi + xp.scaled(a[i]) : xi - xp.scaled(a[i]);
    images.push_back(std::move(xi));
  }
  return GradedHom(ring, ring, std::move(images));
}

FieldElem evaluate(const Poly& f, const std::vector<FieldElem>& point) {
  FieldElem acc = f.field().zero();
  for (const auto& [m, c] : f.terms()) {
    FieldElem t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) t *= point[i].pow(m[i]);
    }
    acc += t;
  }
  return acc;
}

}  // namespace

Monicization monicize(const Poly& f, std::size_t pivot) {
  const Ring& ring = f.ring();
  if (pivot >= ring.nvars()) fail(ErrorKind::kIndexOutOfRange, "pivot out of range");
  if (!ring.standard_graded()) fail(ErrorKind::kInvalidArgument, "monicize needs all variables of degree 1");
  const std::uint32_t d = f.require_homogeneous();
  const Field& k = ring.field();
  if (k.is_finite() && *k.size() <= d) {
    fail(ErrorKind::kFieldTooSmall, "field of size " + std::to_string(*k.size()) + " too small for degree " +
                                        std::to_string(d));
  }
  const std::uint64_t range = k.is_finite() ? std::min<std::uint64_t>(*k.size(), d + 1) : d + 1;

  // The x_pivot^d coefficient of gamma(f) is f at x_pivot = 1, x_i = -a_i.
  const std::size_t n = ring.nvars();
  std::vector<std::uint64_t> idx(n, 0);
  for (;;) {
    std::vector<FieldElem> a(n, k.zero());
    std::vector<FieldElem> point(n, k.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) {
        point[i] = k.one();
      } else {
        a[i] = k.element(idx[i]);
        point[i] = -a[i];
      }
    }
    const FieldElem u = evaluate(f, point);
    if (!u.is_zero()) {
      GradedHom gamma = shift_hom(ring, a, pivot, false);
      Poly monic = gamma.apply(f).scaled(u.inverse());
      return Monicization{std::move(gamma), std::move(a), u, std::move(monic)};
    }
    // Next tuple, last coordinate fastest; the pivot slot stays 0.
    std::size_t i = n;
    for (;;) {
      if (i == 0) fail(ErrorKind::kInvariantViolated, "no monicizing shift found");
      --i;
      if (i == pivot) continue;
      if (++idx[i] < range) break;
      idx[i] = 0;
    }
  }
}

GradedHom monicize_inverse(const Monicization& m, std::size_t pivot) {
  return shift_hom(m.gamma.source(), m.a, pivot, true);
}

}  // namespace bigpoly
