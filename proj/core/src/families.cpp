#include "bigpoly/families.hpp"

namespace bigpoly {

LimitElement::LimitElement(Poly head, std::optional<PowerSumTail> tail) : head_(std::move(head)), tail_(std::move(tail)) {
  const auto h = head_.homogeneous_degree();
  if (h.kind == HomogeneousDegree::Kind::kNotHomogeneous) {
    fail(ErrorKind::kNotHomogeneous, "head is not homogeneous: " + head_.to_string());
  }
  if (!head_.ring().standard_graded()) fail(ErrorKind::kInvalidArgument, "limit elements use the standard grading");
  if (tail_) {
    if (tail_->c.field_ptr() != &head_.field()) fail(ErrorKind::kDescriptorMismatch, "tail coefficient field");
    if (tail_->degree == 0) fail(ErrorKind::kInvalidArgument, "tail degree must be positive");
    if (h.ok() && h.degree != tail_->degree) fail(ErrorKind::kNotHomogeneous, "head and tail degrees differ");
    if (tail_->c.is_zero()) tail_.reset();
  }
}

std::optional<std::uint32_t> LimitElement::degree() const {
  const auto h = head_.homogeneous_degree();
  if (h.ok()) return h.degree;
  if (tail_) return tail_->degree;
  return std::nullopt;
}

Poly truncate_limit(const LimitElement& e, std::size_t n) {
  const Ring ring = Ring::standard(e.field(), n);
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : e.head().terms()) {
    Monomial::Exps exps(n, 0);
    bool killed = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i < n) {
        exps[i] = m[i];
      } else if (m[i]) {
        killed = true;
      }
    }
    if (!killed) terms.emplace_back(ring.monomial(std::move(exps)), c);
  }
  Poly out = Poly::from_terms(ring, std::move(terms));
  if (const auto& t = e.tail()) {
    for (std::size_t i = t->start; i < n; ++i) {
      const FieldElem w = t->index_weighted ? t->c * e.field().from_int(static_cast<long long>(i + 1)) : t->c;
      out += Poly::term(ring, ring.var_monomial(i, t->degree), w);
    }
  }
  return out;
}

Stabilization regseq_stabilization(const std::vector<LimitElement>& es, std::size_t n_max, const GbLimits& limits) {
  Stabilization out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Poly> fs;
    for (const auto& e : es) fs.push_back(truncate_limit(e, n));
    const bool regular = is_regular_sequence(fs, RegSeqMethod::kCodim, limits);
    out.regular.push_back(regular);
    if (regular && out.n == 0) out.n = n;
    if (!regular && out.n != 0) {
      fail(ErrorKind::kInvariantViolated, "truncations regular at n = " + std::to_string(out.n) +
                                              " but not at n = " + std::to_string(n));
    }
  }
  if (out.n == 0) fail(ErrorKind::kNotFound, "no regular truncation up to n = " + std::to_string(n_max));
  return out;
}

bool DistinguishedOpen::contains(const std::vector<FieldElem>& y) const {
  return !evaluate_param(g, y).is_zero();
}

FieldElem map_base_element(const FieldElem& c, const Field& target) {
  const Field& source = c.field();
  if (&source == &target) return c;
  if (source.characteristic() != target.characteristic()) {
    fail(ErrorKind::kCharacteristicMismatch,
         "cannot map " + source.descriptor() + " into " + target.descriptor());
  }
  switch (source.kind()) {
    case FieldKind::kRationals:
      if (target.kind() == FieldKind::kRationals) return c;
      if (target.kind() == FieldKind::kRationalFunctions && target.base().kind() == FieldKind::kRationals) {
        return target.embed_base(target.base().from_rational(c.rational()));
      }
      break;
    case FieldKind::kPrime:
      if (target.is_finite()) return target.from_int(static_cast<long long>(c.residue()));
      if (target.kind() == FieldKind::kRationalFunctions) {
        return target.embed_base(map_base_element(c, target.base()));
      }
      break;
    case FieldKind::kExtension:
      if (target.kind() == FieldKind::kRationalFunctions) {
        return target.embed_base(map_base_element(c, target.base()));
      }
      break;
    case FieldKind::kRationalFunctions:
      break;
  }
  fail(ErrorKind::kCharacteristicMismatch, "cannot map " + source.descriptor() + " into " + target.descriptor());
}

FieldElem evaluate_param(const ParamPoly& p, const std::vector<FieldElem>& y) {
  if (y.size() != p.nparams()) fail(ErrorKind::kInvalidArgument, "point has the wrong number of coordinates");
  if (y.empty()) {
    if (p.is_zero()) fail(ErrorKind::kInvalidArgument, "no target field for a point with no coordinates");
    return p.leading_coeff();
  }
  const Field& target = y.front().field();
  FieldElem sum = target.zero();
  for (const auto& [exps, c] : p.terms()) {
    FieldElem term = map_base_element(c, target);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i]) term *= y[i].pow(exps[i]);
    }
    sum += term;
  }
  return sum;
}

namespace {

FieldElem specialize_coeff(const FieldElem& c, const std::vector<FieldElem>& y, const Field& target) {
  if (c.field().kind() != FieldKind::kRationalFunctions) return map_base_element(c, target);
  const RatFunc& r = c.ratfunc();
  const FieldElem den = evaluate_param(r.den(), y);
  if (den.is_zero()) fail(ErrorKind::kDivisionByZero, "coefficient denominator vanishes at the point");
  return evaluate_param(r.num(), y) / den;
}

}  // namespace

Poly specialize(const Poly& f, const std::vector<FieldElem>& y, const Field& target) {
  const Field& F = f.field();
  const std::size_t m = F.kind() == FieldKind::kRationalFunctions ? F.params().size() : 0;
  if (y.size() != m) fail(ErrorKind::kInvalidArgument, "point has the wrong number of coordinates");
  for (const auto& v : y) {
    if (v.field_ptr() != &target) fail(ErrorKind::kDescriptorMismatch, "point outside the target field");
  }
  const Ring ring = f.ring().with_field(target);
  std::vector<Poly::Term> terms;
  for (const auto& [mono, c] : f.terms()) {
    FieldElem v = specialize_coeff(c, y, target);
    if (!v.is_zero()) terms.emplace_back(mono, std::move(v));
  }
  return Poly::from_terms(ring, std::move(terms));
}

GradedMap specialize(const GradedMap& phi, const std::vector<FieldElem>& y, const Field& target) {
  const Ring ring = phi.ring().with_field(target);
  std::vector<std::vector<Poly>> cols;
  for (const auto& c : phi.columns()) {
    std::vector<Poly> col;
    for (const auto& e : c) col.push_back(specialize(e, y, target));
    cols.push_back(std::move(col));
  }
  return GradedMap(FreeModule{ring, phi.source().degrees}, FreeModule{ring, phi.target().degrees}, std::move(cols));
}

ParamPoly nonvanishing_product(const Field& field, const NonvanishingTracker& tracker, const std::vector<Poly>& inputs) {
  // Without parameters every specialization is the identity.
  if (field.kind() != FieldKind::kRationalFunctions) return ParamPoly::constant(field, 0, field.one());
  const std::size_t m = field.params().size();
  ParamPoly g = ParamPoly::constant(field.base(), m, field.base().one());
  for (const auto& v : tracker.values()) {
    g = lcm(g, v.ratfunc().num());
    g = lcm(g, v.ratfunc().den());
  }
  for (const auto& f : inputs) {
    for (const auto& [mono, c] : f.terms()) g = lcm(g, c.ratfunc().den());
  }
  return g.monic();
}

DistinguishedOpen regular_locus(const std::vector<Poly>& fs, const GbLimits& limits) {
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "empty family");
  const Field& F = fs.front().field();
  for (const auto& f : fs) {
    const auto h = f.homogeneous_degree();
    if (h.kind == HomogeneousDegree::Kind::kZero || (h.ok() && h.degree == 0)) {
      fail(ErrorKind::kGenericNotRegular, "a zero or constant entry is never part of a regular sequence");
    }
    if (!h.ok()) fail(ErrorKind::kNotHomogeneous, "not homogeneous: " + f.to_string());
  }
  NonvanishingTracker tracker;
  if (codimension(fs, &tracker, limits) != fs.size()) {
    fail(ErrorKind::kGenericNotRegular, "the generic member is not a regular sequence");
  }
  return {nonvanishing_product(F, tracker, fs)};
}

ConstantBetti constant_betti_open(const GradedMap& phi, const GbLimits& limits) {
  NonvanishingTracker tracker;
  const Resolution res = minimal_free_resolution(phi, limits, &tracker);
  std::vector<Poly> entries;
  for (const auto& c : phi.columns()) entries.insert(entries.end(), c.begin(), c.end());
  return {{nonvanishing_product(phi.ring().field(), tracker, entries)}, BettiTable(res)};
}

std::vector<std::vector<FieldElem>> sample_open(const DistinguishedOpen& open, const Field& field, const Field& target,
                                                std::size_t count, Rng& rng) {
  const std::size_t m = field.kind() == FieldKind::kRationalFunctions ? field.params().size() : 0;
  std::vector<std::vector<FieldElem>> out;
  const std::size_t attempts = 100 * count + 100;
  for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
    std::vector<FieldElem> y;
    for (std::size_t i = 0; i < m; ++i) {
      if (const auto q = target.size()) {
        y.push_back(target.element(rng.below(*q)));
      } else {
        y.push_back(target.from_int(static_cast<long long>(rng.below(41)) - 20));
      }
    }
    if (m == 0 || open.contains(y)) out.push_back(std::move(y));
  }
  return out;
}

}  // namespace bigpoly
