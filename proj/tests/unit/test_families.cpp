#include <gtest/gtest.h>

#include "bigpoly/error.hpp"
#include "bigpoly/families.hpp"
#include "support.hpp"

namespace bigpoly {
namespace {

using testing::F;
using testing::P;
using testing::Ps;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

LimitElement limit(const Ring& head_ring, const std::string& head, std::int64_t c, std::uint32_t d,
                   bool weighted = false) {
  const Field& k = head_ring.field();
  return LimitElement(P(head_ring, head), PowerSumTail{k.from_int(c), d, head_ring.nvars(), weighted});
}

TEST(TruncateLimit, Examples) {
  const Ring h = Ring::standard(Field::rationals(), 1);
  const auto e = limit(h, "x1^2", 1, 2);
  EXPECT_EQ(truncate_limit(e, 3), P(Ring::standard(Field::rationals(), 3), "x1^2 + x2^2 + x3^2"));
  EXPECT_EQ(truncate_limit(e, 1), P(Ring::standard(Field::rationals(), 1), "x1^2"));
  const auto w = limit(h, "x1", 2, 1, true);
  EXPECT_EQ(truncate_limit(w, 3), P(Ring::standard(Field::rationals(), 3), "x1 + 4*x2 + 6*x3"));
  const Ring h3 = Ring::standard(Field::rationals(), 3);
  EXPECT_EQ(truncate_limit(LimitElement(P(h3, "x1*x3 + x2^2")), 2), P(Ring::standard(Field::rationals(), 2), "x2^2"));
  EXPECT_EQ(e.degree(), 2u);
  EXPECT_FALSE(LimitElement(Poly(h)).degree().has_value());
}

TEST(TruncateLimit, Tower) {
  Rng rng(157);
  const Ring h = Ring::standard(Field::prime(5), 2);
  for (int t = 0; t < 20; ++t) {
    const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(3));
    const LimitElement e(random_homogeneous(h, d, rng),
                         PowerSumTail{h.field().element(rng.below(5)), d, 2, rng.below(2) == 1});
    for (std::size_t n = 1; n <= 5; ++n) {
      const Poly top = truncate_limit(e, n + 1);
      EXPECT_EQ(truncate_vars(top, n), truncate_limit(e, n));
    }
  }
}

TEST(Stabilization, Examples) {
  const Ring h = Ring::standard(Field::rationals(), 2);
  const std::vector<LimitElement> es{limit(h, "x1^2", 1, 2), limit(h, "x1*x2", 1, 2)};
  const auto s = regseq_stabilization(es, 6);
  EXPECT_EQ(s.n, 3u);
  EXPECT_EQ(s.regular, (std::vector<bool>{false, false, true, true, true, true}));

  const Ring h1 = Ring::standard(Field::rationals(), 1);
  EXPECT_EQ(kind_of([&] { regseq_stabilization({LimitElement(P(h1, "x1")), LimitElement(P(h1, "x1"))}, 5); }),
            ErrorKind::kNotFound);
  const auto lin = regseq_stabilization({LimitElement(P(h1, "x1")), limit(h1, "x1", 1, 1, true)}, 4);
  EXPECT_EQ(lin.n, 2u);
}

TEST(Stabilization, MatchesDirectChecks) {
  Rng rng(163);
  const Field& k = Field::prime(3);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n0 = 1 + rng.below(2);
    const Ring h = Ring::standard(k, n0);
    std::vector<LimitElement> es;
    const std::size_t count = 1 + rng.below(2);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(2));
      es.emplace_back(random_homogeneous(h, d, rng), PowerSumTail{k.element(1 + rng.below(2)), d, n0, false});
    }
    Stabilization s;
    try {
      s = regseq_stabilization(es, n0 + 3);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::kNotFound);
      continue;
    }
    for (std::size_t m = 1; m <= n0 + 3; ++m) {
      std::vector<Poly> fs;
      for (const auto& e : es) fs.push_back(truncate_limit(e, m));
      const bool direct = std::none_of(fs.begin(), fs.end(), [](const Poly& f) { return f.is_zero(); }) &&
                          is_regular_sequence(fs, RegSeqMethod::kKoszul);
      EXPECT_EQ(s.regular[m - 1], direct) << "m=" << m;
      EXPECT_EQ(direct, m >= s.n) << "m=" << m;
    }
  }
}

TEST(Specialize, Examples) {
  const Field& k = F("GF(3)(t)");
  const Ring r = Ring::standard(k, 2);
  const Field& f3 = Field::prime(3);
  const Ring r3 = Ring::standard(f3, 2);
  EXPECT_EQ(specialize(P(r, "t*x1 + x2"), {f3.from_int(2)}, f3), P(r3, "2*x1 + x2"));
  EXPECT_TRUE(specialize(P(r, "t*x1"), {f3.zero()}, f3).is_zero());
  EXPECT_EQ(kind_of([&] { specialize(P(r, "x1/(t+2)"), {f3.one()}, f3); }), ErrorKind::kDivisionByZero);
  const Field& f9 = F("GF(3^2)");
  const Poly s = specialize(P(r, "t*x1"), {f9.element(3)}, f9);
  EXPECT_EQ(&s.ring().field(), &f9);
  EXPECT_EQ(s.coefficient(Ring::standard(f9, 2).var_monomial(0)), f9.element(3));
  EXPECT_EQ(kind_of([&] { specialize(P(r, "t*x1"), {Field::rationals().one()}, Field::rationals()); }),
            ErrorKind::kCharacteristicMismatch);

  const Ring rq = Ring::standard(F("QQ(t)"), 1);
  const Ring q1 = Ring::standard(Field::rationals(), 1);
  EXPECT_EQ(specialize(P(rq, "x1/(t-1)"), {Field::rationals().from_int(3)}, Field::rationals()), P(q1, "1/2*x1"));
}

TEST(RegularLocus, Examples) {
  const Field& k = F("GF(3)(t)");
  const Ring r = Ring::standard(k, 2);
  EXPECT_EQ(regular_locus(Ps(r, {"x1", "x1 + t*x2"})).g, ParamPoly::variable(Field::prime(3), 1, 0));
  EXPECT_TRUE(regular_locus(Ps(r, {"x1", "x2"})).is_everything());
  EXPECT_EQ(kind_of([&] { regular_locus(Ps(r, {"x1", "t*x1"})); }), ErrorKind::kGenericNotRegular);

  const DistinguishedOpen open = regular_locus(Ps(r, {"x1", "x1 + t*x2"}));
  EXPECT_FALSE(open.contains({Field::prime(3).zero()}));
  EXPECT_TRUE(open.contains({Field::prime(3).one()}));
}

// Random one-parameter families with coefficients a + b t.
std::vector<Poly> random_family(const Ring& r, std::size_t count, Rng& rng) {
  const Field& k = r.field();
  const Field& base = k.base();
  std::vector<Poly> fs;
  while (fs.size() < count) {
    const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(2));
    std::vector<Poly::Term> terms;
    for (const auto& m : monomials_of_degree(r, d)) {
      if (rng.below(2)) continue;
      const FieldElem c = k.embed_base(base.element(rng.below(*base.size()))) +
                          k.embed_base(base.element(rng.below(*base.size()))) * k.param(0);
      if (!c.is_zero()) terms.emplace_back(m, c);
    }
    Poly f = Poly::from_terms(r, std::move(terms));
    if (!f.is_zero()) fs.push_back(std::move(f));
  }
  return fs;
}

TEST(RegularLocus, SpecializationsStayRegular) {
  Rng rng(167);
  const Field& k = F("GF(5)(t)");
  const Field& f5 = Field::prime(5);
  const Field& f25 = F("GF(5^2)");
  const Ring r = Ring::standard(k, 3);
  int families = 0;
  for (int t = 0; t < 40 && families < 10; ++t) {
    const auto fs = random_family(r, 2, rng);
    std::optional<DistinguishedOpen> found;
    try {
      found = regular_locus(fs);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::kGenericNotRegular);
      continue;
    }
    ++families;
    const DistinguishedOpen& open = *found;
    for (const Field* target : {&f5, &f25}) {
      for (const auto& y : sample_open(open, k, *target, 5, rng)) {
        ASSERT_TRUE(open.contains(y));
        std::vector<Poly> sp;
        for (const auto& f : fs) sp.push_back(specialize(f, y, *target));
        EXPECT_TRUE(is_regular_sequence(sp, RegSeqMethod::kKoszul));
      }
    }
  }
  EXPECT_GE(families, 5);
}

TEST(ConstantBetti, Examples) {
  const Field& k = F("QQ(t)");
  const Field& q = Field::rationals();
  const Ring r = Ring::standard(k, 2);
  const Ring r1 = Ring::standard(k, 1);

  const auto ci = constant_betti_open(GradedMap::row(r, Ps(r, {"x1^2", "x1*x2 + t*x2^2"})));
  BettiTable expected;
  expected.add(0, 0);
  expected.add(1, 2, 2);
  expected.add(2, 4);
  EXPECT_EQ(ci.table, expected);
  EXPECT_FALSE(ci.open.contains({q.zero()}));
  const auto at0 = specialize(GradedMap::row(r, Ps(r, {"x1^2", "x1*x2 + t*x2^2"})), {q.zero()}, q);
  EXPECT_NE(betti(at0), ci.table);

  const auto constant = constant_betti_open(GradedMap::row(r1, Ps(r1, {"x1^2"})));
  EXPECT_TRUE(constant.open.is_everything());

  const auto scaled = constant_betti_open(GradedMap::row(r1, Ps(r1, {"t*x1"})));
  EXPECT_FALSE(scaled.open.contains({q.zero()}));
  EXPECT_TRUE(scaled.open.contains({q.from_int(5)}));
  EXPECT_NE(betti(specialize(GradedMap::row(r1, Ps(r1, {"t*x1"})), {q.zero()}, q)), scaled.table);
}

TEST(ConstantBetti, SampledPointsKeepTheTable) {
  Rng rng(173);
  const Field& k = F("GF(3)(t)");
  const Field& f3 = Field::prime(3);
  const Field& f27 = F("GF(3^3)");
  const Ring r = Ring::standard(k, 3);
  for (int t = 0; t < 8; ++t) {
    const auto fs = random_family(r, 1 + rng.below(3), rng);
    const GradedMap phi = GradedMap::row(r, fs);
    const auto cb = constant_betti_open(phi);
    EXPECT_EQ(cb.table, betti(phi));
    for (const Field* target : {&f3, &f27}) {
      for (const auto& y : sample_open(cb.open, k, *target, 4, rng)) {
        EXPECT_EQ(betti(specialize(phi, y, *target)), cb.table);
      }
    }
  }
}

TEST(SampleOpen, AvoidsTheZeroLocus) {
  Rng rng(179);
  const Field& k = F("GF(2)(s,t)");
  const Field& f2 = Field::prime(2);
  const ParamPoly s = ParamPoly::variable(f2, 2, 0);
  const ParamPoly t = ParamPoly::variable(f2, 2, 1);
  const DistinguishedOpen open{s * t + s + t};
  const auto pts = sample_open(open, k, f2, 10, rng);
  EXPECT_LE(pts.size(), 10u);
  for (const auto& y : pts) {
    ASSERT_EQ(y.size(), 2u);
    EXPECT_TRUE(open.contains(y));
  }
  const Field& f4 = F("GF(2^2)");
  const auto pts4 = sample_open(open, k, f4, 10, rng);
  EXPECT_EQ(pts4.size(), 10u);
  for (const auto& y : pts4) EXPECT_TRUE(open.contains(y));
}

}  // namespace
}  // namespace bigpoly
