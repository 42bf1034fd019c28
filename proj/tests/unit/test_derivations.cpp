#include <gtest/gtest.h>

#include "bigpoly/derivations.hpp"
#include "bigpoly/error.hpp"
#include "bigpoly/hom.hpp"
#include "support.hpp"

namespace bigpoly {
namespace {

using testing::F;
using testing::P;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInvalidArgument;
}

TEST(Partial, Examples) {
  const Ring q = Ring::standard(Field::rationals(), 2);
  EXPECT_EQ(partial(P(q, "x1^2*x2"), 0), P(q, "2*x1*x2"));
  EXPECT_TRUE(partial(P(q, "x1^2"), 1).is_zero());
  const Ring f3 = Ring::standard(Field::prime(3), 1);
  EXPECT_TRUE(partial(P(f3, "x1^3"), 0).is_zero());
  EXPECT_EQ(kind_of([&] { partial(P(q, "x1"), 2); }), ErrorKind::kIndexOutOfRange);
}

TEST(Hasse, Examples) {
  const Ring q(Field::rationals(), {{"x", 1}});
  EXPECT_EQ(hasse(P(q, "x^5"), 0, 2), P(q, "10*x^3"));
  const Ring f5(Field::prime(5), {{"x", 1}});
  EXPECT_TRUE(hasse(P(f5, "x^5"), 0, 2).is_zero());
  const Ring f3 = Ring::standard(Field::prime(3), 2);
  EXPECT_EQ(hasse(P(f3, "x1^3*x2"), 0, 3), P(f3, "x2"));
  const Poly f = P(f3, "x1^2*x2 + x2^3");
  EXPECT_EQ(hasse(f, 1, 0), f);
  EXPECT_EQ(kind_of([&] { hasse(f, 5, 1); }), ErrorKind::kIndexOutOfRange);
}

TEST(HasseSeries, Examples) {
  const Ring q(Field::rationals(), {{"x", 1}});
  EXPECT_EQ(hasse_series(P(q, "x^2"), 0, 2), (std::vector<Poly>{P(q, "x^2"), P(q, "2*x"), P(q, "1")}));
  const Ring q2 = Ring::standard(Field::rationals(), 2);
  EXPECT_EQ(hasse_series(P(q2, "x2"), 0, 1), (std::vector<Poly>{P(q2, "x2"), Poly(q2)}));
  const Ring f3(Field::prime(3), {{"x", 1}});
  EXPECT_EQ(hasse_series(P(f3, "x^3"), 0, 3), (std::vector<Poly>{P(f3, "x^3"), Poly(f3), Poly(f3), P(f3, "1")}));
}

// Oracle: expand f(x_j + t) in the ring extended by t and read off t-coefficients.
std::vector<Poly> series_by_substitution(const Poly& f, std::size_t j, std::uint64_t order) {
  const Ring& r = f.ring();
  const Ring big = r.extended({{"t_", 1}});
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    Poly xi = Poly::variable(big, i);
    if (i == j) xi += Poly::variable(big, r.nvars());
    images.push_back(xi);
  }
  Poly sub(big);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(big, c);
    for (std::size_t i = 0; i < r.nvars(); ++i) term *= images[i].pow(m[i]);
    sub += term;
  }
  std::vector<std::vector<Poly::Term>> parts(order + 1);
  for (const auto& [m, c] : sub.terms()) {
    const std::uint32_t k = m[r.nvars()];
    if (k > order) continue;
    Monomial::Exps e(m.exps().begin(), m.exps().end() - 1);
    parts[k].emplace_back(r.monomial(e), c);
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(Poly::from_terms(r, std::move(p)));
  return out;
}

class HasseFields : public ::testing::TestWithParam<std::string> {};

TEST_P(HasseFields, SeriesAgreesWithSubstitution) {
  const Ring r = Ring::standard(F(GetParam()), 3);
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const Poly f = testing::random_poly(r, 4, rng);
    const std::size_t j = rng.below(3);
    EXPECT_EQ(hasse_series(f, j, 5), series_by_substitution(f, j, 5)) << f;
  }
}

TEST_P(HasseFields, Leibniz) {
  const Ring r = Ring::standard(F(GetParam()), 3);
  Rng rng(29);
  for (int i = 0; i < 25; ++i) {
    const Poly f = testing::random_poly(r, 3, rng);
    const Poly g = testing::random_poly(r, 3, rng);
    const std::size_t j = rng.below(3);
    for (std::uint64_t n = 0; n <= 6; ++n) {
      Poly rhs(r);
      for (std::uint64_t i2 = 0; i2 <= n; ++i2) rhs += hasse(f, j, i2) * hasse(g, j, n - i2);
      ASSERT_EQ(hasse(f * g, j, n), rhs) << f << " | " << g << " n=" << n;
    }
  }
}

TEST_P(HasseFields, DegreeLaw) {
  const Ring r(F(GetParam()), {{"a", 1}, {"b", 2}, {"c", 3}});
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    const std::uint32_t d = 3 + static_cast<std::uint32_t>(rng.below(5));
    const Poly f = random_homogeneous(r, d, rng);
    const std::size_t j = rng.below(3);
    for (std::uint64_t n = 0; n <= 3; ++n) {
      const Poly h = hasse(f, j, n);
      if (h.is_zero()) continue;
      ASSERT_TRUE(h.homogeneous_degree().ok());
      EXPECT_EQ(h.homogeneous_degree().degree, d - n * r.var_degree(j));
    }
  }
}

class HassePositiveChar : public ::testing::TestWithParam<std::string> {};

TEST_P(HassePositiveChar, PthPowerRule) {
  const Field& field = F(GetParam());
  const std::uint64_t p = field.characteristic();
  const Ring r = Ring::standard(field, 2);
  Rng rng(37);
  for (std::uint64_t q : {p, p * p}) {
    for (int i = 0; i < 15; ++i) {
      const Poly f = testing::random_poly(r, 2, rng);
      const Poly fq = f.pow(q);
      const std::size_t j = rng.below(2);
      for (std::uint64_t n = 0; n <= 2 * q + 1; ++n) {
        const Poly h = hasse(fq, j, n);
        if (n % q) {
          EXPECT_TRUE(h.is_zero()) << f << " q=" << q << " n=" << n;
        } else {
          EXPECT_EQ(h, hasse(f, j, n / q).pow(q)) << f << " q=" << q << " n=" << n;
        }
      }
    }
  }
}

std::string field_name(const ::testing::TestParamInfo<std::string>& info) {
  std::string out;
  for (char c : info.param) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

INSTANTIATE_TEST_SUITE_P(Fields, HasseFields, ::testing::Values("QQ", "GF(2)", "GF(3)", "GF(5)", "GF(2^2)"), field_name);
INSTANTIATE_TEST_SUITE_P(Fields, HassePositiveChar, ::testing::Values("GF(2)", "GF(3)", "GF(5)", "GF(2^2)"), field_name);

TEST(Witness, Examples) {
  const Ring f3 = Ring::standard(Field::prime(3), 2);
  EXPECT_EQ(enough_witness(P(f3, "x1^3*x2")), 1u);
  const Ring f2 = Ring::standard(Field::prime(2), 2);
  EXPECT_FALSE(enough_witness(P(f2, "x1^2*x2^2")).has_value());
  const Ring q = Ring::standard(Field::rationals(), 2);
  EXPECT_EQ(enough_witness(P(q, "x1+x2")), 0u);
  EXPECT_EQ(kind_of([&] { enough_witness(Poly(q)); }), ErrorKind::kZeroInput);
  EXPECT_EQ(kind_of([&] { enough_witness(P(q, "x1+x2^2")); }), ErrorKind::kNotHomogeneous);
}

TEST(Witness, MatchesDefinition) {
  Rng rng(41);
  for (const char* d : {"QQ", "GF(2)", "GF(3)"}) {
    const Ring r = Ring::standard(F(d), 3);
    for (int i = 0; i < 50; ++i) {
      Poly f = random_homogeneous(r, 2, rng);
      if (rng.below(2) && r.field().characteristic()) f = f.pow(r.field().characteristic());
      if (f.is_zero()) continue;
      const auto w = enough_witness(f);
      std::optional<std::size_t> expected;
      for (std::size_t j = 0; j < 3 && !expected; ++j) {
        if (!hasse(f, j, 1).is_zero()) expected = j;
      }
      EXPECT_EQ(w, expected) << f;
    }
  }
}

TEST(PthPowerRoot, Examples) {
  const Ring f2 = Ring::standard(Field::prime(2), 3);
  EXPECT_EQ(pth_power_root(P(f2, "x1^2*x2^2 + x3^4")), P(f2, "x1*x2 + x3^2"));
  const Ring f3 = Ring::standard(Field::prime(3), 1);
  EXPECT_FALSE(pth_power_root(P(f3, "x1")).has_value());
  EXPECT_EQ(pth_power_root(P(f3, "2*x1^3")), P(f3, "2*x1"));
  const Ring q = Ring::standard(Field::rationals(), 1);
  EXPECT_EQ(kind_of([&] { pth_power_root(P(q, "x1^2")); }), ErrorKind::kCharZero);
  const Ring f2t = Ring::standard(F("GF(2)(t)"), 1);
  EXPECT_EQ(kind_of([&] { pth_power_root(P(f2t, "x1^2")); }), ErrorKind::kNotApplicable);
}

TEST(PthPowerRoot, Dichotomy) {
  Rng rng(43);
  for (const char* d : {"GF(2)", "GF(3)", "GF(2^2)", "GF(3^2)"}) {
    const Ring r = Ring::standard(F(d), 3);
    const std::uint64_t p = r.field().characteristic();
    for (int i = 0; i < 50; ++i) {
      Poly f = random_homogeneous(r, 2, rng);
      if (f.is_zero()) continue;
      if (rng.below(2)) f = f.pow(p);
      const auto root = pth_power_root(f);
      if (root) {
        EXPECT_EQ(root->pow(p), f);
        EXPECT_FALSE(enough_witness(f).has_value());
      } else {
        EXPECT_TRUE(enough_witness(f).has_value());
      }
    }
  }
}

}  // namespace
}  // namespace bigpoly
