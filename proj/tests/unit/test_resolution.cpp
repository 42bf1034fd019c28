#include <gtest/gtest.h>

#include "bigpoly/error.hpp"
#include "bigpoly/resolution.hpp"
#include "support.hpp"

namespace bigpoly {
namespace {

using testing::F;
using testing::P;
using testing::Ps;

BettiTable table(std::initializer_list<std::tuple<std::size_t, std::int64_t, std::size_t>> entries) {
  BettiTable t;
  for (const auto& [i, j, c] : entries) t.add(i, j, c);
  return t;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Poly> random_forms(const Ring& r, std::size_t count, std::uint32_t max_degree, Rng& rng) {
  std::vector<Poly> out;
  while (out.size() < count) {
    const auto d = 1 + static_cast<std::uint32_t>(rng.below(max_degree));
    Poly f = random_homogeneous(r, d, rng);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

void expect_well_formed(const Resolution& res) {
  EXPECT_TRUE(res.is_complex());
  EXPECT_TRUE(res.minimal);
  EXPECT_FALSE(res.has_unit_entry());
  for (const auto& phi : res.maps) {
    for (std::size_t i = 0; i < phi.rows(); ++i) {
      for (std::size_t j = 0; j < phi.cols(); ++j) {
        const Poly& e = phi.entry(i, j);
        if (e.is_zero()) continue;
        const auto h = e.homogeneous_degree();
        ASSERT_TRUE(h.ok());
        EXPECT_EQ(static_cast<std::int64_t>(h.degree), phi.source().degrees[j] - phi.target().degrees[i]);
      }
    }
  }
}

TEST(Syzygies, Examples) {
  const Ring r = Ring::standard(Field::rationals(), 3);
  const GradedMap k1 = syzygies(GradedMap::row(r, Ps(r, {"x1*x2", "x1*x3"})));
  ASSERT_EQ(k1.cols(), 1u);
  const auto col = k1.columns()[0];
  EXPECT_EQ(col[0].scaled(col[0].leading().second.inverse()), P(r, "x3"));
  EXPECT_EQ(col[1].scaled(col[0].leading().second.inverse()), P(r, "-x2"));
  EXPECT_EQ(k1.source().degrees, std::vector<std::int64_t>{3});

  const GradedMap k2 = syzygies(GradedMap::row(r, Ps(r, {"x1", "x2"})));
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_TRUE(GradedMap::row(r, Ps(r, {"x1", "x2"})).after(k2).is_zero());

  const GradedMap one(FreeModule{r, {0}}, FreeModule{r, {0}}, {{P(r, "1")}});
  EXPECT_EQ(syzygies(one).cols(), 0u);
}

// dim of ker(phi) in degree D by linear algebra, against the span of the
// computed syzygy columns in that degree.
TEST(Syzygies, MatchLinearAlgebraInEachDegree) {
  Rng rng(131);
  const Ring r = Ring::standard(Field::prime(5), 3);
  for (int t = 0; t < 10; ++t) {
    const auto fs = random_forms(r, 2 + rng.below(2), 2, rng);
    const GradedMap phi = GradedMap::row(r, fs);
    const GradedMap syz = syzygies(phi);
    EXPECT_TRUE(phi.after(syz).is_zero());
    for (std::uint32_t D = 1; D <= 5; ++D) {
      // Coordinates of (R_{D-d_1} + ... + R_{D-d_r}).
      auto flatten = [&](const std::vector<Poly>& v) {
        std::vector<FieldElem> out;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          const auto di = fs[i].homogeneous_degree().degree;
          if (di > D) continue;
          for (const auto& c : testing::coefficients(v[i], D - di)) out.push_back(c);
        }
        return out;
      };
      std::vector<std::vector<FieldElem>> map_rows;
      std::size_t domain = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto di = fs[i].homogeneous_degree().degree;
        if (di > D) continue;
        for (const auto& m : monomials_of_degree(r, D - di)) {
          ++domain;
          map_rows.push_back(testing::coefficients(fs[i].mul_term(m, r.field().one()), D));
        }
      }
      const std::size_t kernel_dim = domain - testing::rank(map_rows);
      std::vector<std::vector<FieldElem>> span;
      for (std::size_t j = 0; j < syz.cols(); ++j) {
        const auto dj = syz.source().degrees[j];
        if (dj > static_cast<std::int64_t>(D)) continue;
        for (const auto& m : monomials_of_degree(r, D - static_cast<std::uint32_t>(dj))) {
          std::vector<Poly> v;
          for (const auto& e : syz.columns()[j]) v.push_back(e.mul_term(m, r.field().one()));
          span.push_back(flatten(v));
        }
      }
      EXPECT_EQ(testing::rank(span), kernel_dim) << "degree " << D;
    }
  }
}

TEST(Resolution, Examples) {
  const Ring r = Ring::standard(Field::rationals(), 3);
  const auto koszul = minimal_free_resolution(Ideal(r, Ps(r, {"x1", "x2"})));
  ASSERT_EQ(koszul.modules.size(), 3u);
  EXPECT_EQ(koszul.modules[0].rank(), 1u);
  EXPECT_EQ(koszul.modules[1].rank(), 2u);
  EXPECT_EQ(koszul.modules[2].rank(), 1u);

  const auto res = minimal_free_resolution(Ideal(r, Ps(r, {"x1*x2", "x1*x3"})));
  ASSERT_EQ(res.modules.size(), 3u);
  EXPECT_EQ(res.modules[1].degrees, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(res.modules[2].degrees, (std::vector<std::int64_t>{3}));
  expect_well_formed(res);

  const auto sq = minimal_free_resolution(Ideal(r, Ps(r, {"x1^2", "x2^2"})));
  ASSERT_EQ(sq.modules.size(), 3u);
  EXPECT_EQ(sq.modules[0].degrees, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(sq.modules[1].degrees, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(sq.modules[2].degrees, (std::vector<std::int64_t>{4}));
}

TEST(Betti, Examples) {
  const Ring r = Ring::standard(Field::rationals(), 3);
  EXPECT_EQ(betti(Ideal(r, Ps(r, {"x1", "x2"}))), table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(betti(Ideal(r, Ps(r, {"x1^2", "x2^2"}))), table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
  EXPECT_EQ(betti(Ideal(r, Ps(r, {"x1*x2", "x1*x3"}))), table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  EXPECT_EQ(projective_dimension(Ideal(r, Ps(r, {"x1", "x2", "x3"}))), 3u);
  EXPECT_EQ(projective_dimension(Ideal(r, Ps(r, {"x1*x2", "x1*x3"}))), 2u);
  const GradedMap zero(FreeModule{r, {}}, FreeModule{r, {0, 1}}, {});
  EXPECT_EQ(projective_dimension(zero), 0u);
  EXPECT_EQ(betti(zero), table({{0, 0, 1}, {0, 1, 1}}));
}

TEST(Betti, NonMinimalPresentationsAreMinimized) {
  const Ring r = Ring::standard(Field::rationals(), 3);
  // Redundant generator and a unit entry in the presentation.
  EXPECT_EQ(betti(Ideal(r, Ps(r, {"x1", "x2", "x1+x2"}))), table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  const GradedMap phi(FreeModule{r, {1, 2}}, FreeModule{r, {0, 1}},
                      {{P(r, "x1"), P(r, "1")}, {P(r, "x2^2"), P(r, "x3")}});
  // Coker: e1, e2 with e2 = -x1 e1 and x2^2 e1 + x3 e2 = 0, i.e. R/(x2^2 - x1 x3).
  EXPECT_EQ(betti(phi), table({{0, 0, 1}, {1, 2, 1}}));
  EXPECT_EQ(betti(Ideal(r, Ps(r, {"1"}))), BettiTable());
}

TEST(Betti, TextAndCsv) {
  const Ring r = Ring::standard(Field::rationals(), 3);
  const BettiTable t = betti(Ideal(r, Ps(r, {"x1*x2", "x1*x3"})));
  EXPECT_EQ(t.to_csv(), "i,j,count\n0,0,1\n1,2,2\n2,3,1\n");
  EXPECT_EQ(t.to_text(),
            "       0 1 2\n"
            "total: 1 2 1\n"
            "    0: 1 . .\n"
            "    1: . 2 1\n");
  EXPECT_EQ(t.hash().size(), 16u);
  EXPECT_NE(t.hash(), betti(Ideal(r, Ps(r, {"x1^2", "x2^2"}))).hash());
}

TEST(Resolution, KoszulForRegularSequences) {
  Rng rng(137);
  int seen = 0;
  for (const char* d : {"GF(3)", "QQ"}) {
    const Ring r = Ring::standard(F(d), 4);
    for (int t = 0; t < 25; ++t) {
      const std::size_t len = 1 + rng.below(3);
      const auto fs = random_forms(r, len, 3, rng);
      if (!is_regular_sequence(fs, RegSeqMethod::kCodim)) continue;
      ++seen;
      const auto res = minimal_free_resolution(Ideal(r, fs));
      expect_well_formed(res);
      const BettiTable bt(res);
      BettiTable expected;
      for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::int64_t deg = 0;
        std::size_t size = 0;
        for (std::size_t k = 0; k < len; ++k) {
          if (mask >> k & 1) {
            deg += fs[k].homogeneous_degree().degree;
            ++size;
          }
        }
        expected.add(size, deg);
      }
      EXPECT_EQ(bt, expected);
      for (std::size_t i = 0; i <= len; ++i) EXPECT_EQ(bt.total(i), binomial(len, i));
    }
  }
  EXPECT_GT(seen, 20);
}

// Hilbert function of R/I: Betti alternating sum against linear algebra.
TEST(Resolution, AlternatingSumMatchesHilbertFunction) {
  Rng rng(139);
  const Ring r = Ring::standard(Field::prime(5), 3);
  for (int t = 0; t < 8; ++t) {
    const auto fs = random_forms(r, 1 + rng.below(3), 2, rng);
    const BettiTable bt = betti(Ideal(r, fs));
    const auto num = bt.alternating_sum();
    EXPECT_EQ(num, hilbert(Ideal(r, fs)).numerator);
    for (std::uint32_t D = 0; D <= 10; ++D) {
      long long from_betti = 0;
      for (std::size_t k = 0; k < num.size() && k <= D; ++k) {
        const long long m = D - k;
        from_betti += num[k] * (m + 2) * (m + 1) / 2;
      }
      const long long direct = static_cast<long long>(monomials_of_degree(r, D).size()) -
                               static_cast<long long>(testing::ideal_dimension_in_degree(fs, D));
      EXPECT_EQ(from_betti, direct) << "degree " << D;
    }
  }
}

TEST(Resolution, ModulesAndExtensionInvariance) {
  Rng rng(149);
  const Ring r = Ring::standard(Field::prime(3), 3);
  const Ring big = r.extended({{"z", 1}});
  for (int t = 0; t < 10; ++t) {
    // 2 x 2 presentation with target twists (0, 1).
    std::vector<std::vector<Poly>> cols;
    std::vector<std::int64_t> src;
    for (int j = 0; j < 2; ++j) {
      const std::int64_t dj = 2 + static_cast<std::int64_t>(rng.below(2));
      src.push_back(dj);
      cols.push_back({random_homogeneous(r, static_cast<std::uint32_t>(dj), rng),
                      random_homogeneous(r, static_cast<std::uint32_t>(dj - 1), rng)});
    }
    const GradedMap phi(FreeModule{r, src}, FreeModule{r, {0, 1}}, cols);
    const auto res = minimal_free_resolution(phi);
    expect_well_formed(res);
    EXPECT_EQ(BettiTable(res).alternating_sum(), module_hilbert_numerator(phi));
    EXPECT_EQ(betti(phi.embedded(big)), BettiTable(res));
  }
}

TEST(Resolution, WeightedRings) {
  const Ring w(Field::rationals(), {{"Y1", 2}, {"Y2", 3}});
  EXPECT_EQ(betti(Ideal(w, Ps(w, {"Y1", "Y2"}))), table({{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 1}}));
  const Ring y(Field::rationals(), {{"Y1", 1}, {"Y2", 1}});
  EXPECT_EQ(betti_over_subalgebra(Ps(y, {"Y1^2", "Y1*Y2"})), table({{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  const Ring single(Field::rationals(), {{"Y1", 3}});
  EXPECT_EQ(betti_over_subalgebra(Ps(single, {"Y1"})), table({{0, 0, 1}, {1, 3, 1}}));
}

TEST(Resolution, SubalgebraTransfer) {
  Rng rng(151);
  const Ring r = Ring::standard(Field::prime(3), 4);
  int checked = 0;
  for (int t = 0; t < 20 && checked < 8; ++t) {
    const auto gs = random_forms(r, 2, 2, rng);
    if (!is_regular_sequence(gs, RegSeqMethod::kCodim)) continue;
    const Ring y = presentation_ring(r, gs);
    std::vector<Poly> exprs;
    for (int k = 0; k < 2; ++k) {
      const Poly e = random_homogeneous(y, 2 + static_cast<std::uint32_t>(rng.below(3)), rng);
      if (!e.is_zero()) exprs.push_back(e);
    }
    if (exprs.empty()) continue;
    std::vector<Poly> fs;
    for (const auto& e : exprs) fs.push_back(substitute(e, gs));
    EXPECT_EQ(betti_over_subalgebra(exprs), betti(Ideal(r, fs)));
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

}  // namespace
}  // namespace bigpoly
