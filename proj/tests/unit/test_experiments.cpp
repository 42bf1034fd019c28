#include <gtest/gtest.h>

#include "bigpoly/error.hpp"
#include "bigpoly/experiments.hpp"
#include "bigpoly/ideal.hpp"
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

TEST(NonzeroForms, CountsAndOrder) {
  EXPECT_EQ(nonzero_form_count(Field::prime(2), 2, 2), 7u);
  EXPECT_EQ(nonzero_form_count(Field::prime(3), 3, 2), 728u);
  EXPECT_EQ(nonzero_form_count(F("GF(2^2)"), 2, 1), 15u);
  EXPECT_FALSE(nonzero_form_count(Field::prime(5), 10, 5).has_value());

  const Ring r = Ring::standard(Field::prime(2), 2);
  // Monomials x1^2 > x1x2 > x2^2, last least significant.
  EXPECT_EQ(nonzero_form(r, 2, 0), P(r, "x2^2"));
  EXPECT_EQ(nonzero_form(r, 2, 1), P(r, "x1*x2"));
  EXPECT_EQ(nonzero_form(r, 2, 2), P(r, "x1*x2 + x2^2"));
  EXPECT_EQ(nonzero_form(r, 2, 6), P(r, "x1^2 + x1*x2 + x2^2"));
  EXPECT_EQ(kind_of([&] { nonzero_form(r, 2, 7); }), ErrorKind::kIndexOutOfRange);
}

TEST(NonzeroForms, Bijective) {
  const Ring r = Ring::standard(Field::prime(3), 2);
  const auto count = *nonzero_form_count(r.field(), 2, 2);
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Poly f = nonzero_form(r, 2, i);
    ASSERT_FALSE(f.is_zero());
    ASSERT_EQ(f.homogeneous_degree().degree, 2u);
    seen.insert(f.to_string());
  }
  EXPECT_EQ(seen.size(), count);
}

TEST(EnumerateTuples, ExhaustiveSampleAndBudget) {
  const Ring r = Ring::standard(Field::prime(2), 2);
  ExperimentOptions o;
  EXPECT_EQ(enumerate_tuples(r, {1, 2}, o).size(), 3u * 7u);
  o.max_tuples = 20;
  EXPECT_EQ(kind_of([&] { enumerate_tuples(r, {1, 2}, o); }), ErrorKind::kBudgetExceeded);
  o.mode = SearchMode::kSample;
  o.samples = 12;
  o.seed = 9;
  const auto a = enumerate_tuples(r, {2, 2}, o);
  const auto b = enumerate_tuples(r, {2, 2}, o);
  ASSERT_EQ(a.size(), 12u);
  EXPECT_EQ(a, b);
  for (const auto& t : a) {
    ASSERT_EQ(t.size(), 2u);
    EXPECT_FALSE(t[0].is_zero());
    EXPECT_FALSE(t[1].is_zero());
  }
  o.seed = 10;
  EXPECT_NE(enumerate_tuples(r, {2, 2}, o), a);
}

TEST(Threshold, Examples) {
  for (std::uint64_t p : {2, 3}) {
    const auto rep = threshold_search({1, 1}, Field::prime(p), 2);
    EXPECT_EQ(rep.n_hat, 0);
    EXPECT_TRUE(rep.consistent);
    for (const auto& rec : rep.records) {
      const bool dependent = testing::rank({testing::coefficients(rec.fs[0], 1), testing::coefficients(rec.fs[1], 1)}) < 2;
      EXPECT_EQ(rec.regular, !dependent);
      EXPECT_EQ(rec.collective_strength.is_infinite() ? 1 : rec.collective_strength.value(), dependent ? -1 : 1);
    }
  }
  const auto single = threshold_search({2}, Field::prime(2), 2);
  EXPECT_EQ(single.records.size(), 7u);
  EXPECT_EQ(single.n_hat, 0);
  for (const auto& rec : single.records) EXPECT_TRUE(rec.regular);
}

TEST(Threshold, ReportIsConsistent) {
  const auto rep = threshold_search({1, 2}, Field::prime(2), 3);
  EXPECT_EQ(rep.records.size(), 7u * 63u);
  int max_bad = -1;
  std::size_t total = 0;
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.regular, is_regular_sequence(rec.fs, RegSeqMethod::kKoszul));
    if (!rec.regular) max_bad = std::max(max_bad, rec.collective_strength.value());
  }
  for (const auto& [key, count] : rep.histogram) total += count;
  EXPECT_EQ(total, rep.records.size());
  EXPECT_EQ(rep.n_hat, max_bad + 1);
  EXPECT_TRUE(rep.consistent);
}

TEST(Threshold, Deterministic) {
  ExperimentOptions o;
  o.mode = SearchMode::kSample;
  o.samples = 30;
  o.seed = 4;
  const auto a = threshold_search({2, 2}, Field::prime(3), 3, o);
  const auto b = threshold_search({2, 2}, Field::prime(3), 3, o);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].fs, b.records[i].fs);
    EXPECT_EQ(a.records[i].collective_strength, b.records[i].collective_strength);
  }
  EXPECT_EQ(a.n_hat, b.n_hat);
}

void expect_verified(const std::vector<Poly>& fs, const SmallSubalgebra& out) {
  EXPECT_EQ(out.s, out.gs.size());
  EXPECT_TRUE(is_regular_sequence(out.gs, RegSeqMethod::kKoszul));
  ASSERT_EQ(out.expressions.size(), fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    EXPECT_EQ(substitute(out.expressions[i], out.gs), fs[i]);
    EXPECT_TRUE(subalgebra_membership(fs[i], out.gs).has_value());
  }
  for (std::size_t k = 1; k < out.trace.size(); ++k) {
    EXPECT_GT(type_compare(out.trace[k].type, out.trace[k - 1].type), 0);
  }
}

TEST(SmallSubalgebra, Examples) {
  const Ring r2 = Ring::standard(Field::prime(3), 2);
  const auto lin = small_subalgebra(Ps(r2, {"x1", "x2"}));
  EXPECT_EQ(lin.s, 2u);
  EXPECT_EQ(lin.gs, Ps(r2, {"x1", "x2"}));

  const Ring r3 = Ring::standard(Field::prime(3), 3);
  const auto fs = Ps(r3, {"x1*x2", "x1*x3"});
  const auto out = small_subalgebra(fs);
  EXPECT_EQ(out.s, 3u);
  std::set<std::string> gs;
  for (const auto& g : out.gs) gs.insert(g.monic().to_string());
  EXPECT_EQ(gs, (std::set<std::string>{"x1", "x2", "x3"}));
  expect_verified(fs, out);

  const auto dep = Ps(r3, {"x1*x2", "2*x1*x2"});
  const auto one = small_subalgebra(dep);
  EXPECT_EQ(one.s, 1u);
  EXPECT_EQ(one.gs[0].monic(), P(r3, "x1*x2"));
  expect_verified(dep, one);
}

TEST(SmallSubalgebra, RandomInputsAreVerified) {
  Rng rng(181);
  const Ring r = Ring::standard(Field::prime(3), 3);
  for (int t = 0; t < 10; ++t) {
    std::vector<Poly> fs;
    // Pairs sharing a linear factor are never regular.
    const Poly l = random_homogeneous(r, 1, rng);
    while (fs.size() < 2 + static_cast<std::size_t>(t % 2)) {
      Poly f = t % 3 ? l * random_homogeneous(r, 1, rng) : random_homogeneous(r, 2, rng);
      if (!f.is_zero()) fs.push_back(std::move(f));
    }
    const auto out = small_subalgebra(fs);
    expect_verified(fs, out);
    EXPECT_LE(projective_dimension(Ideal(r, fs)), out.s);
  }
}

TEST(TypeCompare, Revlex) {
  EXPECT_EQ(type_compare({1, 1}, {1, 1}), 0);
  // Fewer generators at the top degree is greater.
  EXPECT_GT(type_compare({5, 0}, {0, 1}), 0);
  EXPECT_LT(type_compare({0, 1}, {5, 0}), 0);
  EXPECT_LT(type_compare({3, 1}, {2, 1}), 0);
  EXPECT_GT(type_compare({2}, {0, 1}), 0);
  EXPECT_EQ(type_compare({2, 0}, {2}), 0);
}

TEST(PdExperiment, LinearAndPrincipal) {
  ExperimentOptions o;
  o.mode = SearchMode::kSample;
  o.samples = 15;
  const auto lin = pd_experiment({1, 1}, Field::prime(3), 2, 4, o);
  EXPECT_TRUE(lin.bound_holds);
  for (const auto& rec : lin.records) {
    const bool dependent = testing::rank({testing::coefficients(rec.fs[0], 1), testing::coefficients(rec.fs[1], 1)}) < 2;
    EXPECT_EQ(rec.pd, dependent ? 1u : 2u);
    EXPECT_EQ(rec.s, rec.pd);
  }
  const auto principal = pd_experiment({2}, Field::prime(2), 1, 3, o);
  for (const auto& rec : principal.records) EXPECT_EQ(rec.pd, 1u);
  EXPECT_EQ(principal.max_pd_by_n.size(), 3u);
}

TEST(PdExperiment, BoundAndDeterminism) {
  ExperimentOptions o;
  o.mode = SearchMode::kSample;
  o.samples = 8;
  o.seed = 3;
  const auto a = pd_experiment({2, 2}, Field::prime(3), 3, 4, o);
  const auto b = pd_experiment({2, 2}, Field::prime(3), 3, 4, o);
  EXPECT_TRUE(a.bound_holds);
  ASSERT_EQ(a.records.size(), 16u);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_LE(a.records[i].pd, a.records[i].s);
    EXPECT_EQ(a.records[i].fs, b.records[i].fs);
    EXPECT_EQ(a.records[i].pd, b.records[i].pd);
  }
}

TEST(Census, Examples) {
  const auto one = betti_census({2}, Field::prime(2), 2);
  EXPECT_EQ(one.tuples, 7u);
  ASSERT_EQ(one.entries.size(), 1u);
  BettiTable principal;
  principal.add(0, 0);
  principal.add(1, 2);
  EXPECT_EQ(one.entries[0].table, principal);
  EXPECT_EQ(one.entries[0].count, 7u);

  const auto pairs = betti_census({2, 2}, Field::prime(2), 2);
  EXPECT_EQ(pairs.tuples, 49u);
  std::size_t total = 0;
  bool has_ci = false;
  bool has_principal = false;
  BettiTable ci;
  ci.add(0, 0);
  ci.add(1, 2, 2);
  ci.add(2, 4);
  for (const auto& e : pairs.entries) {
    total += e.count;
    has_ci |= e.table == ci;
    has_principal |= e.table == principal;
    EXPECT_EQ(betti(Ideal(e.example.front().ring(), e.example)), e.table);
  }
  EXPECT_EQ(total, 49u);
  EXPECT_TRUE(has_ci);
  EXPECT_TRUE(has_principal);
  // Proportional pairs over GF(2) are equal pairs: 7 of them.
  for (const auto& e : pairs.entries) {
    if (e.table == principal) EXPECT_EQ(e.count, 7u);
  }
}

}  // namespace
}  // namespace bigpoly
