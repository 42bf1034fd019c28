#include "bigpoly/experiments.hpp"

#include <algorithm>

namespace bigpoly {

std::optional<std::uint64_t> nonzero_form_count(const Field& field, std::size_t n, std::uint32_t d) {
  const auto q = field.size();
  if (!q) fail(ErrorKind::kUnsupportedField, "form enumeration needs a finite field");
  const std::size_t monos = monomials_of_degree(Ring::standard(field, n), d).size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < monos; ++i) {
    if (total > UINT64_MAX / *q) return std::nullopt;
    total *= *q;
  }
  return total - 1;
}

Poly nonzero_form(const Ring& ring, std::uint32_t d, std::uint64_t index) {
  const Field& F = ring.field();
  const std::uint64_t q = *F.size();
  const auto monos = monomials_of_degree(ring, d);
  std::uint64_t code = index + 1;
  std::vector<Poly::Term> terms;
  for (std::size_t k = monos.size(); k-- > 0;) {
    const std::uint64_t digit = code % q;
    code /= q;
    if (digit) terms.emplace_back(monos[k], F.element(digit));
  }
  if (code) fail(ErrorKind::kIndexOutOfRange, "form index out of range");
  return Poly::from_terms(ring, std::move(terms));
}

std::vector<std::vector<Poly>> enumerate_tuples(const Ring& ring, const std::vector<std::uint32_t>& degrees,
                                                const ExperimentOptions& options) {
  const Field& F = ring.field();
  std::vector<std::uint64_t> counts;
  for (auto d : degrees) {
    const auto c = nonzero_form_count(F, ring.nvars(), d);
    if (!c || *c == 0) {
      if (c) return {};
      throw BudgetExceeded("too many forms of degree " + std::to_string(d));
    }
    counts.push_back(*c);
  }
  std::vector<std::vector<Poly>> out;
  if (options.mode == SearchMode::kSample) {
    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::vector<Poly> fs;
      for (std::size_t i = 0; i < degrees.size(); ++i) fs.push_back(nonzero_form(ring, degrees[i], rng.below(counts[i])));
      out.push_back(std::move(fs));
    }
    return out;
  }
  std::uint64_t total = 1;
  for (auto c : counts) {
    if (total > options.max_tuples / c) {
      throw BudgetExceeded("tuple space exceeds " + std::to_string(options.max_tuples));
    }
    total *= c;
  }
  std::vector<std::vector<Poly>> forms;
  for (auto d : degrees) {
    std::vector<Poly> fd;
    for (std::uint64_t i = 0; i < counts[forms.size()]; ++i) fd.push_back(nonzero_form(ring, d, i));
    forms.push_back(std::move(fd));
  }
  std::vector<std::uint64_t> idx(degrees.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::vector<Poly> fs;
    for (std::size_t i = 0; i < idx.size(); ++i) fs.push_back(forms[i][idx[i]]);
    out.push_back(std::move(fs));
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < counts[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

ThresholdReport threshold_search(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n,
                                 const ExperimentOptions& options) {
  ThresholdReport report;
  report.degrees = degrees;
  report.field = field.descriptor();
  report.n = n;
  report.options = options;
  const Ring ring = Ring::standard(field, n);
  auto tuples = enumerate_tuples(ring, degrees, options);
  int worst = -1;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    ThresholdRecord rec;
    rec.tuple_id = t;
    rec.collective_strength = collective_strength(tuples[t], options.oracle).value;
    rec.regular = is_regular_sequence(tuples[t], RegSeqMethod::kCodim, options.limits);
    rec.fs = std::move(tuples[t]);
    if (!rec.regular) {
      // A non-regular tuple of infinite collective strength would leave no
      // finite threshold.
      if (rec.collective_strength.is_infinite()) {
        fail(ErrorKind::kInvariantViolated, "non-regular tuple of infinite collective strength");
      }
      worst = std::max(worst, rec.collective_strength.value());
    }
    ++report.histogram[{rec.collective_strength, rec.regular}];
    report.records.push_back(std::move(rec));
  }
  report.n_hat = worst + 1;
  for (const auto& rec : report.records) {
    if (!(rec.collective_strength < StrengthValue::of(report.n_hat)) && !rec.regular) report.consistent = false;
  }
  return report;
}

int type_compare(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t k = len; k-- > 0;) {
    const std::size_t x = k < a.size() ? a[k] : 0;
    const std::size_t y = k < b.size() ? b[k] : 0;
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

namespace {

std::vector<std::size_t> type_of(const std::vector<Poly>& gs) {
  std::vector<std::size_t> type;
  for (const auto& g : gs) {
    const auto h = g.homogeneous_degree();
    const std::size_t d = h.ok() ? h.degree : 0;
    if (d == 0) continue;
    if (type.size() < d) type.resize(d, 0);
    ++type[d - 1];
  }
  return type;
}

std::string describe(const std::vector<Poly>& gs) {
  std::string out = "[";
  for (std::size_t i = 0; i < gs.size(); ++i) out += (i ? ", " : "") + gs[i].to_string();
  return out + "]";
}

}  // namespace

SmallSubalgebra small_subalgebra(const std::vector<Poly>& fs, const SubalgebraOptions& options) {
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "empty tuple");
  const Ring& ring = fs.front().ring();
  if (!ring.field().is_finite()) fail(ErrorKind::kUnsupportedField, "small subalgebras need a finite field");
  SmallSubalgebra out;
  std::vector<Poly> gs = fs;
  out.trace.push_back({type_of(gs), "start " + describe(gs)});
  for (std::size_t iter = 0;; ++iter) {
    bool regular = true;
    for (const auto& g : gs) {
      if (g.is_zero()) regular = false;
    }
    if (regular) regular = is_regular_sequence(gs, RegSeqMethod::kCodim, options.limits);
    if (regular) break;
    if (iter >= options.max_iterations) {
      std::string trace;
      for (const auto& step : out.trace) trace += "\n  " + step.action;
      fail(ErrorKind::kMaxIterations, "no regular sequence after " + std::to_string(iter) + " steps:" + trace);
    }
    const auto cs = collective_strength(gs, options.oracle);
    if (cs.value.is_infinite()) fail(ErrorKind::kInvariantViolated, "non-regular tuple of infinite collective strength");
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!cs.coefficients[i].is_zero()) pivot = i;
    }
    std::vector<Poly> next;
    std::string action;
    if (cs.value.value() < 0) {
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i != pivot) next.push_back(gs[i]);
      }
      action = "drop dependent " + gs[pivot].to_string();
    } else {
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i != pivot) {
          next.push_back(gs[i]);
          continue;
        }
        for (const auto& [g, h] : cs.certificate.pairs) {
          next.push_back(g);
          next.push_back(h);
        }
      }
      action = "replace " + gs[pivot].to_string() + " via " + cs.combination.to_string() + " (strength " +
               cs.value.to_string() + ")";
    }
    auto type = type_of(next);
    if (type_compare(type, out.trace.back().type) <= 0) {
      fail(ErrorKind::kInvariantViolated, "type monomial did not increase at step " + std::to_string(iter));
    }
    gs = std::move(next);
    out.trace.push_back({std::move(type), action + " -> " + describe(gs)});
  }

  auto exprs = subalgebra_membership(fs, gs, options.limits);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!exprs[i]) fail(ErrorKind::kInvariantViolated, fs[i].to_string() + " is not in the constructed subalgebra");
    out.expressions.push_back(std::move(*exprs[i]));
  }
  out.s = gs.size();
  out.gs = std::move(gs);
  return out;
}

PdReport pd_experiment(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n_min,
                       std::size_t n_max, const ExperimentOptions& options) {
  PdReport report;
  report.degrees = degrees;
  report.field = field.descriptor();
  report.n_min = n_min;
  report.n_max = n_max;
  report.options = options;
  SubalgebraOptions sub{1000, options.limits, options.oracle};
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const Ring ring = Ring::standard(field, n);
    ExperimentOptions opts = options;
    opts.seed = options.seed + n;
    const auto tuples = enumerate_tuples(ring, degrees, opts);
    auto& max_pd = report.max_pd_by_n[n];
    for (std::size_t s = 0; s < tuples.size(); ++s) {
      PdRecord rec;
      rec.n = n;
      rec.sample = s;
      rec.fs = tuples[s];
      rec.s = small_subalgebra(rec.fs, sub).s;
      rec.pd = projective_dimension(Ideal(ring, rec.fs), options.limits);
      max_pd = std::max(max_pd, rec.pd);
      if (rec.pd > rec.s) report.bound_holds = false;
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

CensusReport betti_census(const std::vector<std::uint32_t>& degrees, const Field& field, std::size_t n,
                          const ExperimentOptions& options) {
  CensusReport report;
  report.degrees = degrees;
  report.field = field.descriptor();
  report.n = n;
  report.options = options;
  const Ring ring = Ring::standard(field, n);
  const auto tuples = enumerate_tuples(ring, degrees, options);
  report.tuples = tuples.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    BettiTable table = betti(Ideal(ring, tuples[t]), options.limits);
    const std::string key = table.to_csv();
    const auto it = index.find(key);
    if (it != index.end()) {
      ++report.entries[it->second].count;
      continue;
    }
    index.emplace(key, report.entries.size());
    report.entries.push_back({std::move(table), 1, t, tuples[t]});
  }
  return report;
}

}  // namespace bigpoly
