#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bigpoly/derivations.hpp"
#include "bigpoly/hom.hpp"
#include "bigpoly/json_io.hpp"
#include "bigpoly/parse.hpp"

using namespace bigpoly;
using io::json;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t budget_pairs = GbLimits{}.max_pairs;
  std::uint32_t budget_degree = GbLimits{}.max_degree;
  std::uint64_t budget_nodes = OracleLimits{}.max_nodes;
  std::size_t max_n = 8;
  bool quiet = false;
  bool timing = false;

  std::string var;
  std::uint64_t order = 1;
  std::string drop;
  std::size_t n = 3;
  std::size_t n_min = 1;
  std::string degrees = "2,2";
  std::string field = "GF(2)";
  std::string mode = "exhaustive";
  std::size_t samples = 20;

  GbLimits limits() const {
    GbLimits l;
    l.max_pairs = budget_pairs;
    l.max_degree = budget_degree;
    return l;
  }
  OracleLimits oracle() const {
    OracleLimits o;
    o.max_nodes = budget_nodes;
    return o;
  }
};

json read_input(const Options& o) {
  if (o.input.empty()) fail(ErrorKind::kInvalidArgument, "--input is required");
  std::ifstream in(o.input);
  if (!in) fail(ErrorKind::kInvalidArgument, "cannot open " + o.input);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::uint32_t> parse_degrees(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      fail(ErrorKind::kParse, "bad degree list: " + s);
    }
  }
  if (out.empty()) fail(ErrorKind::kParse, "empty degree list");
  return out;
}

std::size_t var_index(const Ring& ring, const std::string& name) {
  const auto i = ring.find(name);
  if (!i) fail(ErrorKind::kNotFound, "no variable named " + name);
  return *i;
}

std::string list_text(const std::vector<Poly>& fs) {
  std::string out;
  for (const auto& f : fs) out += f.to_string() + "\n";
  return out;
}

ExperimentOptions experiment_options(const Options& o) {
  ExperimentOptions e;
  if (o.mode == "sample") {
    e.mode = SearchMode::kSample;
  } else if (o.mode != "exhaustive") {
    fail(ErrorKind::kInvalidArgument, "mode must be exhaustive or sample");
  }
  e.samples = o.samples;
  e.seed = o.seed;
  e.limits = o.limits();
  e.oracle = o.oracle();
  return e;
}

/// One rendering per format; empty means unsupported.
struct Rendered {
  std::optional<json> as_json;
  std::string text;
  std::string csv;
};

Rendered run_strength(const Options& o) {
  const Poly f = io::poly_from_json(read_input(o));
  Rendered r;
  json j;
  std::string text;
  if (!f.is_zero() && has_unsplittable_term(f)) {
    j["strength"] = "inf";
    j["exact"] = true;
    text = "strength: infinite\n";
  } else if (f.field().is_finite()) {
    const auto res = strength_exact_small(f, o.oracle());
    j["strength"] = res.value.to_string();
    j["exact"] = true;
    j["certificate"] = io::certificate_to_json(res.certificate);
    text = "strength: " + res.value.to_string() + "\n";
    for (const auto& [g, h] : res.certificate.pairs) text += "  (" + g.to_string() + ") * (" + h.to_string() + ")\n";
  } else {
    StrengthBounds b{f.is_zero() ? -1 : 0, strength_upper_split(f).bound()};
    StrengthCertificate cert = strength_upper_split(f);
    const auto h = f.homogeneous_degree();
    if (h.ok() && h.degree == 2 && f.ring().standard_graded() && f.field().characteristic() != 2) {
      const auto q = quadric_bounds(f);
      b.lower = std::max(b.lower, q.bounds.lower);
      if (q.bounds.upper < b.upper) {
        b.upper = q.bounds.upper;
        cert = q.certificate;
      }
    }
    j["lower"] = b.lower;
    j["upper"] = *b.upper;
    j["exact"] = b.exact();
    j["certificate"] = io::certificate_to_json(cert);
    text = b.exact() ? "strength: " + std::to_string(b.lower) + "\n"
                     : "strength: between " + std::to_string(b.lower) + " and " + std::to_string(*b.upper) + "\n";
    for (const auto& [g, hh] : cert.pairs) text += "  (" + g.to_string() + ") * (" + hh.to_string() + ")\n";
  }
  r.as_json = j;
  r.text = text;
  return r;
}

Rendered run_cstrength(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  const auto res = collective_strength(fs, o.oracle());
  Rendered r;
  json coeffs = json::array();
  for (const auto& c : res.coefficients) coeffs.push_back(c.to_string());
  r.as_json = json{{"collective_strength", res.value.to_string()},
                   {"coefficients", coeffs},
                   {"combination", res.combination.to_string()},
                   {"certificate", io::certificate_to_json(res.certificate)}};
  r.text = "collective strength: " + (res.value.is_infinite() ? std::string("infinite") : res.value.to_string()) +
           "\nwitness: " + res.combination.to_string() + "\n";
  return r;
}

Rendered run_regseq(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  const bool by_codim = is_regular_sequence(fs, RegSeqMethod::kCodim, o.limits());
  const bool by_koszul = is_regular_sequence(fs, RegSeqMethod::kKoszul, o.limits());
  Rendered r;
  r.as_json = json{{"regular", by_codim}, {"method_agreement", by_codim == by_koszul}};
  r.text = std::string("regular: ") + (by_codim ? "yes" : "no") + "\nmethods agree: " + (by_codim == by_koszul ? "yes" : "no") + "\n";
  return r;
}

Rendered run_codim(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "no generators");
  const auto h = hilbert(Ideal(fs.front().ring(), fs));
  Rendered r;
  r.as_json = json{{"codimension", h.codimension}, {"dimension", h.dimension}, {"hilbert_numerator", h.numerator}};
  r.text = "codimension: " + std::to_string(h.codimension) + "\n";
  return r;
}

Rendered run_eliminate(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "no generators");
  std::vector<std::size_t> drop;
  std::stringstream ss(o.drop);
  std::string name;
  while (std::getline(ss, name, ',')) drop.push_back(var_index(fs.front().ring(), name));
  const Ideal e = eliminate(Ideal(fs.front().ring(), fs), drop, o.limits());
  Rendered r;
  r.as_json = io::polys_to_json(e.generators());
  if (e.generators().empty()) r.as_json = json{{"ring", io::ring_to_json(e.ring())}, {"polys", json::array()}};
  r.text = list_text(e.generators());
  return r;
}

Rendered run_indep(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  const auto res = algebraically_independent(fs, o.limits());
  Rendered r;
  json j{{"independent", res.independent}};
  if (res.relation) j["relation"] = res.relation->to_string();
  r.as_json = j;
  r.text = std::string("independent: ") + (res.independent ? "yes" : "no") + "\n";
  if (res.relation) r.text += "relation: " + res.relation->to_string() + "\n";
  return r;
}

Rendered run_betti(const Options& o) {
  const GradedMap phi = io::presentation_from_json(read_input(o));
  const Resolution res = minimal_free_resolution(phi, o.limits());
  const BettiTable table(res);
  Rendered r;
  r.as_json = io::betti_to_json(table);
  r.text = table.to_text();
  r.csv = table.to_csv();
  return r;
}

Rendered run_hasse(const Options& o) {
  const Poly f = io::poly_from_json(read_input(o));
  const Poly d = hasse(f, var_index(f.ring(), o.var), o.order);
  Rendered r;
  r.as_json = io::poly_to_json(d);
  r.text = d.to_string() + "\n";
  return r;
}

Rendered run_witness(const Options& o) {
  const Poly f = io::poly_from_json(read_input(o));
  const auto w = enough_witness(f);
  Rendered r;
  if (w) {
    r.as_json = json{{"witness", f.ring().vars()[*w].name}, {"derivative", hasse(f, *w, 1).to_string()}};
    r.text = "witness: " + f.ring().vars()[*w].name + "\n";
  } else {
    json j{{"witness", nullptr}};
    if (const auto root = pth_power_root(f)) j["pth_root"] = root->to_string();
    r.as_json = j;
    r.text = "witness: none\n";
  }
  return r;
}

Rendered run_monicize(const Options& o) {
  const Poly f = io::poly_from_json(read_input(o));
  const std::size_t pivot = o.var.empty() ? 0 : var_index(f.ring(), o.var);
  const auto m = monicize(f, pivot);
  Rendered r;
  json shifts = json::array();
  for (const auto& a : m.a) shifts.push_back(a.to_string());
  r.as_json = json{{"pivot", f.ring().vars()[pivot].name},
                   {"shifts", shifts},
                   {"unit", m.unit.to_string()},
                   {"monic", m.monic.to_string()}};
  r.text = "monic: " + m.monic.to_string() + "\nunit: " + m.unit.to_string() + "\n";
  return r;
}

Rendered run_truncate(const Options& o) {
  const auto es = io::limit_elements_from_json(read_input(o));
  std::vector<Poly> out;
  for (const auto& e : es) out.push_back(truncate_limit(e, o.n));
  Rendered r;
  r.as_json = io::polys_to_json(out);
  r.text = list_text(out);
  return r;
}

Rendered run_stabilize(const Options& o) {
  const auto es = io::limit_elements_from_json(read_input(o));
  const auto st = regseq_stabilization(es, o.max_n, o.limits());
  Rendered r;
  r.as_json = json{{"n", st.n}, {"max_n", o.max_n}, {"regular", st.regular}};
  r.text = "regular from n = " + std::to_string(st.n) + " (checked up to " + std::to_string(o.max_n) + ")\n";
  return r;
}

const Field& sample_field(const Field& family) {
  if (family.kind() != FieldKind::kRationalFunctions) return family;
  return family.base();
}

Rendered run_regular_locus(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  if (fs.empty()) fail(ErrorKind::kInvalidArgument, "empty family");
  const Field& F = fs.front().field();
  const auto open = regular_locus(fs, o.limits());
  Rng rng(o.seed);
  const Field& k = sample_field(F);
  std::size_t verified = 0;
  const auto points = sample_open(open, F, k, o.samples, rng);
  for (const auto& y : points) {
    std::vector<Poly> sp;
    for (const auto& f : fs) sp.push_back(specialize(f, y, k));
    if (!is_regular_sequence(sp, RegSeqMethod::kCodim, o.limits())) {
      fail(ErrorKind::kInvariantViolated, "a sampled point of the open set is not regular");
    }
    ++verified;
  }
  Rendered r;
  const std::string g = io::open_to_string(open, F);
  r.as_json = json{{"g", g}, {"sampled_points", points.size()}, {"verified_points", verified}, {"sample_field", k.descriptor()}};
  r.text = "regular where " + g + " != 0 (" + std::to_string(verified) + " sampled points verified over " +
           k.descriptor() + ")\n";
  return r;
}

Rendered run_constant_betti(const Options& o) {
  const GradedMap phi = io::presentation_from_json(read_input(o));
  const Field& F = phi.ring().field();
  const auto res = constant_betti_open(phi, o.limits());
  Rng rng(o.seed);
  const Field& k = sample_field(F);
  const auto points = sample_open(res.open, F, k, o.samples, rng);
  for (const auto& y : points) {
    if (betti(specialize(phi, y, k), o.limits()) != res.table) {
      fail(ErrorKind::kInvariantViolated, "a sampled point of the open set has a different Betti table");
    }
  }
  Rendered r;
  const std::string g = io::open_to_string(res.open, F);
  json j = io::betti_to_json(res.table);
  j["g"] = g;
  j["verified_points"] = points.size();
  j["sample_field"] = k.descriptor();
  r.as_json = j;
  r.text = "constant Betti table where " + g + " != 0 (" + std::to_string(points.size()) +
           " sampled points verified over " + k.descriptor() + ")\n" + res.table.to_text();
  r.csv = res.table.to_csv();
  return r;
}

Rendered run_threshold(const Options& o) {
  const auto report = threshold_search(parse_degrees(o.degrees), parse_field_descriptor(o.field), o.n,
                                       experiment_options(o));
  return {io::threshold_to_json(report), io::threshold_to_text(report), io::threshold_to_csv(report)};
}

Rendered run_subalgebra(const Options& o) {
  const auto fs = io::polys_from_json(read_input(o));
  SubalgebraOptions so;
  so.limits = o.limits();
  so.oracle = o.oracle();
  const auto res = small_subalgebra(fs, so);
  return {io::subalgebra_to_json(res), io::subalgebra_to_text(res), {}};
}

Rendered run_pd(const Options& o) {
  ExperimentOptions e = experiment_options(o);
  if (o.mode == "exhaustive" && o.samples) e.mode = SearchMode::kSample;
  const auto report = pd_experiment(parse_degrees(o.degrees), parse_field_descriptor(o.field), o.n_min, o.max_n, e);
  return {io::pd_to_json(report), io::pd_to_text(report), io::pd_to_csv(report)};
}

Rendered run_census(const Options& o) {
  const auto report =
      betti_census(parse_degrees(o.degrees), parse_field_descriptor(o.field), o.n, experiment_options(o));
  return {io::census_to_json(report), io::census_to_text(report), io::census_to_csv(report)};
}

void emit(const Options& o, const Rendered& r, double seconds) {
  std::string body;
  if (o.format == "json") {
    json j = r.as_json ? *r.as_json : json::object();
    if (o.timing) j["seconds"] = seconds;
    body = io::dump(j);
  } else if (o.format == "csv") {
    if (r.csv.empty()) fail(ErrorKind::kInvalidArgument, "csv output is not available for this command");
    body = r.csv;
  } else {
    body = r.text;
    if (o.timing) body += "seconds: " + std::to_string(seconds) + "\n";
  }
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) fail(ErrorKind::kInvalidArgument, "cannot write " + o.output);
    out << body;
  }
  if (!o.quiet && o.output.empty()) std::cout << body;
}

int report_error(const std::string& kind, const std::string& message, const json& extra = {}) {
  json j{{"error", kind}, {"message", message}};
  if (extra.is_object()) {
    for (const auto& [k, v] : extra.items()) j[k] = v;
  }
  std::cerr << j.dump() << "\n";
  return kind == "BudgetExceeded" ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial strength, regular sequences and Betti tables"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--input", o.input, "Input JSON file");
  app.add_option("--output", o.output, "Write the result here instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--budget-pairs", o.budget_pairs, "Groebner pair budget");
  app.add_option("--budget-degree", o.budget_degree, "Groebner degree budget");
  app.add_option("--budget-nodes", o.budget_nodes, "Strength search budget");
  app.add_option("--max-n", o.max_n, "Largest number of variables");
  app.add_flag("--quiet", o.quiet, "Print nothing on success");
  app.add_flag("--timing", o.timing, "Append wall-clock time");

  using Runner = std::function<Rendered(const Options&)>;
  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto add = [&](const std::string& name, const std::string& help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, std::move(run));
    return sub;
  };
  add("strength", "Strength of one form", run_strength);
  add("cstrength", "Collective strength of a tuple", run_cstrength);
  add("regseq", "Regular-sequence test by codimension and Koszul homology", run_regseq);
  add("codim", "Codimension and Hilbert series", run_codim);
  add("eliminate", "Eliminate variables", run_eliminate)->add_option("--drop", o.drop, "Comma-separated names")->required();
  add("indep", "Algebraic independence", run_indep);
  add("betti", "Betti table of a cokernel or of R/I", run_betti);
  auto* hasse_cmd = add("hasse", "Hasse derivative", run_hasse);
  hasse_cmd->add_option("--var", o.var, "Variable name")->required();
  hasse_cmd->add_option("--order", o.order, "Order of the derivative");
  add("witness", "Variable with a nonzero first Hasse derivative", run_witness);
  add("monicize", "Monicizing change of coordinates", run_monicize)->add_option("--var", o.var, "Pivot variable");
  add("truncate", "Truncate limit elements", run_truncate)->add_option("--n", o.n, "Number of variables");
  add("stabilize", "Where truncations become regular", run_stabilize);
  add("regular-locus", "Open set where a family stays regular", run_regular_locus)
      ->add_option("--samples", o.samples, "Points to verify");
  add("constant-betti", "Open set with constant Betti table", run_constant_betti)
      ->add_option("--samples", o.samples, "Points to verify");
  for (auto [name, help, run] : {std::tuple<const char*, const char*, Runner>{"threshold", "Threshold search", run_threshold},
                                 {"census", "Betti census", run_census}}) {
    auto* sub = add(name, help, run);
    sub->add_option("--degrees", o.degrees, "Comma-separated degrees");
    sub->add_option("--field", o.field, "Finite field descriptor");
    sub->add_option("--n", o.n, "Number of variables");
    sub->add_option("--mode", o.mode, "exhaustive or sample");
    sub->add_option("--samples", o.samples, "Tuples in sample mode");
  }
  add("subalgebra", "Small subalgebra containing a tuple", run_subalgebra);
  auto* pd = add("pd-exp", "Projective dimension experiment", run_pd);
  pd->add_option("--degrees", o.degrees, "Comma-separated degrees");
  pd->add_option("--field", o.field, "Finite field descriptor");
  pd->add_option("--n-min", o.n_min, "Smallest number of variables");
  pd->add_option("--samples", o.samples, "Tuples per n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("Usage", e.what());
  }

  try {
    for (const auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      const auto start = std::chrono::steady_clock::now();
      const Rendered r = run(o);
      emit(o, r, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
  } catch (const BudgetExceeded& e) {
    json extra = json::object();
    if (e.lower()) extra["lower"] = *e.lower();
    if (e.upper()) extra["upper"] = *e.upper();
    return report_error("BudgetExceeded", e.what(), extra);
  } catch (const Error& e) {
    return report_error(to_string(e.kind()), e.what());
  } catch (const json::exception& e) {
    return report_error("Parse", e.what());
  }
  return 0;
}
