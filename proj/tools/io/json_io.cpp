#include "bigpoly/json_io.hpp"

#include <sstream>

#include "bigpoly/parse.hpp"

namespace bigpoly::io {

const char* const kToolVersion = "0.1.0";

namespace {

[[noreturn]] void bad(const std::string& message) { fail(ErrorKind::kParse, message); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string join_u32(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Poly poly_in_ring(const Ring& ring, const json& j) {
  if (j.is_string()) return parse_poly(ring, j.get<std::string>());
  if (j.is_object() && j.contains("expr")) return parse_poly(ring, member(j, "expr").get<std::string>());
  if (j.is_object() && j.contains("terms")) {
    std::vector<Poly::Term> terms;
    for (const auto& t : member(j, "terms")) {
      const auto exps = member(t, "exps").get<std::vector<std::uint32_t>>();
      if (exps.size() != ring.nvars()) bad("exponent vector has the wrong length");
      const json& c = member(t, "coeff");
      const FieldElem coeff = c.is_string() ? parse_field_element(ring.field(), c.get<std::string>())
                                            : ring.field().from_int(c.get<long long>());
      terms.emplace_back(ring.monomial(Monomial::Exps(exps.begin(), exps.end())), coeff);
    }
    return Poly::from_terms(ring, std::move(terms));
  }
  bad("expected a polynomial (expr string or terms object)");
}

std::string strength_cell(const StrengthValue& v) { return v.to_string(); }

json parameters(const std::string& kind, const std::vector<std::uint32_t>& degrees, const std::string& field,
                const ExperimentOptions& o) {
  json p;
  p["experiment"] = kind;
  p["degrees"] = degrees;
  p["field"] = field;
  p["mode"] = o.mode == SearchMode::kExhaustive ? "exhaustive" : "sample";
  if (o.mode == SearchMode::kSample) {
    p["samples"] = o.samples;
    p["seed"] = o.seed;
  }
  p["budget_pairs"] = o.limits.max_pairs;
  p["budget_degree"] = o.limits.max_degree;
  p["budget_nodes"] = o.oracle.max_nodes;
  return p;
}

json conventions() {
  return json::array({"tuples range over nonzero forms only",
                      "strength(0) = -1; a linearly dependent tuple has collective strength -1",
                      "forms of degree 1 have infinite strength"});
}

std::string poly_list(const std::vector<Poly>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "; " : "") + fs[i].to_string();
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

json ring_to_json(const Ring& ring) {
  json j;
  j["field"] = ring.field().descriptor();
  j["vars"] = json::array();
  for (const auto& v : ring.vars()) j["vars"].push_back({{"name", v.name}, {"degree", v.degree}});
  return j;
}

Ring ring_from_json(const json& j) {
  const Field& field = parse_field_descriptor(member(j, "field").get<std::string>());
  std::vector<Variable> vars;
  for (const auto& v : member(j, "vars")) {
    if (v.is_string()) {
      vars.push_back({v.get<std::string>(), 1});
    } else {
      vars.push_back({member(v, "name").get<std::string>(), v.value("degree", 1u)});
    }
  }
  return Ring(field, std::move(vars));
}

json terms_to_json(const Poly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"coeff", c.to_string()}, {"exps", std::vector<std::uint32_t>(m.exps().begin(), m.exps().end())}});
  }
  return terms;
}

json poly_to_json(const Poly& f) {
  json j = ring_to_json(f.ring());
  j["terms"] = terms_to_json(f);
  return j;
}

Poly poly_from_json(const json& j) { return poly_in_ring(ring_from_json(j), j); }

std::vector<Poly> polys_from_json(const json& j) {
  std::vector<Poly> out;
  if (j.is_array()) {
    for (const auto& p : j) out.push_back(poly_from_json(p));
    for (const auto& f : out) {
      if (f.ring() != out.front().ring()) fail(ErrorKind::kRingMismatch, "polynomials over different rings");
    }
    return out;
  }
  if (j.is_object() && j.contains("polys")) {
    const Ring ring = ring_from_json(j);
    for (const auto& p : member(j, "polys")) out.push_back(poly_in_ring(ring, p));
    return out;
  }
  out.push_back(poly_from_json(j));
  return out;
}

json polys_to_json(const std::vector<Poly>& fs) {
  if (fs.empty()) return json::array();
  json j = ring_to_json(fs.front().ring());
  j["polys"] = json::array();
  for (const auto& f : fs) j["polys"].push_back({{"terms", terms_to_json(f)}});
  return j;
}

GradedMap presentation_from_json(const json& j) {
  if (j.is_object() && j.contains("columns")) {
    const Ring ring = ring_from_json(j);
    const auto target = member(j, "target").get<std::vector<std::int64_t>>();
    const auto source = member(j, "source").get<std::vector<std::int64_t>>();
    std::vector<std::vector<Poly>> cols;
    for (const auto& c : member(j, "columns")) {
      std::vector<Poly> col;
      for (const auto& e : c) col.push_back(poly_in_ring(ring, e));
      cols.push_back(std::move(col));
    }
    return GradedMap(FreeModule{ring, source}, FreeModule{ring, target}, std::move(cols));
  }
  const auto fs = polys_from_json(j);
  if (fs.empty()) bad("empty presentation");
  return GradedMap::row(fs.front().ring(), fs);
}

json presentation_to_json(const GradedMap& phi) {
  json j = ring_to_json(phi.ring());
  j["target"] = phi.target().degrees;
  j["source"] = phi.source().degrees;
  j["columns"] = json::array();
  for (const auto& c : phi.columns()) {
    json col = json::array();
    for (const auto& e : c) col.push_back({{"terms", terms_to_json(e)}});
    j["columns"].push_back(std::move(col));
  }
  return j;
}

std::vector<LimitElement> limit_elements_from_json(const json& j) {
  const Field& field = parse_field_descriptor(member(j, "field").get<std::string>());
  std::vector<LimitElement> out;
  for (const auto& e : member(j, "elements")) {
    const std::size_t n0 = e.value("n0", std::size_t{0});
    const Ring ring = Ring::standard(field, n0);
    Poly head = e.contains("head") ? poly_in_ring(ring, e.at("head")) : Poly(ring);
    std::optional<PowerSumTail> tail;
    if (e.contains("tail")) {
      const json& t = e.at("tail");
      const json& c = t.contains("coeff") ? t.at("coeff") : json("1");
      tail = PowerSumTail{c.is_string() ? parse_field_element(field, c.get<std::string>())
                                        : field.from_int(c.get<long long>()),
                          member(t, "degree").get<std::uint32_t>(), t.value("start", n0),
                          t.value("index_weighted", false)};
    }
    out.emplace_back(std::move(head), std::move(tail));
  }
  return out;
}

json certificate_to_json(const StrengthCertificate& cert) {
  json pairs = json::array();
  for (const auto& [g, h] : cert.pairs) pairs.push_back({{"g", g.to_string()}, {"h", h.to_string()}});
  return pairs;
}

json betti_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, count] : table.entries()) entries.push_back({key.first, key.second, count});
  return {{"betti", entries}, {"projective_dimension", table.projective_dimension()}, {"betti_hash", table.hash()}};
}

std::string open_to_string(const DistinguishedOpen& open, const Field& field) {
  if (field.kind() == FieldKind::kRationalFunctions) return open.g.to_string(&field.params());
  return open.g.to_string();
}

json threshold_to_json(const ThresholdReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["parameters"] = parameters("threshold", r.degrees, r.field, r.options);
  j["parameters"]["n"] = r.n;
  j["conventions"] = conventions();
  j["tuples"] = r.records.size();
  j["n_hat"] = r.n_hat;
  j["consistent"] = r.consistent;
  json hist = json::array();
  for (const auto& [key, count] : r.histogram) {
    hist.push_back({{"collective_strength", strength_cell(key.first)}, {"regular", key.second}, {"count", count}});
  }
  j["histogram"] = hist;
  return j;
}

std::string threshold_to_csv(const ThresholdReport& r) {
  std::string out = "tuple_id,forms,collective_strength,regular\n";
  for (const auto& rec : r.records) {
    out += std::to_string(rec.tuple_id) + "," + csv_quote(poly_list(rec.fs)) + "," +
           strength_cell(rec.collective_strength) + "," + (rec.regular ? "true" : "false") + "\n";
  }
  return out;
}

std::string threshold_to_text(const ThresholdReport& r) {
  std::ostringstream out;
  out << "threshold search: degrees (" << join_u32(r.degrees) << ") over " << r.field << ", n = " << r.n << "\n";
  out << "tuples: " << r.records.size() << "\n";
  out << "collective strength | regular | count\n";
  for (const auto& [key, count] : r.histogram) {
    out << strength_cell(key.first) << " | " << (key.second ? "yes" : "no") << " | " << count << "\n";
  }
  out << "N-hat: " << r.n_hat << "\n";
  out << "consistent: " << (r.consistent ? "yes" : "no") << "\n";
  return out.str();
}

json census_to_json(const CensusReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["parameters"] = parameters("census", r.degrees, r.field, r.options);
  j["parameters"]["n"] = r.n;
  j["conventions"] = conventions();
  j["tuples"] = r.tuples;
  j["distinct_tables"] = r.entries.size();
  json tables = json::array();
  for (const auto& e : r.entries) {
    json t = betti_to_json(e.table);
    t["count"] = e.count;
    t["first_tuple"] = e.first_tuple;
    t["example"] = json::array();
    for (const auto& f : e.example) t["example"].push_back(f.to_string());
    tables.push_back(std::move(t));
  }
  j["tables"] = tables;
  return j;
}

std::string census_to_csv(const CensusReport& r) {
  std::string out = "table_id,count,first_tuple,projective_dimension,betti_hash,example\n";
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const auto& e = r.entries[k];
    out += std::to_string(k) + "," + std::to_string(e.count) + "," + std::to_string(e.first_tuple) + "," +
           std::to_string(e.table.projective_dimension()) + "," + e.table.hash() + "," +
           csv_quote(poly_list(e.example)) + "\n";
  }
  return out;
}

std::string census_to_text(const CensusReport& r) {
  std::ostringstream out;
  out << "Betti census: degrees (" << join_u32(r.degrees) << ") over " << r.field << ", n = " << r.n << "\n";
  out << "tuples: " << r.tuples << ", distinct tables: " << r.entries.size() << "\n";
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    const auto& e = r.entries[k];
    out << "\ntable " << k << ": " << e.count << " tuples, e.g. (" << poly_list(e.example) << ")\n";
    out << e.table.to_text();
  }
  return out.str();
}

json pd_to_json(const PdReport& r) {
  json j;
  j["tool_version"] = kToolVersion;
  j["parameters"] = parameters("pd", r.degrees, r.field, r.options);
  j["parameters"]["n_min"] = r.n_min;
  j["parameters"]["n_max"] = r.n_max;
  j["conventions"] = conventions();
  j["bound_holds"] = r.bound_holds;
  json per_n = json::array();
  for (const auto& [n, pd] : r.max_pd_by_n) per_n.push_back({{"n", n}, {"max_pd", pd}});
  j["max_pd_by_n"] = per_n;
  return j;
}

std::string pd_to_csv(const PdReport& r) {
  std::string out = "n,sample,forms,s,pd\n";
  for (const auto& rec : r.records) {
    out += std::to_string(rec.n) + "," + std::to_string(rec.sample) + "," + csv_quote(poly_list(rec.fs)) + "," +
           std::to_string(rec.s) + "," + std::to_string(rec.pd) + "\n";
  }
  return out;
}

std::string pd_to_text(const PdReport& r) {
  std::ostringstream out;
  out << "projective dimension experiment: degrees (" << join_u32(r.degrees) << ") over " << r.field << "\n";
  for (const auto& [n, pd] : r.max_pd_by_n) out << "n = " << n << ": max pd " << pd << "\n";
  out << "pd <= s on every sample: " << (r.bound_holds ? "yes" : "no") << "\n";
  return out.str();
}

json subalgebra_to_json(const SmallSubalgebra& r) {
  json j;
  j["s"] = r.s;
  j["gs"] = json::array();
  for (const auto& g : r.gs) j["gs"].push_back(g.to_string());
  j["expressions"] = json::array();
  for (const auto& e : r.expressions) j["expressions"].push_back(e.to_string());
  j["trace"] = json::array();
  for (const auto& step : r.trace) j["trace"].push_back({{"type", step.type}, {"action", step.action}});
  return j;
}

std::string subalgebra_to_text(const SmallSubalgebra& r) {
  std::ostringstream out;
  out << "s: " << r.s << "\n";
  for (std::size_t i = 0; i < r.gs.size(); ++i) out << "g" << i + 1 << " = " << r.gs[i].to_string() << "\n";
  for (std::size_t i = 0; i < r.expressions.size(); ++i) {
    out << "f" << i + 1 << " = " << r.expressions[i].to_string() << "\n";
  }
  out << "trace:\n";
  for (const auto& step : r.trace) out << "  " << step.action << "\n";
  return out.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bigpoly::io
