#include "bigpoly/param_poly.hpp"

#include <algorithm>
#include <map>

namespace bigpoly {

namespace {

// Lex comparison, t1 most significant.
bool lex_greater(const ParamPoly::Exps& a, const ParamPoly::Exps& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct LexGreater {
  bool operator()(const ParamPoly::Exps& a, const ParamPoly::Exps& b) const { return lex_greater(a, b); }
};

}  // namespace

ParamPoly::ParamPoly(const Field& base, std::size_t nparams) : base_(&base), nparams_(nparams) {
  if (base.kind() == FieldKind::kRationalFunctions) {
    fail(ErrorKind::kInvalidDescriptor, "parameter polynomials need a non-parametric base");
  }
}

ParamPoly ParamPoly::constant(const Field& base, std::size_t nparams, const FieldElem& c) {
  ParamPoly out(base, nparams);
  if (!c.is_zero()) out.terms_.emplace_back(Exps(nparams, 0), c);
  return out;
}

ParamPoly ParamPoly::variable(const Field& base, std::size_t nparams, std::size_t i) {
  ParamPoly out(base, nparams);
  Exps e(nparams, 0);
  e.at(i) = 1;
  out.terms_.emplace_back(std::move(e), base.one());
  return out;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return lex_greater(a.first, b.first); });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    if (!t.second.is_zero()) terms_.push_back(std::move(t));
  }
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].first.begin(), terms_[0].first.end(), [](auto e) { return e == 0; });
}

bool ParamPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].second.is_one(); }

FieldElem ParamPoly::leading_coeff() const {
  if (terms_.empty()) return base_->zero();
  return terms_.front().second;
}

const ParamPoly::Exps& ParamPoly::leading_exps() const {
  if (terms_.empty()) fail(ErrorKind::kZeroInput, "leading term of zero");
  return terms_.front().first;
}

std::uint32_t ParamPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t ParamPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
  if (a.base_ != b.base_ || a.nparams_ != b.nparams_) {
    fail(ErrorKind::kDescriptorMismatch, "parameter polynomials over different rings");
  }
  ParamPoly out(*a.base_, a.nparams_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && lex_greater(a.terms_[i].first, b.terms_[j].first))) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || lex_greater(b.terms_[j].first, a.terms_[i].first)) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      FieldElem c = a.terms_[i].second + b.terms_[j].second;
      if (!c.is_zero()) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.base_ != b.base_ || a.nparams_ != b.nparams_) {
    fail(ErrorKind::kDescriptorMismatch, "parameter polynomials over different rings");
  }
  std::map<ParamPoly::Exps, FieldElem, LexGreater> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ParamPoly::Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(std::move(e), ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  ParamPoly out(*a.base_, a.nparams_);
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(e, c);
  }
  return out;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  return a.base_ == b.base_ && a.nparams_ == b.nparams_ && a.terms_ == b.terms_;
}

ParamPoly ParamPoly::scaled(const FieldElem& c) const {
  if (c.is_zero()) return ParamPoly(*base_, nparams_);
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

ParamPoly ParamPoly::shifted(std::size_t var, std::uint32_t power) const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.first[var] += power;
  return out;
}

ParamPoly ParamPoly::pow(std::uint64_t e) const {
  ParamPoly result = constant(*base_, nparams_, base_->one());
  ParamPoly b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

ParamPoly ParamPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

FieldElem ParamPoly::evaluate(const std::vector<FieldElem>& values) const {
  if (values.size() != nparams_) fail(ErrorKind::kInvalidArgument, "wrong number of parameter values");
  FieldElem acc = base_->zero();
  for (const auto& [e, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= values[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

ParamPoly ParamPoly::coeff_in(std::size_t var, std::uint32_t k) const {
  ParamPoly out(*base_, nparams_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == k) {
      Exps f = e;
      f[var] = 0;
      out.terms_.emplace_back(std::move(f), c);
    }
  }
  out.normalize();
  return out;
}

std::string ParamPoly::to_string(const std::vector<std::string>* names) const {
  if (terms_.empty()) return "0";
  const Field& f = *base_;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names ? (*names)[i] : "t" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    bool negative = false;
    if (f.kind() == FieldKind::kRationals && sgn(c.rational()) < 0) {
      negative = true;
      coeff = mpq_class(-c.rational()).get_str();
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ParamPoly exact_divide(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) fail(ErrorKind::kDivisionByZero, "division by the zero polynomial");
  ParamPoly q(a.base(), a.nparams());
  ParamPoly r = a;
  const auto& lb = b.leading_exps();
  const FieldElem lcb_inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    const auto& lr = r.leading_exps();
    ParamPoly::Exps diff(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lb[i]) fail(ErrorKind::kInvalidArgument, "exact_divide: not divisible");
      diff[i] = lr[i] - lb[i];
    }
    ParamPoly t = ParamPoly::constant(a.base(), a.nparams(), r.leading_coeff() * lcb_inv);
    for (std::size_t i = 0; i < diff.size(); ++i) t = t.shifted(i, diff[i]);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

int main_variable(const ParamPoly& a) {
  int v = -1;
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) v = std::max(v, static_cast<int>(i));
    }
  }
  return v;
}

ParamPoly content_in(const ParamPoly& a, std::size_t var) {
  ParamPoly g(a.base(), a.nparams());
  for (std::uint32_t k = 0; k <= a.degree_in(var); ++k) {
    ParamPoly c = a.coeff_in(var, k);
    if (!c.is_zero()) g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly primitive_part(const ParamPoly& a, std::size_t var) {
  if (a.is_zero()) return a;
  return exact_divide(a, content_in(a, var));
}

// lc(B)^k * A reduced modulo B as polynomials in var.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const ParamPoly lcb = b.coeff_in(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::uint32_t da = a.degree_in(var);
    const ParamPoly lca = a.coeff_in(var, da);
    a = lcb * a - (lca * b).shifted(var, da - db);
  }
  return a;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) {
    return ParamPoly::constant(a.base(), a.nparams(), a.base().one());
  }
  const int v = std::max(main_variable(a), main_variable(b));
  const auto var = static_cast<std::size_t>(v);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

  const ParamPoly ca = content_in(a, var);
  const ParamPoly cb = content_in(b, var);
  ParamPoly x = exact_divide(a, ca).monic();
  ParamPoly y = exact_divide(b, cb).monic();
  if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree_in(var) == 0) {
      // Primitive parts are coprime in var.
      x = ParamPoly::constant(a.base(), a.nparams(), a.base().one());
      break;
    }
    ParamPoly r = pseudo_remainder(x, y, var);
    x = std::move(y);
    y = primitive_part(r, var);
    if (!y.is_zero()) y = y.monic();
  }
  return (gcd(ca, cb) * primitive_part(x, var)).monic();
}

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return ParamPoly(a.base(), a.nparams());
  return exact_divide(a * b, gcd(a, b)).monic();
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::kDivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly::constant(num_.base(), num_.nparams(), num_.base().one());
    return;
  }
  if (!den_.is_constant()) {
    const ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const FieldElem lc = den_.leading_coeff();
  if (!lc.is_one()) {
    const FieldElem inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc::RatFunc(ParamPoly num)
    : num_(std::move(num)), den_(ParamPoly::constant(num_.base(), num_.nparams(), num_.base().one())) {}

}  // namespace bigpoly
