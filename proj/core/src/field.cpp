#include "bigpoly/field.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "bigpoly/param_poly.hpp"
#include "bigpoly/parse.hpp"

namespace bigpoly {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

class FieldRegistry {
 public:
  static const Field& intern(FieldKind kind, std::uint64_t p, unsigned e,
                             std::vector<std::uint64_t> min_poly,
                             std::vector<std::string> params, const Field* base) {
    auto candidate = std::unique_ptr<Field>(
        new Field(kind, p, e, std::move(min_poly), std::move(params), base));
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Field>> fields;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = fields.find(candidate->descriptor());
    if (it != fields.end()) return *it->second;
    const std::string key = candidate->descriptor();
    return *fields.emplace(key, std::move(candidate)).first->second;
  }
};

namespace {

// Evaluate a polynomial with GF(p) coefficients (low-to-high) at x.
std::uint64_t eval_mod(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// Remainder of a monic-or-not polynomial division over GF(p); divisor monic.
std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& m,
                                    std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p * p - (lead * m[i]) % p) % p;
    }
    a.pop_back();
  }
  return a;
}

bool irreducible_small(const std::vector<std::uint64_t>& m, std::uint64_t p) {
  const std::size_t e = m.size() - 1;
  if (e == 1) return true;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (eval_mod(m, x, p) == 0) return false;
  }
  if (e <= 3) return true;
  // e == 4: rule out a product of two monic quadratics.
  for (std::uint64_t c0 = 0; c0 < p; ++c0) {
    for (std::uint64_t c1 = 0; c1 < p; ++c1) {
      auto r = poly_mod(m, {c0, c1, 1}, p);
      bool zero = true;
      for (auto c : r) zero = zero && (c % p == 0);
      if (zero) return false;
    }
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field::Field(FieldKind kind, std::uint64_t p, unsigned e, std::vector<std::uint64_t> min_poly,
             std::vector<std::string> params, const Field* base)
    : kind_(kind), p_(p), e_(e), min_poly_(std::move(min_poly)), params_(std::move(params)), base_(base) {
  std::ostringstream key;
  switch (kind_) {
    case FieldKind::kRationals:
      key << "QQ";
      break;
    case FieldKind::kPrime:
      q_ = p_;
      key << "GF(" << p_ << ")";
      break;
    case FieldKind::kExtension: {
      q_ = 1;
      for (unsigned i = 0; i < e_; ++i) q_ *= p_;
      key << "GF(" << p_ << "^" << e_ << ";";
      for (std::size_t i = 0; i < min_poly_.size(); ++i) key << (i ? "," : "") << min_poly_[i];
      key << ")";
      break;
    }
    case FieldKind::kRationalFunctions: {
      p_ = base_->characteristic();
      key << "Frac(" << base_->descriptor() << "[";
      for (std::size_t i = 0; i < params_.size(); ++i) key << (i ? "," : "") << params_[i];
      key << "])";
      break;
    }
  }
  descriptor_ = key.str();
}

const Field& Field::rationals() {
  static const Field& qq = FieldRegistry::intern(FieldKind::kRationals, 0, 1, {}, {}, nullptr);
  return qq;
}

const Field& Field::prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorKind::kInvalidDescriptor, "not a prime: " + std::to_string(p));
  if (p >= (1ULL << 32)) fail(ErrorKind::kInvalidDescriptor, "prime too large: " + std::to_string(p));
  return FieldRegistry::intern(FieldKind::kPrime, p, 1, {}, {}, nullptr);
}

const Field& Field::extension(std::uint64_t p, unsigned e, std::vector<std::uint64_t> min_poly) {
  if (!is_prime(p)) fail(ErrorKind::kInvalidDescriptor, "not a prime: " + std::to_string(p));
  if (e < 1 || e > 4) fail(ErrorKind::kInvalidDescriptor, "extension degree must be in 1..4");
  if (min_poly.size() != e + 1 || min_poly.back() != 1) {
    fail(ErrorKind::kInvalidDescriptor, "min_poly must be monic of degree e (low-to-high)");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q >= (1ULL << 31)) fail(ErrorKind::kInvalidDescriptor, "extension field too large");
  }
  for (auto c : min_poly) {
    if (c >= p) fail(ErrorKind::kInvalidDescriptor, "min_poly coefficient out of range");
  }
  if (!irreducible_small(min_poly, p)) fail(ErrorKind::kInvalidDescriptor, "min_poly is reducible");
  if (e == 1) return prime(p);
  return FieldRegistry::intern(FieldKind::kExtension, p, e, std::move(min_poly), {}, nullptr);
}

const Field& Field::rational_functions(std::vector<std::string> params, const Field& base) {
  if (base.kind() == FieldKind::kRationalFunctions) {
    fail(ErrorKind::kInvalidDescriptor, "rational functions over rational functions not supported");
  }
  if (params.empty()) fail(ErrorKind::kInvalidDescriptor, "rational-function field needs parameters");
  std::set<std::string> seen(params.begin(), params.end());
  if (seen.size() != params.size()) fail(ErrorKind::kInvalidDescriptor, "duplicate parameter names");
  return FieldRegistry::intern(FieldKind::kRationalFunctions, 0, 1, {}, std::move(params), &base);
}

std::optional<std::uint64_t> Field::size() const {
  if (is_finite()) return q_;
  return std::nullopt;
}

const Field& Field::base() const {
  if (kind_ != FieldKind::kRationalFunctions) fail(ErrorKind::kNotApplicable, "field has no parameter base");
  return *base_;
}

void Field::check(const FieldElem& a) const {
  if (a.field_ != this) {
    fail(ErrorKind::kDescriptorMismatch,
         "element of " + (a.field_ ? a.field_->descriptor() : std::string("<none>")) + " used in " + descriptor_);
  }
}

std::vector<std::uint64_t> Field::unpack(std::uint64_t index) const {
  std::vector<std::uint64_t> digits(e_);
  for (unsigned i = 0; i < e_; ++i) {
    digits[i] = index % p_;
    index /= p_;
  }
  return digits;
}

std::uint64_t Field::pack(const std::vector<std::uint64_t>& digits) const {
  std::uint64_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) index = index * p_ + digits[i] % p_;
  return index;
}

std::uint64_t Field::ext_mul(std::uint64_t a, std::uint64_t b) const {
  const auto da = unpack(a);
  const auto db = unpack(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  auto r = poly_mod(std::move(prod), min_poly_, p_);
  r.resize(e_, 0);
  return pack(r);
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long value) const {
  return from_integer(mpz_class(static_cast<long>(value)));
}

FieldElem Field::from_integer(const mpz_class& value) const {
  switch (kind_) {
    case FieldKind::kRationals:
      return FieldElem(this, mpq_class(value));
    case FieldKind::kPrime:
    case FieldKind::kExtension: {
      mpz_class r = value % mpz_class(static_cast<unsigned long>(p_));
      if (r < 0) r += static_cast<unsigned long>(p_);
      return FieldElem(this, static_cast<std::uint64_t>(r.get_ui()));
    }
    case FieldKind::kRationalFunctions:
      return embed_base(base_->from_integer(value));
  }
  return {};
}

FieldElem Field::from_rational(const mpq_class& value) const {
  if (kind_ == FieldKind::kRationals) {
    if (value.get_den() == 0) fail(ErrorKind::kDivisionByZero, "zero denominator");
    mpq_class v = value;
    v.canonicalize();
    return FieldElem(this, std::move(v));
  }
  return div(from_integer(value.get_num()), from_integer(value.get_den()));
}

FieldElem Field::from_residue(std::uint64_t value) const {
  if (!is_finite()) fail(ErrorKind::kNotApplicable, "residues only exist in finite fields");
  if (value >= q_) fail(ErrorKind::kIndexOutOfRange, "residue out of range");
  return FieldElem(this, value);
}

FieldElem Field::from_ratfunc(RatFunc value) const {
  if (kind_ != FieldKind::kRationalFunctions) fail(ErrorKind::kNotApplicable, "not a rational-function field");
  if (&value.num().base() != base_ || value.num().nparams() != params_.size()) {
    fail(ErrorKind::kDescriptorMismatch, "rational function over a different base");
  }
  return FieldElem(this, std::make_shared<const RatFunc>(std::move(value)));
}

FieldElem Field::param(std::size_t i) const {
  if (kind_ != FieldKind::kRationalFunctions) fail(ErrorKind::kNotApplicable, "not a rational-function field");
  if (i >= params_.size()) fail(ErrorKind::kIndexOutOfRange, "parameter index out of range");
  return from_ratfunc(RatFunc(ParamPoly::variable(*base_, params_.size(), i)));
}

FieldElem Field::embed_base(const FieldElem& c) const {
  if (kind_ != FieldKind::kRationalFunctions) fail(ErrorKind::kNotApplicable, "not a rational-function field");
  base_->check(c);
  return from_ratfunc(RatFunc(ParamPoly::constant(*base_, params_.size(), c)));
}

FieldElem Field::element(std::uint64_t index) const {
  switch (kind_) {
    case FieldKind::kPrime:
    case FieldKind::kExtension:
      return from_residue(index);
    case FieldKind::kRationals: {
      if (index == 0) return zero();
      const long long magnitude = static_cast<long long>((index + 1) / 2);
      return from_int(index % 2 == 1 ? magnitude : -magnitude);
    }
    case FieldKind::kRationalFunctions: {
      if (!base_->is_finite()) return embed_base(base_->element(index));
      const std::uint64_t q = *base_->size();
      if (index < q) return embed_base(base_->element(index));
      ParamPoly poly(*base_, params_.size());
      std::uint32_t power = 0;
      while (index > 0) {
        const auto digit = index % q;
        if (digit != 0) {
          poly = poly + ParamPoly::variable(*base_, params_.size(), 0).pow(power).scaled(base_->element(digit));
        }
        index /= q;
        ++power;
      }
      return from_ratfunc(RatFunc(std::move(poly)));
    }
  }
  return {};
}

std::uint64_t Field::index_of(const FieldElem& a) const {
  check(a);
  if (!is_finite()) fail(ErrorKind::kNotApplicable, "index_of needs a finite field");
  return a.residue();
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case FieldKind::kRationals:
      return FieldElem(this, mpq_class(a.rational() + b.rational()));
    case FieldKind::kPrime:
      return FieldElem(this, (a.residue() + b.residue()) % p_);
    case FieldKind::kExtension: {
      auto da = unpack(a.residue());
      const auto db = unpack(b.residue());
      for (unsigned i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
      return FieldElem(this, pack(da));
    }
    case FieldKind::kRationalFunctions: {
      const RatFunc& x = a.ratfunc();
      const RatFunc& y = b.ratfunc();
      if (x.is_zero()) return b;
      if (y.is_zero()) return a;
      if (x.den() == y.den()) return from_ratfunc(RatFunc(x.num() + y.num(), x.den()));
      return from_ratfunc(RatFunc(x.num() * y.den() + y.num() * x.den(), x.den() * y.den()));
    }
  }
  return {};
}

FieldElem Field::neg(const FieldElem& a) const {
  check(a);
  switch (kind_) {
    case FieldKind::kRationals:
      return FieldElem(this, mpq_class(-a.rational()));
    case FieldKind::kPrime:
      return FieldElem(this, (p_ - a.residue()) % p_);
    case FieldKind::kExtension: {
      auto da = unpack(a.residue());
      for (auto& d : da) d = (p_ - d) % p_;
      return FieldElem(this, pack(da));
    }
    case FieldKind::kRationalFunctions:
      return from_ratfunc(RatFunc(-a.ratfunc().num(), a.ratfunc().den()));
  }
  return {};
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case FieldKind::kRationals:
      return FieldElem(this, mpq_class(a.rational() * b.rational()));
    case FieldKind::kPrime:
      return FieldElem(this, (a.residue() * b.residue()) % p_);
    case FieldKind::kExtension:
      return FieldElem(this, ext_mul(a.residue(), b.residue()));
    case FieldKind::kRationalFunctions: {
      const RatFunc& x = a.ratfunc();
      const RatFunc& y = b.ratfunc();
      if (x.is_zero() || y.is_zero()) return zero();
      if (x.den().is_one() && y.den().is_one()) return from_ratfunc(RatFunc(x.num() * y.num()));
      return from_ratfunc(RatFunc(x.num() * y.num(), x.den() * y.den()));
    }
  }
  return {};
}

FieldElem Field::inv(const FieldElem& a) const {
  check(a);
  if (is_zero(a)) fail(ErrorKind::kDivisionByZero, "inverse of zero in " + descriptor_);
  switch (kind_) {
    case FieldKind::kRationals:
      return FieldElem(this, mpq_class(1 / a.rational()));
    case FieldKind::kPrime:
      return FieldElem(this, mod_pow(a.residue(), p_ - 2, p_));
    case FieldKind::kExtension:
      return pow(a, q_ - 2);
    case FieldKind::kRationalFunctions:
      return from_ratfunc(RatFunc(a.ratfunc().den(), a.ratfunc().num()));
  }
  return {};
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  if (is_zero(b)) fail(ErrorKind::kDivisionByZero, "division by zero in " + descriptor_);
  return mul(a, inv(b));
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t exponent) const {
  check(a);
  FieldElem result = one();
  FieldElem base = a;
  while (exponent) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

bool Field::is_zero(const FieldElem& a) const {
  check(a);
  switch (kind_) {
    case FieldKind::kRationals: return sgn(a.rational()) == 0;
    case FieldKind::kPrime:
    case FieldKind::kExtension: return a.residue() == 0;
    case FieldKind::kRationalFunctions: return a.ratfunc().is_zero();
  }
  return false;
}

bool Field::equal(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case FieldKind::kRationals: return a.rational() == b.rational();
    case FieldKind::kPrime:
    case FieldKind::kExtension: return a.residue() == b.residue();
    case FieldKind::kRationalFunctions: return a.ratfunc() == b.ratfunc();
  }
  return false;
}

namespace {

// p-th root of a parameter polynomial over a perfect base, if it is one.
std::optional<ParamPoly> param_pth_root(const ParamPoly& f, std::uint64_t p) {
  ParamPoly root(f.base(), f.nparams());
  for (const auto& [exps, c] : f.terms()) {
    ParamPoly::Exps reduced(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] % p != 0) return std::nullopt;
      reduced[i] = static_cast<std::uint32_t>(exps[i] / p);
    }
    ParamPoly term = ParamPoly::constant(f.base(), f.nparams(), f.base().pth_root(c));
    for (std::size_t i = 0; i < reduced.size(); ++i) term = term.shifted(i, reduced[i]);
    root = root + term;
  }
  return root;
}

}  // namespace

FieldElem Field::pth_root(const FieldElem& a) const {
  check(a);
  if (p_ == 0) fail(ErrorKind::kCharZero, "p-th roots need positive characteristic");
  switch (kind_) {
    case FieldKind::kPrime:
      return a;
    case FieldKind::kExtension:
      return pow(a, q_ / p_);
    case FieldKind::kRationalFunctions: {
      auto num = param_pth_root(a.ratfunc().num(), p_);
      auto den = param_pth_root(a.ratfunc().den(), p_);
      if (!num || !den) fail(ErrorKind::kNotAPthPower, format(a) + " is not a p-th power");
      return from_ratfunc(RatFunc(*num, *den));
    }
    case FieldKind::kRationals:
      break;
  }
  fail(ErrorKind::kCharZero, "p-th roots need positive characteristic");
}

std::optional<bool> Field::is_square(const FieldElem& a) const {
  check(a);
  if (is_zero(a)) return true;
  switch (kind_) {
    case FieldKind::kRationals: {
      const mpq_class& v = a.rational();
      if (sgn(v) < 0) return false;
      return mpz_perfect_square_p(v.get_num_mpz_t()) != 0 && mpz_perfect_square_p(v.get_den_mpz_t()) != 0;
    }
    case FieldKind::kPrime:
    case FieldKind::kExtension:
      if (p_ == 2) return true;
      return pow(a, (q_ - 1) / 2).is_one();
    case FieldKind::kRationalFunctions:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string Field::format(const FieldElem& a) const {
  check(a);
  switch (kind_) {
    case FieldKind::kRationals:
      return a.rational().get_str();
    case FieldKind::kPrime:
      return std::to_string(a.residue());
    case FieldKind::kExtension: {
      const auto digits = unpack(a.residue());
      std::string out = "[";
      for (std::size_t i = 0; i < digits.size(); ++i) out += (i ? "," : "") + std::to_string(digits[i]);
      return out + "]";
    }
    case FieldKind::kRationalFunctions: {
      const RatFunc& r = a.ratfunc();
      if (r.den().is_one()) return r.num().to_string(&params_);
      return "(" + r.num().to_string(&params_) + ")/(" + r.den().to_string(&params_) + ")";
    }
  }
  return {};
}

FieldElem Field::parse(std::string_view text) const { return parse_field_element(*this, text); }

// ---------------------------------------------------------------------------

bool FieldElem::is_zero() const { return field_->is_zero(*this); }
bool FieldElem::is_one() const { return field_->equal(*this, field_->one()); }
FieldElem FieldElem::operator-() const { return field_->neg(*this); }
FieldElem FieldElem::inverse() const { return field_->inv(*this); }
FieldElem FieldElem::pow(std::uint64_t exponent) const { return field_->pow(*this, exponent); }
std::string FieldElem::to_string() const { return field_->format(*this); }

FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.field_->add(a, b); }
FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.field_->sub(a, b); }
FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.field_->mul(a, b); }
FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a.field_->div(a, b); }
FieldElem& FieldElem::operator+=(const FieldElem& b) { return *this = *this + b; }
FieldElem& FieldElem::operator-=(const FieldElem& b) { return *this = *this - b; }
FieldElem& FieldElem::operator*=(const FieldElem& b) { return *this = *this * b; }

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_) return false;
  if (!a.field_) return true;
  return a.field_->equal(a, b);
}

std::uint64_t FieldElem::residue() const {
  if (auto* v = std::get_if<std::uint64_t>(&value_)) return *v;
  fail(ErrorKind::kDescriptorMismatch, "element has no residue payload");
}

const mpq_class& FieldElem::rational() const {
  if (auto* v = std::get_if<mpq_class>(&value_)) return *v;
  fail(ErrorKind::kDescriptorMismatch, "element is not rational");
}

const RatFunc& FieldElem::ratfunc() const {
  if (auto* v = std::get_if<std::shared_ptr<const RatFunc>>(&value_)) return **v;
  fail(ErrorKind::kDescriptorMismatch, "element is not a rational function");
}

// ---------------------------------------------------------------------------

FieldElem binomial_in_field(const Field& field, std::uint64_t k, std::uint64_t n) {
  if (n > k) return field.zero();
  n = std::min(n, k - n);
  // row[j] = C(i, j) for the current i, j <= n.
  std::vector<FieldElem> row(n + 1, field.zero());
  row[0] = field.one();
  for (std::uint64_t i = 1; i <= k; ++i) {
    for (std::uint64_t j = std::min<std::uint64_t>(i, n); j >= 1; --j) row[j] = row[j] + row[j - 1];
  }
  return row[n];
}

ClearedDenominators clear_denominators(const std::vector<FieldElem>& elems) {
  if (elems.empty()) fail(ErrorKind::kInvalidArgument, "clear_denominators needs at least one element");
  const Field& field = elems.front().field();
  if (field.kind() != FieldKind::kRationalFunctions) {
    fail(ErrorKind::kNotApplicable, "clear_denominators needs a rational-function field");
  }
  ParamPoly g = ParamPoly::constant(field.base(), field.params().size(), field.base().one());
  for (const auto& e : elems) {
    if (&e.field() != &field) fail(ErrorKind::kDescriptorMismatch, "mixed descriptors in clear_denominators");
    g = lcm(g, e.ratfunc().den());
  }
  ClearedDenominators out{{}, field.from_ratfunc(RatFunc(g))};
  for (const auto& e : elems) out.scaled.push_back(e * out.multiplier);
  return out;
}

}  // namespace bigpoly
