#include "bigpoly/ring.hpp"

#include <algorithm>
#include <set>

namespace bigpoly {

std::uint32_t Monomial::total_degree() const {
  std::uint32_t s = 0;
  for (auto e : exps_) s += e;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ += b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
  out.degree_ -= b.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

Ring::Ring(const Field& field, std::vector<Variable> vars) {
  std::set<std::string> seen;
  std::vector<std::uint32_t> weights;
  for (const auto& v : vars) {
    if (v.name.empty()) fail(ErrorKind::kInvalidArgument, "empty variable name");
    if (v.degree < 1) fail(ErrorKind::kInvalidArgument, "variable degree must be positive: " + v.name);
    if (!seen.insert(v.name).second) fail(ErrorKind::kInvalidArgument, "duplicate variable name: " + v.name);
    weights.push_back(v.degree);
  }
  data_ = std::make_shared<const Data>(Data{&field, std::move(vars), std::move(weights)});
}

Ring Ring::standard(const Field& field, std::size_t n, const std::string& prefix) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back({prefix + std::to_string(i + 1), 1});
  return Ring(field, std::move(vars));
}

bool Ring::standard_graded() const {
  return std::all_of(weights().begin(), weights().end(), [](auto w) { return w == 1; });
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (vars()[i].name == name) return i;
  }
  return std::nullopt;
}

Monomial Ring::monomial(Monomial::Exps exps) const {
  if (exps.size() != nvars()) fail(ErrorKind::kInvalidArgument, "exponent vector length does not match ring");
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * data_->weights[i];
  return Monomial(std::move(exps), d);
}

Monomial Ring::var_monomial(std::size_t i, std::uint32_t power) const {
  if (i >= nvars()) fail(ErrorKind::kIndexOutOfRange, "variable index out of range");
  Monomial::Exps e(nvars(), 0);
  e[i] = power;
  return Monomial(std::move(e), power * data_->weights[i]);
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial::Exps e(nvars(), 0);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = std::max(a[i], b[i]);
    d += e[i] * data_->weights[i];
  }
  return Monomial(std::move(e), d);
}

Ring Ring::prefix(std::size_t n) const {
  if (n >= nvars()) return *this;
  return Ring(field(), std::vector<Variable>(vars().begin(), vars().begin() + static_cast<std::ptrdiff_t>(n)));
}

Ring Ring::extended(const std::vector<Variable>& extra) const {
  auto vars = this->vars();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return Ring(field(), std::move(vars));
}

Ring Ring::with_field(const Field& field) const { return Ring(field, vars()); }

std::string Ring::to_string() const {
  std::string out = field().descriptor() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) out += ",";
    out += vars()[i].name;
    if (vars()[i].degree != 1) out += ":" + std::to_string(vars()[i].degree);
  }
  return out + "]";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->vars == b.data_->vars;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t d) {
  std::vector<Monomial> out;
  const std::size_t n = ring.nvars();
  if (n == 0) {
    if (d == 0) out.push_back(ring.one());
    return out;
  }
  Monomial::Exps e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      if (left % ring.var_degree(i) == 0) {
        e[i] = left / ring.var_degree(i);
        out.push_back(Monomial(e, d));
      }
      return;
    }
    for (std::uint32_t k = 0; k * ring.var_degree(i) <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k * ring.var_degree(i));
    }
    e[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace bigpoly
