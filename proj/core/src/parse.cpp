#include "bigpoly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "bigpoly/param_poly.hpp"

namespace bigpoly {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail(ErrorKind::kInvalidDescriptor, "expected a non-negative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

const Field& default_extension(std::uint64_t p, unsigned e) {
  // Monic moduli enumerated by their lower coefficients as base-p digits.
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> m(e + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = v % p;
      v /= p;
    }
    m[e] = 1;
    if (m[0] == 0) continue;
    try {
      return Field::extension(p, e, m);
    } catch (const Error&) {
    }
  }
  fail(ErrorKind::kInvalidDescriptor, "no irreducible modulus found");
}

const Field& parse_base_descriptor(const std::string& s) {
  if (s == "QQ" || s == "Q") return Field::rationals();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(3, s.size() - 4);
    const auto semi = inner.find(';');
    const std::string order = trim(inner.substr(0, semi));
    const auto caret = order.find('^');
    const std::uint64_t p = parse_u64(trim(order.substr(0, caret)));
    if (caret == std::string::npos) {
      if (semi != std::string::npos) fail(ErrorKind::kInvalidDescriptor, "modulus given for a prime field");
      return Field::prime(p);
    }
    const auto e = static_cast<unsigned>(parse_u64(trim(order.substr(caret + 1))));
    if (semi == std::string::npos) {
      if (!is_prime(p)) fail(ErrorKind::kInvalidDescriptor, "not a prime: " + std::to_string(p));
      if (e < 1 || e > 4) fail(ErrorKind::kInvalidDescriptor, "extension degree must be in 1..4");
      if (e == 1) return Field::prime(p);
      return default_extension(p, e);
    }
    std::vector<std::uint64_t> m;
    for (const auto& c : split_top_level(inner.substr(semi + 1), ',')) m.push_back(parse_u64(c));
    return Field::extension(p, e, std::move(m));
  }
  fail(ErrorKind::kInvalidDescriptor, "unknown field descriptor '" + s + "'");
}

std::vector<std::string> parse_names(std::string_view s) {
  std::vector<std::string> names;
  for (auto& n : split_top_level(s, ',')) {
    if (n.empty()) fail(ErrorKind::kInvalidDescriptor, "empty parameter name");
    names.push_back(n);
  }
  return names;
}

// Recursive-descent expression parser over an adaptor supplying atoms and
// arithmetic for one value type.
template <class Adaptor>
class ExprParser {
 public:
  using Value = typename Adaptor::Value;

  ExprParser(const Adaptor& adaptor, std::string_view text) : a_(adaptor), s_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::kParse, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = a_.add(v, term());
      } else if (accept('-')) {
        v = a_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = a_.mul(v, unary());
      } else if (accept('/')) {
        v = a_.div(v, unary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return a_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      return a_.pow(base, std::stoull(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (c == '[') {
      ++pos_;
      std::vector<mpz_class> digits;
      do {
        skip();
        bool negative = accept('-');
        skip();
        digits.push_back(integer());
        if (negative) digits.back() = -digits.back();
      } while (accept(','));
      if (!accept(']')) error("expected ']'");
      return a_.bracket(digits);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return a_.integer(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto v = a_.name(name);
      if (!v) error("unknown name '" + name + "'");
      return *v;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  const Adaptor& a_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

FieldElem bracket_constant(const Field& field, const std::vector<mpz_class>& digits) {
  const Field& k = field.kind() == FieldKind::kRationalFunctions ? field.base() : field;
  FieldElem out = k.zero();
  if (k.kind() == FieldKind::kExtension) {
    if (digits.size() > k.extension_degree()) fail(ErrorKind::kParse, "too many extension coefficients");
    const std::uint64_t p = k.characteristic();
    std::uint64_t index = 0, place = 1;
    for (const auto& d : digits) {
      mpz_class r = d % static_cast<unsigned long>(p);
      if (r < 0) r += static_cast<unsigned long>(p);
      index += r.get_ui() * place;
      place *= p;
    }
    out = k.from_residue(index);
  } else {
    if (digits.size() != 1) fail(ErrorKind::kParse, "bracketed vectors need an extension field");
    out = k.from_integer(digits[0]);
  }
  return &k == &field ? out : field.embed_base(out);
}

struct FieldAdaptor {
  using Value = FieldElem;
  const Field& f;

  FieldElem add(const FieldElem& a, const FieldElem& b) const { return a + b; }
  FieldElem sub(const FieldElem& a, const FieldElem& b) const { return a - b; }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return a / b; }
  FieldElem neg(const FieldElem& a) const { return -a; }
  FieldElem pow(const FieldElem& a, std::uint64_t e) const { return a.pow(e); }
  FieldElem integer(const mpz_class& v) const { return f.from_integer(v); }
  FieldElem bracket(const std::vector<mpz_class>& d) const { return bracket_constant(f, d); }
  std::optional<FieldElem> name(const std::string& n) const {
    if (f.kind() != FieldKind::kRationalFunctions) return std::nullopt;
    for (std::size_t i = 0; i < f.params().size(); ++i) {
      if (f.params()[i] == n) return f.param(i);
    }
    return std::nullopt;
  }
};

struct PolyAdaptor {
  using Value = Poly;
  const Ring& r;

  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly div(const Poly& a, const Poly& b) const {
    if (!b.is_constant()) fail(ErrorKind::kParse, "division by a non-constant polynomial");
    if (b.is_zero()) fail(ErrorKind::kDivisionByZero, "division by zero");
    return a.scaled(b.leading().second.inverse());
  }
  Poly neg(const Poly& a) const { return -a; }
  Poly pow(const Poly& a, std::uint64_t e) const { return a.pow(e); }
  Poly integer(const mpz_class& v) const { return Poly::constant(r, r.field().from_integer(v)); }
  Poly bracket(const std::vector<mpz_class>& d) const { return Poly::constant(r, bracket_constant(r.field(), d)); }
  std::optional<Poly> name(const std::string& n) const {
    if (auto i = r.find(n)) return Poly::variable(r, *i);
    if (auto c = FieldAdaptor{r.field()}.name(n)) return Poly::constant(r, *c);
    return std::nullopt;
  }
};

}  // namespace

const Field& parse_field_descriptor(std::string_view text) {
  const std::string s = trim(text);
  if (s.rfind("Frac(", 0) == 0 && s.back() == ')') {
    const std::string inner = s.substr(5, s.size() - 6);
    const auto open = inner.rfind('[');
    if (open == std::string::npos || inner.back() != ']') {
      fail(ErrorKind::kInvalidDescriptor, "expected Frac(BASE[params])");
    }
    const Field& base = parse_base_descriptor(trim(inner.substr(0, open)));
    return Field::rational_functions(parse_names(inner.substr(open + 1, inner.size() - open - 2)), base);
  }
  // Shorthand BASE(params): the last parenthesized group after a complete base.
  if (!s.empty() && s.back() == ')') {
    const auto open = s.rfind('(');
    if (open != std::string::npos && open > 0) {
      const std::string head = trim(s.substr(0, open));
      if (head == "QQ" || head == "Q" || (head.rfind("GF(", 0) == 0 && head.back() == ')')) {
        return Field::rational_functions(parse_names(s.substr(open + 1, s.size() - open - 2)),
                                         parse_base_descriptor(head));
      }
    }
  }
  return parse_base_descriptor(s);
}

FieldElem parse_field_element(const Field& field, std::string_view text) {
  FieldAdaptor adaptor{field};
  return ExprParser<FieldAdaptor>(adaptor, text).parse();
}

Poly parse_poly(const Ring& ring, std::string_view text) {
  PolyAdaptor adaptor{ring};
  return ExprParser<PolyAdaptor>(adaptor, text).parse();
}

}  // namespace bigpoly
