#include "gimel/poly.hpp"

#include <cctype>
#include <sstream>

#include "gimel/errors.hpp"

namespace gimel {

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(int num_vars, const Rational& value) {
  Poly p;
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), value);
  return p;
}

Poly Poly::monomial(Exponents exponents, const Rational& coefficient) {
  Poly p;
  p.add_term(exponents, coefficient);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int e : terms_.begin()->first) {
    if (e != 0) return false;
  }
  return true;
}

Rational Poly::constant_term() const {
  for (const auto& [exps, coef] : terms_) {
    bool all_zero = true;
    for (int e : exps) all_zero = all_zero && e == 0;
    if (all_zero) return coef;
  }
  return 0;
}

Rational Poly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [exps, coef] : out.terms_) coef = -coef;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [exps, coef] : other.terms_) add_term(exps, coef);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [exps, coef] : other.terms_) add_term(exps, -coef);
  return *this;
}

Poly Poly::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Poly out = *this;
  for (auto& [exps, coef] : out.terms_) coef *= factor;
  return out;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  Poly out;
  Exponents prod;
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      if (ea.size() != eb.size()) {
        throw Error(ErrorKind::ContextMismatch, "polynomials over different variable sets");
      }
      prod.resize(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) prod[i] = ea[i] + eb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  int num_vars() const { return n_ + 1; }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "polynomial parse error at offset " << pos_ << " in '" << text_ << "': " << what;
    throw Error(ErrorKind::MalformedInput, msg.str());
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_primary_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'a' || c == '(';
  }

  Poly expression() {
    Poly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (at_primary_start()) {
        fail("juxtaposition is not allowed, use '*'");
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    mpz_class e = integer();
    if (!e.fits_sint_p() || e > 4096) fail("exponent out of range");
    Poly out = Poly::constant(num_vars(), 1);
    for (long i = 0; i < e.get_si(); ++i) out = out * base;
    return out;
  }

  mpz_class integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek('/')) {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational value(num, den);
      value.canonicalize();
      return Poly::constant(num_vars(), value);
    }
    if (c == 'x') {
      ++pos_;
      Exponents e(static_cast<std::size_t>(num_vars()), 0);
      e[0] = 1;
      return Poly::monomial(e, 1);
    }
    if (c == 'a') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected an index after 'a'");
      }
      mpz_class idx = integer();
      if (idx >= n_) fail("variable index a" + idx.get_str() + " out of range for n = " + std::to_string(n_));
      Exponents e(static_cast<std::size_t>(num_vars()), 0);
      e[1 + idx.get_ui()] = 1;
      return Poly::monomial(e, 1);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};


}  // namespace

Poly parse_raw_poly(std::string_view text, int n) {
  if (n < 2) throw Error(ErrorKind::MalformedInput, "n must be at least 2");
  return Parser(text, n).parse();
}

// ---------------------------------------------------------------------------
// RingCtx

RingCtx::RingCtx(int n, RingKind kind, std::vector<Rational> potential)
    : n_(n), kind_(kind), potential_(std::move(potential)) {
  if (n_ < 2) throw Error(ErrorKind::MalformedInput, "n must be at least 2");
}

RingCtx RingCtx::equivariant(int n) { return RingCtx(n, RingKind::Equivariant, {}); }

RingCtx RingCtx::specialized(int n, std::vector<Rational> coefficients) {
  if (coefficients.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::DegreeMismatch, "potential must have n = " + std::to_string(n) +
                                               " non-leading coefficients");
  }
  for (auto& c : coefficients) c.canonicalize();
  return RingCtx(n, RingKind::Specialized, std::move(coefficients));
}

RingCtx RingCtx::gimel_potential(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  c[static_cast<std::size_t>(n - 1)] = -1;
  return specialized(n, std::move(c));
}

RingCtx RingCtx::specialized_from_string(std::string_view potential) {
  // Parse with a generous n; only x may appear.
  Poly raw = parse_raw_poly(potential, 2);
  int degree = -1;
  for (const auto& [exps, coef] : raw.terms()) {
    for (std::size_t i = 1; i < exps.size(); ++i) {
      if (exps[i] != 0) throw Error(ErrorKind::MalformedInput, "potential may only involve x");
    }
    degree = std::max(degree, exps[0]);
  }
  if (degree < 2) throw Error(ErrorKind::MalformedInput, "potential must have degree at least 2");
  Exponents lead(3, 0);
  lead[0] = degree;
  if (raw.coefficient(lead) != 1) throw Error(ErrorKind::MalformedInput, "potential must be monic");
  std::vector<Rational> c(static_cast<std::size_t>(degree), Rational(0));
  for (const auto& [exps, coef] : raw.terms()) {
    if (exps[0] < degree) c[static_cast<std::size_t>(exps[0])] = coef;
  }
  return specialized(degree, std::move(c));
}

bool RingCtx::is_gimel_potential() const {
  if (!is_specialized()) return false;
  for (int i = 0; i < n_; ++i) {
    Rational expected = (i == n_ - 1) ? Rational(-1) : Rational(0);
    if (potential_[static_cast<std::size_t>(i)] != expected) return false;
  }
  return true;
}

Poly RingCtx::potential_poly() const {
  // Built by hand: x_power would reduce x^n modulo the potential itself.
  Exponents lead(static_cast<std::size_t>(n_), 0);
  lead[0] = n_;
  Poly p = Poly::monomial(lead, 1);
  for (int i = 0; i < n_; ++i) {
    Exponents e(static_cast<std::size_t>(n_), 0);
    e[0] = i;
    p.add_term(e, potential_[static_cast<std::size_t>(i)]);
  }
  return p;
}

std::string RingCtx::potential_string() const {
  if (!is_specialized()) return {};
  // potential_poly() is not reduced, so print it directly.
  Poly p = potential_poly();
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Rational c = it->second;
    int e = it->first[0];
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || e == 0) out << mag.get_str();
    if (e > 0) {
      if (!unit) out << "*";
      out << "x";
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

Poly RingCtx::constant(const Rational& value) const { return Poly::constant(n_, value); }

Poly RingCtx::x_power(int exponent) const {
  Exponents e(static_cast<std::size_t>(n_), 0);
  e[0] = exponent;
  return reduce(Poly::monomial(e, 1));
}

Poly RingCtx::a(int i) const {
  if (!is_equivariant()) throw Error(ErrorKind::ContextMismatch, "a_i only exists in the equivariant ring");
  if (i < 1 || i >= n_) throw Error(ErrorKind::MalformedInput, "a_i index out of range");
  Exponents e(static_cast<std::size_t>(n_), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return Poly::monomial(e, 1);
}

Poly RingCtx::normalize(const Poly& raw) const {
  const auto nv = static_cast<std::size_t>(n_);
  Poly out;
  if (is_equivariant()) {
    // a_0 = -(x^n + a_{n-1} x^{n-1} + ... + a_1 x)
    Poly a0;
    Exponents e(nv, 0);
    e[0] = n_;
    a0.add_term(e, -1);
    for (int i = 1; i < n_; ++i) {
      Exponents ei(nv, 0);
      ei[0] = i;
      ei[static_cast<std::size_t>(i)] = 1;
      a0.add_term(ei, -1);
    }
    std::vector<Poly> a0_powers{Poly::constant(n_, 1)};
    for (const auto& [exps, coef] : raw.terms()) {
      if (exps.size() != nv + 1) throw Error(ErrorKind::ContextMismatch, "raw polynomial over the wrong variables");
      Exponents rest(nv, 0);
      rest[0] = exps[0];
      for (std::size_t i = 1; i < nv; ++i) rest[i] = exps[i + 1];
      auto f = static_cast<std::size_t>(exps[1]);
      while (a0_powers.size() <= f) a0_powers.push_back(a0_powers.back() * a0);
      out += Poly::monomial(rest, coef) * a0_powers[f];
    }
    return out;
  }
  // Specialized: a_i -> c_i, then reduce.
  for (const auto& [exps, coef] : raw.terms()) {
    if (exps.size() != nv + 1) throw Error(ErrorKind::ContextMismatch, "raw polynomial over the wrong variables");
    Rational c = coef;
    for (std::size_t i = 0; i < nv; ++i) {
      int e = exps[i + 1];
      if (e == 0) continue;
      Rational v;
      mpz_pow_ui(v.get_num_mpz_t(), potential_[i].get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(v.get_den_mpz_t(), potential_[i].get_den_mpz_t(), static_cast<unsigned long>(e));
      v.canonicalize();
      c *= v;
    }
    Exponents x_only(nv, 0);
    x_only[0] = exps[0];
    out.add_term(x_only, c);
  }
  return reduce(out);
}

Poly RingCtx::reduce(const Poly& p) const {
  if (is_equivariant()) return p;
  const auto nv = static_cast<std::size_t>(n_);
  // Collect coefficients by x-degree, substituting a_i if present.
  std::map<int, Rational> by_degree;
  for (const auto& [exps, coef] : p.terms()) {
    if (exps.size() != nv) throw Error(ErrorKind::ContextMismatch, "polynomial over the wrong variables");
    Rational c = coef;
    for (std::size_t i = 1; i < nv; ++i) {
      for (int k = 0; k < exps[i]; ++k) c *= potential_[i];
    }
    if (c != 0) by_degree[exps[0]] += c;
  }
  // x^d = x^{d-n} * (-(c_{n-1} x^{n-1} + ... + c_0)) for d >= n.
  while (!by_degree.empty() && by_degree.rbegin()->first >= n_) {
    auto it = std::prev(by_degree.end());
    int d = it->first;
    Rational c = it->second;
    by_degree.erase(it);
    if (c == 0) continue;
    for (int i = 0; i < n_; ++i) {
      const Rational& ci = potential_[static_cast<std::size_t>(i)];
      if (ci != 0) by_degree[d - n_ + i] -= c * ci;
    }
  }
  Poly out;
  for (const auto& [d, c] : by_degree) {
    Exponents e(nv, 0);
    e[0] = d;
    out.add_term(e, c);
  }
  return out;
}

Poly RingCtx::add(const Poly& p, const Poly& q) const {
  check(p);
  check(q);
  return p + q;
}

Poly RingCtx::sub(const Poly& p, const Poly& q) const {
  check(p);
  check(q);
  return p - q;
}

Poly RingCtx::mul(const Poly& p, const Poly& q) const {
  check(p);
  check(q);
  return reduce(p * q);
}

Poly RingCtx::scale(const Poly& p, const Rational& factor) const {
  check(p);
  return p.scaled(factor);
}

bool RingCtx::in_normal_form(const Poly& p) const {
  const auto nv = static_cast<std::size_t>(n_);
  for (const auto& [exps, coef] : p.terms()) {
    if (exps.size() != nv) return false;
    for (int e : exps) {
      if (e < 0) return false;
    }
    if (is_specialized()) {
      if (exps[0] >= n_) return false;
      for (std::size_t i = 1; i < nv; ++i) {
        if (exps[i] != 0) return false;
      }
    }
  }
  return true;
}

void RingCtx::check(const Poly& p) const {
  if (!in_normal_form(p)) {
    throw Error(ErrorKind::ContextMismatch, "polynomial '" + to_string(p) + "' is not in normal form for this ring");
  }
}

int RingCtx::monomial_degree(const Exponents& exponents) const {
  int d = 2 * exponents[0];
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    d += 2 * (n_ - static_cast<int>(i)) * exponents[i];
  }
  return d;
}

QuantumDegree RingCtx::quantum_degree(const Poly& p) const {
  if (p.is_zero()) throw Error(ErrorKind::UndefinedDegree, "the zero polynomial has no quantum degree");
  if (is_specialized()) {
    int level = 0;
    for (const auto& [exps, coef] : p.terms()) level = std::max(level, 2 * exps[0]);
    return {QuantumDegree::Kind::FiltrationLevel, level};
  }
  std::optional<int> common;
  for (const auto& [exps, coef] : p.terms()) {
    int d = monomial_degree(exps);
    if (common && *common != d) return {QuantumDegree::Kind::Inhomogeneous, 0};
    common = d;
  }
  return {QuantumDegree::Kind::Homogeneous, *common};
}

Poly RingCtx::parse(std::string_view text) const { return normalize(parse_raw_poly(text, n_)); }

std::string RingCtx::to_string(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending lexicographic order: higher x powers first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [exps, coef] = *it;
    bool negative = coef < 0;
    Rational mag = negative ? Rational(-coef) : coef;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (exps[0] > 0) factors.push_back(exps[0] == 1 ? "x" : "x^" + std::to_string(exps[0]));
    for (std::size_t i = 1; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      std::string v = "a" + std::to_string(i);
      if (exps[i] > 1) v += "^" + std::to_string(exps[i]);
      factors.push_back(v);
    }
    bool print_coef = mag != 1 || factors.empty();
    if (print_coef) out << mag.get_str();
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (print_coef || f > 0) out << "*";
      out << factors[f];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluation maps

Poly evaluate_poly(const Poly& p, const RingCtx& from, const RingCtx& to) {
  if (!from.is_equivariant()) throw Error(ErrorKind::ContextMismatch, "evaluation expects an equivariant polynomial");
  if (!to.is_specialized()) throw Error(ErrorKind::ContextMismatch, "evaluation target must be a specialized ring");
  if (from.n() != to.n()) {
    throw Error(ErrorKind::DegreeMismatch, "potential degree " + std::to_string(to.n()) +
                                               " does not match n = " + std::to_string(from.n()));
  }
  from.check(p);
  // Same exponent layout; reduce() substitutes a_i -> c_i and reduces mod dw.
  return to.reduce(p);
}

Poly partial_evaluate(const Poly& p, const RingCtx& from, const std::vector<Rational>& values) {
  if (!from.is_equivariant()) throw Error(ErrorKind::ContextMismatch, "partial evaluation expects an equivariant polynomial");
  if (values.size() != static_cast<std::size_t>(from.n() - 1)) {
    throw Error(ErrorKind::DegreeMismatch, "partial evaluation needs n - 1 values");
  }
  from.check(p);
  Poly out;
  const auto nv = static_cast<std::size_t>(from.n());
  for (const auto& [exps, coef] : p.terms()) {
    Rational c = coef;
    for (std::size_t i = 1; i < nv; ++i) {
      for (int k = 0; k < exps[i]; ++k) c *= values[i - 1];
    }
    Exponents e(nv, 0);
    e[0] = exps[0];
    out.add_term(e, c);
  }
  return out;
}

}  // namespace gimel
