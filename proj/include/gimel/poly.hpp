#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gimel/rational.hpp"

namespace gimel {

// Exponent vector. In normal form the layout is (x, a_1, ..., a_{n-1});
// raw polynomials straight out of the parser use (x, a_0, a_1, ..., a_{n-1}).
using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients. Terms are kept in
// lexicographic exponent order and zero coefficients are never stored, so the
// zero polynomial is the empty map. A Poly does not know which ring it lives
// in; reduction and grading go through RingCtx.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;

  static Poly constant(int num_vars, const Rational& value);
  static Poly monomial(Exponents exponents, const Rational& coefficient);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // True for the zero polynomial and for nonzero constants.
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& exponents, const Rational& coefficient);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly scaled(const Rational& factor) const;

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  // Plain polynomial product, no reduction.
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  bool operator==(const Poly& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

enum class RingKind { Equivariant, Specialized };

// Result of quantum_degree: a homogeneous degree, an inhomogeneous marker
// (equivariant), or the filtration level of a coset representative
// (specialized).
struct QuantumDegree {
  enum class Kind { Homogeneous, Inhomogeneous, FiltrationLevel };
  Kind kind = Kind::Homogeneous;
  int value = 0;

  bool operator==(const QuantumDegree&) const = default;
};

// Either the equivariant ring R_n = Q[x, a_1, ..., a_{n-1}] (a_0 eliminated
// through a_0 + a_1 x + ... + x^n = 0, deg x = 2, deg a_i = 2(n - i)), or the
// quotient Q[x]/(dw) for a monic rational potential dw of degree n.
class RingCtx {
 public:
  static RingCtx equivariant(int n);
  // coefficients = (c_0, ..., c_{n-1}) of dw = x^n + c_{n-1} x^{n-1} + ... + c_0.
  static RingCtx specialized(int n, std::vector<Rational> coefficients);
  // dw = x^n - x^{n-1}.
  static RingCtx gimel_potential(int n);
  // Parses a monic potential such as "x^3 - x^2".
  static RingCtx specialized_from_string(std::string_view potential);

  int n() const { return n_; }
  RingKind kind() const { return kind_; }
  bool is_equivariant() const { return kind_ == RingKind::Equivariant; }
  bool is_specialized() const { return kind_ == RingKind::Specialized; }
  const std::vector<Rational>& potential() const { return potential_; }
  // True iff specialized at x^n - x^{n-1}.
  bool is_gimel_potential() const;
  // The potential as a polynomial in x (specialized only).
  Poly potential_poly() const;
  std::string potential_string() const;

  bool operator==(const RingCtx& other) const = default;

  Poly zero() const { return {}; }
  Poly one() const { return constant(1); }
  Poly constant(const Rational& value) const;
  Poly x_power(int exponent) const;
  // The formal coefficient a_i, 1 <= i <= n-1 (equivariant only).
  Poly a(int i) const;

  // Raw polynomial (x, a_0, ..., a_{n-1} layout) to normal form.
  Poly normalize(const Poly& raw) const;
  // Reduction of a normal-layout polynomial: identity for equivariant rings,
  // x-reduction mod dw (after substituting a_i by potential coefficients) for
  // specialized ones.
  Poly reduce(const Poly& p) const;

  Poly add(const Poly& p, const Poly& q) const;
  Poly sub(const Poly& p, const Poly& q) const;
  Poly mul(const Poly& p, const Poly& q) const;
  Poly scale(const Poly& p, const Rational& factor) const;

  // Throws ContextMismatch unless p is in normal form for this ring.
  void check(const Poly& p) const;
  bool in_normal_form(const Poly& p) const;

  QuantumDegree quantum_degree(const Poly& p) const;
  int monomial_degree(const Exponents& exponents) const;

  Poly parse(std::string_view text) const;
  std::string to_string(const Poly& p) const;

 private:
  RingCtx(int n, RingKind kind, std::vector<Rational> potential);

  int n_ = 2;
  RingKind kind_ = RingKind::Equivariant;
  std::vector<Rational> potential_;
};

// Parses the polynomial grammar (rational literals p/q, variables x, a0..a{n-1},
// + - * ^ and parentheses) into a raw polynomial over (x, a_0, ..., a_{n-1}).
Poly parse_raw_poly(std::string_view text, int n);

// ev: a_i -> coefficient of x^i in the target potential, then reduce mod dw.
Poly evaluate_poly(const Poly& p, const RingCtx& from, const RingCtx& to);

// ev': substitute a_1..a_{n-1} by the given values and skip the reduction; the
// result is a polynomial in x alone (normal layout, a-exponents zero).
Poly partial_evaluate(const Poly& p, const RingCtx& from,
                      const std::vector<Rational>& values);

}  // namespace gimel
