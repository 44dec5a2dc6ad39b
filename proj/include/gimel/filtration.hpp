#pragma once

#include <map>
#include <string>
#include <vector>

#include "gimel/chain.hpp"
#include "gimel/linalg.hpp"
#include "gimel/piecewise.hpp"

namespace gimel {

// Basis vector x^a * g of a specialized complex, expanded over Q.
struct MonomialTag {
  std::size_t gen = 0;  // generator index within its homological degree
  int a = 0;            // x-exponent, 0 <= a < n
  int j = 0;            // absolute quantum degree of x^a * g
  int k = 0;            // x-filtration level (= a)

  // Value under the blended filtration: t(j + k) - k.
  Rational value(const Rational& t) const { return t * (j + k) - k; }
  bool operator==(const MonomialTag&) const = default;
};

// Rational expansion of a specialized complex in homological degrees -1, 0, 1.
// d_minus maps degree -1 to 0, d_zero maps degree 0 to 1.
struct ScalarComplex {
  RingCtx ctx = RingCtx::gimel_potential(2);
  std::vector<MonomialTag> basis_minus, basis_zero, basis_plus;
  Matrix d_minus, d_zero;
  // Ring action of x on degree 0, as a matrix in the monomial basis.
  Matrix x_action;

  int n() const { return ctx.n(); }
};

// Requires a specialized complex; when `require_gimel_potential` is set the
// potential must be x^n - x^{n-1}.
ScalarComplex expand(const GradedFreeComplex& c, bool require_gimel_potential = true);

// Express a degree-0 cochain given as ring elements per generator in the
// monomial basis, and back.
Vector embed_cochain(const ScalarComplex& s, const std::vector<Poly>& cochain);
std::vector<Poly> cochain_polys(const ScalarComplex& s, const Vector& v);

// Cohomology dimension over Q in degree 0.
std::size_t h0_dimension(const ScalarComplex& s);
bool is_cocycle(const ScalarComplex& s, const Vector& v);
bool is_coboundary(const ScalarComplex& s, const Vector& v);
bool cohomologous(const ScalarComplex& s, const Vector& a, const Vector& b);

// The Gornik class for the potential x^n - x^{n-1}: the generator of the
// 1-dimensional H^0 of x^{n-1}C, checked to be nonzero in H^0(C).
Vector gornik_class(const ScalarComplex& s);

// True iff psi is cohomologous to a cochain supported on the admissible
// degree-0 monomials.
bool feasible(const ScalarComplex& s, const Vector& psi, const std::vector<bool>& admissible);

struct GammaPoint {
  Rational value;
  std::size_t pivot = 0;  // a degree-0 monomial attaining the value
};

GammaPoint gamma_point(const ScalarComplex& s, const Vector& psi, const Rational& t);
inline Rational gamma_at(const ScalarComplex& s, const Vector& psi, const Rational& t) {
  return gamma_point(s, psi, t).value;
}

// Candidate breakpoints in (0, 1) where two distinct monomial values cross.
std::vector<Rational> candidate_breakpoints(const ScalarComplex& s);
PiecewiseLinear gamma_sweep(const ScalarComplex& s, const Vector& psi);
PiecewiseLinear gimel_from_gamma(const PiecewiseLinear& gamma, int n);
// gamma of the zero-crossing unknot diagram.
PiecewiseLinear unknot_gamma(int n);

struct GimelReport {
  int n = 2;
  std::string name;
  PiecewiseLinear gimel;
  PiecewiseLinear gamma;
  Rational r, u, slope0, value1, s, genus_bound;
  mpz_class genus_bound_ceil;
};

// Minimal quantum degree j such that psi is cohomologous to a cochain
// supported on x-exponent n-1 monomials of quantum degree <= j.
Rational reduced_quantum_degree(const ScalarComplex& s, const Vector& psi);
// Minimal quantum degree j such that psi is cohomologous to a cochain in F^j.
Rational filtration_grading(const ScalarComplex& s, const Vector& psi);

GimelReport invariants_report(const ScalarComplex& s, const Vector& psi, const PiecewiseLinear& gamma,
                              const PiecewiseLinear& gimel);

// s_{dw, alpha}: uses the complex's own (any monic, rational) potential.
Rational s_general(const ScalarComplex& s, const Rational& alpha);

// Quotient dw / (x - alpha), after checking that alpha is a simple root.
Poly root_projector(const RingCtx& ctx, const Rational& alpha);

}  // namespace gimel
