#pragma once

#include <optional>
#include <string>

#include "gimel/chain.hpp"
#include "gimel/cube.hpp"
#include "gimel/filtration.hpp"
#include "gimel/reduce.hpp"

namespace gimel {

struct PipelineResult {
  GradedFreeComplex sn{RingCtx::equivariant(2)};  // extracted summand (or the input, if specialized)
  GradedFreeComplex specialized{RingCtx::gimel_potential(2)};
  ScalarComplex scalar;
  Vector psi;
  GimelReport report;
  std::size_t summands = 1;
  std::size_t cancelled_pairs = 0;
};

// Equivariant input: simplify, split, extract S_n, evaluate at x^n - x^{n-1}.
// Specialized input at x^n - x^{n-1}: used as is.
PipelineResult compute_from_complex(const GradedFreeComplex& c);
PipelineResult compute_from_pd(const Diagram& d);

// Report for a complex already specialized at x^n - x^{n-1}.
PipelineResult report_for_specialized(const GradedFreeComplex& specialized);

// S_n of an equivariant complex by elimination and component splitting.
GradedFreeComplex equivariant_summand(const SparseComplex& c, std::size_t* summands = nullptr,
                                      std::size_t* cancelled = nullptr);

// s_{dw, alpha} of a complex (equivariant inputs are reduced to S_n and
// evaluated at dw first).
Rational s_invariant(const GradedFreeComplex& c, const RingCtx& potential, const Rational& alpha);

}  // namespace gimel
