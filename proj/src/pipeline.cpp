#include "gimel/pipeline.hpp"

#include "gimel/errors.hpp"

namespace gimel {

GradedFreeComplex equivariant_summand(const SparseComplex& c, std::size_t* summands, std::size_t* cancelled) {
  SimplifyResult simplified = gauss_simplify_tracked(c);
  Decomposition dec = split_components(simplified.complex);
  if (summands) *summands = dec.summands.size();
  if (cancelled) *cancelled = simplified.cancelled_pairs;
  GradedFreeComplex sn = extract_sn(dec);
  sn.name = c.name;
  return sn;
}

PipelineResult report_for_specialized(const GradedFreeComplex& specialized) {
  PipelineResult out;
  out.specialized = specialized;
  out.sn = specialized;
  out.scalar = expand(specialized);
  out.psi = gornik_class(out.scalar);
  PiecewiseLinear gamma = gamma_sweep(out.scalar, out.psi);
  out.report = invariants_report(out.scalar, out.psi, gamma, gimel_from_gamma(gamma, specialized.ctx.n()));
  out.report.name = specialized.name;
  return out;
}

PipelineResult compute_from_complex(const GradedFreeComplex& c) {
  require_valid(c);
  if (c.ctx.is_specialized()) return report_for_specialized(c);
  std::size_t summands = 0, cancelled = 0;
  GradedFreeComplex sn = equivariant_summand(SparseComplex::from_dense(c), &summands, &cancelled);
  GradedFreeComplex ev = evaluate(sn, RingCtx::gimel_potential(c.ctx.n()));
  PipelineResult out = report_for_specialized(ev);
  out.sn = sn;
  out.summands = summands;
  out.cancelled_pairs = cancelled;
  return out;
}

PipelineResult compute_from_pd(const Diagram& d) {
  SparseComplex cube = build_equivariant_sl2_sparse(d);
  std::size_t summands = 0, cancelled = 0;
  GradedFreeComplex sn = equivariant_summand(cube, &summands, &cancelled);
  require_valid(sn);
  GradedFreeComplex ev = evaluate(sn, RingCtx::gimel_potential(2));
  PipelineResult out = report_for_specialized(ev);
  out.sn = sn;
  out.summands = summands;
  out.cancelled_pairs = cancelled;
  out.report.name = d.to_string();
  return out;
}

Rational s_invariant(const GradedFreeComplex& c, const RingCtx& potential, const Rational& alpha) {
  require_valid(c);
  GradedFreeComplex specialized = c;
  if (c.ctx.is_equivariant()) {
    specialized = evaluate(equivariant_summand(SparseComplex::from_dense(c)), potential);
  } else if (!(c.ctx == potential)) {
    throw Error(ErrorKind::ContextMismatch, "complex is specialized at a different potential");
  }
  return s_general(expand(specialized, false), alpha);
}

}  // namespace gimel
