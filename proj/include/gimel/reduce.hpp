#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gimel/chain.hpp"
#include "gimel/linalg.hpp"

namespace gimel {

// (homological degree, generator index) of a generator in some complex.
using GeneratorRef = std::pair<int, std::size_t>;

// Sparse form of a complex, used where dense matrices would be too large
// (cube complexes before simplification). entries[i] holds (row, col, value)
// triples of the differential out of degree i.
struct SparseComplex {
  RingCtx ctx = RingCtx::equivariant(2);
  std::string name;
  std::map<int, std::vector<int>> modules;
  std::map<int, std::vector<std::tuple<std::size_t, std::size_t, Poly>>> entries;

  static SparseComplex from_dense(const GradedFreeComplex& c);
  GradedFreeComplex to_dense() const;
};

struct SimplifyResult {
  GradedFreeComplex complex;
  // For each degree, the input indices of the surviving generators.
  std::map<int, std::vector<std::size_t>> kept;
  std::size_t cancelled_pairs = 0;
};

// Cancels invertible constant entries between generators of equal label
// (Gaussian elimination), choosing pivots by Markowitz cost.
SimplifyResult gauss_simplify_tracked(const SparseComplex& c);
SimplifyResult gauss_simplify_tracked(const GradedFreeComplex& c);
GradedFreeComplex gauss_simplify(const GradedFreeComplex& c);

struct Decomposition {
  std::vector<GradedFreeComplex> summands;
  std::vector<std::vector<GeneratorRef>> provenance;
};

// Connected components of the graph whose edges are nonzero differential entries.
Decomposition split_components(const GradedFreeComplex& c);

// The unique summand of odd Euler characteristic (which must be 1, with all
// other summands of Euler characteristic 0).
GradedFreeComplex extract_sn(const Decomposition& dec);

// Complex of rational vector spaces, one quantum degree per generator.
struct RationalComplex {
  std::map<int, std::vector<int>> degrees;
  std::map<int, Matrix> differentials;  // i -> (rank(i+1) x rank(i))

  std::size_t rank(int degree) const;
  std::map<int, std::size_t> cohomology() const;
  std::size_t total_cohomology() const;
};

// Image of multiplication by dw/(x - alpha) on the evaluated complex. Each
// generator contributes the line spanned by (dw/(x - alpha)) g, on which x
// acts by alpha; after the quantum shift by 1 - n its degree is the label.
RationalComplex reduced_complex(const GradedFreeComplex& s, const RingCtx& specialized, const Rational& alpha);

}  // namespace gimel
