#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gimel/poly.hpp"

namespace gimel {

// Matrix over Poly, column c = image of source generator c.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;
  PolyMatrix transposed() const;

  bool operator==(const PolyMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

// Complex of graded free modules. modules[i] lists the q-shift labels s of
// the generators in homological degree i; a generator labelled s sits at
// absolute quantum degree s + (1 - n). differentials[i] maps degree i to
// degree i + 1 and has shape rank(i+1) x rank(i). Missing differentials are
// zero.
struct GradedFreeComplex {
  RingCtx ctx = RingCtx::equivariant(2);
  std::map<int, std::vector<int>> modules;
  std::map<int, PolyMatrix> differentials;
  std::string name;

  explicit GradedFreeComplex(RingCtx c) : ctx(std::move(c)) {}

  std::size_t rank(int degree) const;
  const std::vector<int>& labels(int degree) const;
  int absolute_degree(int label) const { return label + 1 - ctx.n(); }
  // Differential out of `degree`, materialized as a zero matrix when absent.
  PolyMatrix d(int degree) const;
  void set_d(int degree, PolyMatrix m);
  std::vector<int> degrees() const;
  std::size_t total_rank() const;
  // Drops empty degrees and all-zero differentials.
  void prune();

  bool operator==(const GradedFreeComplex& other) const;
};

struct ComplexReport {
  std::map<int, std::size_t> ranks;
  long euler = 0;
  bool ok = true;
  std::string failure;
};

ComplexReport validate(const GradedFreeComplex& c);
// Throws Validation with the report's message when validation fails.
void require_valid(const GradedFreeComplex& c);

GradedFreeComplex shift(const GradedFreeComplex& c, int dt, int dq);
GradedFreeComplex tensor(const GradedFreeComplex& a, const GradedFreeComplex& b);
GradedFreeComplex dual(const GradedFreeComplex& c);
GradedFreeComplex direct_sum(const GradedFreeComplex& a, const GradedFreeComplex& b);
long euler(const GradedFreeComplex& c);
GradedFreeComplex evaluate(const GradedFreeComplex& c, const RingCtx& specialized);
// Rank one, label 0, homological degree 0.
GradedFreeComplex unknot_complex(const RingCtx& ctx);

// Matrix product over the complex's ring.
PolyMatrix multiply(const RingCtx& ctx, const PolyMatrix& a, const PolyMatrix& b);

}  // namespace gimel
