#pragma once

#include <string>
#include <vector>

#include "gimel/rational.hpp"

namespace gimel {

// Continuous piecewise-linear function on [0, 1], stored by its values at a
// strictly increasing list of breakpoints starting at 0 and ending at 1.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  // Validates the breakpoints and merges collinear pieces.
  PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PiecewiseLinear linear(const Rational& value0, const Rational& value1);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t pieces() const { return breakpoints_.size() - 1; }

  Rational operator()(const Rational& t) const;
  Rational slope(std::size_t piece) const;
  Rational slope_at_0() const { return slope(0); }
  Rational value_at_1() const { return values_.back(); }
  bool is_linear() const { return pieces() == 1; }

  // Pointwise combinations; breakpoints are merged.
  PiecewiseLinear operator+(const PiecewiseLinear& other) const;
  PiecewiseLinear operator-(const PiecewiseLinear& other) const;
  PiecewiseLinear scaled(const Rational& factor) const;
  PiecewiseLinear plus_linear(const Rational& slope, const Rational& intercept) const;

  bool operator==(const PiecewiseLinear& other) const = default;

  std::string to_string() const;

 private:
  void merge_collinear();

  std::vector<Rational> breakpoints_{0, 1};
  std::vector<Rational> values_{0, 0};
};

// Sorted union of two breakpoint lists.
std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace gimel
