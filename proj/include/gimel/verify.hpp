#pragma once

#include <string>
#include <vector>

#include "gimel/piecewise.hpp"

namespace gimel {

// Outcome of an exact inequality check. slack is the smallest margin seen
// (negative iff the property fails) and worst_t where it occurred.
struct PropertyVerdict {
  std::string name;
  bool holds = true;
  Rational worst_t;
  Rational slack;
};

// t * g(1) <= g(t) <= t * g'(0).
PropertyVerdict check_cone(const PiecewiseLinear& gimel);
// g'(0) - 1 <= g(1) <= g'(0).
PropertyVerdict check_gap(const PiecewiseLinear& gimel);
// |g_ab(t) - g_a(t) - g_b(t)| <= 2t, g_ab'(0) = g_a'(0) + g_b'(0) and
// g_ab(1) >= g_a(1) + g_b(1). Returns one verdict per sub-check followed by
// the combined verdict.
std::vector<PropertyVerdict> check_quasi_all(const PiecewiseLinear& a, const PiecewiseLinear& b,
                                             const PiecewiseLinear& ab);
PropertyVerdict check_quasi(const PiecewiseLinear& a, const PiecewiseLinear& b, const PiecewiseLinear& ab);
// g(t) = c t for a constant c.
PropertyVerdict check_linear(const PiecewiseLinear& gimel);

// Lower bound on the slice genus: sup over t in (0, 1] of |g(t) / t|.
Rational genus_bound(const PiecewiseLinear& gimel);

}  // namespace gimel
