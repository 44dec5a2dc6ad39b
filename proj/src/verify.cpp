#include "gimel/verify.hpp"

namespace gimel {

namespace {

// Tracks the minimum slack over a set of sample points.
struct Worst {
  bool seen = false;
  Rational t, slack;

  void offer(const Rational& at, const Rational& s) {
    if (!seen || s < slack) {
      seen = true;
      t = at;
      slack = s;
    }
  }

  PropertyVerdict verdict(std::string name) const {
    return {std::move(name), slack >= 0, t, slack};
  }
};

}  // namespace

PropertyVerdict check_cone(const PiecewiseLinear& gimel) {
  Worst w;
  Rational value1 = gimel.value_at_1();
  Rational slope0 = gimel.slope_at_0();
  for (const auto& t : gimel.breakpoints()) {
    Rational g = gimel(t);
    w.offer(t, g - t * value1);
    w.offer(t, t * slope0 - g);
  }
  return w.verdict("cone");
}

PropertyVerdict check_gap(const PiecewiseLinear& gimel) {
  Worst w;
  Rational value1 = gimel.value_at_1();
  Rational slope0 = gimel.slope_at_0();
  w.offer(1, value1 - (slope0 - 1));
  w.offer(1, slope0 - value1);
  return w.verdict("gap");
}

std::vector<PropertyVerdict> check_quasi_all(const PiecewiseLinear& a, const PiecewiseLinear& b,
                                             const PiecewiseLinear& ab) {
  std::vector<PropertyVerdict> out;
  Worst quasi;
  auto ts = merge_breakpoints(merge_breakpoints(a.breakpoints(), b.breakpoints()), ab.breakpoints());
  for (const auto& t : ts) quasi.offer(t, 2 * t - abs(ab(t) - a(t) - b(t)));
  out.push_back(quasi.verdict("quasi-additivity"));

  Worst slope;
  slope.offer(0, -abs(ab.slope_at_0() - a.slope_at_0() - b.slope_at_0()));
  out.push_back(slope.verdict("slope-additivity"));

  Worst super;
  super.offer(1, ab.value_at_1() - a.value_at_1() - b.value_at_1());
  out.push_back(super.verdict("superadditivity-at-1"));

  Worst all;
  for (const auto& v : out) all.offer(v.worst_t, v.slack);
  out.push_back(all.verdict("quasi"));
  return out;
}

PropertyVerdict check_quasi(const PiecewiseLinear& a, const PiecewiseLinear& b, const PiecewiseLinear& ab) {
  return check_quasi_all(a, b, ab).back();
}

PropertyVerdict check_linear(const PiecewiseLinear& gimel) {
  Worst w;
  Rational value1 = gimel.value_at_1();
  for (const auto& t : gimel.breakpoints()) w.offer(t, -abs(gimel(t) - t * value1));
  return w.verdict("linear");
}

Rational genus_bound(const PiecewiseLinear& gimel) {
  // On each piece g(t)/t is monotone, so its extremes sit at breakpoints or
  // at t -> 0+, where the limit is the initial slope.
  Rational best = abs(gimel.slope_at_0());
  for (const auto& t : gimel.breakpoints()) {
    if (t == 0) continue;
    Rational q = abs(gimel(t) / t);
    if (q > best) best = q;
  }
  return best;
}

}  // namespace gimel
