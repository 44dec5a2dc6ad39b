#include "gimel/piecewise.hpp"

#include <algorithm>
#include <sstream>

#include "gimel/errors.hpp"

namespace gimel {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || breakpoints_.size() != values_.size()) {
    throw Error(ErrorKind::MalformedInput, "piecewise function needs matching breakpoint and value lists");
  }
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw Error(ErrorKind::MalformedInput, "piecewise function must be defined on [0, 1]");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i] <= breakpoints_[i - 1]) {
      throw Error(ErrorKind::MalformedInput, "breakpoints must be strictly increasing");
    }
  }
  merge_collinear();
}

PiecewiseLinear PiecewiseLinear::linear(const Rational& value0, const Rational& value1) {
  return PiecewiseLinear({0, 1}, {value0, value1});
}

Rational PiecewiseLinear::operator()(const Rational& t) const {
  if (t < 0 || t > 1) throw Error(ErrorKind::MalformedInput, "t = " + gimel::to_string(t) + " outside [0, 1]");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - breakpoints_.begin());
  if (hi >= breakpoints_.size()) return values_.back();
  std::size_t lo = hi - 1;
  if (t == breakpoints_[lo]) return values_[lo];
  return values_[lo] + slope(lo) * (t - breakpoints_[lo]);
}

Rational PiecewiseLinear::slope(std::size_t piece) const {
  return (values_[piece + 1] - values_[piece]) / (breakpoints_[piece + 1] - breakpoints_[piece]);
}

std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PiecewiseLinear PiecewiseLinear::operator+(const PiecewiseLinear& other) const {
  auto ts = merge_breakpoints(breakpoints_, other.breakpoints_);
  std::vector<Rational> vs;
  for (const auto& t : ts) vs.push_back((*this)(t) + other(t));
  return PiecewiseLinear(ts, vs);
}

PiecewiseLinear PiecewiseLinear::operator-(const PiecewiseLinear& other) const {
  return *this + other.scaled(-1);
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& factor) const {
  std::vector<Rational> vs;
  for (const auto& v : values_) vs.push_back(v * factor);
  return PiecewiseLinear(breakpoints_, vs);
}

PiecewiseLinear PiecewiseLinear::plus_linear(const Rational& slope, const Rational& intercept) const {
  std::vector<Rational> vs;
  for (std::size_t i = 0; i < values_.size(); ++i) vs.push_back(values_[i] + slope * breakpoints_[i] + intercept);
  return PiecewiseLinear(breakpoints_, vs);
}

void PiecewiseLinear::merge_collinear() {
  std::vector<Rational> ts{breakpoints_.front()};
  std::vector<Rational> vs{values_.front()};
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    Rational left = (values_[i] - vs.back()) / (breakpoints_[i] - ts.back());
    Rational right = (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
    if (left == right) continue;
    ts.push_back(breakpoints_[i]);
    vs.push_back(values_[i]);
  }
  ts.push_back(breakpoints_.back());
  vs.push_back(values_.back());
  breakpoints_ = std::move(ts);
  values_ = std::move(vs);
}

std::string PiecewiseLinear::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < pieces(); ++i) {
    if (i) out << "; ";
    Rational m = slope(i);
    Rational c = values_[i] - m * breakpoints_[i];
    out << "[" << breakpoints_[i].get_str() << "," << breakpoints_[i + 1].get_str() << "]: "
        << m.get_str() << "*t + " << c.get_str();
  }
  return out.str();
}

}  // namespace gimel
