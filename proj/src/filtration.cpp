#include "gimel/filtration.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "gimel/errors.hpp"
#include "gimel/verify.hpp"

namespace gimel {

namespace {

std::vector<MonomialTag> basis_for(const GradedFreeComplex& c, int degree) {
  std::vector<MonomialTag> basis;
  const int n = c.ctx.n();
  const auto& labels = c.labels(degree);
  for (std::size_t g = 0; g < labels.size(); ++g) {
    int abs = c.absolute_degree(labels[g]);
    for (int a = 0; a < n; ++a) basis.push_back({g, a, abs + 2 * a, a});
  }
  return basis;
}

// Coefficient vector of a reduced polynomial in x, length n.
std::vector<Rational> x_coefficients(const Poly& p, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (const auto& [exps, coef] : p.terms()) out[static_cast<std::size_t>(exps[0])] = coef;
  return out;
}

Matrix expand_differential(const GradedFreeComplex& c, int degree, const std::vector<MonomialTag>& src,
                           const std::vector<MonomialTag>& tgt) {
  const int n = c.ctx.n();
  const auto un = static_cast<std::size_t>(n);
  Matrix m(tgt.size(), src.size());
  if (src.empty() || tgt.empty()) return m;
  PolyMatrix d = c.d(degree);
  for (std::size_t col = 0; col < src.size(); ++col) {
    const auto& s = src[col];
    Poly xa = c.ctx.x_power(s.a);
    for (std::size_t h = 0; h < d.rows(); ++h) {
      const Poly& e = d.at(h, s.gen);
      if (e.is_zero()) continue;
      auto coeffs = x_coefficients(c.ctx.mul(e, xa), n);
      for (std::size_t b = 0; b < un; ++b) {
        if (coeffs[b] == 0) continue;
        std::size_t row = h * un + b;
        if (tgt[row].j > s.j) {
          throw Error(ErrorKind::Validation, "differential out of degree " + std::to_string(degree) +
                                                 " raises the quantum filtration");
        }
        m.at(row, col) = coeffs[b];
      }
    }
  }
  return m;
}

std::vector<std::size_t> indices_where(const std::vector<MonomialTag>& basis, auto pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (pred(basis[i])) out.push_back(i);
  }
  return out;
}

// Runs f(i) for i in [0, count) on a few threads; results land by index so
// the output does not depend on scheduling.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F f) {
  std::vector<T> out(count);
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = std::min<std::size_t>(std::min(hw, 8u), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

// Smallest value in `levels` (sorted ascending) whose sublevel set is feasible.
template <typename Admit>
std::size_t first_feasible(const ScalarComplex& s, const Vector& psi, std::size_t count, Admit admit_at) {
  std::size_t lo = 0, hi = count;  // answer in [lo, hi); hi means none
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(s, psi, admit_at(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

ScalarComplex expand(const GradedFreeComplex& c, bool require_gimel_potential) {
  if (!c.ctx.is_specialized()) {
    throw Error(ErrorKind::ContextMismatch, "expansion needs a specialized complex");
  }
  if (require_gimel_potential && !c.ctx.is_gimel_potential()) {
    throw Error(ErrorKind::ContextMismatch, "the blended filtration needs the potential x^n - x^(n-1), got " +
                                                c.ctx.potential_string());
  }
  ScalarComplex s;
  s.ctx = c.ctx;
  s.basis_minus = basis_for(c, -1);
  s.basis_zero = basis_for(c, 0);
  s.basis_plus = basis_for(c, 1);
  s.d_minus = expand_differential(c, -1, s.basis_minus, s.basis_zero);
  s.d_zero = expand_differential(c, 0, s.basis_zero, s.basis_plus);
  if (!(s.d_zero * s.d_minus).is_zero()) {
    throw Error(ErrorKind::Validation, "expanded differentials do not compose to zero");
  }
  const auto un = static_cast<std::size_t>(c.ctx.n());
  s.x_action = Matrix(s.basis_zero.size(), s.basis_zero.size());
  for (std::size_t col = 0; col < s.basis_zero.size(); ++col) {
    const auto& m = s.basis_zero[col];
    auto coeffs = x_coefficients(c.ctx.x_power(m.a + 1), c.ctx.n());
    for (std::size_t b = 0; b < un; ++b) s.x_action.at(m.gen * un + b, col) = coeffs[b];
  }
  return s;
}

Vector embed_cochain(const ScalarComplex& s, const std::vector<Poly>& cochain) {
  const auto un = static_cast<std::size_t>(s.n());
  if (cochain.size() * un != s.basis_zero.size()) {
    throw Error(ErrorKind::DegreeMismatch, "cochain length does not match the degree-0 rank");
  }
  Vector v(s.basis_zero.size());
  for (std::size_t g = 0; g < cochain.size(); ++g) {
    Poly p = s.ctx.reduce(cochain[g]);
    for (const auto& [exps, coef] : p.terms()) v[g * un + static_cast<std::size_t>(exps[0])] = coef;
  }
  return v;
}

std::vector<Poly> cochain_polys(const ScalarComplex& s, const Vector& v) {
  const auto un = static_cast<std::size_t>(s.n());
  std::vector<Poly> out(v.size() / un);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out[i / un] += s.ctx.x_power(static_cast<int>(i % un)).scaled(v[i]);
  }
  return out;
}

std::size_t h0_dimension(const ScalarComplex& s) {
  std::size_t kernel = s.basis_zero.size() - rank(s.d_zero);
  return kernel - rank(s.d_minus);
}

bool is_cocycle(const ScalarComplex& s, const Vector& v) {
  return s.basis_plus.empty() || is_zero(s.d_zero * v);
}

bool is_coboundary(const ScalarComplex& s, const Vector& v) { return in_column_span(s.d_minus, v); }

bool cohomologous(const ScalarComplex& s, const Vector& a, const Vector& b) {
  Vector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return is_coboundary(s, diff);
}

Vector gornik_class(const ScalarComplex& s) {
  const int top = s.n() - 1;
  auto zero_top = indices_where(s.basis_zero, [&](const MonomialTag& m) { return m.k == top; });
  auto minus_top = indices_where(s.basis_minus, [&](const MonomialTag& m) { return m.k == top; });
  Matrix d0 = s.d_zero.select_cols(zero_top);
  Matrix dm = s.d_minus.select_cols(minus_top).select_rows(zero_top);
  auto kernel = nullspace(d0);
  std::size_t image = rank(dm);
  if (kernel.size() - image != 1) {
    throw Error(ErrorKind::Nondegeneracy, "H^0 of x^(n-1)C has dimension " +
                                              std::to_string(kernel.size() - image) + ", expected 1");
  }
  for (const auto& v : kernel) {
    if (in_column_span(dm, v)) continue;
    Vector psi(s.basis_zero.size());
    for (std::size_t i = 0; i < zero_top.size(); ++i) psi[zero_top[i]] = v[i];
    if (is_coboundary(s, psi)) {
      throw Error(ErrorKind::Nondegeneracy, "the Gornik class is null-cohomologous");
    }
    return psi;
  }
  throw Error(ErrorKind::Internal, "no kernel vector outside the image");
}

bool feasible(const ScalarComplex& s, const Vector& psi, const std::vector<bool>& admissible) {
  std::vector<std::size_t> rest;
  Vector target;
  for (std::size_t i = 0; i < s.basis_zero.size(); ++i) {
    if (admissible[i]) continue;
    rest.push_back(i);
    target.push_back(psi[i]);
  }
  if (is_zero(target)) return true;
  return in_column_span(s.d_minus.select_rows(rest), target);
}

GammaPoint gamma_point(const ScalarComplex& s, const Vector& psi, const Rational& t) {
  const auto& basis = s.basis_zero;
  std::vector<Rational> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = basis[i].value(t);
  std::vector<Rational> levels = v;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t idx = first_feasible(s, psi, levels.size(), [&](std::size_t i) {
    std::vector<bool> admit(basis.size());
    for (std::size_t m = 0; m < basis.size(); ++m) admit[m] = v[m] <= levels[i];
    return admit;
  });
  if (idx == levels.size()) throw Error(ErrorKind::Internal, "psi is not feasible on the full basis");
  GammaPoint out{levels[idx], 0};
  for (std::size_t m = 0; m < basis.size(); ++m) {
    if (v[m] == out.value) {
      out.pivot = m;
      break;
    }
  }
  return out;
}

std::vector<Rational> candidate_breakpoints(const ScalarComplex& s) {
  std::set<std::pair<int, int>> tags;
  for (const auto& m : s.basis_zero) tags.insert({m.j, m.k});
  std::set<Rational> out;
  for (auto a = tags.begin(); a != tags.end(); ++a) {
    for (auto b = std::next(a); b != tags.end(); ++b) {
      int den = (a->first + a->second) - (b->first + b->second);
      if (den == 0) continue;
      Rational t(a->second - b->second, den);
      t.canonicalize();
      if (t > 0 && t < 1) out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

PiecewiseLinear gamma_sweep(const ScalarComplex& s, const Vector& psi) {
  std::vector<Rational> ts{0};
  for (auto& t : candidate_breakpoints(s)) ts.push_back(t);
  ts.push_back(1);
  // Even slots hold breakpoints, odd slots the midpoints between them.
  std::size_t slots = 2 * ts.size() - 1;
  auto points = parallel_map<GammaPoint>(slots, [&](std::size_t i) {
    Rational t = (i % 2 == 0) ? ts[i / 2] : (ts[i / 2] + ts[i / 2 + 1]) / 2;
    return gamma_point(s, psi, t);
  });
  std::vector<Rational> values;
  for (std::size_t i = 0; i < ts.size(); ++i) values.push_back(points[2 * i].value);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const auto& pivot = s.basis_zero[points[2 * i + 1].pivot];
    if (pivot.value(ts[i]) != values[i] || pivot.value(ts[i + 1]) != values[i + 1]) {
      throw Error(ErrorKind::Internal, "gamma is not linear between consecutive candidate breakpoints");
    }
  }
  return PiecewiseLinear(ts, values);
}

PiecewiseLinear gimel_from_gamma(const PiecewiseLinear& gamma, int n) {
  Rational m = n - 1;
  return gamma.plus_linear(-2 * m, m).scaled(1 / (2 * m));
}

PiecewiseLinear unknot_gamma(int n) { return PiecewiseLinear::linear(1 - n, n - 1); }

Rational reduced_quantum_degree(const ScalarComplex& s, const Vector& psi) {
  const int top = s.n() - 1;
  std::vector<int> js;
  for (const auto& m : s.basis_zero) {
    if (m.k == top) js.push_back(m.j);
  }
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  std::size_t idx = first_feasible(s, psi, js.size(), [&](std::size_t i) {
    std::vector<bool> admit(s.basis_zero.size());
    for (std::size_t m = 0; m < admit.size(); ++m) {
      admit[m] = s.basis_zero[m].k == top && s.basis_zero[m].j <= js[i];
    }
    return admit;
  });
  if (idx == js.size()) throw Error(ErrorKind::Nondegeneracy, "psi is not represented inside x^(n-1)C");
  return js[idx];
}

Rational filtration_grading(const ScalarComplex& s, const Vector& psi) {
  std::vector<int> js;
  for (const auto& m : s.basis_zero) js.push_back(m.j);
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  std::size_t idx = first_feasible(s, psi, js.size(), [&](std::size_t i) {
    std::vector<bool> admit(s.basis_zero.size());
    for (std::size_t m = 0; m < admit.size(); ++m) admit[m] = s.basis_zero[m].j <= js[i];
    return admit;
  });
  if (idx == js.size()) throw Error(ErrorKind::Internal, "psi is not feasible on the full basis");
  return js[idx];
}

GimelReport invariants_report(const ScalarComplex& s, const Vector& psi, const PiecewiseLinear& gamma,
                              const PiecewiseLinear& gimel) {
  GimelReport rep;
  rep.n = s.n();
  rep.gamma = gamma;
  rep.gimel = gimel;
  Rational m = s.n() - 1;
  rep.r = reduced_quantum_degree(s, psi);
  rep.u = gamma.value_at_1();
  rep.slope0 = gimel.slope_at_0();
  rep.value1 = gimel.value_at_1();
  rep.s = (rep.u - m) / (2 * m);
  rep.genus_bound = genus_bound(gimel);
  rep.genus_bound_ceil = ceil(rep.genus_bound);
  return rep;
}

Poly root_projector(const RingCtx& ctx, const Rational& alpha) {
  if (!ctx.is_specialized()) throw Error(ErrorKind::ContextMismatch, "root projector needs a specialized ring");
  const int n = ctx.n();
  // Coefficients of dw from x^n down to x^0.
  std::vector<Rational> desc(static_cast<std::size_t>(n) + 1);
  desc[0] = 1;
  for (int i = 0; i < n; ++i) desc[static_cast<std::size_t>(n - i)] = ctx.potential()[static_cast<std::size_t>(i)];
  // Synthetic division by (x - alpha).
  std::vector<Rational> quot;
  Rational acc = 0;
  for (std::size_t i = 0; i < desc.size(); ++i) {
    acc = acc * alpha + desc[i];
    if (i + 1 < desc.size()) quot.push_back(acc);
  }
  if (acc != 0) throw Error(ErrorKind::InvalidRoot, gimel::to_string(alpha) + " is not a root of the potential");
  // The quotient evaluated at alpha is dw'(alpha).
  Rational deriv = 0;
  for (const auto& q : quot) deriv = deriv * alpha + q;
  if (deriv == 0) throw Error(ErrorKind::InvalidRoot, gimel::to_string(alpha) + " is a repeated root of the potential");
  Poly p;
  for (std::size_t i = 0; i < quot.size(); ++i) {
    Exponents e(static_cast<std::size_t>(n), 0);
    e[0] = static_cast<int>(quot.size() - 1 - i);
    p.add_term(e, quot[i]);
  }
  return p;
}

Rational s_general(const ScalarComplex& s, const Rational& alpha) {
  Poly proj = root_projector(s.ctx, alpha);
  const std::size_t dim = s.basis_zero.size();
  // Matrix of multiplication by the projector on degree-0 cochains.
  Matrix pm(dim, dim);
  Matrix xpow = Matrix::identity(dim);
  for (int e = 0; e < s.n(); ++e) {
    Exponents ex(static_cast<std::size_t>(s.n()), 0);
    ex[0] = e;
    Rational c = proj.coefficient(ex);
    if (c != 0) {
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) pm.at(r, col) += c * xpow.at(r, col);
      }
    }
    xpow = s.x_action * xpow;
  }
  std::vector<Vector> images;
  for (const auto& v : nullspace(s.d_zero)) images.push_back(pm * v);
  Matrix images_m = Matrix::from_columns(dim, images);
  std::size_t base = rank(s.d_minus);
  std::size_t eigen = rank(s.d_minus.append_columns(images_m)) - base;
  if (eigen != 1) {
    throw Error(ErrorKind::Nondegeneracy, "the alpha-eigenspace of H^0 has dimension " + std::to_string(eigen) +
                                              ", expected 1");
  }
  for (const auto& w : images) {
    if (is_coboundary(s, w)) continue;
    Rational gr = filtration_grading(s, w);
    Rational m = s.n() - 1;
    return (gr - m) / (2 * m);
  }
  throw Error(ErrorKind::Internal, "eigenspace generator not found");
}

}  // namespace gimel
