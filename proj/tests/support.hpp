#pragma once

// Shared helpers for the test binaries: fixture paths and independent
// oracles that avoid the library's own linear algebra.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gimel/chain.hpp"
#include "gimel/filtration.hpp"
#include "gimel/io.hpp"
#include "gimel/linalg.hpp"

namespace gimel::testing {

inline std::string fixture_path(const std::string& file) { return std::string(GIMEL_FIXTURE_DIR) + "/" + file; }

inline GradedFreeComplex fixture(const std::string& file) { return load_fixture(fixture_path(file)); }

// Rank of a rational matrix reduced modulo a large prime. Denominators of the
// inputs here are tiny, so the prime never divides them.
inline std::size_t rank_mod_p(const Matrix& m, std::uint64_t p = 2147483629ULL) {
  auto reduce = [p](const Rational& q) {
    mpz_class num = q.get_num() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = q.get_den() % static_cast<unsigned long>(p);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    return static_cast<std::uint64_t>(mpz_class((num * inv) % static_cast<unsigned long>(p)).get_ui());
  };
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = reduce(m.at(r, c));
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = powmod(a[rank][c], p - 2);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint64_t f = mulmod(a[r][c], inv);
      for (std::size_t cc = c; cc < m.cols(); ++cc) a[r][cc] = (a[r][cc] + p - mulmod(f, a[rank][cc])) % p;
    }
    ++rank;
  }
  return rank;
}

// psi lies in span(admissible unit vectors) + im(d_minus), decided by ranks mod p.
inline bool feasible_oracle(const ScalarComplex& s, const Vector& psi, const std::vector<bool>& admissible) {
  std::size_t dim = s.basis_zero.size();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!admissible[i]) continue;
    Vector e(dim, Rational(0));
    e[i] = 1;
    cols.push_back(e);
  }
  for (std::size_t c = 0; c < s.d_minus.cols(); ++c) cols.push_back(s.d_minus.column(c));
  Matrix base = Matrix::from_columns(dim, cols);
  cols.push_back(psi);
  Matrix ext = Matrix::from_columns(dim, cols);
  return rank_mod_p(base) == rank_mod_p(ext);
}

// gamma(t) by a linear scan over all monomial values, smallest first.
inline Rational gamma_oracle(const ScalarComplex& s, const Vector& psi, const Rational& t) {
  std::vector<Rational> values;
  for (const auto& m : s.basis_zero) values.push_back(m.value(t));
  std::vector<Rational> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& level : sorted) {
    std::vector<bool> adm(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) adm[i] = values[i] <= level;
    if (feasible_oracle(s, psi, adm)) return level;
  }
  return sorted.empty() ? Rational(0) : sorted.back();
}

// Smallest quantum degree j with psi cohomologous into F^j, by exhaustive scan.
inline int filtration_oracle(const ScalarComplex& s, const Vector& psi) {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& m : s.basis_zero) {
    lo = first ? m.j : std::min(lo, m.j);
    hi = first ? m.j : std::max(hi, m.j);
    first = false;
  }
  for (int j = lo; j <= hi; ++j) {
    std::vector<bool> adm(s.basis_zero.size());
    for (std::size_t i = 0; i < adm.size(); ++i) adm[i] = s.basis_zero[i].j <= j;
    if (feasible_oracle(s, psi, adm)) return j;
  }
  return hi;
}

}  // namespace gimel::testing
