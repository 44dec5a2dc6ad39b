#include "gimel/chain.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "gimel/errors.hpp"

namespace gimel {

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

PolyMatrix multiply(const RingCtx& ctx, const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Internal, "polynomial matrix product: shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.at(k, c).is_zero()) continue;
        out.at(r, c) += ctx.mul(a.at(r, k), b.at(k, c));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedFreeComplex

std::size_t GradedFreeComplex::rank(int degree) const {
  auto it = modules.find(degree);
  return it == modules.end() ? 0 : it->second.size();
}

const std::vector<int>& GradedFreeComplex::labels(int degree) const {
  static const std::vector<int> kEmpty;
  auto it = modules.find(degree);
  return it == modules.end() ? kEmpty : it->second;
}

PolyMatrix GradedFreeComplex::d(int degree) const {
  auto it = differentials.find(degree);
  if (it != differentials.end()) return it->second;
  return PolyMatrix(rank(degree + 1), rank(degree));
}

void GradedFreeComplex::set_d(int degree, PolyMatrix m) {
  if (m.rows() != rank(degree + 1) || m.cols() != rank(degree)) {
    std::ostringstream msg;
    msg << "differential out of degree " << degree << " has shape " << m.rows() << "x" << m.cols()
        << ", expected " << rank(degree + 1) << "x" << rank(degree);
    throw Error(ErrorKind::MalformedInput, msg.str());
  }
  differentials[degree] = std::move(m);
}

std::vector<int> GradedFreeComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [deg, labels] : modules) {
    if (!labels.empty()) out.push_back(deg);
  }
  return out;
}

std::size_t GradedFreeComplex::total_rank() const {
  std::size_t total = 0;
  for (const auto& [deg, labels] : modules) total += labels.size();
  return total;
}

void GradedFreeComplex::prune() {
  for (auto it = modules.begin(); it != modules.end();) {
    it = it->second.empty() ? modules.erase(it) : std::next(it);
  }
  for (auto it = differentials.begin(); it != differentials.end();) {
    bool drop = it->second.is_zero() || rank(it->first) == 0 || rank(it->first + 1) == 0;
    it = drop ? differentials.erase(it) : std::next(it);
  }
}

bool GradedFreeComplex::operator==(const GradedFreeComplex& other) const {
  if (!(ctx == other.ctx)) return false;
  GradedFreeComplex a = *this, b = other;
  a.prune();
  b.prune();
  return a.modules == b.modules && a.differentials == b.differentials;
}

// ---------------------------------------------------------------------------

ComplexReport validate(const GradedFreeComplex& c) {
  ComplexReport report;
  for (int deg : c.degrees()) {
    report.ranks[deg] = c.rank(deg);
    report.euler += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(deg));
  }
  auto fail = [&report](const std::string& what) {
    if (report.ok) {
      report.ok = false;
      report.failure = what;
    }
  };
  for (const auto& [deg, m] : c.differentials) {
    if (m.rows() != c.rank(deg + 1) || m.cols() != c.rank(deg)) {
      fail("differential out of degree " + std::to_string(deg) + " has the wrong shape");
      continue;
    }
    const auto& src = c.labels(deg);
    const auto& tgt = c.labels(deg + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        const Poly& p = m.at(r, col);
        if (p.is_zero()) continue;
        std::ostringstream where;
        where << "d^" << deg << "[" << r << "," << col << "] = " << c.ctx.to_string(p);
        if (!c.ctx.in_normal_form(p)) {
          fail(where.str() + " is not in normal form");
          continue;
        }
        int expected = src[col] - tgt[r];
        QuantumDegree q = c.ctx.quantum_degree(p);
        if (c.ctx.is_equivariant()) {
          if (q.kind != QuantumDegree::Kind::Homogeneous || q.value != expected) {
            fail(where.str() + " is not homogeneous of degree " + std::to_string(expected));
          }
        } else if (q.value > expected) {
          fail(where.str() + " raises the quantum filtration (level " + std::to_string(q.value) +
               " > " + std::to_string(expected) + ")");
        }
      }
    }
    auto next = c.differentials.find(deg + 1);
    if (next != c.differentials.end() && next->second.cols() == m.rows()) {
      PolyMatrix sq = multiply(c.ctx, next->second, m);
      if (!sq.is_zero()) fail("d^" + std::to_string(deg + 1) + " * d^" + std::to_string(deg) + " is not zero");
    }
  }
  return report;
}

void require_valid(const GradedFreeComplex& c) {
  ComplexReport r = validate(c);
  if (!r.ok) {
    throw Error(ErrorKind::Validation, (c.name.empty() ? "complex" : c.name) + ": " + r.failure);
  }
}

GradedFreeComplex shift(const GradedFreeComplex& c, int dt, int dq) {
  GradedFreeComplex out(c.ctx);
  out.name = c.name;
  for (const auto& [deg, labels] : c.modules) {
    auto& dst = out.modules[deg + dt];
    for (int s : labels) dst.push_back(s + dq);
  }
  for (const auto& [deg, m] : c.differentials) out.differentials[deg + dt] = m;
  return out;
}

GradedFreeComplex tensor(const GradedFreeComplex& a, const GradedFreeComplex& b) {
  if (!(a.ctx == b.ctx)) throw Error(ErrorKind::ContextMismatch, "tensor of complexes over different rings");
  const RingCtx& ctx = a.ctx;
  GradedFreeComplex out(ctx);
  if (!a.name.empty() || !b.name.empty()) out.name = a.name + " # " + b.name;

  // Generator (i, ga, gb) index within total degree i + j; order: i ascending, then ga, then gb.
  std::map<int, std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t>> index;
  auto da = a.degrees();
  auto db = b.degrees();
  std::set<int> totals;
  for (int i : da) {
    for (int j : db) totals.insert(i + j);
  }
  for (int k : totals) {
    auto& labels = out.modules[k];
    auto& idx = index[k];
    for (int i : da) {
      int j = k - i;
      if (b.rank(j) == 0) continue;
      for (std::size_t ga = 0; ga < a.rank(i); ++ga) {
        for (std::size_t gb = 0; gb < b.rank(j); ++gb) {
          idx[{i, ga, gb}] = labels.size();
          labels.push_back(a.labels(i)[ga] + b.labels(j)[gb]);
        }
      }
    }
  }
  for (int k : totals) {
    if (out.rank(k + 1) == 0) continue;
    PolyMatrix m(out.rank(k + 1), out.rank(k));
    for (const auto& [key, col] : index[k]) {
      auto [i, ga, gb] = key;
      int j = k - i;
      // d(a) (x) b
      if (a.rank(i + 1) > 0) {
        PolyMatrix dA = a.d(i);
        for (std::size_t r = 0; r < dA.rows(); ++r) {
          if (dA.at(r, ga).is_zero()) continue;
          m.at(index[k + 1].at({i + 1, r, gb}), col) += dA.at(r, ga);
        }
      }
      // (-1)^i a (x) d(b)
      if (b.rank(j + 1) > 0) {
        PolyMatrix dB = b.d(j);
        bool negate = (i % 2) != 0;
        for (std::size_t r = 0; r < dB.rows(); ++r) {
          if (dB.at(r, gb).is_zero()) continue;
          Poly e = negate ? -dB.at(r, gb) : dB.at(r, gb);
          m.at(index[k + 1].at({i, ga, r}), col) += e;
        }
      }
    }
    if (!m.is_zero()) out.differentials[k] = std::move(m);
  }
  return out;
}

GradedFreeComplex dual(const GradedFreeComplex& c) {
  GradedFreeComplex out(c.ctx);
  if (!c.name.empty()) out.name = "dual(" + c.name + ")";
  for (const auto& [deg, labels] : c.modules) {
    auto& dst = out.modules[-deg];
    for (int s : labels) dst.push_back(-s);
  }
  for (const auto& [deg, m] : c.differentials) out.differentials[-deg - 1] = m.transposed();
  return out;
}

GradedFreeComplex direct_sum(const GradedFreeComplex& a, const GradedFreeComplex& b) {
  if (!(a.ctx == b.ctx)) throw Error(ErrorKind::ContextMismatch, "direct sum of complexes over different rings");
  GradedFreeComplex out(a.ctx);
  out.name = a.name;
  std::set<int> degs;
  for (int d : a.degrees()) degs.insert(d);
  for (int d : b.degrees()) degs.insert(d);
  for (int d : degs) {
    auto& labels = out.modules[d];
    labels = a.labels(d);
    labels.insert(labels.end(), b.labels(d).begin(), b.labels(d).end());
  }
  for (int d : degs) {
    if (out.rank(d + 1) == 0) continue;
    PolyMatrix m(out.rank(d + 1), out.rank(d));
    PolyMatrix ma = a.d(d), mb = b.d(d);
    for (std::size_t r = 0; r < ma.rows(); ++r) {
      for (std::size_t col = 0; col < ma.cols(); ++col) m.at(r, col) = ma.at(r, col);
    }
    for (std::size_t r = 0; r < mb.rows(); ++r) {
      for (std::size_t col = 0; col < mb.cols(); ++col) {
        m.at(ma.rows() + r, ma.cols() + col) = mb.at(r, col);
      }
    }
    if (!m.is_zero()) out.differentials[d] = std::move(m);
  }
  return out;
}

long euler(const GradedFreeComplex& c) {
  long chi = 0;
  for (const auto& [deg, labels] : c.modules) {
    chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(labels.size());
  }
  return chi;
}

GradedFreeComplex evaluate(const GradedFreeComplex& c, const RingCtx& specialized) {
  if (!specialized.is_specialized()) {
    throw Error(ErrorKind::ContextMismatch, "evaluation target must be a specialized ring");
  }
  if (specialized.n() != c.ctx.n()) {
    throw Error(ErrorKind::DegreeMismatch, "potential of degree " + std::to_string(specialized.n()) +
                                               " cannot evaluate a complex with n = " + std::to_string(c.ctx.n()));
  }
  if (c.ctx.is_specialized()) {
    if (c.ctx == specialized) return c;
    throw Error(ErrorKind::ContextMismatch, "complex is already specialized at a different potential");
  }
  GradedFreeComplex out(specialized);
  out.name = c.name;
  out.modules = c.modules;
  for (const auto& [deg, m] : c.differentials) {
    PolyMatrix e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        e.at(r, col) = evaluate_poly(m.at(r, col), c.ctx, specialized);
      }
    }
    if (!e.is_zero()) out.differentials[deg] = std::move(e);
  }
  return out;
}

GradedFreeComplex unknot_complex(const RingCtx& ctx) {
  GradedFreeComplex out(ctx);
  out.name = "unknot";
  out.modules[0] = {0};
  return out;
}

}  // namespace gimel
