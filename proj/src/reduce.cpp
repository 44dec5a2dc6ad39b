#include "gimel/reduce.hpp"

#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "gimel/errors.hpp"
#include "gimel/filtration.hpp"

namespace gimel {

namespace {

// Sparse differential out of one degree, indexed both ways.
struct SparseMap {
  std::vector<std::map<std::size_t, Poly>> cols;  // col -> (row -> entry)
  std::vector<std::set<std::size_t>> rows;        // row -> cols

  SparseMap(std::size_t nrows, std::size_t ncols) : cols(ncols), rows(nrows) {}

  const Poly* get(std::size_t r, std::size_t c) const {
    auto it = cols[c].find(r);
    return it == cols[c].end() ? nullptr : &it->second;
  }

  void set(std::size_t r, std::size_t c, Poly p) {
    if (p.is_zero()) {
      cols[c].erase(r);
      rows[r].erase(c);
    } else {
      cols[c][r] = std::move(p);
      rows[r].insert(c);
    }
  }

  void clear_col(std::size_t c) {
    for (const auto& [r, p] : cols[c]) rows[r].erase(c);
    cols[c].clear();
  }

  void clear_row(std::size_t r) {
    for (std::size_t c : rows[r]) cols[c].erase(r);
    rows[r].clear();
  }
};

using Candidate = std::tuple<long, int, std::size_t, std::size_t>;  // cost, degree, row, col

class Eliminator {
 public:
  explicit Eliminator(const SparseComplex& c) : c_(c) {
    for (const auto& [deg, labels] : c.modules) {
      if (!labels.empty()) alive_[deg] = std::vector<bool>(labels.size(), true);
    }
    for (const auto& [deg, triples] : c.entries) {
      std::size_t rows = rank(deg + 1), cols = rank(deg);
      if (rows == 0 || cols == 0) continue;
      SparseMap sm(rows, cols);
      for (const auto& [r, col, p] : triples) {
        if (r >= rows || col >= cols) throw Error(ErrorKind::MalformedInput, "sparse entry out of range");
        if (!p.is_zero()) sm.set(r, col, p);
      }
      maps_.emplace(deg, std::move(sm));
    }
  }

  SimplifyResult run() {
    for (auto& [deg, sm] : maps_) {
      for (std::size_t col = 0; col < sm.cols.size(); ++col) {
        for (const auto& [r, p] : sm.cols[col]) offer(deg, r, col);
      }
    }
    SimplifyResult result{GradedFreeComplex(c_.ctx), {}, 0};
    while (!queue_.empty()) {
      auto [cost, deg, r, col] = queue_.top();
      queue_.pop();
      auto it = maps_.find(deg);
      if (it == maps_.end()) continue;
      const Poly* p = it->second.get(r, col);
      if (!p || !is_pivot(deg, r, col, *p)) continue;
      long now = cost_of(it->second, r, col);
      if (now != cost) {
        queue_.emplace(now, deg, r, col);
        continue;
      }
      eliminate(deg, r, col);
      ++result.cancelled_pairs;
    }
    result.complex.name = c_.name;
    for (const auto& [deg, flags] : alive_) {
      auto& kept = result.kept[deg];
      auto& labels = result.complex.modules[deg];
      for (std::size_t g = 0; g < flags.size(); ++g) {
        if (!flags[g]) continue;
        kept.push_back(g);
        labels.push_back(label(deg, g));
      }
    }
    for (const auto& [deg, sm] : maps_) {
      const auto& src = result.kept[deg];
      const auto& tgt = result.kept[deg + 1];
      if (src.empty() || tgt.empty()) continue;
      std::vector<std::size_t> row_pos(sm.rows.size(), 0);
      for (std::size_t i = 0; i < tgt.size(); ++i) row_pos[tgt[i]] = i;
      PolyMatrix m(tgt.size(), src.size());
      bool any = false;
      for (std::size_t j = 0; j < src.size(); ++j) {
        for (const auto& [r, p] : sm.cols[src[j]]) {
          m.at(row_pos[r], j) = p;
          any = true;
        }
      }
      if (any) result.complex.differentials[deg] = std::move(m);
    }
    result.complex.prune();
    for (auto it = result.kept.begin(); it != result.kept.end();) {
      it = it->second.empty() ? result.kept.erase(it) : std::next(it);
    }
    return result;
  }

 private:
  std::size_t rank(int deg) const {
    auto it = c_.modules.find(deg);
    return it == c_.modules.end() ? 0 : it->second.size();
  }

  int label(int deg, std::size_t g) const { return c_.modules.at(deg)[g]; }

  bool is_pivot(int deg, std::size_t r, std::size_t col, const Poly& p) const {
    if (p.is_zero() || !p.is_constant()) return false;
    return label(deg, col) == label(deg + 1, r);
  }

  static long cost_of(const SparseMap& sm, std::size_t r, std::size_t col) {
    return static_cast<long>(sm.rows[r].size() - 1) * static_cast<long>(sm.cols[col].size() - 1);
  }

  void offer(int deg, std::size_t r, std::size_t col) {
    const SparseMap& sm = maps_.at(deg);
    const Poly* p = sm.get(r, col);
    if (p && is_pivot(deg, r, col, *p)) queue_.emplace(cost_of(sm, r, col), deg, r, col);
  }

  void offer_row(int deg, std::size_t r) {
    auto it = maps_.find(deg);
    if (it == maps_.end()) return;
    for (std::size_t col : it->second.rows[r]) offer(deg, r, col);
  }

  void offer_col(int deg, std::size_t col) {
    auto it = maps_.find(deg);
    if (it == maps_.end()) return;
    for (const auto& [r, p] : it->second.cols[col]) offer(deg, r, col);
  }

  // d'[t', s'] = d[t', s'] - d[t', s] u^{-1} d[t, s'], then drop s and t.
  void eliminate(int deg, std::size_t t, std::size_t s) {
    SparseMap& sm = maps_.at(deg);
    const RingCtx& ctx = c_.ctx;
    Rational inv = 1 / sm.get(t, s)->constant_term();
    std::vector<std::pair<std::size_t, Poly>> col_s;
    for (const auto& [r, p] : sm.cols[s]) {
      if (r != t) col_s.emplace_back(r, p.scaled(inv));
    }
    std::vector<std::pair<std::size_t, Poly>> row_t;
    for (std::size_t c : sm.rows[t]) {
      if (c != s) row_t.emplace_back(c, *sm.get(t, c));
    }
    for (const auto& [tp, a] : col_s) {
      for (const auto& [sp, b] : row_t) {
        const Poly* cur = sm.get(tp, sp);
        Poly next = cur ? *cur : Poly();
        next -= ctx.mul(a, b);
        sm.set(tp, sp, std::move(next));
      }
    }
    sm.clear_col(s);
    sm.clear_row(t);
    alive_[deg][s] = false;
    alive_[deg + 1][t] = false;

    std::vector<std::size_t> next_rows, prev_cols;
    if (auto it = maps_.find(deg + 1); it != maps_.end()) {
      for (const auto& [r, p] : it->second.cols[t]) next_rows.push_back(r);
      it->second.clear_col(t);
    }
    if (auto it = maps_.find(deg - 1); it != maps_.end()) {
      prev_cols.assign(it->second.rows[s].begin(), it->second.rows[s].end());
      it->second.clear_row(s);
    }
    for (const auto& [tp, a] : col_s) offer_row(deg, tp);
    for (const auto& [sp, b] : row_t) offer_col(deg, sp);
    for (std::size_t r : next_rows) offer_row(deg + 1, r);
    for (std::size_t col : prev_cols) offer_col(deg - 1, col);
  }

  const SparseComplex& c_;
  std::map<int, std::vector<bool>> alive_;
  std::map<int, SparseMap> maps_;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

Rational evaluate_at(const Poly& p, const Rational& alpha) {
  Rational out = 0;
  for (const auto& [exps, coef] : p.terms()) {
    Rational term = coef;
    for (int e = 0; e < exps[0]; ++e) term *= alpha;
    out += term;
  }
  return out;
}

}  // namespace

SparseComplex SparseComplex::from_dense(const GradedFreeComplex& c) {
  SparseComplex out;
  out.ctx = c.ctx;
  out.name = c.name;
  out.modules = c.modules;
  for (const auto& [deg, m] : c.differentials) {
    auto& triples = out.entries[deg];
    for (std::size_t col = 0; col < m.cols(); ++col) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.at(r, col).is_zero()) triples.emplace_back(r, col, m.at(r, col));
      }
    }
  }
  return out;
}

GradedFreeComplex SparseComplex::to_dense() const {
  GradedFreeComplex out(ctx);
  out.name = name;
  out.modules = modules;
  for (const auto& [deg, triples] : entries) {
    if (triples.empty()) continue;
    PolyMatrix m(out.rank(deg + 1), out.rank(deg));
    for (const auto& [r, col, p] : triples) m.at(r, col) += p;
    out.differentials[deg] = std::move(m);
  }
  return out;
}

SimplifyResult gauss_simplify_tracked(const SparseComplex& c) { return Eliminator(c).run(); }

SimplifyResult gauss_simplify_tracked(const GradedFreeComplex& c) {
  return gauss_simplify_tracked(SparseComplex::from_dense(c));
}

GradedFreeComplex gauss_simplify(const GradedFreeComplex& c) { return gauss_simplify_tracked(c).complex; }

Decomposition split_components(const GradedFreeComplex& c) {
  std::vector<GeneratorRef> nodes;
  std::map<int, std::size_t> offset;
  for (int deg : c.degrees()) {
    offset[deg] = nodes.size();
    for (std::size_t g = 0; g < c.rank(deg); ++g) nodes.emplace_back(deg, g);
  }
  UnionFind uf(nodes.size());
  for (const auto& [deg, m] : c.differentials) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (!m.at(r, col).is_zero()) uf.unite(offset.at(deg) + col, offset.at(deg + 1) + r);
      }
    }
  }
  // Components in order of their first node.
  std::map<std::size_t, std::size_t> component_of_root;
  Decomposition dec;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::size_t root = uf.find(i);
    auto [it, inserted] = component_of_root.try_emplace(root, dec.provenance.size());
    if (inserted) dec.provenance.emplace_back();
    dec.provenance[it->second].push_back(nodes[i]);
  }
  for (const auto& members : dec.provenance) {
    GradedFreeComplex part(c.ctx);
    part.name = c.name;
    std::map<int, std::vector<std::size_t>> by_degree;
    for (const auto& [deg, g] : members) by_degree[deg].push_back(g);
    for (const auto& [deg, gens] : by_degree) {
      for (std::size_t g : gens) part.modules[deg].push_back(c.labels(deg)[g]);
    }
    for (const auto& [deg, gens] : by_degree) {
      auto tgt = by_degree.find(deg + 1);
      if (tgt == by_degree.end()) continue;
      PolyMatrix full = c.d(deg);
      PolyMatrix m(tgt->second.size(), gens.size());
      for (std::size_t r = 0; r < tgt->second.size(); ++r) {
        for (std::size_t col = 0; col < gens.size(); ++col) m.at(r, col) = full.at(tgt->second[r], gens[col]);
      }
      if (!m.is_zero()) part.differentials[deg] = std::move(m);
    }
    dec.summands.push_back(std::move(part));
  }
  return dec;
}

GradedFreeComplex extract_sn(const Decomposition& dec) {
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < dec.summands.size(); ++i) {
    long chi = euler(dec.summands[i]);
    if (chi % 2 != 0) {
      odd.push_back(i);
    } else if (chi != 0) {
      throw Error(ErrorKind::Decomposition,
                  "summand " + std::to_string(i) + " has Euler characteristic " + std::to_string(chi));
    }
  }
  if (odd.size() != 1) {
    throw Error(ErrorKind::Decomposition,
                "expected exactly one summand of odd Euler characteristic, found " + std::to_string(odd.size()));
  }
  const auto& sn = dec.summands[odd.front()];
  if (euler(sn) != 1) {
    throw Error(ErrorKind::Decomposition,
                "the odd summand has Euler characteristic " + std::to_string(euler(sn)) + ", expected 1");
  }
  return sn;
}

std::size_t RationalComplex::rank(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? 0 : it->second.size();
}

std::map<int, std::size_t> RationalComplex::cohomology() const {
  std::map<int, std::size_t> out;
  auto rank_of = [this](int deg) -> std::size_t {
    auto it = differentials.find(deg);
    return it == differentials.end() ? 0 : gimel::rank(it->second);
  };
  for (const auto& [deg, qs] : degrees) {
    std::size_t dim = qs.size() - rank_of(deg) - rank_of(deg - 1);
    if (dim) out[deg] = dim;
  }
  return out;
}

std::size_t RationalComplex::total_cohomology() const {
  std::size_t total = 0;
  for (const auto& [deg, dim] : cohomology()) total += dim;
  return total;
}

RationalComplex reduced_complex(const GradedFreeComplex& s, const RingCtx& specialized, const Rational& alpha) {
  GradedFreeComplex ev = s.ctx.is_equivariant() ? evaluate(s, specialized) : s;
  if (!(ev.ctx == specialized)) throw Error(ErrorKind::ContextMismatch, "complex is specialized at another potential");
  root_projector(specialized, alpha);  // validates alpha
  RationalComplex out;
  for (int deg : ev.degrees()) out.degrees[deg] = ev.labels(deg);
  for (const auto& [deg, m] : ev.differentials) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = evaluate_at(m.at(i, j), alpha);
    }
    out.differentials[deg] = std::move(r);
  }
  return out;
}

}  // namespace gimel
