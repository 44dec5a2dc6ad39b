#include "gimel/cube.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "gimel/errors.hpp"
#include "gimel/filtration.hpp"

namespace gimel {

namespace {

struct EdgeUnion {
  std::vector<int> parent;
  explicit EdgeUnion(int edges) : parent(static_cast<std::size_t>(edges) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int e) {
    while (parent[static_cast<std::size_t>(e)] != e) {
      parent[static_cast<std::size_t>(e)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(e)])];
      e = parent[static_cast<std::size_t>(e)];
    }
    return e;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  Diagram parse() {
    Diagram d;
    expect("PD");
    expect("[");
    if (!try_consume("]")) {
      do {
        expect("X");
        expect("[");
        Crossing c;
        for (int i = 0; i < 4; ++i) {
          if (i) expect(",");
          c.edges[static_cast<std::size_t>(i)] = integer();
        }
        expect("]");
        d.crossings.push_back(c);
      } while (try_consume(","));
      expect("]");
    }
    try_consume(",");
    try_consume(";");
    if (try_consume("basepoint")) {
      expect("=");
      d.basepoint = integer();
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::MalformedInput,
                "PD parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) fail("expected '" + std::string(token) + "'");
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected an edge label");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void assign_signs(Diagram& d) {
  const int m = d.edge_count();
  auto succ = [m](int e) { return e % m + 1; };
  for (auto& c : d.crossings) {
    auto [i, j, k, l] = c.edges;
    if (k != succ(i)) {
      throw Error(ErrorKind::MalformedInput, "crossing " + d.to_string() +
                                                 ": under-strand must run from an edge to its successor");
    }
    bool pos = l == succ(j);
    bool neg = j == succ(l);
    if (pos && neg) {
      // Only possible with two edges: the over-strand leaves through the
      // position where edge i reappears.
      pos = l == i;
      neg = j == i;
    }
    if (pos == neg) {
      throw Error(ErrorKind::MalformedInput, "cannot determine the sign of crossing X[" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(k) + "," +
                                                 std::to_string(l) + "]");
    }
    c.sign = pos ? 1 : -1;
  }
}

void check_diagram(const Diagram& d) {
  const int m = d.edge_count();
  if (m == 0) {
    if (d.basepoint != 1) throw Error(ErrorKind::MalformedInput, "the crossingless diagram only has edge 1");
    return;
  }
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& c : d.crossings) {
    for (int e : c.edges) {
      if (e < 1 || e > m) {
        throw Error(ErrorKind::MalformedInput, "edge label " + std::to_string(e) + " out of range 1.." + std::to_string(m));
      }
      ++count[static_cast<std::size_t>(e)];
    }
  }
  for (int e = 1; e <= m; ++e) {
    if (count[static_cast<std::size_t>(e)] != 2) {
      throw Error(ErrorKind::MalformedInput, "edge label " + std::to_string(e) + " appears " +
                                                 std::to_string(count[static_cast<std::size_t>(e)]) + " times");
    }
  }
  if (d.basepoint < 1 || d.basepoint > m) {
    throw Error(ErrorKind::MalformedInput, "basepoint " + std::to_string(d.basepoint) + " is not an edge");
  }
  EdgeUnion uf(m);
  for (const auto& c : d.crossings) {
    uf.unite(c.edges[0], c.edges[2]);
    uf.unite(c.edges[1], c.edges[3]);
  }
  for (int e = 2; e <= m; ++e) {
    if (uf.find(e) != uf.find(1)) throw Error(ErrorKind::UnsupportedInput, "diagram has more than one component");
  }
}

// Degree-0 layout of the cube: vertices grouped by homological degree.
struct CubeLayout {
  const Diagram& d;
  int c;
  int n_plus, n_minus;
  std::vector<ResolutionState> states;
  std::vector<std::vector<int>> position;  // per vertex: circle -> index among non-basepoint circles, -1 for basepoint
  std::vector<std::size_t> offset;         // per vertex: first generator index within its degree
  std::map<int, std::vector<int>> modules;

  explicit CubeLayout(const Diagram& diagram) : d(diagram), c(static_cast<int>(diagram.crossings.size())) {
    if (c > 20) throw Error(ErrorKind::UnsupportedInput, "diagrams with more than 20 crossings are not supported");
    n_plus = d.positive();
    n_minus = d.negative();
    const Vertex count = Vertex{1} << c;
    states.reserve(count);
    position.resize(count);
    offset.resize(count);
    for (Vertex v = 0; v < count; ++v) {
      states.push_back(resolve(d, v));
      const auto& st = states.back();
      auto& pos = position[v];
      int next = 0;
      for (std::size_t ci = 0; ci < st.circles.size(); ++ci) pos.push_back(ci == st.basepoint_circle ? -1 : next++);
    }
    // Vertices in increasing order within each degree.
    for (Vertex v = 0; v < count; ++v) {
      int r = std::popcount(v);
      int h = r - n_minus;
      auto& labels = modules[h];
      offset[v] = labels.size();
      const auto& st = states[v];
      int free = static_cast<int>(st.circles.size()) - 1;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << free); ++s) {
        int ones = std::popcount(s);
        int abs = (2 * ones - free) - 1 - r - n_plus + 2 * n_minus;
        labels.push_back(abs + 1);  // label = absolute degree - (1 - n), n = 2
      }
    }
  }

  int degree(Vertex v) const { return std::popcount(v) - n_minus; }
};

}  // namespace

int Diagram::writhe() const { return positive() - negative(); }

int Diagram::positive() const {
  int p = 0;
  for (const auto& c : crossings) p += c.sign > 0;
  return p;
}

int Diagram::negative() const { return static_cast<int>(crossings.size()) - positive(); }

std::string Diagram::to_string() const {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& e = crossings[i].edges;
    out << (i ? "," : "") << "X[" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "]";
  }
  out << "]";
  if (basepoint != 1) out << " basepoint=" << basepoint;
  return out.str();
}

Diagram parse_pd(std::string_view text) {
  Diagram d = PdParser(text).parse();
  check_diagram(d);
  assign_signs(d);
  return d;
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (auto& c : out.crossings) {
    auto [i, j, k, l] = c.edges;
    c.edges = c.sign > 0 ? std::array<int, 4>{j, k, l, i} : std::array<int, 4>{l, i, j, k};
    c.sign = -c.sign;
  }
  return out;
}

ResolutionState resolve(const Diagram& d, Vertex vertex) {
  ResolutionState st;
  st.vertex = vertex;
  const int m = d.edge_count();
  if (m == 0) {
    st.circles = {{}};
    st.circle_of_edge = {0};
    return st;
  }
  EdgeUnion uf(m);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    auto [i, j, k, l] = d.crossings[c].edges;
    if ((vertex >> c) & 1) {
      uf.unite(i, j);
      uf.unite(k, l);
    } else {
      uf.unite(i, l);
      uf.unite(j, k);
    }
  }
  std::map<int, std::size_t> index_of_root;
  st.circle_of_edge.assign(static_cast<std::size_t>(m) + 1, -1);
  for (int e = 1; e <= m; ++e) {
    int root = uf.find(e);
    auto [it, inserted] = index_of_root.try_emplace(root, st.circles.size());
    if (inserted) st.circles.emplace_back();
    st.circles[it->second].push_back(e);
    st.circle_of_edge[static_cast<std::size_t>(e)] = static_cast<int>(it->second);
  }
  st.basepoint_circle = static_cast<std::size_t>(st.circle_of_edge[static_cast<std::size_t>(d.basepoint)]);
  return st;
}

Vertex oriented_vertex(const Diagram& d) {
  Vertex v = 0;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    if (d.crossings[c].sign < 0) v |= Vertex{1} << c;
  }
  return v;
}

SparseComplex build_equivariant_sl2_sparse(const Diagram& d) {
  const RingCtx ctx = RingCtx::equivariant(2);
  CubeLayout layout(d);
  SparseComplex out;
  out.ctx = ctx;
  out.name = d.to_string();
  out.modules = layout.modules;

  const Poly one = ctx.one();
  const Poly x = ctx.x_power(1);
  const Poly a1 = ctx.a(1);
  const Poly a0 = ctx.parse("a0");
  const int c = layout.c;
  const Vertex count = Vertex{1} << c;

  for (Vertex v = 0; v < count; ++v) {
    const auto& sv = layout.states[v];
    const auto& pv = layout.position[v];
    const int deg = layout.degree(v);
    auto& triples = out.entries[deg];
    for (int cr = 0; cr < c; ++cr) {
      if ((v >> cr) & 1) continue;
      const Vertex w = v | (Vertex{1} << cr);
      const auto& sw = layout.states[w];
      const auto& pw = layout.position[w];
      const bool negate = std::popcount(v & ((Vertex{1} << cr) - 1)) % 2 != 0;

      // Circles touching the crossing, before and after.
      std::vector<int> before, after;
      for (int e : d.crossings[static_cast<std::size_t>(cr)].edges) {
        int cv = sv.circle_of_edge[static_cast<std::size_t>(e)];
        int cw = sw.circle_of_edge[static_cast<std::size_t>(e)];
        if (std::find(before.begin(), before.end(), cv) == before.end()) before.push_back(cv);
        if (std::find(after.begin(), after.end(), cw) == after.end()) after.push_back(cw);
      }
      auto bit = [](int p) { return p < 0 ? std::uint64_t{0} : std::uint64_t{1} << p; };

      const int free = static_cast<int>(sv.circles.size()) - 1;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << free); ++s) {
        // Carry the labels of untouched circles.
        std::uint64_t base = 0;
        for (std::size_t ci = 0; ci < sv.circles.size(); ++ci) {
          if (std::find(before.begin(), before.end(), static_cast<int>(ci)) != before.end()) continue;
          int p = pv[ci];
          if (p < 0 || !((s >> p) & 1)) continue;
          int cw = sw.circle_of_edge[static_cast<std::size_t>(sv.circles[ci].front())];
          base |= bit(pw[static_cast<std::size_t>(cw)]);
        }
        auto label_of = [&](int circle) -> int {
          int p = pv[static_cast<std::size_t>(circle)];
          return p >= 0 && ((s >> p) & 1) ? 1 : 0;
        };
        std::vector<std::pair<std::uint64_t, Poly>> terms;
        if (before.size() == 2 && after.size() == 1) {
          // Merge.
          int A = before[0], B = before[1], C = after[0];
          int pc = pw[static_cast<std::size_t>(C)];
          int eps = label_of(A) + label_of(B);
          if (pc >= 0) {
            if (eps == 0) terms.emplace_back(0, one);
            if (eps == 1) terms.emplace_back(bit(pc), one);
            if (eps == 2) {
              terms.emplace_back(bit(pc), -a1);
              terms.emplace_back(0, -a0);
            }
          } else {
            terms.emplace_back(0, eps == 0 ? one : x);
          }
        } else if (before.size() == 1 && after.size() == 2) {
          // Split.
          int C = before[0], A = after[0], B = after[1];
          int pa = pw[static_cast<std::size_t>(A)], pb = pw[static_cast<std::size_t>(B)];
          if (pv[static_cast<std::size_t>(C)] >= 0) {
            if (label_of(C) == 0) {
              terms.emplace_back(bit(pa), one);
              terms.emplace_back(bit(pb), one);
              terms.emplace_back(0, a1);
            } else {
              terms.emplace_back(bit(pa) | bit(pb), one);
              terms.emplace_back(0, -a0);
            }
          } else {
            int free_side = pa >= 0 ? pa : pb;
            terms.emplace_back(bit(free_side), one);
            terms.emplace_back(0, x + a1);
          }
        } else {
          throw Error(ErrorKind::Internal, "cube edge is neither a merge nor a split");
        }
        const std::size_t col = layout.offset[v] + s;
        for (auto& [extra, coef] : terms) {
          const std::size_t row = layout.offset[w] + (base | extra);
          triples.emplace_back(row, col, negate ? -coef : coef);
        }
      }
    }
  }
  return out;
}

GradedFreeComplex build_equivariant_sl2(const Diagram& d) { return build_equivariant_sl2_sparse(d).to_dense(); }

std::vector<Poly> gornik_cocycle_sl2(const Diagram& d) {
  const RingCtx lee = RingCtx::gimel_potential(2);
  CubeLayout layout(d);
  const Vertex ov = oriented_vertex(d);
  const auto& st = layout.states[ov];
  const auto& pos = layout.position[ov];
  const std::size_t circles = st.circles.size();

  // Two-color the Seifert graph starting from the basepoint circle.
  std::vector<std::vector<std::size_t>> adj(circles);
  for (const auto& c : d.crossings) {
    int a = st.circle_of_edge[static_cast<std::size_t>(c.edges[0])];
    int b = st.circle_of_edge[static_cast<std::size_t>(c.sign > 0 ? c.edges[1] : c.edges[2])];
    if (a == b) throw Error(ErrorKind::Internal, "Seifert graph has a loop");
    adj[static_cast<std::size_t>(a)].push_back(static_cast<std::size_t>(b));
    adj[static_cast<std::size_t>(b)].push_back(static_cast<std::size_t>(a));
  }
  std::vector<int> color(circles, -1);
  std::vector<std::size_t> stack{st.basepoint_circle};
  color[st.basepoint_circle] = 0;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        stack.push_back(w);
      } else if (color[w] == color[u]) {
        throw Error(ErrorKind::Internal, "Seifert graph is not bipartite");
      }
    }
  }

  // Expand the product: color 0 is x, color 1 is 1 - x.
  const Poly x = lee.x_power(1);
  const Poly one_minus_x = lee.sub(lee.one(), x);
  std::map<std::uint64_t, Poly> terms{{0, color[st.basepoint_circle] == 0 ? x : one_minus_x}};
  for (std::size_t ci = 0; ci < circles; ++ci) {
    int p = pos[ci];
    if (p < 0) continue;
    std::uint64_t b = std::uint64_t{1} << p;
    std::map<std::uint64_t, Poly> next;
    for (const auto& [s, coef] : terms) {
      if (color[ci] == 0) {
        next[s | b] += coef;
      } else {
        next[s] += coef;
        next[s | b] -= coef;
      }
    }
    terms = std::move(next);
  }
  const int deg = layout.degree(ov);
  if (deg != 0) throw Error(ErrorKind::Internal, "oriented resolution is not in homological degree 0");
  std::vector<Poly> psi(layout.modules.at(0).size());
  for (const auto& [s, coef] : terms) psi[layout.offset[ov] + s] = coef;

  GradedFreeComplex ev = evaluate(build_equivariant_sl2(d), lee);
  ScalarComplex sc = expand(ev);
  Vector v = embed_cochain(sc, psi);
  if (!is_cocycle(sc, v)) throw Error(ErrorKind::Internal, "Gornik cochain is not a cocycle");
  if (is_coboundary(sc, v)) throw Error(ErrorKind::Internal, "Gornik cocycle is a coboundary");
  return psi;
}

}  // namespace gimel
