#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gimel/chain.hpp"
#include "gimel/reduce.hpp"

namespace gimel {

// X[i,j,k,l]: edge labels counterclockwise starting from the incoming
// under-strand, so the under-strand runs i -> k.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;  // +1 positive, -1 negative
};

struct Diagram {
  std::vector<Crossing> crossings;
  int basepoint = 1;

  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }
  int writhe() const;
  int positive() const;
  int negative() const;
  std::string to_string() const;
};

// Parses "PD[X[a,b,c,d], ...]" with an optional trailing "basepoint=e".
Diagram parse_pd(std::string_view text);
Diagram mirror(const Diagram& d);

using Vertex = std::uint64_t;  // bit c = smoothing at crossing c

struct ResolutionState {
  Vertex vertex = 0;
  std::vector<std::vector<int>> circles;  // sorted edge lists, ordered by smallest edge
  std::vector<int> circle_of_edge;        // index by edge label (entry 0 unused)
  std::size_t basepoint_circle = 0;
};

ResolutionState resolve(const Diagram& d, Vertex vertex);
// The orientation-preserving smoothing: 0 at positive, 1 at negative crossings.
Vertex oriented_vertex(const Diagram& d);

// Equivariant sl_2 complex over R_2 = Q[x, a_1] with x acting at the basepoint.
SparseComplex build_equivariant_sl2_sparse(const Diagram& d);
GradedFreeComplex build_equivariant_sl2(const Diagram& d);

// The Gornik cocycle for dw = x^2 - x, alpha = 1, as ring elements (in
// Q[x]/(x^2 - x)) on the degree-0 generators of build_equivariant_sl2(d).
// Circles of the oriented resolution are colored x / (1 - x) alternately
// along the Seifert graph, the basepoint circle getting x. Checked to be a
// cocycle that is not a coboundary.
std::vector<Poly> gornik_cocycle_sl2(const Diagram& d);

}  // namespace gimel
