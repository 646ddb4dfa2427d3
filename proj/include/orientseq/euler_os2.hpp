#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orientseq/ring_sequence.hpp"

namespace orientseq {

/// Unordered pair of distinct vertices, stored with first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int a, int b);

/// K_q for odd q, or K_q minus a perfect matching for even q, so that all
/// degrees are even and an Eulerian circuit exists.
struct EulerGraph {
  int q = 0;
  std::vector<Edge> edges;  // kept edges, sorted
  std::optional<std::vector<Edge>> removed_factor;

  bool has_edge(Edge e) const;
};

/// Builds the circuit graph. For even q the removed one-factor is chosen
/// disjoint from `forbidden_edges`; `skip_matchings` skips that many viable
/// one-factors in the deterministic candidate order (used by the retry loop).
EulerGraph build_graph(int q, const std::vector<Edge>& forbidden_edges, int skip_matchings = 0);

/// Eulerian circuit through every kept edge whose symbol stream begins with
/// `prefix` (empty prefix starts at vertex 0). Ring period = edge count.
/// Throws on an impossible prefix or a disconnected remainder.
RingSequence eulerian_with_prefix(const EulerGraph& g, const std::vector<int>& prefix);

/// Maximal-period OS_q(2) whose ring has the form [x,y,z,x,...] or, with
/// lead_zero, [0,x,y,z,x,...] (then x,y,z must be nonzero). Requires q > 4;
/// x, y, z distinct. Deterministic; output is checker-certified.
RingSequence os2_maximal(int q, int x, int y, int z, bool lead_zero);

}  // namespace orientseq
