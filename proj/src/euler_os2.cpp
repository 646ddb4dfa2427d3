#include "orientseq/euler_os2.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "orientseq/bounds.hpp"
#include "orientseq/verify.hpp"

namespace orientseq {

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loops are not allowed");
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool EulerGraph::has_edge(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

std::string edge_list_string(const std::set<Edge>& edges) {
  std::ostringstream os;
  bool first = true;
  for (Edge e : edges) {
    if (!first) os << ' ';
    os << '{' << e.first << ',' << e.second << '}';
    first = false;
  }
  return os.str();
}

bool disjoint_from(const std::vector<Edge>& matching, const std::set<Edge>& forbidden) {
  return std::none_of(matching.begin(), matching.end(),
                      [&](Edge e) { return forbidden.count(e) > 0; });
}

// Deterministic one-factor candidates for even q: the diameter matching
// {i, i+q/2} first, then the round-robin matchings {i, c-i} for odd c
// (fixed-point free since q is even), then a backtracking matching as a
// complete fallback. `skip` selects among the viable ones for retries.
std::vector<Edge> pick_one_factor(int q, const std::set<Edge>& forbidden, int skip) {
  std::vector<std::vector<Edge>> viable;

  auto consider = [&](std::vector<Edge> m) {
    std::sort(m.begin(), m.end());
    if (disjoint_from(m, forbidden) &&
        std::find(viable.begin(), viable.end(), m) == viable.end())
      viable.push_back(std::move(m));
  };

  std::vector<Edge> diameter;
  for (int i = 0; i < q / 2; ++i) diameter.push_back(make_edge(i, i + q / 2));
  consider(std::move(diameter));

  for (int c = 1; c < q; c += 2) {
    std::vector<Edge> m;
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    for (int i = 0; i < q; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      int j = ((c - i) % q + q) % q;
      m.push_back(make_edge(i, j));
      used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    }
    consider(std::move(m));
  }

  if (viable.empty()) {
    // Backtracking fallback: match the lowest free vertex with the lowest
    // free partner avoiding forbidden edges.
    std::vector<Edge> matching;
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    std::function<bool()> extend = [&]() -> bool {
      int v = -1;
      for (int i = 0; i < q; ++i)
        if (!used[static_cast<std::size_t>(i)]) {
          v = i;
          break;
        }
      if (v < 0) return true;
      used[static_cast<std::size_t>(v)] = true;
      for (int u = v + 1; u < q; ++u) {
        if (used[static_cast<std::size_t>(u)] || forbidden.count(make_edge(v, u))) continue;
        used[static_cast<std::size_t>(u)] = true;
        matching.push_back(make_edge(v, u));
        if (extend()) return true;
        matching.pop_back();
        used[static_cast<std::size_t>(u)] = false;
      }
      used[static_cast<std::size_t>(v)] = false;
      return false;
    };
    if (!extend())
      throw error("no one-factor avoids the forbidden edges: " + edge_list_string(forbidden));
    std::sort(matching.begin(), matching.end());
    viable.push_back(std::move(matching));
  }

  return viable[static_cast<std::size_t>(skip) % viable.size()];
}

}  // namespace

EulerGraph build_graph(int q, const std::vector<Edge>& forbidden_edges, int skip_matchings) {
  if (q < 3) throw std::invalid_argument("build_graph requires q >= 3");
  std::set<Edge> forbidden;
  for (Edge e : forbidden_edges) {
    if (e.first < 0 || e.first >= q || e.second < 0 || e.second >= q)
      throw std::invalid_argument("forbidden edge out of range");
    forbidden.insert(make_edge(e.first, e.second));
  }

  EulerGraph g;
  g.q = q;
  std::set<Edge> removed;
  if (q % 2 == 0) {
    auto factor = pick_one_factor(q, forbidden, skip_matchings);
    removed.insert(factor.begin(), factor.end());
    g.removed_factor = std::move(factor);
  }
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (!removed.count({a, b})) g.edges.push_back({a, b});
  return g;
}

namespace {

struct AdjacencyList {
  // adj[v] = ascending (neighbor, edge id); used[] marks consumed edges.
  std::vector<std::vector<std::pair<int, std::size_t>>> adj;
  std::vector<bool> used;
  std::vector<std::size_t> cursor;

  AdjacencyList(int q, const std::vector<Edge>& edges)
      : adj(static_cast<std::size_t>(q)), used(edges.size(), false),
        cursor(static_cast<std::size_t>(q), 0) {
    for (std::size_t id = 0; id < edges.size(); ++id) {
      adj[static_cast<std::size_t>(edges[id].first)].push_back({edges[id].second, id});
      adj[static_cast<std::size_t>(edges[id].second)].push_back({edges[id].first, id});
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
  }
};

// Stack-based Hierholzer; ascending neighbor order makes it deterministic.
// Starting from an odd-degree vertex the trail ends at the other one; with
// all degrees even it is a circuit back to the start.
std::vector<int> euler_trail(AdjacencyList& lists, int start, std::size_t edge_count) {
  std::vector<int> stack{start};
  std::vector<int> out;
  out.reserve(edge_count + 1);
  while (!stack.empty()) {
    int v = stack.back();
    auto& row = lists.adj[static_cast<std::size_t>(v)];
    auto& cur = lists.cursor[static_cast<std::size_t>(v)];
    while (cur < row.size() && lists.used[row[cur].second]) ++cur;
    if (cur < row.size()) {
      lists.used[row[cur].second] = true;
      stack.push_back(row[cur].first);
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

RingSequence eulerian_with_prefix(const EulerGraph& g, const std::vector<int>& prefix) {
  if (!prefix.empty() && (prefix.size() < 2 || prefix.size() > 5))
    throw std::invalid_argument("prefix must be empty or hold 2..5 symbols");
  for (int v : prefix)
    if (v < 0 || v >= g.q) throw std::invalid_argument("prefix symbol out of range");

  std::set<Edge> prefix_edges;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    if (prefix[i] == prefix[i + 1])
      throw std::invalid_argument("consecutive prefix symbols must differ");
    Edge e = make_edge(prefix[i], prefix[i + 1]);
    if (!g.has_edge(e)) throw std::invalid_argument("prefix edge not present in graph");
    if (!prefix_edges.insert(e).second) throw std::invalid_argument("prefix repeats an edge");
  }

  std::vector<Edge> remaining;
  remaining.reserve(g.edges.size());
  for (Edge e : g.edges)
    if (!prefix_edges.count(e)) remaining.push_back(e);

  const int start = prefix.empty() ? g.edges.front().first : prefix.back();
  const int target = prefix.empty() ? start : prefix.front();

  AdjacencyList lists(g.q, remaining);
  std::vector<int> trail = euler_trail(lists, start, remaining.size());
  if (trail.size() != remaining.size() + 1 || trail.back() != target)
    throw error("no Eulerian circuit with the requested prefix (disconnected remainder)");

  std::vector<Symbol> ring;
  ring.reserve(g.edges.size());
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) ring.push_back(static_cast<Symbol>(prefix[i]));
  for (std::size_t i = 0; i + 1 < trail.size(); ++i) ring.push_back(static_cast<Symbol>(trail[i]));
  return RingSequence(g.q, std::move(ring));
}

RingSequence os2_maximal(int q, int x, int y, int z, bool lead_zero) {
  if (q <= 4) throw std::invalid_argument("os2_maximal requires q > 4");
  if (x == y || y == z || x == z) throw std::invalid_argument("x, y, z must be distinct");
  for (int v : {x, y, z})
    if (v < 0 || v >= q) throw std::invalid_argument("anchor symbol out of range");
  if (lead_zero && (x == 0 || y == 0 || z == 0))
    throw std::invalid_argument("lead_zero requires x, y, z nonzero");

  const std::vector<int> prefix =
      lead_zero ? std::vector<int>{0, x, y, z, x} : std::vector<int>{x, y, z, x};
  std::vector<Edge> forbidden;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
    forbidden.push_back(make_edge(prefix[i], prefix[i + 1]));

  // The circuit should exist on the first attempt; alternate one-factors are
  // tried only if the remainder came out disconnected.
  std::string last_failure = "no attempt made";
  const int attempts = q % 2 == 0 ? q : 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    EulerGraph g = build_graph(q, forbidden, attempt);
    try {
      RingSequence s = eulerian_with_prefix(g, prefix);
      if (s.period() != os2_max_period(q))
        throw certification_error("os2_maximal: circuit does not reach the maximal period");
      if (!check_orientable(s, 2))
        throw certification_error("os2_maximal: circuit failed the orientability check");
      return s;
    } catch (const certification_error&) {
      throw;
    } catch (const error& e) {
      last_failure = e.what();
    }
  }
  throw error("os2_maximal: no one-factor yielded a circuit (" + last_failure + ")");
}

}  // namespace orientseq
