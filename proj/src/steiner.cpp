// Copyright 2026 The parityc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "parity/steiner.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace parity {

namespace {

using UnitSegment = std::pair<Coord, Coord>;

std::vector<NodeId> sorted_unique(std::span<const NodeId> nodes) {
  std::vector<NodeId> out(nodes.begin(), nodes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

/// Spanning tree of the given edges reached from the first terminal, with
/// non-terminal leaves pruned. nullopt when a terminal is not reached.
std::optional<SteinerTree> tree_from_edges(
    const std::vector<Edge>& edges, const std::vector<NodeId>& terminals) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [_, list] : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::map<NodeId, std::set<NodeId>> tree;
  const NodeId root = terminals.front();
  tree[root];
  std::deque<NodeId> queue{root};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adj[u]) {
      if (tree.contains(v)) continue;
      tree[v].insert(u);
      tree[u].insert(v);
      queue.push_back(v);
    }
  }
  for (NodeId t : terminals) {
    if (!tree.contains(t)) return std::nullopt;
  }

  const std::set<NodeId> keep(terminals.begin(), terminals.end());
  std::deque<NodeId> leaves;
  for (const auto& [n, nb] : tree) {
    if (nb.size() <= 1 && !keep.contains(n)) leaves.push_back(n);
  }
  while (!leaves.empty()) {
    const NodeId n = leaves.front();
    leaves.pop_front();
    auto it = tree.find(n);
    if (it == tree.end()) continue;
    for (NodeId v : it->second) {
      auto& other = tree[v];
      other.erase(n);
      if (other.size() <= 1 && !keep.contains(v)) leaves.push_back(v);
    }
    tree.erase(it);
  }

  SteinerTree out;
  out.terminals = terminals;
  for (const auto& [n, nb] : tree) {
    out.nodes.push_back(n);
    for (NodeId v : nb) {
      if (n < v) out.edges.push_back({n, v});
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

void add_straight(Coord a, Coord b, std::vector<UnitSegment>& out) {
  while (a != b) {
    Coord next = a;
    if (a.x != b.x) {
      next.x += a.x < b.x ? 1 : -1;
    } else {
      next.y += a.y < b.y ? 1 : -1;
    }
    out.push_back({a, next});
    a = next;
  }
}

void add_l_path(Coord from, Coord to, bool x_first, std::vector<UnitSegment>& out) {
  const Coord bend = x_first ? Coord{to.x, from.y} : Coord{from.x, to.y};
  add_straight(from, bend, out);
  add_straight(bend, to, out);
}

/// Coordinates of the terminals, or nullopt if any is missing.
std::optional<std::vector<Coord>> terminal_coords(
    const DeviceGraph& g, const std::vector<NodeId>& terminals) {
  std::vector<Coord> out;
  for (NodeId t : terminals) {
    if (t >= g.size()) throw std::invalid_argument("terminal is not a device node");
    const auto& c = g.coord(t);
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

std::optional<SteinerTree> realize(
    const DeviceGraph& g, const std::vector<UnitSegment>& segments,
    const std::vector<NodeId>& terminals) {
  std::vector<Edge> edges;
  for (const auto& [a, b] : segments) {
    const auto na = g.node_at(a), nb = g.node_at(b);
    if (!na || !nb || !g.has_edge(*na, *nb)) return std::nullopt;
    edges.push_back({std::min(*na, *nb), std::max(*na, *nb)});
  }
  return tree_from_edges(edges, terminals);
}

void keep_best(std::optional<SteinerTree>& best, std::optional<SteinerTree> candidate) {
  if (candidate && (!best || better_tree(*candidate, *best))) best = std::move(candidate);
}

SteinerTree single_node(NodeId n) { return SteinerTree{{n}, {n}, {}}; }

}  // namespace

bool SteinerTree::contains(NodeId n) const {
  return std::binary_search(nodes.begin(), nodes.end(), n);
}

bool SteinerTree::is_terminal(NodeId n) const {
  return std::binary_search(terminals.begin(), terminals.end(), n);
}

std::vector<NodeId> SteinerTree::neighbors(NodeId n) const {
  std::vector<NodeId> out;
  for (auto [a, b] : edges) {
    if (a == n) out.push_back(b);
    if (b == n) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_steiner_tree(const SteinerTree& tree, const DeviceGraph& g) {
  if (tree.terminals.empty() || tree.nodes.empty()) return false;
  if (!std::is_sorted(tree.nodes.begin(), tree.nodes.end())) return false;
  if (tree.edges.size() + 1 != tree.nodes.size()) return false;
  std::map<NodeId, std::size_t> index;
  for (NodeId n : tree.nodes) {
    if (n >= g.size() || !index.emplace(n, index.size()).second) return false;
  }
  UnionFind uf(tree.nodes.size());
  std::vector<std::size_t> degree(tree.nodes.size(), 0);
  for (auto [a, b] : tree.edges) {
    if (!g.has_edge(a, b) || !index.contains(a) || !index.contains(b)) return false;
    if (!uf.unite(index[a], index[b])) return false;
    ++degree[index[a]];
    ++degree[index[b]];
  }
  for (NodeId t : tree.terminals) {
    if (!index.contains(t)) return false;
  }
  if (tree.nodes.size() == 1) return true;
  for (NodeId n : tree.nodes) {
    if (degree[index[n]] == 1 && !tree.is_terminal(n)) return false;
  }
  return true;
}

std::size_t terminal_span(const SteinerTree& tree) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (auto [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t span = 0;
  for (NodeId t : tree.terminals) {
    std::map<NodeId, std::size_t> dist{{t, 0}};
    std::deque<NodeId> queue{t};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adj[u]) {
        if (dist.emplace(v, dist[u] + 1).second) queue.push_back(v);
      }
    }
    for (NodeId other : tree.terminals) span = std::max(span, dist[other]);
  }
  return span;
}

bool better_tree(const SteinerTree& a, const SteinerTree& b) {
  return std::forward_as_tuple(a.size(), terminal_span(a), a.edges) <
         std::forward_as_tuple(b.size(), terminal_span(b), b.edges);
}

std::optional<SteinerTree> rect_steiner_3(
    const DeviceGraph& g, std::span<const NodeId> terminals) {
  const auto terms = sorted_unique(terminals);
  if (terms.size() != 3) throw std::invalid_argument("rect_steiner_3 needs 3 terminals");
  const auto coords = terminal_coords(g, terms);
  if (!coords) return std::nullopt;
  std::array<int, 3> xs{}, ys{};
  for (int i = 0; i < 3; ++i) {
    xs[i] = (*coords)[i].x;
    ys[i] = (*coords)[i].y;
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const Coord median{xs[1], ys[1]};

  std::optional<SteinerTree> best;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<UnitSegment> segments;
    for (int i = 0; i < 3; ++i) {
      add_l_path((*coords)[i], median, (mask >> i) & 1U, segments);
    }
    keep_best(best, realize(g, segments, terms));
  }
  return best;
}

std::optional<SteinerTree> rect_steiner_4(
    const DeviceGraph& g, std::span<const NodeId> terminals) {
  const auto terms = sorted_unique(terminals);
  if (terms.size() != 4) throw std::invalid_argument("rect_steiner_4 needs 4 terminals");
  const auto coords = terminal_coords(g, terms);
  if (!coords) return std::nullopt;
  std::array<int, 4> xs{}, ys{};
  for (int i = 0; i < 4; ++i) {
    xs[i] = (*coords)[i].x;
    ys[i] = (*coords)[i].y;
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const int x2 = xs[1], x3 = xs[2], y2 = ys[1], y3 = ys[2];

  // Corners: 0 bottom-left, 1 bottom-right, 2 top-left, 3 top-right.
  const std::array<Coord, 4> corner{
      Coord{x2, y2}, Coord{x3, y2}, Coord{x2, y3}, Coord{x3, y3}};
  const std::array<std::pair<int, int>, 4> sides{{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};

  std::array<int, 4> attach{};
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    const Coord t = (*coords)[i];
    const int cx = std::clamp(t.x, x2, x3) == x2 ? 0 : 1;
    const int cy = std::clamp(t.y, y2, y3) == y2 ? 0 : 2;
    attach[i] = cx + cy;
    used[attach[i]] = true;
  }

  auto connects = [&](unsigned side_mask) {
    UnionFind uf(4);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        if (corner[a] == corner[b]) uf.unite(a, b);
      }
    }
    for (int s = 0; s < 4; ++s) {
      if ((side_mask >> s) & 1U) uf.unite(sides[s].first, sides[s].second);
    }
    int root = -1;
    for (int c = 0; c < 4; ++c) {
      if (!used[c]) continue;
      const int r = static_cast<int>(uf.find(c));
      if (root >= 0 && r != root) return false;
      root = r;
    }
    return true;
  };

  std::vector<unsigned> side_masks;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (!connects(mask)) continue;
    bool minimal = true;
    for (int s = 0; s < 4 && minimal; ++s) {
      if (((mask >> s) & 1U) && connects(mask & ~(1U << s))) minimal = false;
    }
    if (minimal) side_masks.push_back(mask);
  }

  std::optional<SteinerTree> best;
  for (unsigned side_mask : side_masks) {
    std::vector<UnitSegment> rect;
    for (int s = 0; s < 4; ++s) {
      if ((side_mask >> s) & 1U) {
        add_straight(corner[sides[s].first], corner[sides[s].second], rect);
      }
    }
    for (unsigned bend = 0; bend < 16; ++bend) {
      bool redundant = false;
      std::vector<UnitSegment> segments = rect;
      for (int i = 0; i < 4; ++i) {
        const Coord t = (*coords)[i], c = corner[attach[i]];
        const bool x_first = (bend >> i) & 1U;
        // Aligned terminals have a single straight route.
        if (x_first && (t.x == c.x || t.y == c.y)) redundant = true;
        add_l_path(t, c, x_first, segments);
      }
      if (!redundant) keep_best(best, realize(g, segments, terms));
    }
  }
  return best;
}

SteinerTree general_steiner(const DeviceGraph& g, std::span<const NodeId> terminals) {
  const auto terms = sorted_unique(terminals);
  if (terms.empty()) throw std::invalid_argument("Steiner tree needs a terminal");
  for (NodeId t : terms) {
    if (t >= g.size()) throw std::invalid_argument("terminal is not a device node");
  }
  if (terms.size() == 1) return single_node(terms.front());

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> closure;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      closure.emplace_back(g.distance(terms[i], terms[j]), i, j);
    }
  }
  std::sort(closure.begin(), closure.end());
  UnionFind uf(terms.size());
  std::vector<Edge> edges;
  for (auto [d, i, j] : closure) {
    if (!uf.unite(i, j)) continue;
    const auto path = g.shortest_path(terms[i], terms[j]);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      edges.push_back({std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1])});
    }
  }
  auto tree = tree_from_edges(edges, terms);
  if (!tree) throw std::logic_error("metric closure tree lost a terminal");
  return *tree;
}

SteinerTree steiner_tree(const DeviceGraph& g, std::span<const NodeId> terminals) {
  const auto terms = sorted_unique(terminals);
  std::optional<SteinerTree> best = general_steiner(g, terms);
  if (terms.size() == 3) keep_best(best, rect_steiner_3(g, terms));
  if (terms.size() == 4) keep_best(best, rect_steiner_4(g, terms));
  return *best;
}

}  // namespace parity
