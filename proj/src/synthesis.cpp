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


#include "parity/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace parity {

namespace {

struct RootedTree {
  NodeId root = 0;
  std::map<NodeId, NodeId> parent;
  std::map<NodeId, std::vector<NodeId>> children;
  std::map<NodeId, std::size_t> height;
  std::map<NodeId, std::size_t> depth;
};

RootedTree root_tree(const SteinerTree& tree, NodeId root) {
  if (!tree.contains(root)) throw std::invalid_argument("root is not a tree node");
  if (tree.edges.size() + 1 != tree.nodes.size()) {
    throw std::invalid_argument("edge set is not a tree");
  }
  std::map<NodeId, std::vector<NodeId>> adj;
  for (auto [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  RootedTree out;
  out.root = root;
  out.depth[root] = 0;
  std::vector<NodeId> order{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId u = order[i];
    auto& kids = out.children[u];
    for (NodeId v : adj[u]) {
      // With |E| = |V| - 1, reaching every node rules out cycles.
      if (v == root || out.parent.contains(v)) continue;
      out.parent[v] = u;
      out.depth[v] = out.depth[u] + 1;
      kids.push_back(v);
      order.push_back(v);
    }
  }
  if (order.size() != tree.nodes.size()) {
    throw std::invalid_argument("edge set is not connected");
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t h = 0;
    for (NodeId c : out.children[*it]) h = std::max(h, out.height[c] + 1);
    out.height[*it] = h;
  }
  for (auto& [_, kids] : out.children) {
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return std::tie(out.height[a], a) < std::tie(out.height[b], b);
    });
  }
  return out;
}

/// Child-to-parent CNOTs, each subtree finished before it reports upward;
/// shallow subtrees report first since they are ready first.
void append_fan_in(const RootedTree& t, NodeId u, Circuit& out) {
  for (NodeId c : t.children.at(u)) {
    append_fan_in(t, c, out);
    out.add(Gate::cnot(c, u));
  }
}

Circuit mirrored(const Circuit& pre, NodeId root, double angle) {
  Circuit out = pre;
  out.add(Gate::rz(root, -2.0 * angle));
  out.append(pre.reversed());
  return out;
}

Circuit bridged_with_choice(const RootedTree& t, const std::vector<NodeId>& bridged,
                            const std::map<NodeId, NodeId>& target, double angle) {
  Circuit pre;
  for (NodeId u : bridged) pre.add(Gate::cnot(u, target.at(u)));
  append_fan_in(t, t.root, pre);
  return mirrored(compact_commuting(pre), t.root, angle);
}

Circuit synth_bridged_at(const SteinerTree& tree, const std::set<NodeId>& constraint,
                         NodeId root, double angle) {
  const RootedTree t = root_tree(tree, root);
  std::vector<NodeId> bridged;
  for (NodeId n : tree.nodes) {
    if (!constraint.contains(n)) bridged.push_back(n);
  }
  // Deepest first, so a copied parity is never forwarded a second time.
  std::sort(bridged.begin(), bridged.end(), [&](NodeId a, NodeId b) {
    return std::make_pair(t.depth.at(b), a) < std::make_pair(t.depth.at(a), b);
  });

  std::map<NodeId, NodeId> target;
  for (NodeId u : bridged) {
    const auto& kids = t.children.at(u);
    if (kids.empty()) throw std::invalid_argument("non-constraint leaf in Steiner tree");
    target[u] = kids.front();
  }
  Circuit best = bridged_with_choice(t, bridged, target, angle);
  std::size_t best_depth = best.entangling_depth();
  for (NodeId u : bridged) {
    for (NodeId c : t.children.at(u)) {
      if (c == target[u]) continue;
      const NodeId previous = target[u];
      target[u] = c;
      Circuit candidate = bridged_with_choice(t, bridged, target, angle);
      const std::size_t d = candidate.entangling_depth();
      if (d < best_depth) {
        best = std::move(candidate);
        best_depth = d;
      } else {
        target[u] = previous;
      }
    }
  }
  return best;
}

}  // namespace

std::size_t eccentricity(const SteinerTree& tree, NodeId n) {
  const RootedTree t = root_tree(tree, n);
  return t.height.at(n);
}

NodeId choose_root(const SteinerTree& tree, std::span<const NodeId> constraint) {
  const std::set<NodeId> in_c(constraint.begin(), constraint.end());
  for (NodeId c : in_c) {
    if (!tree.contains(c)) throw std::invalid_argument("constraint node missing from tree");
  }
  std::optional<std::tuple<std::size_t, bool, NodeId>> best;
  for (NodeId n : tree.nodes) {
    auto key = std::make_tuple(eccentricity(tree, n), !in_c.contains(n), n);
    if (!best || key < *best) best = key;
  }
  return std::get<2>(*best);
}

Circuit synth_local(const SteinerTree& tree, NodeId root, double angle) {
  for (NodeId n : tree.nodes) {
    if (!tree.is_terminal(n)) {
      throw std::invalid_argument("local synthesis needs every tree node in the constraint");
    }
  }
  const RootedTree t = root_tree(tree, root);
  Circuit pre;
  append_fan_in(t, root, pre);
  return mirrored(compact_commuting(pre), root, angle);
}

Circuit synth_bridged(const SteinerTree& tree, std::span<const NodeId> constraint,
                      double angle, std::optional<NodeId> root) {
  const std::set<NodeId> in_c(constraint.begin(), constraint.end());
  if (in_c.empty()) throw std::invalid_argument("empty constraint");
  for (NodeId c : in_c) {
    if (!tree.contains(c)) throw std::invalid_argument("constraint node missing from tree");
  }
  if (root) return synth_bridged_at(tree, in_c, *root, angle);

  std::size_t min_ecc = tree.nodes.size();
  for (NodeId n : tree.nodes) min_ecc = std::min(min_ecc, eccentricity(tree, n));
  std::optional<Circuit> best;
  std::tuple<std::size_t, bool, NodeId> best_key{};
  for (NodeId n : tree.nodes) {
    if (eccentricity(tree, n) != min_ecc) continue;
    Circuit c = synth_bridged_at(tree, in_c, n, angle);
    auto key = std::make_tuple(c.entangling_depth(), !in_c.contains(n), n);
    if (!best || key < best_key) {
      best = std::move(c);
      best_key = key;
    }
  }
  return *best;
}

Circuit synth_swap_baseline(const DeviceGraph& g, std::span<const NodeId> constraint,
                            double angle) {
  const SteinerTree tree = steiner_tree(g, constraint);
  const NodeId root = choose_root(tree, tree.terminals);
  const RootedTree t = root_tree(tree, root);

  std::set<NodeId> tokens(tree.terminals.begin(), tree.terminals.end());
  auto settled = [&](NodeId v) { return v == root || tokens.contains(t.parent.at(v)); };
  std::vector<Edge> swaps;
  while (!std::all_of(tokens.begin(), tokens.end(), settled)) {
    std::vector<NodeId> movers(tokens.begin(), tokens.end());
    std::sort(movers.begin(), movers.end(), [&](NodeId a, NodeId b) {
      return std::make_pair(t.depth.at(a), a) < std::make_pair(t.depth.at(b), b);
    });
    std::set<NodeId> claimed;
    std::vector<std::pair<NodeId, NodeId>> moves;
    for (NodeId v : movers) {
      if (settled(v)) continue;
      const NodeId p = t.parent.at(v);
      if (claimed.contains(p)) continue;
      claimed.insert(p);
      moves.push_back({v, p});
    }
    for (auto [v, p] : moves) {
      tokens.erase(v);
      tokens.insert(p);
      swaps.push_back({v, p});
    }
  }

  SteinerTree core;
  core.terminals.assign(tokens.begin(), tokens.end());
  core.nodes = core.terminals;
  for (NodeId v : tokens) {
    if (v != root) core.edges.push_back({std::min(v, t.parent.at(v)), std::max(v, t.parent.at(v))});
  }
  std::sort(core.edges.begin(), core.edges.end());

  Circuit swap_in;
  for (auto [a, b] : swaps) {
    swap_in.add(Gate::cnot(a, b));
    swap_in.add(Gate::cnot(b, a));
    swap_in.add(Gate::cnot(a, b));
  }
  Circuit out = swap_in;
  out.append(synth_local(core, root, angle));
  out.append(swap_in.reversed());
  return out;
}

std::size_t full_tree_depth(const SteinerTree& tree, NodeId root) {
  SteinerTree all = tree;
  all.terminals = tree.nodes;
  return synth_local(all, root, 1.0).entangling_depth();
}

}  // namespace parity
