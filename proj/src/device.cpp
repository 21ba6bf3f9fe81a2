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


#include "parity/device.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "parity/errors.hpp"
#include "parity/problem_io.hpp"

namespace parity {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::size_t parse_count(std::string_view text, const std::string& source) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw InputError("bad device generator '" + source + "'");
  }
  return value;
}

}  // namespace

DeviceGraph::DeviceGraph(std::size_t n, std::vector<Edge> edges,
                         std::vector<std::optional<Coord>> coords,
                         std::vector<long long> labels)
    : adjacency_(n), coords_(std::move(coords)), labels_(std::move(labels)) {
  if (n == 0) throw InputError("device has no nodes");
  if (coords_.empty()) coords_.resize(n);
  if (coords_.size() != n) throw InputError("coordinate count differs from node count");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(static_cast<long long>(i));
  }
  if (labels_.size() != n) throw InputError("label count differs from node count");

  for (NodeId i = 0; i < n; ++i) {
    const auto& c = coords_[i];
    if (c && !by_coord_.emplace(*c, i).second) {
      throw InputError("two device nodes share coordinates (" +
                       std::to_string(c->x) + ", " + std::to_string(c->y) + ")");
    }
  }

  std::set<Edge> unique;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InputError("device edge references a missing node");
    if (a == b) throw InputError("device edge is a self loop");
    unique.insert({std::min(a, b), std::max(a, b)});
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  dist_.assign(n * n, kUnreached);
  for (NodeId s = 0; s < n; ++s) {
    std::size_t* row = dist_.data() + s * n;
    row[s] = 0;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adjacency_[u]) {
        if (row[v] == kUnreached) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (dist_[v] == kUnreached) {
      throw DisconnectedDeviceError(
          "device graph is disconnected: node " + std::to_string(labels_[v]) +
          " is unreachable from node " + std::to_string(labels_[0]));
    }
  }
}

DeviceGraph DeviceGraph::chain(std::size_t n) {
  std::vector<Edge> edges;
  std::vector<std::optional<Coord>> coords;
  for (std::size_t i = 0; i < n; ++i) {
    coords.push_back(Coord{static_cast<int>(i), 0});
    if (i + 1 < n) edges.push_back({i, i + 1});
  }
  DeviceGraph g(n, std::move(edges), std::move(coords));
  g.set_name("chain:" + std::to_string(n));
  return g;
}

DeviceGraph DeviceGraph::grid(std::size_t width, std::size_t height) {
  std::vector<Edge> edges;
  std::vector<std::optional<Coord>> coords;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const NodeId id = y * width + x;
      coords.push_back(Coord{static_cast<int>(x), static_cast<int>(y)});
      if (x + 1 < width) edges.push_back({id, id + 1});
      if (y + 1 < height) edges.push_back({id, id + width});
    }
  }
  DeviceGraph g(width * height, std::move(edges), std::move(coords));
  g.set_name("grid:" + std::to_string(width) + "x" + std::to_string(height));
  return g;
}

bool DeviceGraph::has_edge(NodeId a, NodeId b) const {
  if (a >= size() || b >= size()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool DeviceGraph::fully_embedded() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const auto& c) { return c.has_value(); });
}

std::optional<NodeId> DeviceGraph::node_at(Coord c) const {
  auto it = by_coord_.find(c);
  if (it == by_coord_.end()) return std::nullopt;
  return it->second;
}

std::size_t DeviceGraph::distance(NodeId a, NodeId b) const {
  if (a >= size() || b >= size()) throw std::out_of_range("device node out of range");
  return dist_[a * size() + b];
}

std::vector<NodeId> DeviceGraph::shortest_path(NodeId a, NodeId b) const {
  std::vector<NodeId> path{a};
  NodeId cur = a;
  while (cur != b) {
    const std::size_t d = distance(cur, b);
    for (NodeId v : adjacency_[cur]) {
      if (distance(v, b) + 1 == d) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

DeviceGraph device_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("device document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "nodes" && key != "edges" && key != "name") {
      throw InputError("unknown device field '" + key + "'");
    }
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw InputError("device needs a 'nodes' array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw InputError("device needs an 'edges' array");
  }
  std::map<long long, NodeId> index;
  std::vector<std::optional<Coord>> coords;
  std::vector<long long> labels;
  for (const auto& node : doc["nodes"]) {
    if (!node.is_object() || !node.contains("id") || !node["id"].is_number_integer()) {
      throw InputError("device node needs an integer 'id'");
    }
    for (const auto& [key, _] : node.items()) {
      if (key != "id" && key != "x" && key != "y") {
        throw InputError("unknown device node field '" + key + "'");
      }
    }
    const long long id = node["id"].get<long long>();
    if (!index.emplace(id, labels.size()).second) {
      throw InputError("duplicate device node id " + std::to_string(id));
    }
    labels.push_back(id);
    const bool has_x = node.contains("x"), has_y = node.contains("y");
    if (has_x != has_y) throw InputError("device node needs both 'x' and 'y' or neither");
    if (has_x) {
      if (!node["x"].is_number_integer() || !node["y"].is_number_integer()) {
        throw InputError("device coordinates must be integers");
      }
      coords.push_back(Coord{node["x"].get<int>(), node["y"].get<int>()});
    } else {
      coords.push_back(std::nullopt);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("device edge must be a pair of node ids");
    }
    auto a = index.find(e[0].get<long long>());
    auto b = index.find(e[1].get<long long>());
    if (a == index.end() || b == index.end()) {
      throw InputError("device edge references an unknown node id");
    }
    edges.push_back({a->second, b->second});
  }
  const std::size_t n = labels.size();
  DeviceGraph g(n, std::move(edges), std::move(coords), std::move(labels));
  g.set_name(doc.value("name", std::string("file")));
  return g;
}

nlohmann::json device_to_json(const DeviceGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (NodeId n = 0; n < g.size(); ++n) {
    nlohmann::json node{{"id", g.label(n)}};
    if (const auto& c = g.coord(n)) {
      node["x"] = c->x;
      node["y"] = c->y;
    }
    nodes.push_back(std::move(node));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
  return {{"name", g.name()}, {"nodes", nodes}, {"edges", edges}};
}

DeviceGraph load_device(const std::string& source) {
  if (source.starts_with("chain:")) {
    return DeviceGraph::chain(parse_count(std::string_view(source).substr(6), source));
  }
  if (source.starts_with("grid:")) {
    const std::string_view dims = std::string_view(source).substr(5);
    const auto x = dims.find('x');
    if (x == std::string_view::npos) throw InputError("grid device needs WxH");
    return DeviceGraph::grid(parse_count(dims.substr(0, x), source),
                             parse_count(dims.substr(x + 1), source));
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(source));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse device file '" + source + "': " + e.what());
  }
  return device_from_json(doc);
}

Layout::Layout(std::size_t n_qubits, std::size_t n_nodes)
    : node_of_(n_qubits), qubit_at_(n_nodes) {}

void Layout::place(QubitId q, NodeId n) {
  if (node_of_.at(q)) throw std::logic_error("qubit already placed");
  if (qubit_at_.at(n)) throw std::logic_error("device node already occupied");
  node_of_[q] = n;
  qubit_at_[n] = q;
}

void Layout::unplace(QubitId q) {
  if (auto n = node_of_.at(q)) {
    qubit_at_[*n].reset();
    node_of_[q].reset();
  }
}

void Layout::swap_qubits(QubitId a, QubitId b) {
  const NodeId na = node_checked(a), nb = node_checked(b);
  node_of_[a] = nb;
  node_of_[b] = na;
  qubit_at_[na] = b;
  qubit_at_[nb] = a;
}

void Layout::relocate(QubitId q, NodeId n) {
  const NodeId from = node_checked(q);
  if (qubit_at_.at(n)) throw std::logic_error("relocation target is occupied");
  qubit_at_[from].reset();
  qubit_at_[n] = q;
  node_of_[q] = n;
}

void Layout::resize_qubits(std::size_t n_qubits) {
  if (n_qubits < node_of_.size()) throw std::logic_error("layout cannot shrink");
  node_of_.resize(n_qubits);
}

NodeId Layout::node_checked(QubitId q) const {
  const auto n = node_of_.at(q);
  if (!n) throw std::logic_error("qubit " + std::to_string(q) + " is not placed");
  return *n;
}

std::vector<NodeId> Layout::free_nodes() const {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < qubit_at_.size(); ++n) {
    if (!qubit_at_[n]) out.push_back(n);
  }
  return out;
}

}  // namespace parity
