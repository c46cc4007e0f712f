#include "regtrace/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "regtrace/error.hpp"

namespace regtrace {

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  return std::span<const Vertex>(neighbors_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool connected(int vertex_count, const std::vector<std::vector<Vertex>>& adj) {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == vertex_count;
}

}  // namespace

Graph build_graph(const GraphDocument& doc) {
  if (doc.vertex_count <= 0) {
    throw Error(ErrorKind::ParseError, "vertex_count must be positive");
  }
  const auto n = static_cast<std::size_t>(doc.vertex_count);
  std::vector<std::vector<Vertex>> adj(n);
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [u, v] : doc.edges) {
    if (u < 0 || v < 0 || u >= doc.vertex_count || v >= doc.vertex_count) {
      throw Error(ErrorKind::ParseError, "edge [" + std::to_string(u) + ", " + std::to_string(v) +
                                             "] references a vertex outside [0, vertex_count)");
    }
    if (u == v) {
      throw Error(ErrorKind::NotSimple, "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::NotSimple,
                  "duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  const std::size_t degree = adj[0].size();
  for (std::size_t v = 1; v < n; ++v) {
    if (adj[v].size() != degree) {
      throw Error(ErrorKind::NotRegular, "vertex 0 has degree " + std::to_string(degree) +
                                             " but vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(adj[v].size()));
    }
  }
  if (degree < 2) {
    throw Error(ErrorKind::DegreeTooSmall,
                "valence " + std::to_string(degree) + " is below the minimum of 2");
  }
  if (!connected(doc.vertex_count, adj)) {
    throw Error(ErrorKind::NotConnected, "graph '" + doc.name + "' is not connected");
  }

  Graph g;
  g.name_ = doc.name;
  g.vertex_count_ = doc.vertex_count;
  g.q_ = static_cast<int>(degree) - 1;
  g.edges_ = doc.edges;
  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  g.neighbors_.reserve(n * degree);
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    g.neighbors_.insert(g.neighbors_.end(), nb.begin(), nb.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

GraphDocument to_document(const Graph& g) {
  return GraphDocument{g.name(), g.vertex_count(), {g.edges().begin(), g.edges().end()}};
}

std::vector<DirectedEdge> directed_edges(const Graph& g) {
  std::vector<DirectedEdge> out;
  out.reserve(2 * g.edge_count());
  std::size_t id = 0;
  for (const auto& [u, v] : g.edges()) {
    out.push_back({u, v, id + 1});
    out.push_back({v, u, id});
    id += 2;
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> frontier;
  colour[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    const int c = colour[static_cast<std::size_t>(v)];
    for (Vertex w : g.neighbors(v)) {
      auto& cw = colour[static_cast<std::size_t>(w)];
      if (cw < 0) {
        cw = 1 - c;
        frontier.push(w);
      } else if (cw == c) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace regtrace
