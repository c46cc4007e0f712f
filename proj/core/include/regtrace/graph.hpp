#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace regtrace {

using Vertex = int;
using Edge = std::array<Vertex, 2>;

// On-disk description of a graph: {"name": ..., "vertex_count": ..., "edges": [[u, v], ...]}.
// Edges are 0-indexed unordered pairs, each listed once.
struct GraphDocument {
  std::string name;
  int vertex_count = 0;
  std::vector<Edge> edges;

  bool operator==(const GraphDocument&) const = default;
};

// Strict parser: unknown keys, wrong types and malformed JSON raise ErrorKind::ParseError.
GraphDocument parse_graph_document(std::string_view text);
std::string serialize_graph_document(const GraphDocument& doc);

/// A finite, connected, simple (q+1)-regular graph with dense vertex ids
/// 0..vertex_count()-1. Immutable once built; build_graph() is the only
/// way to obtain one, so every instance satisfies the invariants.
class Graph {
 public:
  const std::string& name() const noexcept { return name_; }
  int vertex_count() const noexcept { return vertex_count_; }
  /// Valence is q() + 1.
  int q() const noexcept { return q_; }
  int degree() const noexcept { return q_ + 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in input order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Neighbours of v, ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

 private:
  friend Graph build_graph(const GraphDocument& doc);
  Graph() = default;

  std::string name_;
  int vertex_count_ = 0;
  int q_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

// Throws NotSimple, NotRegular, DegreeTooSmall or NotConnected (checked in that order).
Graph build_graph(const GraphDocument& doc);
GraphDocument to_document(const Graph& g);

struct DirectedEdge {
  Vertex tail;
  Vertex head;
  std::size_t reverse_id;
};

// Input edge k = (u, v) yields ids 2k = u->v and 2k+1 = v->u.
std::vector<DirectedEdge> directed_edges(const Graph& g);

bool is_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Generators

struct CycleSpec {
  int length;
};
struct CompleteSpec {
  int n;
};
struct PetersenSpec {};
struct HypercubeSpec {
  int dimension;
};
// Vertex i is joined to i +/- k (mod n) for each offset k in [1, n/2].
struct CirculantSpec {
  int n;
  std::vector<int> offsets;
};
// Pairing model; resamples on loops, multi-edges and disconnected outcomes.
struct RandomRegularSpec {
  int n;
  int degree;
  std::uint64_t seed;
  int max_attempts = 10'000;
};

using GeneratorSpec =
    std::variant<CycleSpec, CompleteSpec, PetersenSpec, HypercubeSpec, CirculantSpec, RandomRegularSpec>;

// Throws InfeasibleParameters or GenerationFailed.
Graph generate(const GeneratorSpec& spec);

}  // namespace regtrace
