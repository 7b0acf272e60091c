#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddcolor {

using Vertex = std::uint32_t;

/// Raised for malformed user input: bad files, invalid drawings, loops.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/**
 * Simple undirected graph over dense vertex ids 0..n-1.
 *
 * Immutable after construction. Neighbor lists are sorted, edges are
 * deduplicated and kept in lexicographic order so that edge indices are
 * stable for a given edge set.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Builds a graph from vertex pairs. Duplicate pairs collapse to one
  /// edge; `min_vertex_count` declares trailing isolated vertices.
  /// Throws InputError on a loop.
  static Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                              std::size_t min_vertex_count = 0);
  static Graph from_edges(std::span<const Edge> edges, std::size_t min_vertex_count = 0);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Throws std::out_of_range for an unknown vertex.
  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;

  bool has_vertex(Vertex v) const { return v < adjacency_.size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool is_isolated(Vertex v) const { return degree(v) == 0; }

  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of {u,v} in edges(), or edge_count() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;

  /// Same vertex ids, only edges with both endpoints in `keep`.
  Graph induced(const std::vector<bool>& keep) const;

  /// Same vertex ids with `extra` edges added.
  Graph with_edges(std::span<const Edge> extra) const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Component id per vertex; ids are assigned in order of smallest member.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

/// All cut edges, sorted.
std::vector<Edge> bridges(const Graph& g);

}  // namespace oddcolor
