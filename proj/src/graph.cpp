#include "oddcolor/graph.hpp"

#include <algorithm>
#include <limits>

namespace oddcolor {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                            std::size_t min_vertex_count) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw InputError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    edges.emplace_back(a, b);
  }
  return from_edges(edges, min_vertex_count);
}

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t min_vertex_count) {
  std::size_t n = min_vertex_count;
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InputError("loop edge " + to_string(e));
    }
    n = std::max<std::size_t>(n, std::size_t{e.v} + 1);
  }
  Graph g(n);
  g.edges_.assign(edges.begin(), edges.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v) return edges_.size();
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, nbrs.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (const auto& nbrs : adjacency_) d = std::min(d, nbrs.size());
  return d;
}

Graph Graph::induced(const std::vector<bool>& keep) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (keep.at(e.u) && keep.at(e.v)) kept.push_back(e);
  }
  return from_edges(kept, vertex_count());
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return from_edges(all, vertex_count());
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.vertex_count();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

// Iterative Tarjan low-link; the tree edge to the parent is skipped by
// edge index, which is exact because the graph has no parallel edges.
std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, unvisited), low(n, 0);
  std::vector<Edge> result;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::size_t counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    order[root] = low[root] = counter++;
    stack.push_back({root, root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent && f.v != root) continue;
        if (order[w] == unvisited) {
          order[w] = low[w] = counter++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        Vertex v = f.v;
        Vertex parent = f.parent;
        stack.pop_back();
        if (!stack.empty()) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > order[parent]) result.emplace_back(parent, v);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace oddcolor
