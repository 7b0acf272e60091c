#include "oddcolor/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace oddcolor {

SplitMix64::result_type SplitMix64::operator()() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

namespace {

void require_at_least(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                                std::to_string(n));
  }
}

// Rotation system from consistently oriented face walks: for a walk
// (..., x, y, w, ...) the successor of x around y is w.
std::vector<std::vector<Vertex>> rotation_from_faces(std::size_t vertex_count,
                                                     const std::vector<std::vector<Vertex>>& faces) {
  std::vector<std::map<Vertex, Vertex>> succ(vertex_count);
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Vertex x = f[i];
      const Vertex y = f[(i + 1) % f.size()];
      const Vertex w = f[(i + 2) % f.size()];
      succ[y][x] = w;
    }
  }
  std::vector<std::vector<Vertex>> rotation(vertex_count);
  for (Vertex y = 0; y < vertex_count; ++y) {
    if (succ[y].empty()) continue;
    const Vertex start = succ[y].begin()->first;
    Vertex x = start;
    do {
      rotation[y].push_back(x);
      x = succ[y].at(x);
    } while (x != start && rotation[y].size() <= succ[y].size());
  }
  return rotation;
}

using Triangle = std::array<Vertex, 3>;

// Index of the triangle holding the directed edge (a -> b).
std::map<std::pair<Vertex, Vertex>, std::size_t> dart_owner(const std::vector<Triangle>& tris) {
  std::map<std::pair<Vertex, Vertex>, std::size_t> owner;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (std::size_t i = 0; i < 3; ++i) owner[{tris[t][i], tris[t][(i + 1) % 3]}] = t;
  }
  return owner;
}

// Rotates a triangle so that it reads (a, b, c) starting at a.
Triangle starting_at(const Triangle& t, Vertex a) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] == a) return {t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
  }
  throw std::logic_error("vertex not on triangle");
}

}  // namespace

Graph cycle(std::size_t n) {
  require_at_least(n, 3, "cycle");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(edges, n);
}

Graph complete(std::size_t n) {
  require_at_least(n, 3, "complete");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(edges, n);
}

Graph complete_minus_edge(std::size_t n) {
  require_at_least(n, 3, "complete_minus_edge");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (i != 0 || j != 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(edges, n);
}

Graph subdivided_complete(std::size_t n) {
  require_at_least(n, 2, "subdivided_complete");
  std::vector<Edge> edges;
  auto next = static_cast<Vertex>(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      edges.emplace_back(i, next);
      edges.emplace_back(next, j);
      ++next;
    }
  }
  return Graph::from_edges(edges, next);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(edges, n);
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.chance(num, den)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(edges, n);
}

OnePlanarDrawing plane_cycle(std::size_t n) {
  OnePlanarDrawing d;
  d.base = cycle(n);
  d.rotation.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.rotation[i] = {static_cast<Vertex>((i + n - 1) % n), static_cast<Vertex>((i + 1) % n)};
  }
  return d;
}

OnePlanarDrawing k6_drawing() {
  // Octahedron with antipodal pairs {0,5}, {1,3}, {2,4}; the triangle 0-1-2
  // is split by diagonal 1-3 crossing 0-2, and so on for the other two.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 6; ++i) {
    for (Vertex j = i + 1; j < 6; ++j) edges.emplace_back(i, j);
  }
  std::vector<CrossingPair> crossings = {
      {Edge(1, 3), Edge(0, 2)},
      {Edge(2, 4), Edge(1, 5)},
      {Edge(0, 5), Edge(3, 4)},
  };
  return embed_planarization(Graph::from_edges(edges, 6), std::move(crossings));
}

OnePlanarDrawing random_one_planar(std::size_t n, std::uint64_t seed) {
  require_at_least(n, 4, "random_one_planar");
  SplitMix64 rng(seed);
  std::vector<Triangle> tris = {{0, 1, 2}, {0, 2, 1}};
  std::set<Edge> edges = {Edge(0, 1), Edge(1, 2), Edge(0, 2)};
  std::vector<std::size_t> degree(n, 0);
  degree[0] = degree[1] = degree[2] = 2;

  for (auto x = static_cast<Vertex>(3); x < n; ++x) {
    const std::size_t t = rng.below(tris.size());
    const auto [a, b, c] = tris[t];
    tris[t] = {a, b, x};
    tris.push_back({b, c, x});
    tris.push_back({c, a, x});
    edges.insert({Edge(a, x), Edge(b, x), Edge(c, x)});
    ++degree[a], ++degree[b], ++degree[c];
    degree[x] = 3;
  }

  // Flip (a,b,c) + (b,a,d) into (c,a,d) + (d,b,c).
  for (std::size_t round = 0; round < 4 * n; ++round) {
    const std::size_t t = rng.below(tris.size());
    const Triangle abc = starting_at(tris[t], tris[t][rng.below(3)]);
    const auto [a, b, c] = abc;
    const auto owner = dart_owner(tris);
    const std::size_t s = owner.at({b, a});
    const Vertex d = starting_at(tris[s], b)[2];
    if (c == d || edges.contains(Edge(c, d)) || degree[a] <= 3 || degree[b] <= 3) continue;
    tris[t] = {c, a, d};
    tris[s] = {d, b, c};
    edges.erase(Edge(a, b));
    edges.insert(Edge(c, d));
    --degree[a], --degree[b], ++degree[c], ++degree[d];
  }

  // Crossings inside triangle pairs; each triangle joins at most one pair.
  std::vector<std::size_t> order(tris.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<bool> used(tris.size(), false);
  std::vector<std::vector<Vertex>> faces;
  std::vector<CrossingPair> crossings;
  const auto owner = dart_owner(tris);
  for (std::size_t t : order) {
    if (used[t] || !rng.chance(1, 2)) continue;
    const Triangle abc = starting_at(tris[t], tris[t][rng.below(3)]);
    const auto [a, b, c] = abc;
    const std::size_t s = owner.at({b, a});
    const Vertex d = starting_at(tris[s], b)[2];
    if (used[s] || c == d || edges.contains(Edge(c, d))) continue;
    used[t] = used[s] = true;
    const auto z = static_cast<Vertex>(n + crossings.size());
    crossings.push_back({Edge(a, b), Edge(c, d)});
    edges.insert(Edge(c, d));
    faces.push_back({a, d, z});
    faces.push_back({d, b, z});
    faces.push_back({b, c, z});
    faces.push_back({c, a, z});
  }
  for (std::size_t t = 0; t < tris.size(); ++t) {
    if (!used[t]) faces.push_back({tris[t][0], tris[t][1], tris[t][2]});
  }

  OnePlanarDrawing drawing;
  const std::vector<Edge> edge_list(edges.begin(), edges.end());
  drawing.base = Graph::from_edges(edge_list, n);
  drawing.rotation = rotation_from_faces(n + crossings.size(), faces);
  drawing.crossings = std::move(crossings);
  return drawing;
}

OnePlanarDrawing thin_drawing(const OnePlanarDrawing& d, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  std::set<Edge> crossed;
  for (const auto& c : d.crossings) crossed.insert({c.first, c.second});

  std::vector<std::vector<Vertex>> rotation = apg.rotation();
  std::vector<Edge> kept = d.base.edges();
  for (const Edge& e : d.base.edges()) {
    if (crossed.contains(e) || !rng.chance(num, den)) continue;
    const Graph current = Graph::from_edges(kept, d.base.vertex_count());
    const auto cut = bridges(current);
    if (std::binary_search(cut.begin(), cut.end(), e)) continue;
    std::erase(kept, e);
    std::erase(rotation[e.u], e.v);
    std::erase(rotation[e.v], e.u);
  }

  OnePlanarDrawing out;
  out.base = Graph::from_edges(kept, d.base.vertex_count());
  out.crossings = d.crossings;
  out.rotation = std::move(rotation);
  return out;
}

OnePlanarDrawing subdivide_edge(const OnePlanarDrawing& d, Vertex near, Vertex far) {
  if (!d.base.has_edge(near, far)) {
    throw std::invalid_argument("no edge " + to_string(Edge(near, far)) + " to subdivide");
  }
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  const std::size_t n = d.base.vertex_count();
  const auto w = static_cast<Vertex>(n);
  auto shift = [&](Vertex x) { return x >= n ? x + 1 : x; };

  const Edge target(near, far);
  Vertex toward = far;
  std::vector<CrossingPair> crossings = d.crossings;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (Edge* e : {&crossings[i].first, &crossings[i].second}) {
      if (*e == target) {
        *e = Edge(w, far);
        toward = static_cast<Vertex>(n + i);
      }
    }
  }

  std::vector<std::vector<Vertex>> rotation(apg.rotation().size() + 1);
  for (Vertex x = 0; x < apg.rotation().size(); ++x) {
    auto& out = rotation[shift(x)];
    for (Vertex y : apg.rotation()[x]) {
      if ((x == near && y == toward) || (x == toward && y == near)) {
        out.push_back(w);
      } else {
        out.push_back(shift(y));
      }
    }
  }
  rotation[w] = {near, shift(toward)};

  std::vector<Edge> edges;
  for (const Edge& e : d.base.edges()) {
    if (e != target) edges.push_back(e);
  }
  edges.emplace_back(near, w);
  edges.emplace_back(w, far);

  OnePlanarDrawing out;
  out.base = Graph::from_edges(edges, n + 1);
  out.crossings = std::move(crossings);
  out.rotation = std::move(rotation);
  return out;
}

OnePlanarDrawing subdivide_crossed_edges(const OnePlanarDrawing& d, std::uint64_t num, std::uint64_t den,
                                         std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> chosen;
  for (const auto& c : d.crossings) {
    for (const Edge& e : {c.first, c.second}) {
      if (rng.chance(num, den)) chosen.push_back(e);
    }
  }
  OnePlanarDrawing out = d;
  for (const Edge& e : chosen) {
    const bool flip = rng.chance(1, 2);
    out = subdivide_edge(out, flip ? e.v : e.u, flip ? e.u : e.v);
  }
  return out;
}

}  // namespace oddcolor
