#include "oddcolor/embedding.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace oddcolor {
namespace {

std::string vertex_name(Vertex x) { return std::to_string(x); }

// Crossing index per crossed base edge.
std::map<Edge, std::size_t> crossed_edge_map(const OnePlanarDrawing& d) {
  std::map<Edge, std::size_t> crossed;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    crossed.emplace(d.crossings[i].first, i);
    crossed.emplace(d.crossings[i].second, i);
  }
  return crossed;
}

void validate_crossings(const OnePlanarDrawing& d) {
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    for (const Edge& e : {c.first, c.second}) {
      if (d.base.edge_index(e.u, e.v) == d.base.edge_count()) {
        throw InputError("crossing " + std::to_string(i) + " names missing edge " + to_string(e));
      }
      auto [it, fresh] = seen.emplace(e, i);
      if (!fresh) {
        throw InputError("edge " + to_string(e) + " is crossed twice (crossings " +
                         std::to_string(it->second) + " and " + std::to_string(i) + ")");
      }
    }
    if (c.first.has(c.second.u) || c.first.has(c.second.v)) {
      throw InputError("crossing " + std::to_string(i) + " pairs edges " + to_string(c.first) +
                       " and " + to_string(c.second) + " that share an endpoint");
    }
  }
}

// Rewrites far-endpoint entries of crossed edges to the crossing vertex.
std::vector<std::vector<Vertex>> normalized_rotation(const OnePlanarDrawing& d,
                                                     const std::map<Edge, std::size_t>& crossed) {
  const std::size_t n = d.original_count();
  std::vector<std::vector<Vertex>> rot = d.rotation;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex& y : rot[x]) {
      if (y < n && y != x) {
        auto it = crossed.find(Edge(x, y));
        if (it != crossed.end()) y = static_cast<Vertex>(n + it->second);
      }
    }
  }
  return rot;
}

void check_rotation_is_permutation(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  if (rotation.size() != g.vertex_count()) {
    throw InputError("rotation covers " + std::to_string(rotation.size()) + " vertices, expected " +
                     std::to_string(g.vertex_count()));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> listed = rotation[v];
    std::sort(listed.begin(), listed.end());
    auto nbrs = g.neighbors(v);
    if (!std::equal(listed.begin(), listed.end(), nbrs.begin(), nbrs.end())) {
      throw InputError("rotation at vertex " + vertex_name(v) +
                       " is not a permutation of its planarized neighbors");
    }
  }
}

void check_star_alternation(const OnePlanarDrawing& d, const std::vector<std::vector<Vertex>>& rot) {
  const std::size_t n = d.original_count();
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& r = rot[n + i];
    const Edge& e = d.crossings[i].first;
    auto pu = std::find(r.begin(), r.end(), e.u) - r.begin();
    auto pv = std::find(r.begin(), r.end(), e.v) - r.begin();
    if ((pu - pv + 4) % 4 != 2) {
      throw InputError("rotation at crossing vertex " + vertex_name(static_cast<Vertex>(n + i)) +
                       " does not alternate between edges " + to_string(e) + " and " +
                       to_string(d.crossings[i].second));
    }
  }
}

struct TracedFaces {
  std::vector<Face> faces;
  std::vector<Vertex> anchor;
  std::vector<std::vector<std::size_t>> corner_face;
};

std::vector<std::vector<std::pair<Vertex, std::size_t>>> index_rotation(
    const std::vector<std::vector<Vertex>>& rotation) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> index(rotation.size());
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    for (std::size_t i = 0; i < rotation[v].size(); ++i) index[v].emplace_back(rotation[v][i], i);
    std::sort(index[v].begin(), index[v].end());
  }
  return index;
}

std::size_t lookup(const std::vector<std::pair<Vertex, std::size_t>>& idx, Vertex w) {
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<Vertex, std::size_t>{w, 0});
  if (it == idx.end() || it->first != w) {
    throw InputError("dart to " + vertex_name(w) + " missing from rotation");
  }
  return it->second;
}

TracedFaces trace(const Graph& g, const std::vector<std::vector<Vertex>>& rotation,
                  const std::vector<std::vector<std::pair<Vertex, std::size_t>>>& index) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  TracedFaces out;
  out.corner_face.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.corner_face[v].assign(rotation[v].size(), unset);

  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (rotation[s].empty()) {
      out.faces.push_back(Face{});
      out.anchor.push_back(s);
      continue;
    }
    for (std::size_t i = 0; i < rotation[s].size(); ++i) {
      if (out.corner_face[s][i] != unset) continue;
      const std::size_t id = out.faces.size();
      Face face;
      Vertex v = s;
      std::size_t pos = i;
      std::size_t guard = 0;
      const std::size_t limit = 2 * g.edge_count() + 1;
      do {
        if (out.corner_face[v][pos] != unset) {
          throw InputError("dart (" + vertex_name(v) + "->" + vertex_name(rotation[v][pos]) +
                           ") reached twice while tracing a face");
        }
        out.corner_face[v][pos] = id;
        const Vertex w = rotation[v][pos];
        face.walk.push_back({v, w});
        const std::size_t back = lookup(index[w], v);
        pos = (back + 1) % rotation[w].size();
        v = w;
        if (++guard > limit) {
          throw InputError("dart (" + vertex_name(s) + "->" + vertex_name(rotation[s][i]) +
                           ") does not close into a face");
        }
      } while (v != s || pos != i);
      out.faces.push_back(std::move(face));
      out.anchor.push_back(s);
    }
  }
  return out;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

std::vector<std::vector<Vertex>> planar_rotation(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int count = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ei_end;
  for (boost::tie(ei, ei_end) = boost::edges(bg); ei != ei_end; ++ei) boost::put(edge_index, *ei, count++);

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(g.vertex_count());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) throw InputError("graph is not planar; an explicit rotation is required");

  std::vector<std::vector<Vertex>> rotation(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeDesc& e : embedding[v]) {
      const auto a = static_cast<Vertex>(boost::source(e, bg));
      const auto b = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(a == v ? b : a);
    }
  }
  return rotation;
}

Graph planarization(const OnePlanarDrawing& d) {
  const std::size_t n = d.original_count();
  const auto crossed = crossed_edge_map(d);
  std::vector<Edge> edges;
  for (const Edge& e : d.base.edges()) {
    if (!crossed.contains(e)) edges.push_back(e);
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto z = static_cast<Vertex>(n + i);
    for (const Edge& e : {d.crossings[i].first, d.crossings[i].second}) {
      edges.emplace_back(e.u, z);
      edges.emplace_back(e.v, z);
    }
  }
  return Graph::from_edges(edges, n + d.crossings.size());
}

void validate_drawing(const OnePlanarDrawing& d) {
  validate_crossings(d);
  if (d.rotation.empty()) {
    if (!d.crossings.empty()) throw InputError("a rotation system is required when crossings are present");
    return;
  }
  const Graph gstar = planarization(d);
  if (d.rotation.size() != gstar.vertex_count()) {
    throw InputError("rotation covers " + std::to_string(d.rotation.size()) +
                     " vertices, expected " + std::to_string(gstar.vertex_count()));
  }
  const auto rot = normalized_rotation(d, crossed_edge_map(d));
  check_rotation_is_permutation(gstar, rot);
  check_star_alternation(d, rot);
}

AssociatedPlaneGraph build_associated_plane_graph(const OnePlanarDrawing& d) {
  validate_drawing(d);
  AssociatedPlaneGraph apg;
  apg.gstar_ = planarization(d);
  apg.original_count_ = d.original_count();
  apg.crossings_ = d.crossings;
  apg.rotation_ = d.rotation.empty() ? planar_rotation(apg.gstar_)
                                     : normalized_rotation(d, crossed_edge_map(d));
  apg.rotation_index_ = index_rotation(apg.rotation_);
  auto traced = trace(apg.gstar_, apg.rotation_, apg.rotation_index_);
  apg.faces_ = std::move(traced.faces);
  apg.corner_face_ = std::move(traced.corner_face);

  apg.vertex_component_ = connected_components(apg.gstar_, &apg.component_count_);
  apg.face_component_.reserve(apg.faces_.size());
  for (Vertex a : traced.anchor) apg.face_component_.push_back(apg.vertex_component_[a]);

  for (std::size_t c = 0; c < apg.component_count_; ++c) {
    const long chi = apg.euler_characteristic(c);
    if (chi != 2) {
      throw InputError("rotation system is not planar: component " + std::to_string(c) +
                       " has V - E + F = " + std::to_string(chi));
    }
  }
  return apg;
}

std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  check_rotation_is_permutation(g, rotation);
  return trace(g, rotation, index_rotation(rotation)).faces;
}

const CrossingPair& AssociatedPlaneGraph::crossing_at(Vertex z) const {
  if (!is_star(z)) throw std::out_of_range("vertex " + vertex_name(z) + " is not a crossing");
  return crossings_.at(z - original_count_);
}

Edge AssociatedPlaneGraph::origin(Vertex a, Vertex b) const {
  if (!gstar_.has_edge(a, b)) {
    throw std::out_of_range("no planarized edge {" + vertex_name(a) + "," + vertex_name(b) + "}");
  }
  if (is_star(b)) std::swap(a, b);
  if (!is_star(a)) return Edge(a, b);
  const auto& c = crossing_at(a);
  return c.first.has(b) ? c.first : c.second;
}

std::size_t AssociatedPlaneGraph::rotation_position(Vertex v, Vertex neighbor) const {
  return lookup(rotation_index_.at(v), neighbor);
}

std::size_t AssociatedPlaneGraph::face_of_corner(Vertex v, std::size_t pos) const {
  return corner_face_.at(v).at(pos);
}

std::size_t AssociatedPlaneGraph::face_of_dart(Vertex tail, Vertex head) const {
  return face_of_corner(tail, rotation_position(tail, head));
}

std::vector<std::size_t> AssociatedPlaneGraph::faces_around(Vertex v) const {
  return corner_face_.at(v);
}

long AssociatedPlaneGraph::euler_characteristic(std::size_t component) const {
  long vertices = 0, edges = 0, faces = 0;
  for (Vertex x = 0; x < gstar_.vertex_count(); ++x) {
    if (vertex_component_[x] == component) ++vertices;
  }
  for (const Edge& e : gstar_.edges()) {
    if (vertex_component_[e.u] == component) ++edges;
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (face_component_[f] == component) ++faces;
  }
  return vertices - edges + faces;
}

std::vector<Edge> AssociatedPlaneGraph::contracted_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : gstar_.edges()) out.push_back(origin(e.u, e.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ProfileEntry> face_profile(const Face& f, const AssociatedPlaneGraph& apg) {
  std::vector<ProfileEntry> profile;
  profile.reserve(f.degree());
  for (const auto& inc : f.walk) {
    profile.push_back({apg.gstar().degree(inc.vertex), apg.is_star(inc.vertex)});
  }
  return profile;
}

OnePlanarDrawing embed_planarization(Graph base, std::vector<CrossingPair> crossings) {
  OnePlanarDrawing d{std::move(base), std::move(crossings), {}};
  validate_crossings(d);
  d.rotation = planar_rotation(planarization(d));
  check_star_alternation(d, d.rotation);
  return d;
}

OnePlanarDrawing restrict_drawing(const OnePlanarDrawing& d, const std::vector<bool>& keep) {
  const std::size_t n = d.original_count();
  auto alive = [&](const Edge& e) { return keep.at(e.u) && keep.at(e.v); };

  OnePlanarDrawing out;
  out.base = d.base.induced(keep);

  // Old crossing index -> new crossing id (or none).
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(d.crossings.size(), none);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (alive(d.crossings[i].first) && alive(d.crossings[i].second)) {
      remap[i] = out.crossings.size();
      out.crossings.push_back(d.crossings[i]);
    }
  }
  if (d.rotation.empty()) return out;

  const auto rot = normalized_rotation(d, crossed_edge_map(d));
  out.rotation.assign(n + out.crossings.size(), {});
  for (Vertex x = 0; x < n; ++x) {
    if (!keep[x]) continue;
    for (Vertex y : rot[x]) {
      if (y < n) {
        if (keep[y]) out.rotation[x].push_back(y);
        continue;
      }
      const std::size_t i = y - n;
      const auto& c = d.crossings[i];
      const Edge& own = c.first.has(x) ? c.first : c.second;
      if (!alive(own)) continue;
      if (remap[i] != none) {
        out.rotation[x].push_back(static_cast<Vertex>(n + remap[i]));
      } else {
        out.rotation[x].push_back(own.other(x));
      }
    }
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (remap[i] != none) out.rotation[n + remap[i]] = rot[n + i];
  }
  return out;
}

}  // namespace oddcolor
