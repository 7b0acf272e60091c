#include "oddcolor/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oddcolor/coloring.hpp"

namespace oddcolor {

std::string to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Poor3: return "poor3";
    case FaceClass::Poor4: return "poor4";
    case FaceClass::Poor6: return "poor6";
    case FaceClass::SemiPoor: return "semi-poor";
    case FaceClass::Ordinary: return "ordinary";
  }
  return "ordinary";
}

bool is_poor(FaceClass c) {
  return c == FaceClass::Poor3 || c == FaceClass::Poor4 || c == FaceClass::Poor6;
}

std::string Witness::label() const {
  switch (kind) {
    case Kind::Vertex: return "v" + std::to_string(id);
    case Kind::Edge: return "e" + std::to_string(id) + "-" + std::to_string(other);
    case Kind::Face: return "f" + std::to_string(id);
  }
  return {};
}

bool LemmaReport::satisfied_all() const {
  return std::all_of(violations.begin(), violations.end(), [](const auto& list) { return list.empty(); });
}

std::size_t LemmaReport::total() const {
  std::size_t n = 0;
  for (const auto& list : violations) n += list.size();
  return n;
}

namespace {

std::size_t degree_of(const AssociatedPlaneGraph& apg, Vertex x) { return apg.gstar().degree(x); }

bool original_with_degree(const AssociatedPlaneGraph& apg, Vertex x, std::size_t d) {
  return !apg.is_star(x) && degree_of(apg, x) == d;
}

// The seven corners around a 7-vertex must read, in one of the two
// orientations and some cyclic shift, as
//   v1 (10+), v2 star, v3 (7+), v4 star, v5 (7+), v6 star, v7 (exactly 7)
// with every corner face a triangle.
bool matches_special_seven(const AssociatedPlaneGraph& apg, Vertex v) {
  const auto& rot = apg.rotation()[v];
  if (rot.size() != 7 || apg.is_star(v)) return false;
  const auto corners = apg.faces_around(v);
  for (std::size_t f : corners) {
    if (apg.face(f).degree() != 3) return false;
  }
  auto label_ok = [&](auto neighbor_at) {
    const Vertex v1 = neighbor_at(1), v2 = neighbor_at(2), v3 = neighbor_at(3), v4 = neighbor_at(4),
                 v5 = neighbor_at(5), v6 = neighbor_at(6), v7 = neighbor_at(7);
    auto big = [&](Vertex x, std::size_t d) { return !apg.is_star(x) && degree_of(apg, x) >= d; };
    return big(v1, 10) && apg.is_star(v2) && big(v3, 7) && apg.is_star(v4) && big(v5, 7) && apg.is_star(v6) &&
           original_with_degree(apg, v7, 7);
  };
  for (std::size_t s = 0; s < 7; ++s) {
    auto forward = [&](std::size_t j) { return rot[(s + j - 1) % 7]; };
    auto backward = [&](std::size_t j) { return rot[(s + 7 * 7 - (j - 1)) % 7]; };
    if (label_ok(forward) || label_ok(backward)) return true;
  }
  return false;
}

// Edge through crossing z that contains endpoint a, and the other edge.
std::pair<Edge, Edge> split_crossing(const AssociatedPlaneGraph& apg, Vertex z, Vertex a) {
  const auto& c = apg.crossing_at(z);
  return c.first.has(a) ? std::make_pair(c.first, c.second) : std::make_pair(c.second, c.first);
}

bool try_poor_four(const AssociatedPlaneGraph& apg, const VertexTags& vt, const Face& f, std::size_t offset,
                   FaceTag& tag) {
  const Vertex u = f.walk[offset].vertex;
  const Vertex z1 = f.walk[(offset + 1) % 4].vertex;
  const Vertex v = f.walk[(offset + 2) % 4].vertex;
  const Vertex z2 = f.walk[(offset + 3) % 4].vertex;
  if (apg.is_star(u) || apg.is_star(v) || !apg.is_star(z1) || !apg.is_star(z2) || z1 == z2 || u == v) return false;
  if (!original_with_degree(apg, v, 2)) return false;
  const auto [ux, vx] = split_crossing(apg, z1, u);
  const auto [uy, vy] = split_crossing(apg, z2, u);
  if (!ux.has(u) || !uy.has(u) || !vx.has(v) || !vy.has(v) || vx == vy) return false;
  const Vertex x = ux.other(u);
  const Vertex y = uy.other(u);
  if (!vt.is_easy[x] || !vt.is_easy[y]) return false;
  tag.kind = FaceClass::Poor4;
  tag.u = u;
  tag.x = x;
  tag.y = y;
  tag.special = {v};
  return true;
}

bool try_poor_six(const AssociatedPlaneGraph& apg, const VertexTags& vt, const Face& f, std::size_t offset,
                  FaceTag& tag) {
  auto at = [&](std::size_t i) { return f.walk[(offset + i) % 6].vertex; };
  const Vertex u = at(0), z1 = at(1), v = at(2), z2 = at(3), w = at(4), z3 = at(5);
  for (Vertex z : {z1, z2, z3}) {
    if (!apg.is_star(z)) return false;
  }
  if (apg.is_star(u) || v == w || u == v || u == w) return false;
  for (Vertex t : {v, w}) {
    if (!original_with_degree(apg, t, 2) || !vt.is_special_2[t]) return false;
  }
  const auto [ux, vx] = split_crossing(apg, z1, u);
  const auto [uy, wy] = split_crossing(apg, z3, u);
  if (!ux.has(u) || !uy.has(u) || !vx.has(v) || !wy.has(w)) return false;
  const Vertex x = ux.other(u);
  const Vertex y = uy.other(u);
  if (!vt.is_easy[x] || !vt.is_easy[y]) return false;
  tag.kind = FaceClass::Poor6;
  tag.u = u;
  tag.x = x;
  tag.y = y;
  tag.special = {v, w};
  return true;
}

// Positions of u: the non-2 original corners. A matching profile has
// exactly one.
std::vector<std::size_t> u_candidates(const AssociatedPlaneGraph& apg, const Face& f) {
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < f.degree(); ++o) {
    const Vertex x = f.walk[o].vertex;
    if (!apg.is_star(x) && degree_of(apg, x) != 2) out.push_back(o);
  }
  return out;
}

}  // namespace

VertexTags classify_vertices(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg) {
  const Graph& g = d.base;
  const std::size_t total = apg.gstar().vertex_count();
  VertexTags vt;
  vt.is_star.assign(total, false);
  vt.is_easy.assign(total, false);
  vt.is_special_2.assign(total, false);
  vt.is_special_7.assign(total, false);
  vt.easy_neighbors.assign(total, 0);
  vt.star_neighbors.assign(total, 0);

  for (Vertex x = 0; x < total; ++x) vt.is_star[x] = apg.is_star(x);
  for (Vertex v = 0; v < g.vertex_count(); ++v) vt.is_easy[v] = is_easy(g, v);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) vt.easy_neighbors[v] += vt.is_easy[w] ? 1 : 0;
  }
  for (Vertex x = 0; x < total; ++x) {
    for (Vertex w : apg.gstar().neighbors(x)) vt.star_neighbors[x] += apg.is_star(w) ? 1 : 0;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) {
      const auto around = apg.faces_around(v);
      vt.is_special_2[v] =
          std::any_of(around.begin(), around.end(), [&](std::size_t f) { return apg.face(f).degree() == 4; });
    }
    if (g.degree(v) == 7) vt.is_special_7[v] = matches_special_seven(apg, v);
  }
  return vt;
}

FaceTags classify_faces(const AssociatedPlaneGraph& apg, const VertexTags& vt, const Graph& g) {
  FaceTags tags(apg.faces().size());
  for (std::size_t fi = 0; fi < apg.faces().size(); ++fi) {
    const Face& f = apg.face(fi);
    FaceTag& tag = tags[fi];
    std::size_t eight_plus = 0;
    std::size_t light = 0;  // 2-vertex or crossing incidences
    for (const auto& inc : f.walk) {
      const Vertex x = inc.vertex;
      if (apg.is_star(x)) {
        ++light;
        continue;
      }
      const std::size_t d = g.degree(x);
      if (d == 2) {
        ++tag.n2;
        ++light;
        if (vt.is_special_2[x]) ++tag.n2_special;
      }
      if (d >= 8) ++eight_plus;
    }

    const std::size_t len = f.degree();
    if (len == 3) {
      std::vector<Vertex> sevens;
      std::size_t ten_plus = 0;
      bool all_original = true;
      for (const auto& inc : f.walk) {
        if (apg.is_star(inc.vertex)) {
          all_original = false;
          continue;
        }
        const std::size_t d = g.degree(inc.vertex);
        if (d == 7) sevens.push_back(inc.vertex);
        if (d >= 10) ++ten_plus;
      }
      if (all_original && sevens.size() == 2 && ten_plus == 1 && vt.is_special_7[sevens[0]] &&
          vt.is_special_7[sevens[1]]) {
        tag.kind = FaceClass::Poor3;
        tag.special = sevens;
        continue;
      }
    } else if (len == 4) {
      bool found = false;
      for (std::size_t o : u_candidates(apg, f)) {
        if ((found = try_poor_four(apg, vt, f, o, tag))) break;
      }
      if (found) continue;
    } else if (len == 6) {
      bool found = false;
      for (std::size_t o : u_candidates(apg, f)) {
        if ((found = try_poor_six(apg, vt, f, o, tag))) break;
      }
      if (found) continue;
    }

    const bool small_with_two = (len == 4 || len == 5) && tag.n2 > 0;
    const bool large_light = len >= 6 && eight_plus == 1 && light == len - 1;
    tag.kind = (small_with_two || large_light) ? FaceClass::SemiPoor : FaceClass::Ordinary;
  }
  return tags;
}

LemmaReport detect_lemma_violations(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg, int colors) {
  if (colors < 7) throw std::invalid_argument("lemma thresholds need at least 7 colors");
  const Graph& g = d.base;
  const ColorThresholds th(colors);
  LemmaReport report;
  auto& l1 = report.violations[0];
  auto& l2 = report.violations[1];
  auto& l3 = report.violations[2];
  auto& l4 = report.violations[3];
  auto& l5 = report.violations[4];
  auto& l6 = report.violations[5];
  auto& l7 = report.violations[6];
  auto& l8 = report.violations[7];

  for (const Edge& e : bridges(g)) l1.push_back(Witness::edge(e));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) l1.push_back(Witness::vertex(v));
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t dv = g.degree(v);
    if (dv % 2 == 1 && dv < th.high) l2.push_back(Witness::vertex(v));
  }

  std::set<Edge> crossed;
  for (const auto& c : d.crossings) {
    crossed.insert(c.first);
    crossed.insert(c.second);
  }
  for (const Edge& e : g.edges()) {
    if (crossed.contains(e)) continue;
    if (g.degree(e.u) <= th.low || g.degree(e.v) <= th.low) l3.push_back(Witness::edge(e));
  }

  // Thirteen-color form: odd degree or a 6^- neighbor forces degree >= 7
  // and at most 2d - 13 easy neighbors.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t dv = g.degree(v);
    auto nbrs = g.neighbors(v);
    const bool low_neighbor = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) <= 6; });
    if (dv % 2 == 0 && !low_neighbor) continue;
    const auto easy = static_cast<long>(std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return is_easy(g, w); }));
    if (dv < 7 || easy > 2 * static_cast<long>(dv) - 13) l4.push_back(Witness::vertex(v));
  }

  for (std::size_t fi = 0; fi < apg.faces().size(); ++fi) {
    const Face& f = apg.face(fi);
    const auto profile = face_profile(f, apg);
    if (f.degree() >= 1 && f.degree() <= 2) {
      l5.push_back(Witness::face(fi));
    } else if (f.degree() == 3) {
      std::size_t stars = 0, high = 0;
      for (const auto& p : profile) {
        if (p.is_star) ++stars;
        else if (p.degree >= th.high) ++high;
      }
      if (!((stars == 0 && high == 3) || (stars == 1 && high == 2))) l5.push_back(Witness::face(fi));

      std::vector<std::size_t> degs;
      for (const auto& p : profile) {
        if (!p.is_star) degs.push_back(p.degree);
      }
      std::sort(degs.begin(), degs.end());
      if (degs == std::vector<std::size_t>{7, 7, 8}) l8.push_back(Witness::face(fi));
    } else if (f.degree() == 4) {
      std::size_t twos = 0, stars = 0;
      for (const auto& p : profile) {
        if (p.is_star) ++stars;
        else if (p.degree == 2) ++twos;
      }
      if (twos == 2 && stars == 2) l7.push_back(Witness::face(fi));
    }
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto around = apg.faces_around(v);
    const std::size_t a = apg.face(around[0]).degree();
    const std::size_t b = apg.face(around[1]).degree();
    const bool ok = (a >= 5 && b >= 4) || (b >= 5 && a >= 4);
    if (!ok) l6.push_back(Witness::vertex(v));
  }
  return report;
}

}  // namespace oddcolor
