#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oddcolor/embedding.hpp"
#include "oddcolor/generators.hpp"
#include "fixtures.hpp"

using namespace oddcolor;
using oddcolor::testing::geometric_drawing;
using oddcolor::testing::Point;

namespace {

OnePlanarDrawing single_crossing() {
  // Square a=0, b=1, c=2, d=3 with both diagonals crossing.
  const std::vector<Point> pts = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  return geometric_drawing(pts, {{0, 1}, {2, 3}});
}

void expect_invariants(const OnePlanarDrawing& d) {
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  const Graph& gs = apg.gstar();
  std::size_t walk_total = 0;
  for (const Face& f : apg.faces()) walk_total += f.degree();
  EXPECT_EQ(walk_total, 2 * gs.edge_count());
  for (std::size_t c = 0; c < apg.component_count(); ++c) EXPECT_EQ(apg.euler_characteristic(c), 2);
  for (Vertex v = 0; v < d.base.vertex_count(); ++v) EXPECT_EQ(gs.degree(v), d.base.degree(v));
  for (Vertex z = static_cast<Vertex>(apg.original_count()); z < gs.vertex_count(); ++z) {
    EXPECT_EQ(gs.degree(z), 4u);
    for (Vertex w : gs.neighbors(z)) EXPECT_FALSE(apg.is_star(w));
  }
  EXPECT_EQ(apg.contracted_edges(), d.base.edges());
  // Every edge of G* borders exactly two face incidences.
  std::map<Edge, int> sides;
  for (const Face& f : apg.faces()) {
    for (const auto& inc : f.walk) ++sides[Edge(inc.vertex, inc.next)];
  }
  for (const Edge& e : gs.edges()) EXPECT_EQ(sides[e], 2);
}

}  // namespace

TEST(Planarization, CrossingFreeIsIdentity) {
  const OnePlanarDrawing d = plane_cycle(6);
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  EXPECT_EQ(apg.star_count(), 0u);
  EXPECT_EQ(apg.gstar().edges(), d.base.edges());
}

TEST(Planarization, OneCrossingBecomesDegreeFourStar) {
  const OnePlanarDrawing d = single_crossing();
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  ASSERT_EQ(apg.star_count(), 1u);
  const Vertex z = 4;
  EXPECT_TRUE(apg.is_star(z));
  EXPECT_EQ(apg.gstar().degree(z), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(apg.gstar().has_edge(v, z));
  EXPECT_EQ(apg.origin(0, z), Edge(0, 1));
  EXPECT_EQ(apg.origin(z, 3), Edge(2, 3));
}

TEST(Planarization, EdgeCrossedTwiceIsRejected) {
  OnePlanarDrawing d;
  const std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}, {2, 3}, {4, 5}};
  d.base = Graph::from_edge_list(pairs);
  d.crossings = {{Edge(0, 1), Edge(2, 3)}, {Edge(0, 1), Edge(4, 5)}};
  EXPECT_THROW(build_associated_plane_graph(d), InputError);
}

TEST(Planarization, CrossingWithSharedEndpointIsRejected) {
  OnePlanarDrawing d;
  const std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}, {1, 2}};
  d.base = Graph::from_edge_list(pairs);
  d.crossings = {{Edge(0, 1), Edge(1, 2)}};
  EXPECT_THROW(build_associated_plane_graph(d), InputError);
}

TEST(Planarization, CrossingNeedsRotation) {
  OnePlanarDrawing d = single_crossing();
  d.rotation.clear();
  EXPECT_THROW(build_associated_plane_graph(d), InputError);
}

TEST(Planarization, NonPlanarRotationIsRejected) {
  // K4 with a rotation that is a valid permutation but embeds on a torus.
  OnePlanarDrawing d;
  d.base = complete(4);
  d.rotation = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  EXPECT_THROW(build_associated_plane_graph(d), InputError);
}

TEST(Planarization, NonAlternatingStarIsRejected) {
  OnePlanarDrawing d = single_crossing();
  d.rotation[4] = {0, 1, 2, 3};
  EXPECT_THROW(build_associated_plane_graph(d), InputError);
}

TEST(Planarization, RotationMayNameFarEndpoint) {
  OnePlanarDrawing d = single_crossing();
  OnePlanarDrawing far = d;
  for (Vertex v = 0; v < 4; ++v) {
    for (Vertex& w : far.rotation[v]) {
      if (w == 4) w = (v == 0 ? 1 : v == 1 ? 0 : v == 2 ? 3 : 2);
    }
  }
  EXPECT_EQ(build_associated_plane_graph(far).rotation(), build_associated_plane_graph(d).rotation());
}

TEST(Faces, PentagonHasTwoFivesFaces) {
  const AssociatedPlaneGraph apg = build_associated_plane_graph(plane_cycle(5));
  ASSERT_EQ(apg.faces().size(), 2u);
  EXPECT_EQ(apg.face(0).degree(), 5u);
  EXPECT_EQ(apg.face(1).degree(), 5u);
}

TEST(Faces, PlaneK4FromComputedEmbedding) {
  OnePlanarDrawing d;
  d.base = complete(4);
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  ASSERT_EQ(apg.faces().size(), 4u);
  for (const Face& f : apg.faces()) EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(apg.euler_characteristic(0), 2);
}

TEST(Faces, ThetaGraphMatchesHandTracing) {
  // Poles 0 and 1, middle vertices 2, 3, 4, all in one plane.
  OnePlanarDrawing d;
  const std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}};
  d.base = Graph::from_edge_list(pairs);
  d.rotation = {{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}};
  const auto faces = trace_faces(d.base, d.rotation);
  // Darts by hand: the successor of dart (a -> b) leaves b after a.
  // 0->2->1->4->0, 0->3->1->2->0, 0->4->1->3->0.
  ASSERT_EQ(faces.size(), 3u);
  std::set<std::vector<Vertex>> walks;
  for (const Face& f : faces) {
    std::vector<Vertex> w;
    for (const auto& inc : f.walk) w.push_back(inc.vertex);
    std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    walks.insert(w);
  }
  EXPECT_EQ(walks, (std::set<std::vector<Vertex>>{{0, 2, 1, 4}, {0, 3, 1, 2}, {0, 4, 1, 3}}));
}

TEST(Faces, InconsistentRotationIsRejected) {
  const Graph g = cycle(3);
  EXPECT_THROW(trace_faces(g, {{1, 2}, {0, 2}, {0}}), InputError);
}

TEST(Faces, IsolatedVertexGetsItsOwnFace) {
  OnePlanarDrawing d;
  const std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}, {1, 2}, {2, 0}};
  d.base = Graph::from_edge_list(pairs, 4);
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  EXPECT_EQ(apg.component_count(), 2u);
  EXPECT_EQ(apg.euler_characteristic(1), 2);
}

TEST(Profiles, TriangleOfSevensAndEight) {
  const auto fx = oddcolor::testing::seven_seven_eight().drawing;
  const AssociatedPlaneGraph apg = build_associated_plane_graph(fx);
  const auto f = oddcolor::testing::find_face(apg, {0, 1, 2});
  ASSERT_TRUE(f.has_value());
  auto profile = face_profile(apg.face(*f), apg);
  std::vector<std::size_t> degrees;
  for (const auto& p : profile) {
    EXPECT_FALSE(p.is_star);
    degrees.push_back(p.degree);
  }
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<std::size_t>{7, 7, 8}));
}

TEST(Profiles, PoorFourShape) {
  const auto fx = oddcolor::testing::poor_four().drawing;
  const AssociatedPlaneGraph apg = build_associated_plane_graph(fx);
  bool found = false;
  for (const Face& f : apg.faces()) {
    const auto profile = face_profile(f, apg);
    if (profile.size() != 4) continue;
    const auto it = std::find_if(profile.begin(), profile.end(), [](const auto& p) { return p.degree == 4 && !p.is_star; });
    if (it == profile.end()) continue;
    std::vector<ProfileEntry> rotated(profile.begin(), profile.end());
    std::rotate(rotated.begin(), rotated.begin() + (it - profile.begin()), rotated.end());
    EXPECT_EQ(rotated, (std::vector<ProfileEntry>{{4, false}, {4, true}, {2, false}, {4, true}}));
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Profiles, CrossingFreeHasNoStars) {
  const AssociatedPlaneGraph apg = build_associated_plane_graph(plane_cycle(7));
  for (const Face& f : apg.faces()) {
    for (const auto& p : face_profile(f, apg)) EXPECT_FALSE(p.is_star);
  }
}

TEST(Invariants, HoldOnGeneratedDrawings) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const OnePlanarDrawing d = random_one_planar(4 + seed % 30, seed);
    SCOPED_TRACE(seed);
    expect_invariants(d);
    expect_invariants(subdivide_crossed_edges(thin_drawing(d, 1, 3, seed), 1, 2, seed));
  }
  expect_invariants(k6_drawing());
  expect_invariants(single_crossing());
}

TEST(Invariants, RestrictionStaysValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OnePlanarDrawing d = random_one_planar(6 + seed, 100 + seed);
    std::vector<bool> keep(d.base.vertex_count(), true);
    keep[seed % keep.size()] = false;
    keep[(3 * seed + 1) % keep.size()] = false;
    const OnePlanarDrawing r = restrict_drawing(d, keep);
    SCOPED_TRACE(seed);
    EXPECT_EQ(r.base.edges(), d.base.induced(keep).edges());
    expect_invariants(r);
  }
}

TEST(Invariants, PlanarRotationRejectsK5) {
  EXPECT_THROW(planar_rotation(complete(5)), InputError);
  EXPECT_NO_THROW(planar_rotation(complete(4)));
}

TEST(Invariants, K6WithThreeCrossings) {
  const OnePlanarDrawing d = k6_drawing();
  EXPECT_EQ(d.base.edges(), complete(6).edges());
  EXPECT_EQ(d.crossings.size(), 3u);
  const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
  EXPECT_EQ(apg.faces().size(), 14u);
}
