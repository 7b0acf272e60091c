#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddcolor/structure.hpp"

using namespace oddcolor;
using oddcolor::testing::Fixture;

namespace {

struct Classified {
  OnePlanarDrawing drawing;
  AssociatedPlaneGraph apg;
  VertexTags vt;
  FaceTags ft;
};

Classified classify(const OnePlanarDrawing& d) {
  Classified c{d, build_associated_plane_graph(d), {}, {}};
  c.vt = classify_vertices(c.drawing, c.apg);
  c.ft = classify_faces(c.apg, c.vt, c.drawing.base);
  return c;
}

std::vector<std::size_t> faces_of_class(const Classified& c, FaceClass kind) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < c.ft.size(); ++f) {
    if (c.ft[f].kind == kind) out.push_back(f);
  }
  return out;
}

bool face_has(const AssociatedPlaneGraph& apg, std::size_t f, Vertex x) {
  for (const auto& inc : apg.face(f).walk) {
    if (inc.vertex == x) return true;
  }
  return false;
}

OnePlanarDrawing plane(const Graph& g) {
  OnePlanarDrawing d;
  d.base = g;
  return d;
}

const std::vector<Witness>& lemma(const LemmaReport& r, int i) { return r.violations.at(static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST(VertexTags, StarsAndEasiness) {
  const Fixture fx = oddcolor::testing::poor_four();
  const Classified c = classify(fx.drawing);
  ASSERT_EQ(c.vt.size(), c.apg.gstar().vertex_count());
  for (Vertex z = static_cast<Vertex>(c.apg.original_count()); z < c.vt.size(); ++z) {
    EXPECT_TRUE(c.vt.is_star[z]);
    EXPECT_FALSE(c.vt.is_easy[z]);
  }
  EXPECT_TRUE(c.vt.is_easy[fx.at.at("x")]);
  EXPECT_TRUE(c.vt.is_special_2[fx.at.at("v")]);
  EXPECT_EQ(c.vt.star_neighbors[fx.at.at("v")], 2u);
  EXPECT_EQ(c.vt.star_neighbors[fx.at.at("u")], 2u);
  EXPECT_EQ(c.vt.easy_neighbors[fx.at.at("u")], 4u);
}

TEST(VertexTags, TwoVertexOnlyOnBigFacesIsNotSpecial) {
  const Classified c = classify(plane_cycle(6));
  for (Vertex v = 0; v < 6; ++v) EXPECT_FALSE(c.vt.is_special_2[v]);
}

TEST(FaceClasses, PoorFour) {
  const Fixture fx = oddcolor::testing::poor_four();
  const Classified c = classify(fx.drawing);
  const auto poor = faces_of_class(c, FaceClass::Poor4);
  ASSERT_EQ(poor.size(), 1u);
  const FaceTag& tag = c.ft[poor[0]];
  EXPECT_EQ(tag.u, fx.at.at("u"));
  EXPECT_EQ(std::set<Vertex>({*tag.x, *tag.y}), std::set<Vertex>({fx.at.at("x"), fx.at.at("y")}));
  EXPECT_EQ(tag.special, std::vector<Vertex>{fx.at.at("v")});
  EXPECT_EQ(tag.n2, 1u);
  EXPECT_EQ(tag.n2_special, 1u);
  EXPECT_TRUE(is_poor(tag.kind));
}

TEST(FaceClasses, PoorSix) {
  const Fixture fx = oddcolor::testing::poor_six();
  const Classified c = classify(fx.drawing);
  // The inner face (x0, *, y, *, x, *) has no non-2 corner to act as u.
  const auto poor = faces_of_class(c, FaceClass::Poor6);
  ASSERT_EQ(poor.size(), 1u);
  const FaceTag& tag = c.ft[poor[0]];
  EXPECT_EQ(tag.u, fx.at.at("u"));
  EXPECT_EQ(std::set<Vertex>(tag.special.begin(), tag.special.end()),
            std::set<Vertex>({fx.at.at("v"), fx.at.at("w")}));
  EXPECT_EQ(tag.n2_special, 2u);
}

TEST(FaceClasses, SemiPoorFive) {
  const Fixture fx = oddcolor::testing::semi_poor_five(5);
  const Classified c = classify(fx.drawing);
  bool found = false;
  for (std::size_t f : faces_of_class(c, FaceClass::SemiPoor)) {
    if (c.apg.face(f).degree() != 5) continue;
    EXPECT_TRUE(face_has(c.apg, f, fx.at.at("a")));
    EXPECT_TRUE(face_has(c.apg, f, fx.at.at("t")));
    EXPECT_EQ(c.ft[f].n2, 1u);
    found = true;
  }
  EXPECT_TRUE(found);
}

TEST(FaceClasses, SemiPoorEight) {
  const Fixture fx = oddcolor::testing::semi_poor_eight();
  const Classified c = classify(fx.drawing);
  std::size_t eights = 0;
  for (std::size_t f : faces_of_class(c, FaceClass::SemiPoor)) {
    if (c.apg.face(f).degree() != 8) continue;
    ++eights;
    EXPECT_TRUE(face_has(c.apg, f, fx.at.at("h")));
    EXPECT_EQ(c.ft[f].n2_special, 3u);
  }
  EXPECT_EQ(eights, 1u);
}

TEST(FaceClasses, PoorThree) {
  const Fixture fx = oddcolor::testing::poor_three();
  const Classified c = classify(fx.drawing);
  EXPECT_TRUE(c.vt.is_special_7[fx.at.at("v")]);
  EXPECT_TRUE(c.vt.is_special_7[fx.at.at("v7")]);
  EXPECT_FALSE(c.vt.is_special_7[fx.at.at("v3")]);
  const auto poor = faces_of_class(c, FaceClass::Poor3);
  ASSERT_EQ(poor.size(), 1u);
  for (const char* name : {"v", "v7", "v1"}) EXPECT_TRUE(face_has(c.apg, poor[0], fx.at.at(name))) << name;
}

TEST(FaceClasses, TriangulatedCorpusHasNoPoorLargeFaces) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Classified c = classify(random_one_planar(8 + seed, seed));
    for (std::size_t f = 0; f < c.ft.size(); ++f) {
      EXPECT_EQ(c.apg.face(f).degree(), 3u);
      EXPECT_NE(c.ft[f].kind, FaceClass::Poor4);
      EXPECT_NE(c.ft[f].kind, FaceClass::Poor6);
    }
  }
}

TEST(Lemmas, Thresholds) {
  const ColorThresholds t13(13);
  EXPECT_EQ(t13.high, 7u);
  EXPECT_EQ(t13.low, 6u);
  const ColorThresholds t7(7);
  EXPECT_EQ(t7.high, 4u);
  EXPECT_EQ(t7.low, 3u);
}

TEST(Lemmas, TooFewColorsIsRejected) {
  const auto d = plane_cycle(5);
  EXPECT_THROW(detect_lemma_violations(d, build_associated_plane_graph(d), 6), std::invalid_argument);
}

TEST(Lemmas, PentagonViolatesLowDegreeLemmas) {
  const auto d = plane_cycle(5);
  const LemmaReport r = detect_lemma_violations(d, build_associated_plane_graph(d));
  EXPECT_TRUE(lemma(r, 1).empty());
  EXPECT_TRUE(lemma(r, 2).empty());
  EXPECT_EQ(lemma(r, 3).size(), 5u);
  EXPECT_EQ(lemma(r, 4).size(), 5u);
  EXPECT_TRUE(lemma(r, 6).empty());
  EXPECT_EQ(r.total(), 10u);
  EXPECT_FALSE(r.satisfied_all());
}

TEST(Lemmas, PathHasBridges) {
  const auto d = plane(path(3));
  const LemmaReport r = detect_lemma_violations(d, build_associated_plane_graph(d));
  EXPECT_EQ(lemma(r, 1), (std::vector<Witness>{Witness::edge(Edge(0, 1)), Witness::edge(Edge(1, 2)),
                                               Witness::vertex(0), Witness::vertex(2)}));
}

TEST(Lemmas, DigonFace) {
  const std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}};
  const auto d = plane(Graph::from_edge_list(pairs));
  const auto apg = build_associated_plane_graph(d);
  ASSERT_EQ(apg.faces().size(), 1u);
  EXPECT_EQ(apg.face(0).degree(), 2u);
  EXPECT_EQ(lemma(detect_lemma_violations(d, apg), 5), std::vector<Witness>{Witness::face(0)});
}

TEST(Lemmas, TwoVertexOnATriangle) {
  const auto d = plane(complete_minus_edge(4));
  const LemmaReport r = detect_lemma_violations(d, build_associated_plane_graph(d));
  EXPECT_EQ(lemma(r, 6), (std::vector<Witness>{Witness::vertex(0), Witness::vertex(1)}));
}

TEST(Lemmas, OddDegreeBelowThreshold) {
  const auto d = k6_drawing();
  const auto apg = build_associated_plane_graph(d);
  EXPECT_EQ(lemma(detect_lemma_violations(d, apg, 13), 2).size(), 6u);
  EXPECT_TRUE(lemma(detect_lemma_violations(d, apg, 9), 2).empty());
}

TEST(Lemmas, TwoTwoVerticesOnAFourFace) {
  const Fixture fx = oddcolor::testing::poor_six();
  const auto apg = build_associated_plane_graph(fx.drawing);
  const LemmaReport r = detect_lemma_violations(fx.drawing, apg);
  ASSERT_FALSE(lemma(r, 7).empty());
  for (const Witness& w : lemma(r, 7)) {
    ASSERT_EQ(w.kind, Witness::Kind::Face);
    EXPECT_EQ(apg.face(w.id).degree(), 4u);
    EXPECT_TRUE(face_has(apg, w.id, fx.at.at("v")) || face_has(apg, w.id, fx.at.at("w")));
  }
}

TEST(Lemmas, SevenSevenEightTriangle) {
  const Fixture fx = oddcolor::testing::seven_seven_eight();
  const auto apg = build_associated_plane_graph(fx.drawing);
  const auto f = oddcolor::testing::find_face(apg, {0, 1, 2});
  ASSERT_TRUE(f.has_value());
  const LemmaReport r = detect_lemma_violations(fx.drawing, apg);
  EXPECT_EQ(lemma(r, 8), std::vector<Witness>{Witness::face(*f)});
}

TEST(Lemmas, WitnessLabels) {
  EXPECT_EQ(Witness::vertex(3).label(), "v3");
  EXPECT_EQ(Witness::edge(Edge(4, 2)).label(), "e2-4");
  EXPECT_EQ(Witness::face(7).label(), "f7");
}

namespace {

std::vector<OnePlanarDrawing> drawings_with_fixtures() {
  auto out = oddcolor::testing::sample_drawings(40);
  for (const auto& fx : {oddcolor::testing::poor_four(), oddcolor::testing::poor_six(), oddcolor::testing::poor_three(),
                         oddcolor::testing::semi_poor_eight(), oddcolor::testing::semi_poor_five(5)}) {
    out.push_back(fx.drawing);
  }
  return out;
}

}  // namespace

TEST(StructureProperties, PoorFacesAreNeverConsecutive) {
  std::size_t poor = 0;
  for (const auto& d : drawings_with_fixtures()) {
    const Classified c = classify(d);
    for (Vertex v = 0; v < d.base.vertex_count(); ++v) {
      const auto around = c.apg.faces_around(v);
      for (std::size_t i = 0; i < around.size(); ++i) {
        const std::size_t a = around[i], b = around[(i + 1) % around.size()];
        poor += is_poor(c.ft[a].kind);
        if (a != b) EXPECT_FALSE(is_poor(c.ft[a].kind) && is_poor(c.ft[b].kind)) << "vertex " << v;
      }
    }
  }
  EXPECT_GT(poor, 0u);
}

TEST(StructureProperties, LemmaFourBoundsEasyNeighbors) {
  std::size_t sevens = 0, heavy = 0;
  for (const auto& d : drawings_with_fixtures()) {
    const Classified c = classify(d);
    const LemmaReport r = detect_lemma_violations(d, c.apg);
    std::set<std::size_t> l4;
    for (const Witness& w : lemma(r, 4)) l4.insert(w.id);
    for (Vertex v = 0; v < d.base.vertex_count(); ++v) {
      if (l4.contains(v)) continue;
      const std::size_t dv = d.base.degree(v);
      if (dv == 7) {
        ++sevens;
        EXPECT_LE(c.vt.easy_neighbors[v], 1u);
      }
      if (dv >= 8) {
        ++heavy;
        std::size_t poor = 0;
        for (std::size_t f : c.apg.faces_around(v)) poor += is_poor(c.ft[f].kind);
        EXPECT_LE(poor, c.vt.easy_neighbors[v] / 2) << "vertex " << v;
      }
    }
  }
  EXPECT_GT(heavy, 0u);
  (void)sevens;
}
