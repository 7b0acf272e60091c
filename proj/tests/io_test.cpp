#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "oddcolor/io.hpp"

using namespace oddcolor;

namespace {

Graph parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in, "g.txt");
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string edge_list_error(const std::string& text) {
  return error_of([&] { parse_text(text); });
}

Coloring parse_col(const std::string& text, std::size_t n, std::optional<int> palette = std::nullopt) {
  std::istringstream in(text);
  return parse_coloring(in, n, palette, "c.col");
}

OnePlanarDrawing round_trip(const OnePlanarDrawing& d) {
  std::istringstream in(drawing_to_json(d).dump());
  return parse_drawing(in);
}

}  // namespace

TEST(EdgeList, ParsesWithComments) {
  const Graph g = parse_text("# pentagon\np 5 5\ne 0 1\ne 1 2 # spoke\n\ne 2 3\ne 3 4\ne 4 0\n");
  EXPECT_EQ(g.edges(), cycle(5).edges());
}

TEST(EdgeList, RoundTrip) {
  const Graph g = random_graph(9, 1, 2, 4);
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(parse_text(out.str()).edges(), g.edges());
  EXPECT_EQ(parse_text(out.str()).vertex_count(), 9u);
}

TEST(EdgeList, ErrorsNameTheLine) {
  EXPECT_EQ(edge_list_error("p 3 1\np 3 1\n"), "g.txt:2: second header line");
  EXPECT_EQ(edge_list_error("e 0 1\n"), "g.txt:1: edge before header \"p <n> <m>\"");
  EXPECT_EQ(edge_list_error("p 3 1\ne 0 x\n"), "g.txt:2: expected \"e <u> <v>\"");
  EXPECT_EQ(edge_list_error("p 3 1\ne 0 3\n"), "g.txt:2: vertex out of range 0..2");
  EXPECT_EQ(edge_list_error("p 3 1\n\ne 1 1\n"), "g.txt:3: loop at vertex 1");
  EXPECT_EQ(edge_list_error("p 3 1\nq\n"), "g.txt:2: unknown line type \"q\"");
  EXPECT_EQ(edge_list_error("# nothing\n"), "g.txt: missing header \"p <n> <m>\"");
  EXPECT_EQ(edge_list_error("p 3 2\ne 0 1\n"), "g.txt: header declares 2 edges, found 1");
  EXPECT_EQ(edge_list_error("p 3 -1\n"), "g.txt:1: expected \"p <n> <m>\"");
}

TEST(ColoringFile, ParsesAndDefaultsPalette) {
  const Coloring c = parse_col("0 1\n1 2\n# note\n2 5\n", 4);
  EXPECT_EQ(c.colors(), (std::vector<Color>{1, 2, 5, kUncolored}));
  EXPECT_EQ(c.palette(), 5);
  EXPECT_EQ(parse_col("0 1\n", 2, 7).palette(), 7);
  std::ostringstream out;
  write_coloring(out, c);
  EXPECT_EQ(out.str(), "0 1\n1 2\n2 5\n");
}

TEST(ColoringFile, Errors) {
  EXPECT_EQ(error_of([] { parse_col("0 1\n0 2\n", 3); }), "c.col:2: vertex 0 already colored on line 1");
  EXPECT_EQ(error_of([] { parse_col("0 0\n", 3); }), "c.col:1: color 0 out of range");
  EXPECT_EQ(error_of([] { parse_col("0 9\n", 3, 4); }), "c.col:1: color 9 out of range");
  EXPECT_EQ(error_of([] { parse_col("5 1\n", 3); }), "c.col:1: vertex 5 out of range");
  EXPECT_EQ(error_of([] { parse_col("1\n", 3); }), "c.col:1: expected \"<vertex> <color>\"");
}

TEST(DrawingJson, RoundTripPreservesEverything) {
  for (const OnePlanarDrawing& d : {k6_drawing(), random_one_planar(17, 5), plane_cycle(4),
                                    oddcolor::testing::poor_three().drawing}) {
    const OnePlanarDrawing r = round_trip(d);
    EXPECT_EQ(r.base.edges(), d.base.edges());
    EXPECT_EQ(r.base.vertex_count(), d.base.vertex_count());
    EXPECT_EQ(r.crossings, d.crossings);
    EXPECT_EQ(build_associated_plane_graph(r).rotation(), build_associated_plane_graph(d).rotation());
  }
}

TEST(DrawingJson, EmptyRotationIsOmitted) {
  OnePlanarDrawing d;
  d.base = cycle(4);
  const Json j = drawing_to_json(d);
  EXPECT_FALSE(j.contains("rotation"));
  EXPECT_EQ(j.at("n"), 4);
}

TEST(DrawingJson, FieldDiagnostics) {
  auto err = [](const std::string& text) {
    return error_of([&] {
      std::istringstream in(text);
      parse_drawing(in, "d.json");
    });
  };
  EXPECT_EQ(err(R"({"edges": []})"), "d.json: drawing: missing field \"n\"");
  EXPECT_EQ(err(R"({"n": 2, "edges": [[0, 0]]})"), "d.json: edges[0]: loop at vertex 0");
  EXPECT_EQ(err(R"({"n": 2, "edges": [[0, 1], [1, 0]]})"), "d.json: edges: duplicate edge");
  EXPECT_EQ(err(R"({"n": 2, "edges": [[0, 5]]})"), "d.json: edges[0]: vertex 5 out of range");
  EXPECT_EQ(err(R"({"n": 2, "edges": [[0, 1, 2]]})"), "d.json: edges[0]: expected a pair");
  EXPECT_EQ(err(R"({"n": 4, "edges": [[0, 1], [2, 3]], "crossings": [[0, 7]]})"),
            "d.json: crossings[0]: edge index out of range");
  EXPECT_EQ(err(R"({"n": 2, "edges": [[0, 1]], "rotation": {"a": []}})"), "d.json: rotation[\"a\"]: key is not a vertex id");
  EXPECT_NE(err("{"), "");
  EXPECT_NE(err(R"({"n": 4, "edges": [[0, 1], [2, 3]], "crossings": [[0, 1]]})"), "");
}

TEST(ReadFile, MissingFile) {
  EXPECT_EQ(error_of([] { read_file("/nonexistent/x.txt"); }), "/nonexistent/x.txt: cannot open file");
}

TEST(ReportJson, OddReport) {
  const OddReport r = verify_odd_coloring(cycle(4), Coloring({1, 2, 1, 2}, 2));
  const Json j = to_json(r, 2);
  EXPECT_EQ(j.dump(), R"({"k":2,"valid":false,"violations":{"odd":[0,1,2,3],"proper":[],"uncolored":[]}})");
}

TEST(ReportJson, ClassificationMarksStars) {
  const auto fx = oddcolor::testing::poor_four();
  const auto apg = build_associated_plane_graph(fx.drawing);
  const auto vt = classify_vertices(fx.drawing, apg);
  const auto ft = classify_faces(apg, vt, fx.drawing.base);
  const Json j = classification_to_json(apg, vt, ft);
  ASSERT_EQ(j.at("vertices").size(), apg.gstar().vertex_count());
  EXPECT_TRUE(j.at("vertices").back().at("star").get<bool>());
  EXPECT_FALSE(j.at("vertices").back().contains("easy"));
  std::size_t poor4 = 0;
  for (const Json& f : j.at("faces")) {
    if (f.at("class") != "poor4") continue;
    ++poor4;
    EXPECT_EQ(f.at("u"), fx.at.at("u"));
    std::size_t stars = 0;
    for (const Json& label : f.at("walk")) stars += label.get<std::string>().starts_with("*") ? 1 : 0;
    EXPECT_EQ(stars, 2u);
  }
  EXPECT_EQ(poor4, 1u);
}

TEST(ReportJson, AuditUsesExactFractions) {
  const auto d = plane_cycle(5);
  const auto apg = build_associated_plane_graph(d);
  const Json j = to_json(audit(d, apg), apg, true);
  EXPECT_TRUE(j.at("balanced").get<bool>());
  EXPECT_EQ(j.at("negative_count"), 5);
  const Json& c = j.at("components").at(0);
  EXPECT_EQ(c.at("sum_final"), "-8");
  EXPECT_EQ(c.at("negatives").at(0).at("mu_star"), "-8/5");
  EXPECT_EQ(c.at("transfers").size(), 10u);
}

TEST(ReportJson, LemmaReport) {
  const auto d = plane_cycle(5);
  const Json j = to_json(detect_lemma_violations(d, build_associated_plane_graph(d)), 13);
  EXPECT_EQ(j.at("colors"), 13);
  EXPECT_EQ(j.at("total"), 10);
  EXPECT_FALSE(j.at("satisfied_all").get<bool>());
  EXPECT_EQ(j.at("violations").at("L3").size(), 5u);
}

TEST(Dot, StarsAreBoxes) {
  const std::string dot = to_dot(build_associated_plane_graph(k6_drawing()));
  EXPECT_TRUE(dot.starts_with("graph"));
  std::size_t boxes = 0;
  for (std::size_t at = dot.find("shape=box"); at != std::string::npos; at = dot.find("shape=box", at + 1)) ++boxes;
  EXPECT_EQ(boxes, 3u);
  EXPECT_EQ(dot, to_dot(build_associated_plane_graph(k6_drawing())));
}
