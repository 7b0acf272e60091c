#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "oddcolor/coloring.hpp"
#include "oddcolor/discharging.hpp"
#include "oddcolor/embedding.hpp"
#include "oddcolor/graph.hpp"
#include "oddcolor/structure.hpp"

namespace oddcolor {

using Json = nlohmann::json;

/// Edge-list text: "p <n> <m>" followed by m lines "e <u> <v>"; blank lines
/// and '#' comments are skipped. Errors are InputError naming the line.
Graph parse_edge_list(std::istream& in, const std::string& source = "<input>");
void write_edge_list(std::ostream& out, const Graph& g);

/// Lines "<vertex> <color>". Every vertex of an n-vertex graph may appear at
/// most once; missing vertices stay uncolored. The palette defaults to the
/// largest color present.
Coloring parse_coloring(std::istream& in, std::size_t vertex_count, std::optional<int> palette = std::nullopt,
                        const std::string& source = "<input>");
void write_coloring(std::ostream& out, const Coloring& c);

/// Drawing JSON: {"n", "edges": [[u,v]...], "crossings": [[i,j]...] with
/// indices into edges, "rotation": {"vertex": [neighbors...]}}.
OnePlanarDrawing drawing_from_json(const Json& j);
Json drawing_to_json(const OnePlanarDrawing& d);
OnePlanarDrawing parse_drawing(std::istream& in, const std::string& source = "<input>");

/// Opens a file or throws InputError.
std::string read_file(const std::string& path);
Graph read_edge_list(const std::string& path);
OnePlanarDrawing read_drawing(const std::string& path);
/// A drawing JSON file yields its base graph; anything else is parsed as an
/// edge list.
Graph read_graph(const std::string& path);

Json to_json(const OddReport& r, int k);
Json classification_to_json(const AssociatedPlaneGraph& apg, const VertexTags& vt, const FaceTags& ft);
Json to_json(const LemmaReport& r, int colors);
Json to_json(const AuditReport& r, const AssociatedPlaneGraph& apg, bool with_transfers);

/// Graphviz export of G*; crossing vertices are drawn as small boxes.
std::string to_dot(const AssociatedPlaneGraph& apg);

}  // namespace oddcolor
