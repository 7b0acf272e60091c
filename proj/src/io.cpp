#include "oddcolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace oddcolor {

namespace {

[[noreturn]] void fail_at(const std::string& source, std::size_t line, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// Reads one unsigned integer token; rejects signs and trailing junk.
bool read_index(std::istringstream& in, std::uint64_t& value) {
  std::string token;
  if (!(in >> token) || token.empty()) return false;
  if (!std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) return false;
  if (token.size() > 18) return false;
  value = std::stoull(token);
  return true;
}

bool at_end(std::istringstream& in) {
  std::string rest;
  return !(in >> rest);
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("drawing: missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InputError(where + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Vertex as_vertex(const Json& j, std::size_t limit, const std::string& where) {
  const std::uint64_t v = as_index(j, where);
  if (v >= limit) throw InputError(where + ": vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

std::pair<Json, Json> as_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected a pair");
  return {j[0], j[1]};
}

std::string vertex_label(const AssociatedPlaneGraph& apg, Vertex x) {
  return apg.is_star(x) ? "*" + std::to_string(x) : std::to_string(x);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::size_t edge_lines = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "p") {
      if (header) fail_at(source, line_no, "second header line");
      std::uint64_t n = 0, m = 0;
      if (!read_index(line, n) || !read_index(line, m) || !at_end(line)) {
        fail_at(source, line_no, "expected \"p <n> <m>\"");
      }
      header = {n, m};
    } else if (tag == "e") {
      if (!header) fail_at(source, line_no, "edge before header \"p <n> <m>\"");
      std::uint64_t u = 0, v = 0;
      if (!read_index(line, u) || !read_index(line, v) || !at_end(line)) {
        fail_at(source, line_no, "expected \"e <u> <v>\"");
      }
      if (u >= header->first || v >= header->first) {
        fail_at(source, line_no, "vertex out of range 0.." + std::to_string(header->first - 1));
      }
      if (u == v) fail_at(source, line_no, "loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++edge_lines;
    } else {
      fail_at(source, line_no, "unknown line type \"" + tag + "\"");
    }
  }
  if (!header) throw InputError(source + ": missing header \"p <n> <m>\"");
  if (edge_lines != header->second) {
    throw InputError(source + ": header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edge_lines));
  }
  return Graph::from_edges(edges, header->first);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

Coloring parse_coloring(std::istream& in, std::size_t vertex_count, std::optional<int> palette,
                        const std::string& source) {
  std::vector<Color> colors(vertex_count, kUncolored);
  std::vector<std::size_t> seen_at(vertex_count, 0);
  std::string raw;
  std::size_t line_no = 0;
  int largest = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(strip_comment(raw));
    std::string probe;
    if (!(line >> probe)) continue;
    line = std::istringstream(strip_comment(raw));
    std::uint64_t v = 0, color = 0;
    if (!read_index(line, v) || !read_index(line, color) || !at_end(line)) {
      fail_at(source, line_no, "expected \"<vertex> <color>\"");
    }
    if (v >= vertex_count) fail_at(source, line_no, "vertex " + std::to_string(v) + " out of range");
    if (color == 0 || (palette && color > static_cast<std::uint64_t>(*palette)) || color > 1'000'000) {
      fail_at(source, line_no, "color " + std::to_string(color) + " out of range");
    }
    if (seen_at[v] != 0) {
      fail_at(source, line_no, "vertex " + std::to_string(v) + " already colored on line " + std::to_string(seen_at[v]));
    }
    seen_at[v] = line_no;
    colors[v] = static_cast<Color>(color);
    largest = std::max(largest, colors[v]);
  }
  return Coloring(std::move(colors), palette.value_or(std::max(largest, 1)));
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c.is_colored(v)) out << v << ' ' << c[v] << '\n';
  }
}

OnePlanarDrawing drawing_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("drawing: expected a JSON object");
  const std::uint64_t n = as_index(field(j, "n"), "n");
  const Json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw InputError("edges: expected an array");

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto [a, b] = as_pair(edges_json[i], where);
    const Vertex u = as_vertex(a, n, where);
    const Vertex v = as_vertex(b, n, where);
    if (u == v) throw InputError(where + ": loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }

  OnePlanarDrawing d;
  d.base = Graph::from_edges(edges, n);
  if (d.base.edge_count() != edges.size()) throw InputError("edges: duplicate edge");

  if (j.contains("crossings")) {
    const Json& cj = j.at("crossings");
    if (!cj.is_array()) throw InputError("crossings: expected an array");
    for (std::size_t i = 0; i < cj.size(); ++i) {
      const std::string where = "crossings[" + std::to_string(i) + "]";
      const auto [a, b] = as_pair(cj[i], where);
      const std::uint64_t ea = as_index(a, where);
      const std::uint64_t eb = as_index(b, where);
      if (ea >= edges.size() || eb >= edges.size()) throw InputError(where + ": edge index out of range");
      d.crossings.push_back({edges[ea], edges[eb]});
    }
  }

  if (j.contains("rotation")) {
    const Json& rj = j.at("rotation");
    if (!rj.is_object()) throw InputError("rotation: expected an object keyed by vertex");
    const std::size_t total = n + d.crossings.size();
    d.rotation.assign(total, {});
    for (const auto& [key, list] : rj.items()) {
      const std::string where = "rotation[\"" + key + "\"]";
      std::size_t x = 0;
      try {
        std::size_t used = 0;
        x = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError(where + ": key is not a vertex id");
      }
      if (x >= total) throw InputError(where + ": vertex out of range");
      if (!list.is_array()) throw InputError(where + ": expected an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        d.rotation[x].push_back(as_vertex(list[i], total, where + "[" + std::to_string(i) + "]"));
      }
    }
  }
  validate_drawing(d);
  return d;
}

Json drawing_to_json(const OnePlanarDrawing& d) {
  Json j;
  j["n"] = d.base.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : d.base.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  Json crossings = Json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back({d.base.edge_index(c.first.u, c.first.v), d.base.edge_index(c.second.u, c.second.v)});
  }
  j["crossings"] = crossings;
  if (!d.rotation.empty()) {
    Json rotation = Json::object();
    for (std::size_t x = 0; x < d.rotation.size(); ++x) rotation[std::to_string(x)] = d.rotation[x];
    j["rotation"] = rotation;
  }
  return j;
}

OnePlanarDrawing parse_drawing(std::istream& in, const std::string& source) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  try {
    return drawing_from_json(j);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_edge_list(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_edge_list(in, path);
}

OnePlanarDrawing read_drawing(const std::string& path) {
  std::istringstream in(read_file(path));
  return parse_drawing(in, path);
}

Graph read_graph(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_drawing(in, path).base;
  return parse_edge_list(in, path);
}

Json to_json(const OddReport& r, int k) {
  Json proper = Json::array();
  for (const Edge& e : r.proper_violations) proper.push_back({e.u, e.v});
  Json j;
  j["k"] = k;
  j["valid"] = r.valid;
  j["violations"] = {{"proper", proper}, {"odd", r.odd_violations}, {"uncolored", r.uncolored}};
  return j;
}

Json classification_to_json(const AssociatedPlaneGraph& apg, const VertexTags& vt, const FaceTags& ft) {
  Json vertices = Json::array();
  for (Vertex x = 0; x < vt.size(); ++x) {
    Json v;
    v["id"] = x;
    v["degree"] = apg.gstar().degree(x);
    v["star"] = static_cast<bool>(vt.is_star[x]);
    if (!vt.is_star[x]) {
      v["easy"] = static_cast<bool>(vt.is_easy[x]);
      v["special_2"] = static_cast<bool>(vt.is_special_2[x]);
      v["special_7"] = static_cast<bool>(vt.is_special_7[x]);
      v["easy_neighbors"] = vt.easy_neighbors[x];
      v["star_neighbors"] = vt.star_neighbors[x];
    }
    vertices.push_back(v);
  }
  Json faces = Json::array();
  for (std::size_t f = 0; f < ft.size(); ++f) {
    const FaceTag& tag = ft[f];
    Json walk = Json::array();
    for (const auto& inc : apg.face(f).walk) walk.push_back(vertex_label(apg, inc.vertex));
    Json face;
    face["id"] = f;
    face["degree"] = apg.face(f).degree();
    face["class"] = to_string(tag.kind);
    face["walk"] = walk;
    face["n2"] = tag.n2;
    face["n2_special"] = tag.n2_special;
    if (tag.u) face["u"] = *tag.u;
    if (tag.x) face["x"] = *tag.x;
    if (tag.y) face["y"] = *tag.y;
    if (!tag.special.empty()) face["special"] = tag.special;
    faces.push_back(face);
  }
  return Json{{"vertices", vertices}, {"faces", faces}};
}

Json to_json(const LemmaReport& r, int colors) {
  Json violations = Json::object();
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    Json list = Json::array();
    for (const Witness& w : r.violations[i]) list.push_back(w.label());
    violations["L" + std::to_string(i + 1)] = list;
  }
  return Json{{"colors", colors}, {"satisfied_all", r.satisfied_all()}, {"total", r.total()},
              {"violations", violations}};
}

Json to_json(const AuditReport& r, const AssociatedPlaneGraph& apg, bool with_transfers) {
  auto component_of = [&](const Element& e) {
    return e.kind == Element::Kind::Vertex ? apg.component_of_vertex(static_cast<Vertex>(e.id))
                                           : apg.component_of_face(e.id);
  };
  Json components = Json::array();
  for (const ComponentAudit& c : r.components) {
    Json negatives = Json::array();
    for (const NegativeElement& n : c.negatives) {
      negatives.push_back(
          {{"element", n.element.label()}, {"mu_star", to_string(n.final_charge)}, {"explained_by", n.explained_by}});
    }
    Json entry;
    entry["component"] = c.component;
    entry["sum_initial"] = to_string(c.sum_initial);
    entry["sum_final"] = to_string(c.sum_final);
    entry["negatives"] = negatives;
    if (with_transfers) {
      Json transfers = Json::array();
      for (const Transfer& t : r.ledger.transfers) {
        if (component_of(t.source) != c.component) continue;
        transfers.push_back({{"from", t.source.label()},
                             {"to", t.target.label()},
                             {"amount", to_string(t.amount)},
                             {"rule", to_string(t.rule)}});
      }
      entry["transfers"] = transfers;
    }
    components.push_back(entry);
  }
  return Json{{"balanced", r.balanced()}, {"negative_count", r.negative_count()}, {"components", components}};
}

std::string to_dot(const AssociatedPlaneGraph& apg) {
  std::ostringstream out;
  out << "graph gstar {\n";
  const Graph& g = apg.gstar();
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    out << "  " << x;
    if (apg.is_star(x)) {
      out << " [shape=box, width=0.15, height=0.15, label=\"\", xlabel=\"*" << x << "\"]";
    } else {
      out << " [shape=circle]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace oddcolor
