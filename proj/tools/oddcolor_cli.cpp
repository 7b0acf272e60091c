// Command-line front end: odd coloring, G* construction, structure and
// discharging reports, instance generation.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "oddcolor/coloring.hpp"
#include "oddcolor/discharging.hpp"
#include "oddcolor/embedding.hpp"
#include "oddcolor/generators.hpp"
#include "oddcolor/io.hpp"
#include "oddcolor/structure.hpp"

using namespace oddcolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;

enum class Format { Json, Text };

struct Common {
  std::string format;
  Format resolve(Format fallback) const {
    if (format.empty()) return fallback;
    return format == "json" ? Format::Json : Format::Text;
  }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << text;
}

std::string coloring_text(const Coloring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw InputError(what + ": expected a non-negative integer, got \"" + text + "\"");
  }
  return value;
}

// "num/den" or a decimal in [0, 1].
std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  std::pair<std::uint64_t, std::uint64_t> p;
  if (slash != std::string::npos) {
    p = {parse_count(text.substr(0, slash), "p"), parse_count(text.substr(slash + 1), "p")};
  } else {
    double value = -1;
    try {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) value = -1;
    } catch (const std::exception&) {
      value = -1;
    }
    if (value < 0 || value > 1) throw InputError("p: expected a probability, got \"" + text + "\"");
    p = {static_cast<std::uint64_t>(value * 1'000'000 + 0.5), 1'000'000};
  }
  if (p.second == 0 || p.first > p.second) throw InputError("p: expected a probability, got \"" + text + "\"");
  const std::uint64_t g = std::gcd(p.first, p.second);
  return {p.first / g, p.second / g};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd colorings of 1-planar graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  // chi-odd
  Common chi_common;
  std::string chi_graph, chi_witness;
  int chi_kmax = 13;
  auto* chi = app.add_subcommand("chi-odd", "Exact odd chromatic number");
  chi->add_option("graph", chi_graph, "Edge list or drawing JSON")->required();
  chi->add_option("--kmax", chi_kmax, "Largest palette to try")->check(CLI::Range(1, 64));
  chi->add_option("--witness", chi_witness, "Write a witness coloring here");
  add_format(chi, chi_common);
  chi->callback([&] {
    action = [&] {
      const Graph g = read_graph(chi_graph);
      const ChromaticResult r = exact_odd_chromatic_number(g, chi_kmax);
      if (!chi_witness.empty() && r.witness) write_text_file(chi_witness, coloring_text(*r.witness));
      if (chi_common.resolve(Format::Text) == Format::Json) {
        Json j{{"kmax", chi_kmax}, {"exceeds", r.exceeds()}};
        j["chi_odd"] = r.value ? Json(*r.value) : Json(nullptr);
        print_json(j);
      } else if (r.value) {
        std::cout << *r.value << '\n';
      } else {
        std::cout << "exceeds " << chi_kmax << '\n';
      }
      return kExitOk;
    };
  });

  // verify
  Common verify_common;
  std::string verify_graph, verify_coloring;
  std::optional<int> verify_k;
  auto* verify = app.add_subcommand("verify", "Check an odd coloring");
  verify->add_option("graph", verify_graph, "Edge list or drawing JSON")->required();
  verify->add_option("coloring", verify_coloring, "Lines \"<vertex> <color>\"")->required();
  verify->add_option("--k", verify_k, "Palette size")->check(CLI::Range(1, 1'000'000));
  add_format(verify, verify_common);
  verify->callback([&] {
    action = [&] {
      const Graph g = read_graph(verify_graph);
      std::istringstream in(read_file(verify_coloring));
      const Coloring c = parse_coloring(in, g.vertex_count(), verify_k, verify_coloring);
      const OddReport r = verify_odd_coloring(g, c);
      if (verify_common.resolve(Format::Text) == Format::Json) {
        print_json(to_json(r, c.palette()));
      } else {
        std::cout << (r.valid ? "valid" : "invalid") << '\n';
        for (const Edge& e : r.proper_violations) std::cout << "proper violation " << to_string(e) << '\n';
        for (Vertex v : r.odd_violations) std::cout << "odd violation " << v << '\n';
        for (Vertex v : r.uncolored) std::cout << "uncolored " << v << '\n';
      }
      return r.valid ? kExitOk : kExitInvalid;
    };
  });

  // gstar
  Common gstar_common;
  std::string gstar_drawing, gstar_dot;
  auto* gstar = app.add_subcommand("gstar", "Build the planarization and check Euler per component");
  gstar->add_option("drawing", gstar_drawing, "Drawing JSON")->required();
  gstar->add_option("--dot", gstar_dot, "Write Graphviz DOT here");
  add_format(gstar, gstar_common);
  gstar->callback([&] {
    action = [&] {
      const AssociatedPlaneGraph apg = build_associated_plane_graph(read_drawing(gstar_drawing));
      if (!gstar_dot.empty()) write_text_file(gstar_dot, to_dot(apg));
      Json components = Json::array();
      bool euler_ok = true;
      for (std::size_t c = 0; c < apg.component_count(); ++c) {
        const long chi_value = apg.euler_characteristic(c);
        euler_ok = euler_ok && chi_value == 2;
        components.push_back({{"component", c}, {"euler", chi_value}});
      }
      const Graph& gs = apg.gstar();
      if (gstar_common.resolve(Format::Text) == Format::Json) {
        print_json({{"vertices", gs.vertex_count()},
                    {"edges", gs.edge_count()},
                    {"faces", apg.faces().size()},
                    {"stars", apg.star_count()},
                    {"components", components},
                    {"euler_ok", euler_ok}});
      } else {
        std::cout << "V=" << gs.vertex_count() << " E=" << gs.edge_count() << " F=" << apg.faces().size()
                  << " stars=" << apg.star_count() << " components=" << apg.component_count() << '\n';
        std::cout << "euler " << (euler_ok ? "ok" : "FAILED") << '\n';
      }
      return euler_ok ? kExitOk : kExitInvalid;
    };
  });

  // classify
  Common classify_common;
  std::string classify_drawing;
  auto* classify = app.add_subcommand("classify", "Vertex and face tags");
  classify->add_option("drawing", classify_drawing, "Drawing JSON")->required();
  add_format(classify, classify_common);
  classify->callback([&] {
    action = [&] {
      const OnePlanarDrawing d = read_drawing(classify_drawing);
      const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
      const VertexTags vt = classify_vertices(d, apg);
      const FaceTags ft = classify_faces(apg, vt, d.base);
      if (classify_common.resolve(Format::Json) == Format::Json) {
        print_json(classification_to_json(apg, vt, ft));
      } else {
        for (Vertex v = 0; v < apg.original_count(); ++v) {
          std::cout << "v" << v << " d=" << apg.gstar().degree(v) << (vt.is_easy[v] ? " easy" : "")
                    << (vt.is_special_2[v] ? " special-2" : "") << (vt.is_special_7[v] ? " special-7" : "") << '\n';
        }
        for (std::size_t f = 0; f < ft.size(); ++f) {
          std::cout << "f" << f << " deg=" << apg.face(f).degree() << ' ' << to_string(ft[f].kind) << '\n';
        }
      }
      return kExitOk;
    };
  });

  // lemmas
  Common lemmas_common;
  std::string lemmas_drawing;
  int lemmas_colors = 13;
  auto* lemmas = app.add_subcommand("lemmas", "Report violations of the structural lemma conclusions");
  lemmas->add_option("drawing", lemmas_drawing, "Drawing JSON")->required();
  lemmas->add_option("--colors", lemmas_colors, "Palette size the thresholds derive from")->check(CLI::Range(7, 1000));
  add_format(lemmas, lemmas_common);
  lemmas->callback([&] {
    action = [&] {
      const OnePlanarDrawing d = read_drawing(lemmas_drawing);
      const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
      const LemmaReport r = detect_lemma_violations(d, apg, lemmas_colors);
      if (lemmas_common.resolve(Format::Json) == Format::Json) {
        print_json(to_json(r, lemmas_colors));
      } else {
        for (std::size_t i = 0; i < r.violations.size(); ++i) {
          std::cout << 'L' << i + 1 << ':';
          for (const Witness& w : r.violations[i]) std::cout << ' ' << w.label();
          std::cout << '\n';
        }
      }
      return kExitOk;
    };
  });

  // discharge
  Common discharge_common;
  std::string discharge_drawing;
  bool discharge_transfers = false;
  auto* discharge = app.add_subcommand("discharge", "Apply the charge rules and audit the result");
  discharge->add_option("drawing", discharge_drawing, "Drawing JSON")->required();
  discharge->add_flag("--transfers", discharge_transfers, "Include the itemized transfer log");
  add_format(discharge, discharge_common);
  discharge->callback([&] {
    action = [&] {
      const OnePlanarDrawing d = read_drawing(discharge_drawing);
      const AssociatedPlaneGraph apg = build_associated_plane_graph(d);
      const AuditReport r = audit(d, apg);
      if (discharge_common.resolve(Format::Json) == Format::Json) {
        print_json(to_json(r, apg, discharge_transfers));
      } else {
        for (const ComponentAudit& c : r.components) {
          std::cout << "component " << c.component << " sum_initial=" << to_string(c.sum_initial)
                    << " sum_final=" << to_string(c.sum_final) << " negatives=" << c.negatives.size() << '\n';
          for (const NegativeElement& n : c.negatives) {
            std::cout << "  " << n.element.label() << ' ' << to_string(n.final_charge);
            for (const auto& l : n.explained_by) std::cout << ' ' << l;
            std::cout << '\n';
          }
        }
        if (discharge_transfers) {
          for (const Transfer& t : r.ledger.transfers) {
            std::cout << to_string(t.rule) << ' ' << t.source.label() << " -> " << t.target.label() << ' '
                      << to_string(t.amount) << '\n';
          }
        }
      }
      return r.balanced() ? kExitOk : kExitInvalid;
    };
  });

  // gen
  Common gen_common;
  std::string gen_family, gen_output;
  std::vector<std::string> gen_params;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a graph or drawing");
  gen->add_option("family", gen_family, "Family name")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "complete", "complete-minus-edge", "subdivided-complete", "gnp",
                             "plane-cycle", "k6", "one-planar", "one-planar-sparse"}));
  gen->add_option("params", gen_params, "Family parameters (n, and p for gnp)");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("-o,--output", gen_output, "Write to this file instead of stdout");
  add_format(gen, gen_common);
  gen->footer(
      "Graph families (edge list by default): cycle n, path n, complete n, complete-minus-edge n,\n"
      "subdivided-complete n, gnp n p. Drawing families (JSON): plane-cycle n, k6, one-planar n,\n"
      "one-planar-sparse n (thinned, with subdivided crossed edges).");
  gen->callback([&] {
    action = [&] {
      auto want = [&](std::size_t count) {
        if (gen_params.size() != count) {
          throw InputError(gen_family + ": expected " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(gen_params.size()));
        }
      };
      auto n_param = [&] { return static_cast<std::size_t>(parse_count(gen_params.at(0), "n")); };
      std::optional<Graph> graph;
      std::optional<OnePlanarDrawing> drawing;
      try {
        if (gen_family == "k6") {
          want(0);
          drawing = k6_drawing();
        } else if (gen_family == "gnp") {
          want(2);
          const auto [num, den] = parse_probability(gen_params[1]);
          graph = random_graph(n_param(), num, den, gen_seed);
        } else {
          want(1);
          const std::size_t n = n_param();
          if (gen_family == "cycle") graph = cycle(n);
          if (gen_family == "path") graph = path(n);
          if (gen_family == "complete") graph = complete(n);
          if (gen_family == "complete-minus-edge") graph = complete_minus_edge(n);
          if (gen_family == "subdivided-complete") graph = subdivided_complete(n);
          if (gen_family == "plane-cycle") drawing = plane_cycle(n);
          if (gen_family == "one-planar") drawing = random_one_planar(n, gen_seed);
          if (gen_family == "one-planar-sparse") {
            drawing = subdivide_crossed_edges(thin_drawing(random_one_planar(n, gen_seed), 1, 3, gen_seed + 1), 1,
                                              3, gen_seed + 2);
          }
        }
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      std::ostringstream out;
      const Format fallback = drawing ? Format::Json : Format::Text;
      if (gen_common.resolve(fallback) == Format::Json) {
        OnePlanarDrawing as_drawing;
        if (drawing) {
          as_drawing = *drawing;
        } else {
          as_drawing.base = *graph;
        }
        out << drawing_to_json(as_drawing).dump(2) << '\n';
      } else {
        write_edge_list(out, drawing ? drawing->base : *graph);
      }
      if (gen_output.empty()) {
        std::cout << out.str();
      } else {
        write_text_file(gen_output, out.str());
      }
      return kExitOk;
    };
  });

  // reduce-color
  Common reduce_common;
  std::string reduce_drawing, reduce_output;
  int reduce_k = 13;
  auto* reduce = app.add_subcommand("reduce-color", "Color a drawing by reducible-configuration peeling");
  reduce->add_option("drawing", reduce_drawing, "Drawing JSON")->required();
  reduce->add_option("--k", reduce_k, "Palette size")->check(CLI::Range(1, 64));
  reduce->add_option("-o,--output", reduce_output, "Write the coloring here");
  add_format(reduce, reduce_common);
  reduce->callback([&] {
    action = [&] {
      const OnePlanarDrawing d = read_drawing(reduce_drawing);
      ReductionOptions options;
      options.palette = reduce_k;
      const ReductionResult r = color_by_reduction(d, options);
      const bool json = reduce_common.resolve(Format::Text) == Format::Json;
      if (r.ok() && !reduce_output.empty()) write_text_file(reduce_output, coloring_text(*r.coloring));
      if (json) {
        Json j{{"valid", r.ok()},
               {"k", reduce_k},
               {"exact_fallbacks", r.exact_fallbacks},
               {"largest_exact_fallback", r.largest_exact_fallback},
               {"bridge_merges", r.bridge_merges}};
        if (r.ok()) {
          j["coloring"] = r.coloring->colors();
          j["colors_used"] = r.coloring->distinct_colors();
        } else {
          j["trace"] = r.trace;
        }
        print_json(j);
      } else if (r.ok()) {
        if (reduce_output.empty()) std::cout << coloring_text(*r.coloring);
      } else {
        std::cout << "failed\n";
        for (const auto& line : r.trace) std::cout << "  " << line << '\n';
      }
      return r.ok() ? kExitOk : kExitInvalid;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
