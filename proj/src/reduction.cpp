// Best-effort constructive colorer for 1-planar drawings.
//
// The recursion mirrors the minimal-counterexample structure: split at
// components and bridges, otherwise peel one reducible vertex, color the
// rest and extend. Subproblems share vertex ids with the input; vertices
// outside the current subproblem are isolated and uncolored.

#include <algorithm>
#include <numeric>

#include "local_recolor.hpp"
#include "oddcolor/coloring.hpp"

namespace oddcolor {
namespace {

class Reducer {
 public:
  Reducer(const OnePlanarDrawing& d, const ReductionOptions& options, ReductionResult& out)
      : d_(d), opt_(options), out_(out) {}

  std::optional<Coloring> solve(const std::vector<bool>& active) {
    const Graph h = d_.base.induced(active);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < active.size(); ++v) {
      if (active[v]) members.push_back(v);
    }
    if (members.empty()) return Coloring(active.size(), opt_.palette);

    std::size_t count = 0;
    const auto comp = connected_components(h, &count);
    std::vector<std::size_t> present;
    for (Vertex v : members) present.push_back(comp[v]);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    if (present.size() > 1) return solve_components(active, comp, present);

    if (members.size() == 1) {
      Coloring c(active.size(), opt_.palette);
      c.assign(members.front(), 1);
      return c;
    }

    const auto cut = bridges(h);
    if (!cut.empty()) return solve_bridge(active, h, cut.front());

    return peel(active, h, members);
  }

 private:
  std::optional<Coloring> solve_components(const std::vector<bool>& active, const std::vector<std::size_t>& comp,
                                           const std::vector<std::size_t>& present) {
    Coloring merged(active.size(), opt_.palette);
    for (std::size_t id : present) {
      std::vector<bool> part(active.size(), false);
      for (Vertex v = 0; v < active.size(); ++v) part[v] = active[v] && comp[v] == id;
      auto sub = solve(part);
      if (!sub) return std::nullopt;
      for (Vertex v = 0; v < active.size(); ++v) {
        if (part[v]) merged.assign(v, (*sub)[v]);
      }
    }
    return merged;
  }

  // Colors both sides of a bridge independently, then permutes colors on
  // each side until the bridge endpoints differ and keep odd colors.
  std::optional<Coloring> solve_bridge(const std::vector<bool>& active, const Graph& h, const Edge& bridge) {
    ++out_.bridge_merges;
    std::vector<Edge> rest;
    for (const Edge& e : h.edges()) {
      if (e != bridge) rest.push_back(e);
    }
    const Graph split = Graph::from_edges(rest, h.vertex_count());
    const auto comp = connected_components(split);
    std::vector<bool> side_u(active.size()), side_v(active.size());
    for (Vertex x = 0; x < active.size(); ++x) {
      side_u[x] = active[x] && comp[x] == comp[bridge.u];
      side_v[x] = active[x] && comp[x] == comp[bridge.v];
    }
    out_.trace.push_back("split at bridge " + to_string(bridge));
    auto cu = solve(side_u);
    if (!cu) return std::nullopt;
    auto cv = solve(side_v);
    if (!cv) return std::nullopt;

    const int k = opt_.palette;
    auto swapped = [](Color x, Color a, Color b) { return x == a ? b : (x == b ? a : x); };
    std::vector<Color> combined(active.size(), kUncolored);
    for (Color a = 1; a <= k; ++a) {
      for (Color b = 1; b <= k; ++b) {
        for (Vertex x = 0; x < active.size(); ++x) {
          if (side_u[x]) combined[x] = swapped((*cu)[x], a, (*cu)[bridge.u]);
          if (side_v[x]) combined[x] = swapped((*cv)[x], b, (*cv)[bridge.v]);
        }
        Coloring trial(combined, k);
        if (trial[bridge.u] == trial[bridge.v]) continue;
        if (odd_color(h, trial, bridge.u) && odd_color(h, trial, bridge.v)) return trial;
      }
    }
    out_.trace.push_back("bridge merge failed at " + to_string(bridge));
    return std::nullopt;
  }

  struct Choice {
    Vertex vertex;
    std::string rule;
    std::optional<Vertex> partner;
  };

  Choice choose(const std::vector<bool>& active, const Graph& h, const std::vector<Vertex>& members) {
    auto by_degree = [&](Vertex a, Vertex b) {
      return h.degree(a) != h.degree(b) ? h.degree(a) < h.degree(b) : a < b;
    };
    const Vertex low = *std::min_element(members.begin(), members.end(), by_degree);
    if (h.degree(low) <= 6) return {low, "low-degree", std::nullopt};

    for (Vertex v : members) {
      const std::size_t d = h.degree(v);
      auto nbrs = h.neighbors(v);
      const bool has_low = std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return h.degree(w) <= 6; });
      if (d % 2 == 0 && !has_low) continue;
      const auto easy = static_cast<long>(
          std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return is_easy(h, w); }));
      if (easy > 2 * static_cast<long>(d) - 13) return {v, "easy-neighbors", std::nullopt};
    }

    // A (7,7,8)-face: peel one 7-vertex and let the 8-vertex act as partner.
    const auto apg = build_associated_plane_graph(restrict_drawing(d_, active));
    for (const Face& f : apg.faces()) {
      if (f.degree() != 3) continue;
      std::vector<Vertex> seven;
      std::optional<Vertex> eight;
      bool crossing = false;
      for (const auto& inc : f.walk) {
        crossing = crossing || apg.is_star(inc.vertex);
        if (crossing) break;
        const std::size_t d = h.degree(inc.vertex);
        if (d == 7) seven.push_back(inc.vertex);
        if (d == 8) eight = inc.vertex;
      }
      if (!crossing && seven.size() == 2 && eight) return {seven.front(), "778-face", eight};
    }
    return {low, "min-degree", std::nullopt};
  }

  std::optional<Coloring> peel(const std::vector<bool>& active, const Graph& h, const std::vector<Vertex>& members) {
    const Choice choice = choose(active, h, members);
    out_.trace.push_back("peel " + std::to_string(choice.vertex) + " (" + choice.rule + ")");
    std::vector<bool> rest = active;
    rest[choice.vertex] = false;
    auto sub = solve(rest);
    if (!sub) return std::nullopt;

    ExtensionOptions eo;
    eo.preferred_partner = choice.partner;
    auto ext = extend_at_vertex(h, *sub, choice.vertex, opt_.palette, eo);
    if (ext.ok()) return std::move(ext.coloring);

    if (members.size() <= opt_.exact_fallback_limit) {
      out_.trace.push_back("exact fallback on " + std::to_string(members.size()) + " vertices");
      return exact_on(h, members);
    }
    eo.allow_pair_repair = true;
    ext = extend_at_vertex(h, *sub, choice.vertex, opt_.palette, eo);
    if (ext.ok()) {
      out_.trace.push_back("pair repair at " + std::to_string(choice.vertex) + ": " + ext.detail);
      return std::move(ext.coloring);
    }
    out_.trace.push_back(ext.detail);
    return std::nullopt;
  }

  std::optional<Coloring> exact_on(const Graph& h, const std::vector<Vertex>& members) {
    ++out_.exact_fallbacks;
    out_.largest_exact_fallback = std::max(out_.largest_exact_fallback, members.size());
    std::vector<Vertex> local(h.vertex_count(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) edges.emplace_back(local[e.u], local[e.v]);
    const Graph small = Graph::from_edges(edges, members.size());
    auto found = find_odd_coloring(small, opt_.palette);
    if (!found) {
      out_.trace.push_back("exact fallback found no coloring");
      return std::nullopt;
    }
    Coloring c(h.vertex_count(), opt_.palette);
    for (std::size_t i = 0; i < members.size(); ++i) c.assign(members[i], (*found)[static_cast<Vertex>(i)]);
    return c;
  }

  const OnePlanarDrawing& d_;
  const ReductionOptions& opt_;
  ReductionResult& out_;
};

}  // namespace

ReductionResult color_by_reduction(const OnePlanarDrawing& d, const ReductionOptions& options) {
  if (options.palette < 3) throw std::invalid_argument("reduction colorer needs a palette of at least 3");
  validate_drawing(d);
  ReductionResult result;
  Reducer reducer(d, options, result);
  std::vector<bool> all(d.original_count(), true);
  auto coloring = reducer.solve(all);
  if (!coloring) {
    result.trace.push_back("reduction failed");
    return result;
  }
  const auto report = verify_odd_coloring(d.base, *coloring);
  if (!report.valid || coloring->distinct_colors() > static_cast<std::size_t>(options.palette)) {
    result.trace.push_back("self-check rejected the produced coloring");
    return result;
  }
  result.coloring = std::move(coloring);
  return result;
}

}  // namespace oddcolor
