#include "oddcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcolor {

Coloring::Coloring(std::size_t vertex_count, int palette)
    : colors_(vertex_count, kUncolored), palette_(palette) {
  if (palette < 0) throw std::invalid_argument("negative palette");
}

Coloring::Coloring(std::vector<Color> colors, int palette) : colors_(std::move(colors)), palette_(palette) {
  if (palette < 0) throw std::invalid_argument("negative palette");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 0 || colors_[v] > palette_) {
      throw std::invalid_argument("color " + std::to_string(colors_[v]) + " of vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(palette_));
    }
  }
}

void Coloring::assign(Vertex v, Color c) {
  if (c < 1 || c > palette_) {
    throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." + std::to_string(palette_));
  }
  colors_.at(v) = c;
}

std::vector<Vertex> Coloring::uncolored() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] == kUncolored) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool Coloring::complete() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

std::size_t Coloring::distinct_colors() const {
  std::vector<Color> used;
  for (Color c : colors_) {
    if (c != kUncolored) used.push_back(c);
  }
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

std::vector<Color> odd_color_set(const Graph& g, const Coloring& c, Vertex v) {
  std::vector<Color> seen;
  for (Vertex w : g.neighbors(v)) {
    if (!c.is_colored(w)) {
      throw std::invalid_argument("neighbor " + std::to_string(w) + " of vertex " + std::to_string(v) +
                                  " is uncolored");
    }
    seen.push_back(c[w]);
  }
  std::sort(seen.begin(), seen.end());
  std::vector<Color> odd;
  for (std::size_t i = 0; i < seen.size();) {
    std::size_t j = i;
    while (j < seen.size() && seen[j] == seen[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(seen[i]);
    i = j;
  }
  return odd;
}

std::optional<Color> odd_color(const Graph& g, const Coloring& c, Vertex v) {
  auto odd = odd_color_set(g, c, v);
  if (odd.empty()) return std::nullopt;
  return odd.front();
}

OddReport verify_odd_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw std::invalid_argument("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
  }
  OddReport report;
  for (const Edge& e : g.edges()) {
    if (c.is_colored(e.u) && c[e.u] == c[e.v]) report.proper_violations.push_back(e);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!c.is_colored(v)) report.uncolored.push_back(v);
    if (g.is_isolated(v)) continue;
    auto nbrs = g.neighbors(v);
    const bool surrounded = std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return c.is_colored(w); });
    if (surrounded && odd_color_set(g, c, v).empty()) report.odd_violations.push_back(v);
  }
  report.valid = report.proper_violations.empty() && report.odd_violations.empty() && report.uncolored.empty();
  return report;
}

std::size_t forbidden_color_bound(const Graph& g, const Coloring& c, Vertex v,
                                  const std::vector<Vertex>& easy_neighbors) {
  for (Vertex w : g.neighbors(v)) {
    if (!c.is_colored(w)) throw std::invalid_argument("neighbor " + std::to_string(w) + " is uncolored");
  }
  std::vector<Vertex> easy = easy_neighbors;
  std::sort(easy.begin(), easy.end());
  easy.erase(std::unique(easy.begin(), easy.end()), easy.end());
  for (Vertex w : easy) {
    if (!g.has_edge(v, w)) {
      throw std::invalid_argument("vertex " + std::to_string(w) + " is not a neighbor of " + std::to_string(v));
    }
  }
  return easy.size() + 2 * (g.degree(v) - easy.size());
}

bool is_easy(const Graph& g, Vertex v) {
  const std::size_t d = g.degree(v);
  if (d <= 6 || d % 2 == 1) return true;
  auto nbrs = g.neighbors(v);
  return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) <= 6; });
}

}  // namespace oddcolor
