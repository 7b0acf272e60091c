#include <algorithm>
#include <stdexcept>

#include "local_recolor.hpp"
#include "oddcolor/coloring.hpp"

namespace oddcolor {
namespace detail {
namespace {

bool has_odd_color(const Graph& g, const std::vector<Color>& color, Vertex x, std::vector<int>& scratch) {
  auto nbrs = g.neighbors(x);
  if (nbrs.empty()) return true;
  for (Vertex w : nbrs) scratch[color[w]] ^= 1;
  bool odd = false;
  for (Vertex w : nbrs) odd = odd || scratch[color[w]];
  for (Vertex w : nbrs) scratch[color[w]] = 0;
  return odd;
}

}  // namespace

std::optional<Coloring> recolor_locally(const Graph& g, const Coloring& c, std::span<const Vertex> free,
                                        int palette) {
  std::vector<Color> color = c.colors();
  std::vector<bool> is_free(g.vertex_count(), false);
  for (Vertex v : free) {
    if (c.is_colored(v)) throw std::invalid_argument("free vertex " + std::to_string(v) + " is colored");
    is_free[v] = true;
  }
  std::vector<Vertex> affected(free.begin(), free.end());
  for (Vertex v : free) {
    for (Vertex w : g.neighbors(v)) affected.push_back(w);
  }
  std::sort(affected.begin(), affected.end());
  affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
  for (Vertex x : affected) {
    for (Vertex w : g.neighbors(x)) {
      if (!is_free[w] && color[w] == kUncolored) {
        throw std::invalid_argument("vertex " + std::to_string(w) + " near the repair set is uncolored");
      }
    }
  }

  std::vector<int> scratch(static_cast<std::size_t>(std::max(palette, c.palette())) + 1, 0);
  const std::size_t depth_max = free.size();

  // Odometer over the free vertices with properness pruning at each level.
  auto fits = [&](std::size_t level) {
    const Vertex v = free[level];
    for (Vertex w : g.neighbors(v)) {
      if (color[w] == color[v]) return false;
    }
    return true;
  };

  std::vector<Color> digit(depth_max, 0);
  std::size_t level = 0;
  while (true) {
    if (level == depth_max) {
      const bool good = std::all_of(affected.begin(), affected.end(),
                                    [&](Vertex x) { return has_odd_color(g, color, x, scratch); });
      if (good) return Coloring(color, std::max(palette, c.palette()));
      if (depth_max == 0) return std::nullopt;
      --level;
    }
    const Vertex v = free[level];
    bool advanced = false;
    while (++digit[level] <= palette) {
      color[v] = digit[level];
      if (fits(level)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++level;
      continue;
    }
    color[v] = kUncolored;
    digit[level] = 0;
    if (level == 0) return std::nullopt;
    --level;
  }
}

}  // namespace detail

namespace {

void push_unique(std::vector<Vertex>& list, Vertex x) {
  if (std::find(list.begin(), list.end(), x) == list.end()) list.push_back(x);
}

}  // namespace

ExtensionResult extend_at_vertex(const Graph& g, const Coloring& c, Vertex v, int palette,
                                 const ExtensionOptions& options) {
  if (c.size() != g.vertex_count()) throw std::invalid_argument("coloring does not match the graph");
  if (c.is_colored(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is already colored");

  ExtensionResult result;
  const Vertex single[] = {v};
  if (auto direct = detail::recolor_locally(g, c, single, palette)) {
    result.coloring = std::move(direct);
    result.detail = "direct";
    return result;
  }

  // Repair partners in the order the reduction arguments sanction them.
  std::vector<Vertex> partners;
  if (options.preferred_partner && g.has_edge(v, *options.preferred_partner)) {
    partners.push_back(*options.preferred_partner);
  }
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) <= 6) push_unique(partners, w);
  }
  for (Vertex w : g.neighbors(v)) {
    if (!is_easy(g, w)) continue;
    for (Vertex x : g.neighbors(w)) {
      if (x != v && g.degree(x) <= 6) push_unique(partners, x);
    }
  }
  for (Vertex w : g.neighbors(v)) push_unique(partners, w);

  auto try_set = [&](std::span<const Vertex> repair) -> bool {
    Coloring trial = c;
    for (Vertex w : repair) trial.clear(w);
    std::vector<Vertex> free = {v};
    free.insert(free.end(), repair.begin(), repair.end());
    // Partners far from v may touch uncolored vertices; skip them.
    try {
      if (auto found = detail::recolor_locally(g, trial, free, palette)) {
        for (Vertex w : repair) {
          if ((*found)[w] != c[w]) result.recolored.push_back(w);
        }
        result.coloring = std::move(found);
        return true;
      }
    } catch (const std::invalid_argument&) {
    }
    return false;
  };

  for (Vertex w : partners) {
    const Vertex repair[] = {w};
    if (try_set(repair)) {
      result.detail = "repair " + std::to_string(w);
      return result;
    }
  }
  if (options.allow_pair_repair) {
    for (std::size_t i = 0; i < partners.size(); ++i) {
      for (std::size_t j = i + 1; j < partners.size(); ++j) {
        const Vertex repair[] = {partners[i], partners[j]};
        if (try_set(repair)) {
          result.detail = "repair " + std::to_string(partners[i]) + "," + std::to_string(partners[j]);
          return result;
        }
      }
    }
  }
  result.detail = "no extension of vertex " + std::to_string(v) + " with " + std::to_string(partners.size()) +
                  " repair partners";
  return result;
}

}  // namespace oddcolor
