// Exact odd-coloring search.
//
// Vertices are colored in descending-degree order. Each vertex tracks the
// parity of every color on its neighborhood, the number of odd colors and
// the number of still-uncolored neighbors; a branch dies as soon as some
// vertex has a fully colored neighborhood without an odd color.

#include <algorithm>
#include <numeric>

#include "oddcolor/coloring.hpp"

namespace oddcolor {
namespace {

class OddSearch {
 public:
  OddSearch(const Graph& g, int palette, const Coloring* fixed, const SearchLimits& limits)
      : g_(g),
        palette_(palette),
        limits_(limits),
        color_(g.vertex_count(), kUncolored),
        parity_(g.vertex_count() * static_cast<std::size_t>(palette + 1), 0),
        odd_(g.vertex_count(), 0),
        open_(g.vertex_count(), 0),
        start_(std::chrono::steady_clock::now()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) open_[v] = static_cast<int>(g.degree(v));
    bool any_fixed = false;
    if (fixed) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!fixed->is_colored(v)) continue;
        any_fixed = true;
        if ((*fixed)[v] > palette_ || !place(v, (*fixed)[v])) infeasible_ = true;
      }
    }
    symmetric_ = !any_fixed;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (color_[v] == kUncolored) order_.push_back(v);
      // Precolored neighborhood that is already complete and has no odd color.
      if (open_[v] == 0 && odd_[v] == 0 && g.degree(v) > 0) infeasible_ = true;
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::optional<Coloring> run(SearchStats* stats) {
    std::optional<Coloring> result;
    if (!infeasible_ && (palette_ >= 1 || order_.empty()) && descend(0, max_used())) {
      result = Coloring(color_, palette_);
    }
    if (stats) {
      stats->nodes = nodes_;
      stats->exhausted_budget = out_of_budget_;
    }
    return result;
  }

 private:
  int& parity(Vertex v, Color c) { return parity_[v * static_cast<std::size_t>(palette_ + 1) + c]; }

  int max_used() const {
    int m = 0;
    for (Color c : color_) m = std::max(m, c);
    return m;
  }

  // Assigns c to v; returns false (with the assignment undone) on conflict.
  bool place(Vertex v, Color c) {
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] == c) return false;
    }
    color_[v] = c;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      int& p = parity(w, c);
      p ^= 1;
      odd_[w] += p ? 1 : -1;
      --open_[w];
      if (open_[w] == 0 && odd_[w] == 0) ok = false;
    }
    if (!ok) unplace(v);
    return ok;
  }

  void unplace(Vertex v) {
    const Color c = color_[v];
    for (Vertex w : g_.neighbors(v)) {
      int& p = parity(w, c);
      p ^= 1;
      odd_[w] += p ? 1 : -1;
      ++open_[w];
    }
    color_[v] = kUncolored;
  }

  bool budget_left() {
    if (limits_.max_nodes && nodes_ >= limits_.max_nodes) out_of_budget_ = true;
    if (limits_.time_budget && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() - start_ > *limits_.time_budget) {
      out_of_budget_ = true;
    }
    return !out_of_budget_;
  }

  bool descend(std::size_t depth, int used) {
    if (depth == order_.size()) return true;
    ++nodes_;
    if (!budget_left()) return false;
    const Vertex v = order_[depth];
    // Colors above used+1 are interchangeable when nothing was precolored.
    const int limit = symmetric_ ? std::min(palette_, used + 1) : palette_;
    for (Color c = 1; c <= limit; ++c) {
      if (!place(v, c)) continue;
      if (descend(depth + 1, std::max(used, c))) return true;
      unplace(v);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  int palette_;
  SearchLimits limits_;
  std::vector<Color> color_;
  std::vector<int> parity_;
  std::vector<int> odd_;
  std::vector<int> open_;
  std::vector<Vertex> order_;
  bool symmetric_ = true;
  bool infeasible_ = false;
  bool out_of_budget_ = false;
  std::size_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

bool proper_search(const Graph& g, const std::vector<Vertex>& order, std::size_t depth, int k, int used,
                   std::vector<Color>& color) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  for (Color c = 1; c <= std::min(k, used + 1); ++c) {
    auto nbrs = g.neighbors(v);
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return color[w] == c; })) continue;
    color[v] = c;
    if (proper_search(g, order, depth + 1, k, std::max(used, c), color)) return true;
    color[v] = kUncolored;
  }
  return false;
}

}  // namespace

std::optional<Coloring> find_odd_coloring(const Graph& g, int palette, const Coloring* fixed,
                                          const SearchLimits& limits, SearchStats* stats) {
  if (fixed && fixed->size() != g.vertex_count()) {
    throw std::invalid_argument("fixed coloring does not match the graph");
  }
  OddSearch search(g, palette, fixed, limits);
  return search.run(stats);
}

ChromaticResult exact_odd_chromatic_number(const Graph& g, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  ChromaticResult result;
  if (g.vertex_count() == 0) {
    result.value = 0;
    result.witness = Coloring(0, 0);
    return result;
  }
  for (int k = 1; k <= kmax; ++k) {
    if (auto witness = find_odd_coloring(g, k)) {
      if (!verify_odd_coloring(g, *witness).valid) {
        throw std::logic_error("search produced an invalid odd coloring");
      }
      result.value = k;
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (int k = 1;; ++k) {
    std::vector<Color> color(g.vertex_count(), kUncolored);
    if (proper_search(g, order, 0, k, 0, color)) return k;
  }
}

}  // namespace oddcolor
