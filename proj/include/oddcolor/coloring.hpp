#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/embedding.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

using Color = int;
inline constexpr Color kUncolored = 0;

/// Partial assignment of colors 1..palette to the vertices of a graph.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::size_t vertex_count, int palette);
  /// Throws std::invalid_argument if a color lies outside 0..palette.
  Coloring(std::vector<Color> colors, int palette);

  int palette() const { return palette_; }
  std::size_t size() const { return colors_.size(); }

  Color operator[](Vertex v) const { return colors_.at(v); }
  bool is_colored(Vertex v) const { return colors_.at(v) != kUncolored; }
  void assign(Vertex v, Color c);
  void clear(Vertex v) { colors_.at(v) = kUncolored; }

  std::vector<Vertex> uncolored() const;
  bool complete() const;
  /// Number of distinct colors actually used.
  std::size_t distinct_colors() const;
  const std::vector<Color>& colors() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  int palette_ = 0;
};

struct OddReport {
  std::vector<Edge> proper_violations;
  std::vector<Vertex> odd_violations;
  std::vector<Vertex> uncolored;
  bool valid = false;
};

/// Colors of odd multiplicity on N(v), ascending. Throws std::invalid_argument
/// if a neighbor is uncolored.
std::vector<Color> odd_color_set(const Graph& g, const Coloring& c, Vertex v);

/// Smallest odd color of v, if any.
std::optional<Color> odd_color(const Graph& g, const Coloring& c, Vertex v);

/// Full check of properness and the odd condition. Isolated vertices are
/// exempt from the odd condition. Vertices whose neighborhood is not fully
/// colored are only reported as uncolored.
OddReport verify_odd_coloring(const Graph& g, const Coloring& c);

struct SearchLimits {
  /// Zero means unbounded.
  std::size_t max_nodes = 0;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchStats {
  std::size_t nodes = 0;
  bool exhausted_budget = false;
};

/**
 * Complete backtracking search for an odd coloring with at most `palette`
 * colors. Vertices already colored in `fixed` keep their colors. Returns
 * nullopt when none exists (or the budget ran out, see `stats`).
 */
std::optional<Coloring> find_odd_coloring(const Graph& g, int palette,
                                          const Coloring* fixed = nullptr,
                                          const SearchLimits& limits = {},
                                          SearchStats* stats = nullptr);

struct ChromaticResult {
  /// Least feasible palette size, or nullopt when it exceeds kmax.
  std::optional<int> value;
  std::optional<Coloring> witness;
  bool exceeds() const { return !value.has_value(); }
};

ChromaticResult exact_odd_chromatic_number(const Graph& g, int kmax);

/// Proper (not necessarily odd) chromatic number by backtracking.
int chromatic_number(const Graph& g);

/// Ceiling on colors unavailable to v: one per easy neighbor, two otherwise.
/// Throws std::invalid_argument if a neighbor of v is uncolored or an
/// entry of `easy_neighbors` is not a neighbor.
std::size_t forbidden_color_bound(const Graph& g, const Coloring& c, Vertex v,
                                  const std::vector<Vertex>& easy_neighbors);

/// Easiness evaluated in g: degree at most 6, odd degree, or a neighbor of
/// degree at most 6.
bool is_easy(const Graph& g, Vertex v);

struct ExtensionResult {
  std::optional<Coloring> coloring;
  /// Vertices whose colors changed besides the extended one.
  std::vector<Vertex> recolored;
  /// Short tag of the step that succeeded or the reason for failure.
  std::string detail;
  bool ok() const { return coloring.has_value(); }
};

struct ExtensionOptions {
  /// Vertex tried first as the repair partner (e.g. the 8-vertex of a
  /// (7,7,8)-face).
  std::optional<Vertex> preferred_partner;
  /// Also try repairing two partners at once.
  bool allow_pair_repair = false;
};

/**
 * Colors v given a valid odd coloring of g - v (v uncolored, everything
 * within distance two of v colored). Tries a direct color first, then
 * recolors one partner together with v: a 6^- neighbor, a 6^- neighbor of
 * an easy neighbor, then any neighbor.
 */
ExtensionResult extend_at_vertex(const Graph& g, const Coloring& c, Vertex v, int palette,
                                 const ExtensionOptions& options = {});

struct ReductionOptions {
  int palette = 13;
  /// Exact search is allowed on a remaining subproblem of at most this size.
  std::size_t exact_fallback_limit = 20;
};

struct ReductionResult {
  std::optional<Coloring> coloring;
  std::vector<std::string> trace;
  /// Largest subproblem handed to exact search; zero if never used.
  std::size_t largest_exact_fallback = 0;
  std::size_t exact_fallbacks = 0;
  std::size_t bridge_merges = 0;
  bool ok() const { return coloring.has_value(); }
};

/**
 * Colors a 1-planar drawing by peeling reducible vertices, recursing and
 * extending back. The result is always checked with verify_odd_coloring;
 * on failure `coloring` is empty and `trace` explains the last steps.
 */
ReductionResult color_by_reduction(const OnePlanarDrawing& d, const ReductionOptions& options = {});

}  // namespace oddcolor
