#pragma once

#include <cstdint>
#include <limits>

#include "oddcolor/embedding.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

/// SplitMix64: small, portable and fully specified, so seeded corpora are
/// identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform integer in [0, bound) without modulo bias; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

/// All of these throw std::invalid_argument for n < 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// K_n without the edge {0,1}.
Graph complete_minus_edge(std::size_t n);

/// K_n with every edge subdivided once. Branch vertices are 0..n-1; the
/// subdivision vertex of {i,j} follows in lexicographic order of pairs.
/// Throws std::invalid_argument for n < 2.
Graph subdivided_complete(std::size_t n);

Graph path(std::size_t n);

/// G(n, p) with p = num/den.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// The n-cycle drawn as a polygon.
OnePlanarDrawing plane_cycle(std::size_t n);

/// K6 drawn with three crossings: an octahedron plus its three missing
/// diagonals, each crossing one octahedron edge.
OnePlanarDrawing k6_drawing();

/**
 * Random 1-planar drawing on n >= 4 vertices: a random planar triangulation
 * grown by vertex insertion and shuffled by edge flips, then crossings added
 * inside edge-disjoint pairs of adjacent triangles by drawing the missing
 * diagonal across the shared edge. Deterministic in the seed.
 */
OnePlanarDrawing random_one_planar(std::size_t n, std::uint64_t seed);

/// Removes uncrossed non-bridge edges with probability num/den each.
OnePlanarDrawing thin_drawing(const OnePlanarDrawing& d, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Subdivides base edge {near, far} with a new vertex next to `near`. If the
/// edge is crossed, the crossing moves to the half towards `far`.
OnePlanarDrawing subdivide_edge(const OnePlanarDrawing& d, Vertex near, Vertex far);

/// Subdivides each crossed edge with probability num/den, producing degree-2
/// vertices next to crossings.
OnePlanarDrawing subdivide_crossed_edges(const OnePlanarDrawing& d, std::uint64_t num, std::uint64_t den,
                                         std::uint64_t seed);

}  // namespace oddcolor
