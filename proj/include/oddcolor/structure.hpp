#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/embedding.hpp"
#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Per-vertex tags over the planarization. Index = G* vertex id; crossing
/// vertices carry is_star and nothing else.
struct VertexTags {
  std::vector<bool> is_star;
  std::vector<bool> is_easy;
  std::vector<bool> is_special_2;
  std::vector<bool> is_special_7;
  /// Easy neighbors in the base graph.
  std::vector<std::size_t> easy_neighbors;
  /// Crossing-vertex neighbors in G*.
  std::vector<std::size_t> star_neighbors;

  std::size_t size() const { return is_star.size(); }
};

enum class FaceClass { Poor3, Poor4, Poor6, SemiPoor, Ordinary };

std::string to_string(FaceClass c);
bool is_poor(FaceClass c);

struct FaceTag {
  FaceClass kind = FaceClass::Ordinary;
  /// Poor4/Poor6: the vertex u whose edges ux, uy cross the 2-vertex edges.
  std::optional<Vertex> u;
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  /// Poor3: the two special 7-vertices; Poor6: the two special 2-vertices;
  /// Poor4: the 2-vertex.
  std::vector<Vertex> special;
  /// Incidences of 2-vertices and of special 2-vertices on the walk.
  std::size_t n2 = 0;
  std::size_t n2_special = 0;
};

using FaceTags = std::vector<FaceTag>;

VertexTags classify_vertices(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg);

FaceTags classify_faces(const AssociatedPlaneGraph& apg, const VertexTags& vt, const Graph& g);

/// Something a lemma conclusion fails on.
struct Witness {
  enum class Kind { Vertex, Edge, Face };
  Kind kind;
  /// Vertex id, face index, or the first endpoint of an edge.
  std::size_t id;
  /// Second endpoint for edges.
  std::size_t other = 0;

  static Witness vertex(Vertex v) { return {Kind::Vertex, v, 0}; }
  static Witness edge(const Edge& e) { return {Kind::Edge, e.u, e.v}; }
  static Witness face(std::size_t f) { return {Kind::Face, f, 0}; }

  std::string label() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LemmaReport {
  /// violations[i] holds the witnesses against the conclusion of lemma i+1.
  std::array<std::vector<Witness>, 8> violations;
  bool satisfied_all() const;
  std::size_t total() const;
};

/// Thresholds for a palette of c colors: odd-degree floor (c+1)/2 and
/// low-degree ceiling (c-1)/2.
struct ColorThresholds {
  std::size_t high;
  std::size_t low;
  explicit ColorThresholds(int c) : high(static_cast<std::size_t>((c + 1) / 2)), low(static_cast<std::size_t>((c - 1) / 2)) {}
};

/**
 * Checks the conclusions of the eight structural lemmas on a drawing.
 * Lemmas 1, 2, 3, 5 and 6 use thresholds derived from `colors`; lemma 4 is
 * evaluated in its 13-color form; lemmas 7 and 8 do not depend on it.
 * Throws std::invalid_argument for colors < 7.
 */
LemmaReport detect_lemma_violations(const OnePlanarDrawing& d, const AssociatedPlaneGraph& apg, int colors = 13);

}  // namespace oddcolor
