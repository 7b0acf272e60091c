#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Two base edges that cross each other once.
struct CrossingPair {
  Edge first;
  Edge second;

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

/**
 * A 1-planar drawing given combinatorially.
 *
 * Vertex ids of the planarization are the base ids 0..n-1 followed by one
 * crossing vertex per entry of `crossings` (id n+i for crossings[i]).
 * `rotation[x]` is the cyclic neighbor order of planarization vertex x.
 * For an original vertex an entry may name either the crossing vertex or
 * the far endpoint of the crossed edge; both are normalized on build.
 * An empty `rotation` is allowed only for crossing-free drawings, in which
 * case a planar embedding is computed.
 */
struct OnePlanarDrawing {
  Graph base;
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<Vertex>> rotation;

  std::size_t original_count() const { return base.vertex_count(); }
  std::size_t planarized_count() const { return base.vertex_count() + crossings.size(); }
};

/// One corner of a face: the walk leaves `vertex` along the dart to `next`.
struct FaceIncidence {
  Vertex vertex;
  Vertex next;

  friend bool operator==(const FaceIncidence&, const FaceIncidence&) = default;
};

struct Face {
  std::vector<FaceIncidence> walk;

  std::size_t degree() const { return walk.size(); }
};

/// Entry of a face profile: G* degree plus whether the corner is a crossing.
struct ProfileEntry {
  std::size_t degree;
  bool is_star;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/**
 * Planarization G* of a 1-planar drawing with its traced faces.
 *
 * Faces are boundary walks. The face left of dart (v -> rotation[v][i]) is
 * the corner of v between rotation[v][i-1] and rotation[v][i]. Each
 * connected component is traced on its own; an isolated vertex yields one
 * face with an empty walk so that V - E + F = 2 holds per component.
 */
class AssociatedPlaneGraph {
 public:
  const Graph& gstar() const { return gstar_; }
  std::size_t original_count() const { return original_count_; }
  std::size_t star_count() const { return gstar_.vertex_count() - original_count_; }
  bool is_star(Vertex x) const { return x >= original_count_; }

  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t f) const { return faces_.at(f); }

  /// The two base edges that meet at crossing vertex z.
  const CrossingPair& crossing_at(Vertex z) const;

  /// Base edge that a G* edge lies on (identity for uncrossed edges).
  Edge origin(Vertex a, Vertex b) const;

  /// Face index left of dart (v -> rotation[v][pos]).
  std::size_t face_of_corner(Vertex v, std::size_t pos) const;
  /// Face index left of dart (tail -> head).
  std::size_t face_of_dart(Vertex tail, Vertex head) const;
  std::size_t rotation_position(Vertex v, Vertex neighbor) const;

  /// Faces incident to v, one per corner, in rotation order.
  std::vector<std::size_t> faces_around(Vertex v) const;

  std::size_t component_count() const { return component_count_; }
  std::size_t component_of_vertex(Vertex x) const { return vertex_component_.at(x); }
  std::size_t component_of_face(std::size_t f) const { return face_component_.at(f); }

  /// V - E + F for one component.
  long euler_characteristic(std::size_t component) const;

  /// Base edge set recovered by contracting every crossing vertex.
  std::vector<Edge> contracted_edges() const;

  friend AssociatedPlaneGraph build_associated_plane_graph(const OnePlanarDrawing& d);

 private:
  Graph gstar_;
  std::size_t original_count_ = 0;
  std::vector<CrossingPair> crossings_;
  std::vector<std::vector<Vertex>> rotation_;
  // rotation_index_[v] holds (neighbor, position) sorted by neighbor.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> rotation_index_;
  std::vector<std::vector<std::size_t>> corner_face_;
  std::vector<Face> faces_;
  std::vector<std::size_t> vertex_component_;
  std::vector<std::size_t> face_component_;
  std::size_t component_count_ = 0;
};

/// Checks crossing pairs and, when present, the rotation system.
/// Throws InputError describing the first problem found.
void validate_drawing(const OnePlanarDrawing& d);

/// Builds G* and traces its faces. Throws InputError for an invalid drawing,
/// including a rotation system that is not planar.
AssociatedPlaneGraph build_associated_plane_graph(const OnePlanarDrawing& d);

/// Traces the faces of a rotation system. Throws InputError if a rotation
/// list is not a permutation of the neighbors.
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

/// Cyclic (degree, is_star) sequence along a face walk.
std::vector<ProfileEntry> face_profile(const Face& f, const AssociatedPlaneGraph& apg);

/// Planar rotation system of a graph, or InputError if it is not planar.
std::vector<std::vector<Vertex>> planar_rotation(const Graph& g);

/**
 * Rotation system for a drawing whose planarization has a unique planar
 * embedding up to mirroring (e.g. a triangulated G*). The computed order
 * around each crossing vertex must alternate between the two edges,
 * otherwise InputError is thrown.
 */
OnePlanarDrawing embed_planarization(Graph base, std::vector<CrossingPair> crossings);

/// The drawing with every edge incident to a vertex outside `keep` removed.
/// Vertex ids are preserved; crossings whose edges both survive are kept in
/// order and the rotation is updated accordingly.
OnePlanarDrawing restrict_drawing(const OnePlanarDrawing& d, const std::vector<bool>& keep);

/// Simple graph G* (without faces) for a drawing.
Graph planarization(const OnePlanarDrawing& d);

}  // namespace oddcolor
