#pragma once

// Straight-line drawings realizing the special face configurations.

#include "test_support.hpp"

namespace oddcolor::testing {

struct Fixture {
  OnePlanarDrawing drawing;
  std::map<std::string, Vertex> at;
};

inline Fixture make_fixture(std::vector<Point> pts, std::vector<std::pair<Vertex, Vertex>> edges,
                            std::map<std::string, Vertex> names) {
  return {geometric_drawing(pts, edges), std::move(names)};
}

/// 4-face (u, *, v, *): the two edges at the 2-vertex v cross ux and uy.
/// u gets two extra leaves so that d(u) = 4.
inline Fixture poor_four() {
  enum : Vertex { u, x, y, v, p, q };
  std::vector<Point> pts = on_grid({{0, 0}, {-4, 6}, {4, 6}, {0, 3}, {-4, 2}, {4, 2}});
  std::vector<std::pair<Vertex, Vertex>> edges = {{u, x}, {u, y}, {v, p}, {v, q}};
  add_leaves(pts, edges, u, 2, {0, -3}, 50);
  return make_fixture(pts, edges, {{"u", u}, {"x", x}, {"y", y}, {"v", v}, {"p", p}, {"q", q}});
}

/// 6-face (u, *, v, *, w, *) with special 2-vertices v and w, each capped
/// by a 4-face through the far endpoints x and y.
inline Fixture poor_six() {
  enum : Vertex { u, v, w, x0, x, y };
  std::vector<Point> pts = on_grid({{0, -4}, {-4, 3}, {4, 3}, {0, -9}, {-9, 6}, {9, 6}});
  std::vector<std::pair<Vertex, Vertex>> edges = {{u, x}, {u, y}, {v, x0}, {w, x0}, {v, y}, {w, x}};
  add_leaves(pts, edges, u, 2, {0, -6}, 30);
  return make_fixture(pts, edges, {{"u", u}, {"v", v}, {"w", w}, {"x", x}, {"y", y}, {"x0", x0}});
}

/// 5-face (a, b, *, t, *): t is a 2-vertex whose edges cross bx and ax,
/// with a 4-face (t, *, x, *) above t. d(a) = 2 + extra_a, d(b) = 7.
inline Fixture semi_poor_five(std::size_t extra_a) {
  enum : Vertex { a, b, t, x, p, q };
  std::vector<Point> pts = on_grid({{-4, 0}, {4, 0}, {0, 6}, {0, 10}, {6, 5}, {-6, 5}});
  std::vector<std::pair<Vertex, Vertex>> edges = {{a, b}, {a, x}, {b, x}, {t, p}, {t, q}};
  add_leaves(pts, edges, a, extra_a, {-5, -3}, 15);
  add_leaves(pts, edges, b, 5, {5, -3}, 15);
  return make_fixture(pts, edges, {{"a", a}, {"b", b}, {"t", t}, {"x", x}});
}

/// 8-face (h, *, t1, *, t2, *, t3, *) with d(h) = 8 and special 2-vertices
/// t1, t2, t3, each on a 4-face through the far endpoint of its neighbors.
inline Fixture semi_poor_eight() {
  enum : Vertex { h, t1, t2, t3, x0, x1, x2, x3 };
  std::vector<Point> pts = on_grid({{0, -4}, {-4, 0}, {0, 4}, {4, 0}, {0, -8}, {-8, 0}, {0, 8}, {8, 0}});
  std::vector<std::pair<Vertex, Vertex>> edges = {{h, x1},  {t1, x0}, {t1, x2}, {t2, x1},
                                                  {t2, x3}, {t3, x2}, {t3, x0}, {h, x3}};
  add_leaves(pts, edges, h, 6, {0, -5}, 15);
  return make_fixture(pts, edges, {{"h", h}, {"t1", t1}, {"t2", t2}, {"t3", t3}});
}

/// Two special 7-vertices v and v7 sharing the (7,7,10+)-face (v, v7, v1).
/// The drawing is symmetric under y -> -y, which swaps v with v7.
inline Fixture poor_three() {
  enum : Vertex { v, v7, v1, v3, v5, a2, a4, a6, v3m, a2m, a4m };
  std::vector<Point> pts = on_grid({{0, -3}, {0, 3}, {10, 0}, {3, -9}, {-4, -3}, {8, -7},
                            {-3, -9}, {-4, 3}, {3, 9},  {8, 7},  {-3, 9}});
  std::vector<std::pair<Vertex, Vertex>> edges = {
      {v, v1},   {v, a2},   {v, v3},   {v, a4},   {v, v5},    {v, a6},  {v, v7},
      {v7, v1},  {v7, a2m}, {v7, v3m}, {v7, a4m}, {v7, v5},   {v1, v3}, {v3, v5},
      {v1, v3m}, {v3m, a6}, {v7, a6}};
  add_leaves(pts, edges, v1, 6, {13, 0}, 20);
  add_leaves(pts, edges, v3, 4, {4, -12}, 20);
  add_leaves(pts, edges, v3m, 4, {4, 12}, 20);
  add_leaves(pts, edges, v5, 4, {-7, -4}, 15);
  add_leaves(pts, edges, a6, 4, {-7, 4}, 15);
  return make_fixture(pts, edges, {{"v", v}, {"v7", v7}, {"v1", v1}, {"v3", v3}, {"v5", v5}, {"a6", a6}});
}

/// Triangle (a, b, c) with d(a) = d(b) = 7 and d(c) = 8, padded by leaves.
inline Fixture seven_seven_eight() {
  enum : Vertex { a, b, c };
  std::vector<Point> pts = on_grid({{0, 0}, {10, 0}, {5, 8}});
  std::vector<std::pair<Vertex, Vertex>> edges = {{a, b}, {b, c}, {c, a}};
  add_leaves(pts, edges, a, 5, {-4, -2}, 30);
  add_leaves(pts, edges, b, 5, {14, -2}, 30);
  add_leaves(pts, edges, c, 6, {5, 12}, 30);
  return make_fixture(pts, edges, {{"a", a}, {"b", b}, {"c", c}});
}

}  // namespace oddcolor::testing
