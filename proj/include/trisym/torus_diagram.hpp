#pragma once

// Torus diagrams: family-tagged polyline arcs with integer lift offsets on
// the unit torus, beta-positivity and exact symplectic area.
//
// The handlebody foliation forms on the square are
//   family A (sector 1): dy,  family B (sector 2): -dx,  family C: dx - dy.

#include <vector>

#include "trisym/bigint.hpp"
#include "trisym/verdict.hpp"

namespace trisym::tri {

enum class Family { A = 1, B = 2, C = 3 };

struct Point2 {
  Rat64 x, y;
};

struct BridgePoint {
  Point2 pos;  // in [0,1) x [0,1)
  int sign = +1;
};

struct Arc {
  Family family = Family::A;
  int tail = 0, head = 0;          // bridge point indices
  std::vector<Point2> vertices;    // first = tail position, last = head position
  std::vector<std::pair<int, int>> lift;  // per segment, added to the segment end
};

struct TorusDiagram {
  std::vector<BridgePoint> points;
  std::vector<Arc> arcs;

  void validate() const;  // endpoint/degree/disjointness invariants
};

// Lifted displacement of segment i of the arc.
Point2 segment_delta(const Arc& a, std::size_t i);

// Strict per-segment positivity against the family form of sector lambda.
bool beta_positive(const Arc& a, int lambda);

// Sum over arcs of the exact line integral of the family form.
Rat64 symplectic_area(const TorusDiagram& d);

// The standard one-bridge diagram of a degree-1 surface: two bridge points,
// one arc per family, total area 1.
TorusDiagram line_diagram();

}  // namespace trisym::tri
