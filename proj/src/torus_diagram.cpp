#include "trisym/torus_diagram.hpp"

#include <array>
#include <string>

#include "trisym/errors.hpp"

namespace trisym::tri {

Point2 segment_delta(const Arc& a, std::size_t i) {
  if (i + 1 >= a.vertices.size()) throw InputError("segment index out of range");
  const auto& p = a.vertices[i];
  const auto& q = a.vertices[i + 1];
  std::pair<int, int> off{0, 0};
  if (i < a.lift.size()) off = a.lift[i];
  return {q.x + off.first - p.x, q.y + off.second - p.y};
}

bool beta_positive(const Arc& a, int lambda) {
  if (a.vertices.size() < 2) throw InputError("arc needs at least one segment");
  for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i) {
    Point2 d = segment_delta(a, i);
    if (d.x == Rat64(0) && d.y == Rat64(0)) throw InputError("zero-length segment");
    Rat64 v;
    switch (lambda) {
      case 1: v = d.y; break;
      case 2: v = -d.x; break;
      case 3: v = d.x - d.y; break;
      default: throw InputError("sector must be 1, 2 or 3");
    }
    if (!(v > Rat64(0))) return false;
  }
  return true;
}

Rat64 symplectic_area(const TorusDiagram& d) {
  Rat64 total(0);
  for (const auto& a : d.arcs) {
    for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i) {
      Point2 dd = segment_delta(a, i);
      switch (a.family) {
        case Family::A: total += dd.y; break;
        case Family::B: total += -dd.x; break;
        case Family::C: total += dd.x - dd.y; break;
      }
    }
  }
  return total;
}

namespace {

// Exact segment-intersection test on lifted representatives; arcs within a
// family must be pairwise disjoint.  Segments are compared in the plane
// after shifting each by every integer offset in a small window (the
// diagrams used here stay within one fundamental-domain neighborhood).
bool segments_cross(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  auto cross = [](Rat64 ax, Rat64 ay, Rat64 bx, Rat64 by) { return ax * by - ay * bx; };
  Rat64 d1 = cross(a1.x - a0.x, a1.y - a0.y, b0.x - a0.x, b0.y - a0.y);
  Rat64 d2 = cross(a1.x - a0.x, a1.y - a0.y, b1.x - a0.x, b1.y - a0.y);
  Rat64 d3 = cross(b1.x - b0.x, b1.y - b0.y, a0.x - b0.x, a0.y - b0.y);
  Rat64 d4 = cross(b1.x - b0.x, b1.y - b0.y, a1.x - b0.x, a1.y - b0.y);
  auto sgn = [](const Rat64& v) { return v > Rat64(0) ? 1 : (v < Rat64(0) ? -1 : 0); };
  return sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0;
}

}  // namespace

void TorusDiagram::validate() const {
  int n = (int)points.size();
  for (const auto& p : points) {
    if (p.sign != 1 && p.sign != -1) throw InputError("bridge point sign must be +-1");
    if (p.pos.x < Rat64(0) || p.pos.x >= Rat64(1) || p.pos.y < Rat64(0) || p.pos.y >= Rat64(1))
      throw InputError("bridge point outside the fundamental domain");
  }
  // Each bridge point meets exactly one arc of each family.
  std::vector<std::array<int, 4>> deg(n, {0, 0, 0, 0});
  for (const auto& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw InputError("arc endpoint is not a declared bridge point");
    if (a.vertices.size() < 2) throw InputError("arc needs at least one segment");
    if (!a.lift.empty() && a.lift.size() != a.vertices.size() - 1)
      throw InputError("lift offsets must match segment count");
    deg[a.tail][(int)a.family]++;
    deg[a.head][(int)a.family]++;
  }
  for (int i = 0; i < n; ++i)
    for (int f = 1; f <= 3; ++f)
      if (deg[i][f] != 1)
        throw InputError("bridge point " + std::to_string(i) +
                         " does not meet exactly one arc of family " + std::to_string(f));
  // Pairwise disjointness within each family (interior crossings only).
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i].family != arcs[j].family) continue;
      for (std::size_t si = 0; si + 1 < arcs[i].vertices.size(); ++si) {
        for (std::size_t sj = 0; sj + 1 < arcs[j].vertices.size(); ++sj) {
          for (int ox = -1; ox <= 1; ++ox) {
            for (int oy = -1; oy <= 1; ++oy) {
              Point2 b0 = arcs[j].vertices[sj];
              Point2 b1 = arcs[j].vertices[sj + 1];
              b0.x += ox; b0.y += oy;
              b1.x += ox; b1.y += oy;
              if (segments_cross(arcs[i].vertices[si], arcs[i].vertices[si + 1], b0, b1))
                throw InputError("arcs of one family intersect");
            }
          }
        }
      }
    }
  }
}

TorusDiagram line_diagram() {
  TorusDiagram d;
  d.points.push_back({{Rat64(1, 4), Rat64(1, 4)}, +1});
  d.points.push_back({{Rat64(1, 2), Rat64(3, 4)}, -1});
  Arc a{Family::A, 0, 1, {{Rat64(1, 4), Rat64(1, 4)}, {Rat64(1, 2), Rat64(3, 4)}}, {{0, 0}}};
  Arc b{Family::B, 1, 0, {{Rat64(1, 2), Rat64(3, 4)}, {Rat64(1, 4), Rat64(1, 4)}}, {{0, 0}}};
  Arc c{Family::C, 1, 0, {{Rat64(1, 2), Rat64(3, 4)}, {Rat64(1, 4), Rat64(1, 4)}}, {{0, 0}}};
  d.arcs = {a, b, c};
  d.validate();
  return d;
}

}  // namespace trisym::tri
