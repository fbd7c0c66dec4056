#pragma once

// Planar diagrams as PD crossing lists.  Each crossing stores its four
// edge labels counterclockwise starting from the incoming under-edge,
// plus an explicit sign.  With that start convention the under-strand
// runs a -> c; the over-strand runs d -> b at a positive crossing and
// b -> d at a negative one.

#include <array>
#include <cstdint>
#include <vector>

namespace trisym::pd {

struct Crossing {
  std::array<int, 4> e;  // edge labels, counterclockwise from incoming under
  int sign = +1;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // crossingless closed components

  int n_plus() const;
  int n_minus() const;
  int edge_count() const;
  int components() const;  // free loops included

  // Throws InputError when an edge label does not occur exactly twice or
  // the orientation tracing is inconsistent.
  void validate() const;

  PlanarDiagram mirror() const;

  static PlanarDiagram unknot() { return PlanarDiagram{{}, 1}; }
  static PlanarDiagram unlink(int c) { return PlanarDiagram{{}, c}; }
};

// Circles of the complete smoothing selected by `state` (bit c set means the
// B-smoothing at crossing c; A pairs {e0,e1},{e2,e3}, B pairs {e0,e3},{e1,e2}).
int smoothing_circles(const PlanarDiagram& d, std::uint64_t state,
                      std::vector<int>* circle_of_edge = nullptr);

}  // namespace trisym::pd
