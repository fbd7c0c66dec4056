#pragma once

// Cube of resolutions shared by the Khovanov and Lee engines.  States are
// bitmasks (bit c set = B-smoothing at crossing c); generators are circle
// labelings (bit set = x, degree -1).  Internal to the homology engines.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "trisym/pd.hpp"

namespace trisym::kh {

struct StateInfo {
  int circles = 0;                  // edge circles + free loops
  std::vector<int8_t> circle_of_edge;  // indexed by edge label
};

struct Cube {
  const pd::PlanarDiagram* dia = nullptr;
  int nc = 0, np = 0, nm = 0;
  std::vector<StateInfo> states;  // indexed by state mask (size 2^nc)

  explicit Cube(const pd::PlanarDiagram& d);

  int hom_degree(std::uint32_t v) const { return popcount(v) - nm; }
  int qdeg(std::uint32_t v, std::uint32_t bits) const {
    const StateInfo& s = states[v];
    return (s.circles - 2 * popcount(bits)) + popcount(v) + np - 2 * nm;
  }
  static int popcount(std::uint32_t x) { return __builtin_popcount(x); }
};

struct Gen {
  std::uint32_t state = 0;
  std::uint32_t bits = 0;
};

// One term of the image of a generator under the differential.
struct DiffTerm {
  std::uint32_t state;
  std::uint32_t bits;
  int coeff;  // +-1
};

// Image of (v, bits) under the edge maps out of state v.  `lee` adds the
// deformation terms (x (x) x -> 1 on merges, x -> 1 (x) 1 on splits).
std::vector<DiffTerm> differential(const Cube& cube, std::uint32_t v,
                                   std::uint32_t bits, bool lee);

}  // namespace trisym::kh
