#pragma once

// Lee homology over Q and the s-invariant, extracted from the quantum
// filtration profile of degree-0 homology.

#include <vector>

#include "trisym/braid.hpp"
#include "trisym/pd.hpp"

namespace trisym::kh {

struct LeeSummary {
  int components = 1;
  long long total_rank = 0;          // filled by lee_summary
  std::vector<int> filtration_h0;    // filtration levels of H^0 classes, descending
  bool s_defined = false;
  int s = 0;                         // defined when components == 1
};

// Degree-0 filtration profile and s; cheap path used for knots.
LeeSummary lee_s_invariant(const pd::PlanarDiagram& d, int budget = 14);

// Full Lee homology rank over all homological degrees (plus the degree-0
// filtration data of lee_s_invariant when the diagram is a knot).
LeeSummary lee_summary(const pd::PlanarDiagram& d, int budget = 14);

// (s - 1) - sl for the closure of `a`; the closure must be a knot.
long long slice_bennequin_gap(const braid::BraidWord& a, int budget = 14);

}  // namespace trisym::kh
