#pragma once

// Characteristic-vector enumeration for diagonal (+hyperbolic/even-block)
// intersection forms and the genus bounds they impose.

#include <string>
#include <vector>

#include "trisym/verdict.hpp"

namespace trisym::tri {

// Lattice = <1>^p (+) <-1>^q (+) H^h (+) (even rank-8 blocks).
// Coordinates are ordered: diagonal entries, then (a,b) pairs per H block.
// Even rank-8 blocks carry no explicit coordinates; they enter through chi
// and sigma and force explicit candidates (enumeration refuses them).
struct LatticeForm {
  std::vector<int> diag;  // entries +-1
  int hyperbolic = 0;     // number of H blocks
  int even8 = 0;          // signed count of even rank-8 blocks (sign = signature/8)

  int coord_count() const { return (int)diag.size() + 2 * hyperbolic; }
  long long pairing(const std::vector<long long>& u, const std::vector<long long>& v) const;
  bool is_characteristic(const std::vector<long long>& c) const;
};

struct LatticeQuery {
  LatticeForm form;
  long long chi_top = 0;
  long long sigma = 0;
  int sigma_coefficient = 3;  // c^2 target = 2 chi + coeff * sigma
  long long coord_bound = 19;
  std::vector<std::vector<long long>> classes;
  std::vector<std::vector<long long>> explicit_candidates;  // skip enumeration if set
};

struct ClassReport {
  std::vector<long long> k;
  long long square = 0;
  long long best_bound = 0;   // min over candidates of <c,K> - K.K
  long long worst_bound = 0;  // max over candidates
  // After aligning the candidate by the lattice symmetries (the candidate
  // set is closed under them), the class violates chi(S^2) <= bound.
  bool sphere_ruled_out = false;  // best_bound < 2
  // Airtight for this single class, whichever candidate is the Chern class.
  bool sphere_ruled_out_all_candidates = false;  // worst_bound < 2
  bool torus_ruled_out = false;                  // worst_bound < 0
  long long genus_min = 0;  // smallest genus with 2-2g <= worst_bound
};

struct LatticeReport {
  long long c_square_target = 0;
  bool coefficient_warning = false;  // sigma coefficient 2 selected
  std::vector<std::vector<long long>> candidates;  // deduped up to permutation/sign
  std::vector<ClassReport> classes;
  bool no_candidate = false;
  // Every candidate pairs with some input class so that a sphere there is
  // impossible; with all classes sphere-representable this obstructs a
  // symplectic structure outright.
  bool all_candidates_refuted = false;
};

LatticeReport lattice_obstructions(const LatticeQuery& q);

// Adjunction bound for the degree-d hypersurface's hyperplane class:
// chi <= (4-d)d - d; returns the resulting minimal genus.
long long hypersurface_genus_bound(int d);

}  // namespace trisym::tri
