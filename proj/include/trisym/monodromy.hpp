#pragma once

// Branched-cover monodromy data: meridian generators mapped to permutations.

#include <map>
#include <string>
#include <vector>

#include "trisym/freegroup.hpp"
#include "trisym/tangle.hpp"
#include "trisym/verdict.hpp"

namespace trisym::mono {

struct MonodromyAssignment {
  int degree = 1;
  std::map<std::string, std::vector<int>> images;  // generator -> permutation of 0..n-1
};

bool is_transposition(const std::vector<int>& perm);

// Permutation image of a word, letters applied left to right.
std::vector<int> word_image(const fg::FreeWord& w, const MonodromyAssignment& m);

// Holds iff every generator image is a transposition, every relator maps to
// the identity, and the image subgroup is transitive.  The witness carries
// the first violation.
Verdict check_monodromy(const tangle::TanglePresentation& pres,
                        const MonodromyAssignment& m);

// End sheet of lifting a loop starting at `start_sheet` (1-based).
// Generators without an image (e.g. the longitude) act as the identity.
int lift_path(const fg::FreeWord& w, const MonodromyAssignment& m, int start_sheet);

}  // namespace trisym::mono
