#pragma once

// Kauffman bracket and bigraded Khovanov homology ranks.

#include <map>
#include <string>
#include <utility>

#include "trisym/laurent.hpp"
#include "trisym/pd.hpp"
#include "trisym/verdict.hpp"

namespace trisym::kh {

enum class Coeff { Q, F2 };

struct BigradedRanks {
  std::map<std::pair<int, int>, int> rank;  // (i, j) -> rank, zeros absent
  Coeff coeff = Coeff::Q;

  Laurent graded_euler() const;
  bool operator==(const BigradedRanks& o) const { return rank == o.rank; }
};

// Unnormalized Jones polynomial; the unknot gives q + q^-1.
Laurent kauffman_bracket(const pd::PlanarDiagram& d, int budget = 20);

BigradedRanks khovanov(const pd::PlanarDiagram& d, Coeff coeff, int budget = 14);

// Bigraded ranks of the c-component unlink.
BigradedRanks unlink_ranks(int components, Coeff coeff);

// Refuted when the bracket or the Khovanov ranks differ from the unlink's;
// consistent otherwise (explicitly not a proof of unlinkedness).
Verdict unlink_certificate(const pd::PlanarDiagram& d, int budget = 14);

std::string ranks_to_string(const BigradedRanks& r);

}  // namespace trisym::kh
