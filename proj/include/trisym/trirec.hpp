#pragma once

// Bridge-trisection records and the homological bookkeeping formulas:
// Euler characteristic, first-Chern pairing, self-intersection, sector
// self-linking, the total self-linking identity, adjunction verdicts and
// Whitney-band bookkeeping.

#include <optional>
#include <string>
#include <vector>

#include "trisym/braid.hpp"
#include "trisym/verdict.hpp"

namespace trisym::tri {

enum class Provenance { DiagramComputed, UserSupplied };

struct SectorData {
  long long writhe_framing = 0;               // w_lambda
  long long lk_self = 0;                      // lk(K_lambda, Lambda_lambda)
  long long lk_next = 0;                      // lk(K_lambda, Lambda_lambda+1)
  Provenance w_prov = Provenance::UserSupplied;
  Provenance lk_self_prov = Provenance::UserSupplied;
  Provenance lk_next_prov = Provenance::UserSupplied;
  std::optional<braid::BraidWord> braid;      // presentation of K_lambda, if any
  int spine_summands = 0;                     // k with Y_lambda = #_k S1xS2
};

struct BridgeTrisectionRecord {
  long long b = 1;
  long long c[3] = {1, 1, 1};
  SectorData sector[3];

  void validate() const;  // b >= max(c) >= 1
};

long long euler_characteristic(const BridgeTrisectionRecord& r);
long long c1_pairing(const BridgeTrisectionRecord& r);
long long self_intersection(const BridgeTrisectionRecord& r);

// w_lambda - lk(K,Lambda_lambda) + lk(K,Lambda_lambda+1).  When a braid is
// attached and the sector spine is trivial, the braid self-linking is
// cross-checked; a mismatch is reported through *warning.
long long sector_self_linking(const BridgeTrisectionRecord& r, int lambda,
                              std::string* warning = nullptr);

// Holds iff the sum of sector self-linkings equals K.K - <c1,K> - b.  When
// every sector carries a braid presentation of K_lambda (trivial spine), the
// left side is taken from the braid engine, which makes the identity
// falsifiable against corrupted integer data.
Verdict total_self_linking_identity(const BridgeTrisectionRecord& r);

enum class AdjunctionMode { Standard, ZeroArea };

// chi <= <c1,K> - K.K, or chi <= -|<c1,K>| - K.K in zero-area mode.
Verdict adjunction_verdict(long long chi, long long c1K, long long K2,
                           AdjunctionMode mode = AdjunctionMode::Standard);

struct WhitneyBookkeeping {
  long long whitney_arcs = 0;
  long long chiF = 0;
  long long slL = 0;
  Verdict sbi;  // slL <= -chiF
};

WhitneyBookkeeping whitney_band_bookkeeping(const BridgeTrisectionRecord& r, long long n);

// The frozen degree-1 record: b=1, c=(1,1,1), unknot sectors with
// lk(K,Lambda) = 1, lk(K,Lambda') = 0, w = 0.
BridgeTrisectionRecord line_record();

}  // namespace trisym::tri
