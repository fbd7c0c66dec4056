#include "trisym/trirec.hpp"

#include <algorithm>

#include "trisym/errors.hpp"

namespace trisym::tri {

void BridgeTrisectionRecord::validate() const {
  long long cmax = std::max({c[0], c[1], c[2]});
  long long cmin = std::min({c[0], c[1], c[2]});
  if (cmin < 1) throw InputError("trisection record: patch counts must be >= 1");
  if (b < cmax) throw InputError("trisection record: b >= max(c) violated");
  for (const auto& s : sector)
    if (s.spine_summands < 0) throw InputError("trisection record: negative spine count");
}

long long euler_characteristic(const BridgeTrisectionRecord& r) {
  r.validate();
  return r.c[0] + r.c[1] + r.c[2] - r.b;
}

long long c1_pairing(const BridgeTrisectionRecord& r) {
  r.validate();
  long long s = 0;
  for (int i = 0; i < 3; ++i) s += r.sector[i].lk_self - r.sector[i].lk_next;
  return s;
}

long long self_intersection(const BridgeTrisectionRecord& r) {
  r.validate();
  long long s = r.b;
  for (int i = 0; i < 3; ++i) s += r.sector[i].writhe_framing;
  return s;
}

long long sector_self_linking(const BridgeTrisectionRecord& r, int lambda,
                              std::string* warning) {
  r.validate();
  if (lambda < 1 || lambda > 3) throw InputError("sector index must be 1, 2 or 3");
  const SectorData& s = r.sector[lambda - 1];
  long long sl = s.writhe_framing - s.lk_self + s.lk_next;
  if (s.braid && s.spine_summands == 0) {
    long long braid_sl = braid::transverse_self_linking(*s.braid);
    if (braid_sl != sl && warning)
      *warning = "sector " + std::to_string(lambda) + ": formula self-linking " +
                 std::to_string(sl) + " disagrees with braid self-linking " +
                 std::to_string(braid_sl);
  }
  return sl;
}

Verdict total_self_linking_identity(const BridgeTrisectionRecord& r) {
  r.validate();
  bool braided = true;
  for (const auto& s : r.sector) braided &= (s.braid.has_value() && s.spine_summands == 0);

  long long lhs = 0;
  if (braided) {
    for (const auto& s : r.sector) lhs += braid::transverse_self_linking(*s.braid);
  } else {
    for (int l = 1; l <= 3; ++l) lhs += sector_self_linking(r, l);
  }
  long long rhs = self_intersection(r) - c1_pairing(r) - r.b;
  if (lhs == rhs) return Verdict::holds(lhs, rhs);
  return Verdict::violated(lhs, rhs, braided ? "braid-engine self-linking sum" : "");
}

Verdict adjunction_verdict(long long chi, long long c1K, long long K2, AdjunctionMode mode) {
  long long bound = (mode == AdjunctionMode::Standard)
                        ? c1K - K2
                        : -(c1K < 0 ? -c1K : c1K) - K2;
  if (chi <= bound) return Verdict::holds(chi, bound);
  return Verdict::violated(chi, bound);
}

WhitneyBookkeeping whitney_band_bookkeeping(const BridgeTrisectionRecord& r, long long n) {
  r.validate();
  if (n < 0) throw InputError("whitney arc count must be >= 0");
  WhitneyBookkeeping w;
  w.whitney_arcs = n;
  w.chiF = r.c[0] + r.c[1] + r.c[2] - 2 * n;
  w.slL = self_intersection(r) - c1_pairing(r) - r.b + 2 * n;
  w.sbi = (w.slL <= -w.chiF) ? Verdict::holds(w.slL, -w.chiF)
                             : Verdict::violated(w.slL, -w.chiF);
  return w;
}

BridgeTrisectionRecord line_record() {
  BridgeTrisectionRecord r;
  r.b = 1;
  r.c[0] = r.c[1] = r.c[2] = 1;
  for (int i = 0; i < 3; ++i) {
    r.sector[i].writhe_framing = 0;
    r.sector[i].lk_self = 1;
    r.sector[i].lk_next = 0;
    r.sector[i].w_prov = Provenance::DiagramComputed;
    r.sector[i].lk_self_prov = Provenance::DiagramComputed;
    r.sector[i].lk_next_prov = Provenance::DiagramComputed;
    r.sector[i].braid = braid::BraidWord(1, {});  // unknot as the empty 1-braid
    r.sector[i].spine_summands = 0;
  }
  r.validate();
  return r;
}

}  // namespace trisym::tri
