#include "trisym/lee.hpp"

#include <algorithm>
#include <map>

#include "trisym/cube.hpp"
#include "trisym/errors.hpp"
#include "trisym/linalg.hpp"

namespace trisym::kh {

namespace {

struct GenList {
  std::vector<Gen> gens;
  std::vector<int> qdeg;
  std::unordered_map<std::uint64_t, int> index;

  static std::uint64_t key(std::uint32_t v, std::uint32_t b) {
    return (std::uint64_t(v) << 32) | b;
  }
  int find(std::uint32_t v, std::uint32_t b) const {
    auto it = index.find(key(v, b));
    return it == index.end() ? -1 : it->second;
  }
  void build_index() {
    for (int i = 0; i < (int)gens.size(); ++i) index.emplace(key(gens[i].state, gens[i].bits), i);
  }
};

// All generators in homological degree i (states with |v| = i + nm).
GenList degree_gens(const Cube& cube, int i, bool sort_by_qdeg_desc) {
  GenList g;
  int w = i + cube.nm;
  if (w >= 0 && w <= cube.nc) {
    for (std::uint32_t v = 0; v < cube.states.size(); ++v) {
      if (Cube::popcount(v) != w) continue;
      int k = cube.states[v].circles;
      for (std::uint32_t b = 0; b < (1u << k); ++b) g.gens.push_back({v, b});
    }
  }
  if (sort_by_qdeg_desc) {
    std::stable_sort(g.gens.begin(), g.gens.end(), [&](const Gen& a, const Gen& b) {
      int qa = cube.qdeg(a.state, a.bits), qb = cube.qdeg(b.state, b.bits);
      if (qa != qb) return qa > qb;
      if (a.state != b.state) return a.state < b.state;
      return a.bits < b.bits;
    });
  }
  g.qdeg.resize(g.gens.size());
  for (int i2 = 0; i2 < (int)g.gens.size(); ++i2)
    g.qdeg[i2] = cube.qdeg(g.gens[i2].state, g.gens[i2].bits);
  g.build_index();
  return g;
}

linalg::SparseMat lee_matrix(const Cube& cube, const GenList& from, const GenList& to) {
  linalg::SparseMat m;
  m.rows = (int)to.gens.size();
  m.cols.resize(from.gens.size());
  for (int c = 0; c < (int)from.gens.size(); ++c) {
    for (const auto& t : differential(cube, from.gens[c].state, from.gens[c].bits, true)) {
      int r = to.find(t.state, t.bits);
      if (r >= 0) m.cols[c].push_back({r, t.coeff});
    }
  }
  return m;
}

// Filtration profile of H^0: for each quantum level j (descending), the
// number of independent classes with a representative of filtration >= j.
std::vector<std::pair<int, int>> h0_profile(const Cube& cube) {
  GenList c0 = degree_gens(cube, 0, true);
  GenList cm1 = degree_gens(cube, -1, false);
  GenList c1 = degree_gens(cube, 1, false);

  linalg::SparseMat dcur = lee_matrix(cube, c0, c1);
  linalg::SparseMat dprev = lee_matrix(cube, cm1, c0);

  std::vector<int> nullity = linalg::prefix_nullities(dcur);
  std::vector<int> bpivots = linalg::bottom_pivot_rows(dprev);

  std::vector<std::pair<int, int>> profile;  // (level j, gr_j)
  int n = (int)c0.gens.size();
  int m = 0;
  while (m < n) {
    int j = c0.qdeg[m];
    int mj = m;
    while (mj < n && c0.qdeg[mj] == j) mj++;
    int boundary = (int)(std::lower_bound(bpivots.begin(), bpivots.end(), mj) - bpivots.begin());
    profile.emplace_back(j, nullity[mj] - boundary);
    m = mj;
  }
  return profile;
}

}  // namespace

LeeSummary lee_s_invariant(const pd::PlanarDiagram& d, int budget) {
  d.validate();
  if ((int)d.crossings.size() > budget)
    throw BudgetError("lee: crossing budget exceeded");
  LeeSummary out;
  out.components = d.components();
  Cube cube(d);
  auto profile = h0_profile(cube);

  int prev = 0;
  for (auto& [j, gr] : profile) {
    for (int t = 0; t < gr - prev; ++t) out.filtration_h0.push_back(j);
    prev = std::max(prev, gr);
  }
  if (out.components == 1) {
    if ((int)out.filtration_h0.size() != 2)
      throw InputError("lee: degree-0 rank is not 2 on a knot diagram");
    int smax = out.filtration_h0[0], smin = out.filtration_h0[1];
    if (smax - smin != 2 || ((smin + 1) % 2 != 0))
      throw InputError("lee: filtration levels are not {s-1, s+1}");
    out.s = smin + 1;
    out.s_defined = true;
  }
  return out;
}

LeeSummary lee_summary(const pd::PlanarDiagram& d, int budget) {
  LeeSummary out;
  d.validate();
  if ((int)d.crossings.size() > budget)
    throw BudgetError("lee: crossing budget exceeded");
  out.components = d.components();
  if (out.components == 1) out = lee_s_invariant(d, budget);

  Cube cube(d);
  int lo = -cube.nm, hi = cube.nc - cube.nm;
  std::vector<GenList> gl;
  for (int i = lo; i <= hi; ++i) gl.push_back(degree_gens(cube, i, false));
  std::vector<int> ranks;
  for (int bi = 0; bi + 1 < (int)gl.size(); ++bi)
    ranks.push_back(linalg::rank_q(lee_matrix(cube, gl[bi], gl[bi + 1])));
  long long total = 0;
  for (int bi = 0; bi < (int)gl.size(); ++bi) {
    long long r_out = bi < (int)ranks.size() ? ranks[bi] : 0;
    long long r_in = bi > 0 ? ranks[bi - 1] : 0;
    total += (long long)gl[bi].gens.size() - r_out - r_in;
  }
  out.total_rank = total;
  return out;
}

long long slice_bennequin_gap(const braid::BraidWord& a, int budget) {
  pd::PlanarDiagram d = braid::closure_pd(a);
  if (d.components() != 1)
    throw InputError("slice_bennequin_gap: closure is not a knot");
  LeeSummary lee = lee_s_invariant(d, budget);
  long long sl = braid::transverse_self_linking(a);
  return ((long long)lee.s - 1) - sl;
}

}  // namespace trisym::kh
