#include "trisym/pd.hpp"

#include <map>
#include <numeric>
#include <string>

#include "trisym/errors.hpp"

namespace trisym::pd {

int PlanarDiagram::n_plus() const {
  int k = 0;
  for (const auto& x : crossings) k += (x.sign > 0);
  return k;
}

int PlanarDiagram::n_minus() const {
  int k = 0;
  for (const auto& x : crossings) k += (x.sign < 0);
  return k;
}

int PlanarDiagram::edge_count() const {
  int mx = 0;
  for (const auto& x : crossings)
    for (int e : x.e) mx = std::max(mx, e);
  return mx;
}

void PlanarDiagram::validate() const {
  std::map<int, int> seen;
  for (const auto& x : crossings) {
    if (x.sign != 1 && x.sign != -1) throw InputError("pd: crossing sign must be +-1");
    for (int e : x.e) {
      if (e <= 0) throw InputError("pd: edge labels must be positive");
      seen[e]++;
    }
  }
  for (auto& [e, k] : seen)
    if (k != 2) throw InputError("pd: edge " + std::to_string(e) + " occurs " +
                                 std::to_string(k) + " times, expected 2");
  // Orientation consistency: every edge leaves exactly one crossing slot and
  // enters exactly one.  Under-strand is e0 -> e2; over-strand d->b at a
  // positive crossing and b->d at a negative one.
  std::map<int, int> in_deg, out_deg;
  for (const auto& x : crossings) {
    in_deg[x.e[0]]++;
    out_deg[x.e[2]]++;
    if (x.sign > 0) {
      in_deg[x.e[3]]++;
      out_deg[x.e[1]]++;
    } else {
      in_deg[x.e[1]]++;
      out_deg[x.e[3]]++;
    }
  }
  for (auto& [e, k] : seen) {
    if (in_deg[e] != 1 || out_deg[e] != 1)
      throw InputError("pd: edge " + std::to_string(e) + " has inconsistent orientation");
  }
  if (free_loops < 0) throw InputError("pd: negative free loop count");
}

int PlanarDiagram::components() const {
  // Trace successor edges through crossings.
  std::map<int, int> succ;
  for (const auto& x : crossings) {
    succ[x.e[0]] = x.e[2];
    if (x.sign > 0)
      succ[x.e[3]] = x.e[1];
    else
      succ[x.e[1]] = x.e[3];
  }
  std::map<int, bool> vis;
  int comps = free_loops;
  for (auto& [e, _] : succ) {
    if (vis[e]) continue;
    comps++;
    int cur = e;
    while (!vis[cur]) {
      vis[cur] = true;
      cur = succ[cur];
    }
  }
  return comps;
}

PlanarDiagram PlanarDiagram::mirror() const {
  PlanarDiagram m;
  m.free_loops = free_loops;
  for (const auto& x : crossings) {
    if (x.sign > 0)
      m.crossings.push_back({{x.e[3], x.e[0], x.e[1], x.e[2]}, -1});
    else
      m.crossings.push_back({{x.e[1], x.e[2], x.e[3], x.e[0]}, +1});
  }
  return m;
}

int smoothing_circles(const PlanarDiagram& d, std::uint64_t state,
                      std::vector<int>* circle_of_edge) {
  int ne = d.edge_count();
  std::vector<int> repr(ne + 1);
  std::iota(repr.begin(), repr.end(), 0);
  auto find = [&](int x) {
    while (repr[x] != x) x = repr[x] = repr[repr[x]];
    return x;
  };
  auto join = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) repr[x] = y;
  };
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    if (state >> c & 1) {  // B-smoothing
      join(x.e[0], x.e[3]);
      join(x.e[1], x.e[2]);
    } else {  // A-smoothing
      join(x.e[0], x.e[1]);
      join(x.e[2], x.e[3]);
    }
  }
  int circles = 0;
  std::vector<int> id(ne + 1, -1);
  for (int e = 1; e <= ne; ++e) {
    int r = find(e);
    if (id[r] < 0) id[r] = circles++;
  }
  if (circle_of_edge) {
    circle_of_edge->assign(ne + 1, -1);
    for (int e = 1; e <= ne; ++e) (*circle_of_edge)[e] = id[find(e)];
  }
  return circles;
}

}  // namespace trisym::pd
