#include "trisym/homotopy.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "trisym/errors.hpp"

namespace trisym::tri {

void SurfaceHomotopyRecord::validate() const {
  if (point_signs.empty() || point_signs.size() % 2)
    throw InputError("homotopy record: bridge points must come in pairs");
  for (int s : point_signs)
    if (s != 1 && s != -1) throw InputError("homotopy record: point sign must be +-1");
  long long bb = b();
  std::vector<std::array<int, 4>> deg(point_signs.size(), {0, 0, 0, 0});
  long long per_sector[4] = {0, 0, 0, 0};
  for (const auto& a : arcs) {
    if (a.sector < 1 || a.sector > 3) throw InputError("homotopy record: bad sector");
    if (a.tail < 0 || a.tail >= (int)point_signs.size() || a.head < 0 ||
        a.head >= (int)point_signs.size())
      throw InputError("homotopy record: arc endpoint out of range");
    deg[a.tail][a.sector]++;
    deg[a.head][a.sector]++;
    per_sector[a.sector]++;
    for (const auto& l : a.cls.tail)
      if (!alphabet.count(l.gen))
        throw InputError("homotopy record: residual letter '" + l.gen +
                         "' is not in the declared factor alphabet");
  }
  for (std::size_t i = 0; i < point_signs.size(); ++i)
    for (int s = 1; s <= 3; ++s)
      if (deg[i][s] != 1)
        throw InputError("homotopy record: bridge point " + std::to_string(i) +
                         " must meet exactly one arc of sector " + std::to_string(s));
  for (int s = 1; s <= 3; ++s)
    if (per_sector[s] != bb)
      throw InputError("homotopy record: sector " + std::to_string(s) +
                       " must have exactly b arcs");
}

bool SurfaceHomotopyRecord::connected() const {
  if (point_signs.empty()) return false;
  std::vector<int> repr(point_signs.size());
  for (std::size_t i = 0; i < repr.size(); ++i) repr[i] = (int)i;
  std::function<int(int)> find = [&](int x) {
    while (repr[x] != x) x = repr[x] = repr[repr[x]];
    return x;
  };
  for (const auto& a : arcs) {
    int u = find(a.tail), v = find(a.head);
    if (u != v) repr[u] = v;
  }
  for (std::size_t i = 1; i < repr.size(); ++i)
    if (find((int)i) != find(0)) return false;
  return true;
}

bool class_is_flat(const SurfaceHomotopyRecord& r, const fg::LongWord& w) {
  if (w.p != 0) return false;
  for (const auto& l : w.tail) {
    auto it = r.alphabet.find(l.gen);
    if (it == r.alphabet.end() || !it->second) return false;
  }
  return true;
}

SurfaceHomotopyRecord point_push(const SurfaceHomotopyRecord& r, int x,
                                 const fg::LongWord& mu) {
  r.validate();
  if (x < 0 || x >= (int)r.point_signs.size())
    throw InputError("point_push: unknown bridge point");
  SurfaceHomotopyRecord out = r;
  bool positive = r.point_signs[x] > 0;
  for (auto& a : out.arcs) {
    if (a.tail != x && a.head != x) continue;
    if (positive)
      a.cls = fg::lw_multiply(a.cls, mu);
    else
      a.cls = fg::lw_multiply(fg::lw_invert(mu), a.cls);
  }
  return out;
}

namespace {

int nth_arc_of_sector(const SurfaceHomotopyRecord& r, int sector, int idx) {
  int seen = 0;
  for (int i = 0; i < (int)r.arcs.size(); ++i) {
    if (r.arcs[i].sector == sector) {
      if (seen == idx) return i;
      seen++;
    }
  }
  throw InputError("no arc with that index in sector " + std::to_string(sector));
}

int sector1_arc_at(const SurfaceHomotopyRecord& r, int point) {
  for (int i = 0; i < (int)r.arcs.size(); ++i)
    if (r.arcs[i].sector == 1 && (r.arcs[i].tail == point || r.arcs[i].head == point))
      return i;
  throw InputError("bridge point has no sector-1 arc");
}

}  // namespace

SurfaceHomotopyRecord transfer_longitude(const SurfaceHomotopyRecord& r, int family,
                                         int arc_index, bool reversed) {
  r.validate();
  if (family != 2 && family != 3)
    throw InputError("transfer_longitude: arc must lie in sector 2 or 3");
  int ai = nth_arc_of_sector(r, family, arc_index);
  const SHArc& j = r.arcs[ai];
  if (!(j.cls.trivial() || class_is_flat(r, j.cls)))
    throw InputError("transfer_longitude: dragged arc has a non-flat class "
                     "(malformed record)");
  int tail = reversed ? j.head : j.tail;
  int head = reversed ? j.tail : j.head;
  if (tail == head)
    throw InputError("transfer_longitude: arc endpoints coincide");

  SurfaceHomotopyRecord out = r;
  int at_head = sector1_arc_at(r, head);
  int at_tail = sector1_arc_at(r, tail);
  out.arcs[at_head].cls = fg::lw_multiply(fg::lw_power_l(-1), out.arcs[at_head].cls);
  out.arcs[at_tail].cls = fg::lw_multiply(out.arcs[at_tail].cls, fg::lw_power_l(1));
  return out;
}

SurfaceHomotopyRecord concentrate_longitudes(const SurfaceHomotopyRecord& r) {
  r.validate();
  if (!r.connected()) throw InputError("concentrate_longitudes: record not connected");
  SurfaceHomotopyRecord cur = r;
  int root = nth_arc_of_sector(cur, 1, 0);

  // Routing graph: nodes are sector-1 arcs, edges are sector-2/3 arcs joining
  // the sector-1 arcs at their endpoints.  BFS from the first arc gives a
  // parent edge per node; draining nodes deepest-first moves every longitude
  // unit to the root without ping-ponging.
  struct Edge {
    int family, index;  // per-sector index for transfer_longitude
    int tail_node, head_node;
  };
  std::vector<Edge> edges;
  {
    int idx2 = 0, idx3 = 0;
    for (const auto& a : cur.arcs) {
      if (a.sector == 1) continue;
      int idx = (a.sector == 2) ? idx2++ : idx3++;
      edges.push_back({a.sector, idx, sector1_arc_at(cur, a.tail),
                       sector1_arc_at(cur, a.head)});
    }
  }
  std::map<int, int> depth, parent_edge;
  depth[root] = 0;
  std::deque<int> bfs{root};
  while (!bfs.empty()) {
    int node = bfs.front();
    bfs.pop_front();
    for (int e = 0; e < (int)edges.size(); ++e) {
      for (int other : {edges[e].tail_node, edges[e].head_node}) {
        int self = other == edges[e].tail_node ? edges[e].head_node : edges[e].tail_node;
        if (self != node || depth.count(other)) continue;
        depth[other] = depth[node] + 1;
        parent_edge[other] = e;
        bfs.push_back(other);
      }
    }
  }

  std::vector<int> order;
  for (auto& [node, d] : depth)
    if (node != root) order.push_back(node);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });

  for (int node : order) {
    const Edge& e = edges[parent_edge[node]];
    while (cur.arcs[node].cls.p != 0) {
      bool at_head = (e.head_node == node);
      bool rev = (cur.arcs[node].cls.p > 0) ? !at_head : at_head;
      cur = transfer_longitude(cur, e.family, e.index, rev);
    }
  }
  return cur;
}

FlattenResult flatten_and_count(const SurfaceHomotopyRecord& r) {
  r.validate();
  if (!r.connected()) throw InputError("flatten_and_count: record not connected");
  FlattenResult res;
  res.record = r;

  for (;;) {
    int target = -1;
    for (int i = 0; i < (int)res.record.arcs.size(); ++i) {
      const SHArc& a = res.record.arcs[i];
      if (a.sector != 1) continue;
      long long factors = std::llabs(a.cls.p) + (long long)a.cls.tail.size();
      if (factors > 1) {
        target = i;
        break;
      }
    }
    if (target < 0) break;

    // Peel the first factor of the class onto a new arc.
    SurfaceHomotopyRecord& rec = res.record;
    SHArc a = rec.arcs[target];
    fg::LongWord first, rest = a.cls;
    if (rest.p != 0) {
      int step = rest.p > 0 ? 1 : -1;
      first = fg::lw_power_l(step);
      rest.p -= step;
      // the remaining tail letters were conjugated by the full l^p; peeling
      // l^step off the front leaves their depths unchanged
    } else {
      first.tail.push_back(rest.tail.front());
      rest.tail.erase(rest.tail.begin());
    }

    int u = (int)rec.point_signs.size();
    int v = u + 1;
    rec.point_signs.push_back(-1);
    rec.point_signs.push_back(+1);
    rec.c[2] += 1;  // ministabilization pushes one patch into sector 3

    SHArc head_part = a;
    head_part.tail = v;
    head_part.cls = rest;
    rec.arcs[target] = SHArc{1, a.tail, u, first};
    rec.arcs.push_back(head_part);
    rec.arcs.push_back(SHArc{2, u, v, {}});
    rec.arcs.push_back(SHArc{3, u, v, {}});
  }

  res.record.validate();
  res.longitude_count = 0;
  for (const auto& a : res.record.arcs)
    if (a.sector == 1) res.longitude_count += a.cls.p;
  res.area_positive = res.longitude_count > 0;
  return res;
}

SurfaceHomotopyRecord line_homotopy_record() {
  SurfaceHomotopyRecord r;
  r.point_signs = {+1, -1};
  r.arcs.push_back({1, 0, 1, fg::lw_power_l(1)});
  r.arcs.push_back({2, 1, 0, {}});
  r.arcs.push_back({3, 1, 0, {}});
  r.c[0] = r.c[1] = r.c[2] = 1;
  r.validate();
  return r;
}

}  // namespace trisym::tri
