#include "trisym/linalg.hpp"

#include <algorithm>
#include <map>

namespace trisym::linalg {

BigCol to_bigcol(const std::vector<Entry>& c) {
  std::map<int, long long> acc;
  for (const auto& e : c) acc[e.row] += e.val;
  BigCol out;
  for (auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, BigInt(v));
  return out;
}

namespace {

const BigInt* find_row(const BigCol& c, int row) {
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& p, int r) { return p.first < r; });
  if (it != c.end() && it->first == row) return &it->second;
  return nullptr;
}

void strip_content(BigCol& c) {
  if (c.empty()) return;
  BigInt g = 0;
  for (auto& [r, v] : c) {
    g = big_gcd(g, v);
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [r, v] : c) v /= g;
  if (c.front().second < 0)
    for (auto& [r, v] : c) v = -v;
}

}  // namespace

void eliminate(BigCol& col, const BigCol& piv, int pivot_row) {
  const BigInt* a = find_row(col, pivot_row);
  if (!a) return;
  const BigInt* p = find_row(piv, pivot_row);
  BigInt ca = *a, cp = *p;
  BigCol out;
  out.reserve(col.size() + piv.size());
  auto i = col.begin();
  auto j = piv.begin();
  while (i != col.end() || j != piv.end()) {
    if (j == piv.end() || (i != col.end() && i->first < j->first)) {
      out.emplace_back(i->first, cp * i->second);
      ++i;
    } else if (i == col.end() || j->first < i->first) {
      out.emplace_back(j->first, -ca * j->second);
      ++j;
    } else {
      BigInt v = cp * i->second - ca * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  strip_content(out);
  col = std::move(out);
}

namespace {

// Shared echelon loop: pivot on the extreme row of each column
// (smallest when `min_pivot`, largest otherwise).
struct EchelonState {
  std::map<int, BigCol> pivots;  // pivot row -> column
  bool min_pivot = true;

  // Returns true if the column survived (new pivot installed).
  bool insert(BigCol col) {
    while (!col.empty()) {
      int pr = min_pivot ? col.front().first : col.back().first;
      auto it = pivots.find(pr);
      if (it == pivots.end()) {
        strip_content(col);
        pivots.emplace(pr, std::move(col));
        return true;
      }
      eliminate(col, it->second, pr);
    }
    return false;
  }
};

}  // namespace

int rank_q(const SparseMat& m) {
  EchelonState st;
  for (const auto& c : m.cols) st.insert(to_bigcol(c));
  return (int)st.pivots.size();
}

int rank_f2(const SparseMat& m) {
  int words = (m.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis;  // echelon rows? columns as bitsets
  std::vector<int> pivots;
  int rank = 0;
  for (const auto& c : m.cols) {
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& e : c)
      if (e.val % 2 != 0) bits[e.row / 64] ^= (std::uint64_t(1) << (e.row % 64));
    for (;;) {
      int pr = -1;
      for (int w = 0; w < words && pr < 0; ++w)
        if (bits[w]) pr = w * 64 + __builtin_ctzll(bits[w]);
      if (pr < 0) break;
      bool found = false;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (pivots[b] == pr) {
          for (int w = 0; w < words; ++w) bits[w] ^= basis[b][w];
          found = true;
          break;
        }
      }
      if (!found) {
        basis.push_back(bits);
        pivots.push_back(pr);
        rank++;
        break;
      }
    }
  }
  return rank;
}

std::vector<int> prefix_nullities(const SparseMat& m) {
  std::vector<int> out;
  out.push_back(0);
  EchelonState st;
  int rank = 0, k = 0;
  for (const auto& c : m.cols) {
    if (st.insert(to_bigcol(c))) rank++;
    k++;
    out.push_back(k - rank);
  }
  return out;
}

std::vector<int> bottom_pivot_rows(const SparseMat& m) {
  EchelonState st;
  st.min_pivot = false;
  for (const auto& c : m.cols) st.insert(to_bigcol(c));
  std::vector<int> rows;
  for (auto& [r, c] : st.pivots) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  return rows;
}

Echelon column_echelon_min_pivot(const SparseMat& m) {
  EchelonState st;
  for (const auto& c : m.cols) st.insert(to_bigcol(c));
  Echelon e;
  for (auto& [r, c] : st.pivots) {
    e.pivot_rows.push_back(r);
    e.basis.push_back(c);
  }
  return e;
}

void reduce_vector(BigCol& v, const Echelon& ech) {
  // Ascending sweep; each elimination only introduces rows at or below the
  // pivot being cleared.
  for (std::size_t i = 0; i < ech.basis.size(); ++i)
    eliminate(v, ech.basis[i], ech.pivot_rows[i]);
}

}  // namespace trisym::linalg
