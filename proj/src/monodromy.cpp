#include "trisym/monodromy.hpp"

#include <numeric>

#include "trisym/errors.hpp"

namespace trisym::mono {

bool is_transposition(const std::vector<int>& perm) {
  int moved = 0;
  for (int i = 0; i < (int)perm.size(); ++i)
    if (perm[i] != i) moved++;
  if (moved != 2) return false;
  for (int i = 0; i < (int)perm.size(); ++i)
    if (perm[perm[i]] != i) return false;
  return true;
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (int i = 0; i < (int)p.size(); ++i) q[p[i]] = i;
  return q;
}

void validate_perm(const std::vector<int>& p, int n) {
  if ((int)p.size() != n) throw InputError("monodromy image has wrong degree");
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) throw InputError("monodromy image is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

std::vector<int> word_image(const fg::FreeWord& w, const MonodromyAssignment& m) {
  std::vector<int> acc(m.degree);
  std::iota(acc.begin(), acc.end(), 0);
  for (const auto& l : w.letters) {
    auto it = m.images.find(l.gen);
    if (it == m.images.end()) continue;  // unmapped generators act trivially
    std::vector<int> g = it->second;
    validate_perm(g, m.degree);
    if (l.sign < 0) g = inverse_perm(g);
    // acc = acc then g (left-to-right application)
    for (auto& v : acc) v = g[v];
  }
  return acc;
}

Verdict check_monodromy(const tangle::TanglePresentation& pres,
                        const MonodromyAssignment& m) {
  if (m.degree < 1) throw InputError("monodromy degree must be positive");
  for (const auto& g : pres.generators) {
    auto it = m.images.find(g);
    if (it == m.images.end())
      return Verdict::violated(0, 0, "generator " + g + " has no image");
    validate_perm(it->second, m.degree);
    if (!is_transposition(it->second))
      return Verdict::violated(0, 0, "image of " + g + " is not a transposition");
  }
  for (const auto& rel : pres.relators) {
    std::vector<int> img = word_image(rel, m);
    for (int i = 0; i < m.degree; ++i)
      if (img[i] != i)
        return Verdict::violated(0, 0, "relator " + fg::word_to_string(rel) +
                                           " does not map to the identity");
  }
  // transitivity via union-find over sheets
  std::vector<int> repr(m.degree);
  std::iota(repr.begin(), repr.end(), 0);
  auto find = [&](int x) {
    while (repr[x] != x) x = repr[x] = repr[repr[x]];
    return x;
  };
  for (const auto& [g, p] : m.images) {
    for (int i = 0; i < m.degree; ++i) {
      int a = find(i), b = find(p[i]);
      if (a != b) repr[a] = b;
    }
  }
  for (int i = 1; i < m.degree; ++i)
    if (find(i) != find(0))
      return Verdict::violated(0, i, "sheets 1 and " + std::to_string(i + 1) +
                                         " lie in different orbits");
  return Verdict::holds(0, 0);
}

int lift_path(const fg::FreeWord& w, const MonodromyAssignment& m, int start_sheet) {
  if (start_sheet < 1 || start_sheet > m.degree)
    throw InputError("lift_path: start sheet out of range");
  std::vector<int> img = word_image(w, m);
  return img[start_sheet - 1] + 1;
}

}  // namespace trisym::mono
