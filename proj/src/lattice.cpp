#include "trisym/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "trisym/errors.hpp"

namespace trisym::tri {

long long LatticeForm::pairing(const std::vector<long long>& u,
                               const std::vector<long long>& v) const {
  if ((int)u.size() != coord_count() || (int)v.size() != coord_count())
    throw InputError("lattice vector has wrong length");
  long long s = 0;
  int n = (int)diag.size();
  for (int i = 0; i < n; ++i) s += (long long)diag[i] * u[i] * v[i];
  for (int h = 0; h < hyperbolic; ++h) {
    int a = n + 2 * h, b = a + 1;
    s += u[a] * v[b] + u[b] * v[a];
  }
  return s;
}

bool LatticeForm::is_characteristic(const std::vector<long long>& c) const {
  // c.x = x.x mod 2 for all x; enough to test on basis vectors.
  int n = (int)diag.size();
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(coord_count(), 0);
    e[i] = 1;
    if (((pairing(c, e) - 1) % 2 + 2) % 2 != 0) return false;
  }
  for (int h = 0; h < 2 * hyperbolic; ++h) {
    std::vector<long long> e(coord_count(), 0);
    e[(int)diag.size() + h] = 1;
    if ((pairing(c, e) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

namespace {

// Canonical key up to permuting diagonal entries of equal sign and a global
// sign flip: sorted |values| per sign class, lexicographically smallest of
// the two sign choices.
std::vector<long long> canonical_candidate(const LatticeForm& f,
                                           const std::vector<long long>& c) {
  auto canon = [&](std::vector<long long> v) {
    int n = (int)f.diag.size();
    std::vector<long long> plus, minus, rest;
    for (int i = 0; i < n; ++i)
      (f.diag[i] > 0 ? plus : minus).push_back(v[i]);
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    std::vector<long long> out;
    out.insert(out.end(), plus.begin(), plus.end());
    out.insert(out.end(), minus.begin(), minus.end());
    for (int i = n; i < (int)v.size(); ++i) out.push_back(v[i]);
    return out;
  };
  std::vector<long long> a = canon(c), b;
  {
    std::vector<long long> neg = c;
    for (auto& x : neg) x = -x;
    b = canon(neg);
  }
  return std::min(a, b);
}

}  // namespace

LatticeReport lattice_obstructions(const LatticeQuery& q) {
  LatticeReport rep;
  if (q.sigma_coefficient != 2 && q.sigma_coefficient != 3)
    throw InputError("sigma coefficient must be 2 or 3");
  rep.coefficient_warning = (q.sigma_coefficient == 2);
  rep.c_square_target = 2 * q.chi_top + q.sigma_coefficient * q.sigma;

  std::vector<std::vector<long long>> cands;
  if (!q.explicit_candidates.empty()) {
    for (const auto& c : q.explicit_candidates) {
      if (!q.form.is_characteristic(c))
        throw InputError("explicit candidate is not characteristic");
      if (q.form.pairing(c, c) != rep.c_square_target)
        throw InputError("explicit candidate misses the c^2 target");
      cands.push_back(c);
    }
  } else {
    if (q.form.even8 != 0)
      throw InputError("even blocks require explicit candidates");
    // Diagonal coordinates are odd, hyperbolic ones even; search within the
    // coordinate bound with simple square pruning.
    int n = q.form.coord_count();
    std::vector<long long> cur(n, 0);
    std::set<std::vector<long long>> seen;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (q.form.pairing(cur, cur) == rep.c_square_target) {
          auto key = canonical_candidate(q.form, cur);
          if (seen.insert(key).second) cands.push_back(cur);
        }
        return;
      }
      bool diag = i < (int)q.form.diag.size();
      long long step = 2;
      long long start = diag ? 1 : 0;
      for (long long v = start; v <= q.coord_bound; v += step) {
        cur[i] = v;
        rec(i + 1);
        if (v != 0) {
          cur[i] = -v;
          rec(i + 1);
        }
      }
      cur[i] = 0;
    };
    rec(0);
  }
  rep.no_candidate = cands.empty();

  // Deterministic candidate order.
  std::sort(cands.begin(), cands.end());
  rep.candidates = cands;

  std::vector<bool> candidate_refuted(cands.size(), false);
  for (const auto& k : q.classes) {
    ClassReport cr;
    cr.k = k;
    cr.square = q.form.pairing(k, k);
    bool first = true;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      long long bound = q.form.pairing(cands[ci], k) - cr.square;
      if (first || bound > cr.worst_bound) cr.worst_bound = bound;
      if (first || bound < cr.best_bound) cr.best_bound = bound;
      if (bound < 2) candidate_refuted[ci] = true;
      first = false;
    }
    if (!first) {
      cr.sphere_ruled_out = (cr.best_bound < 2);
      cr.sphere_ruled_out_all_candidates = (cr.worst_bound < 2);
      cr.torus_ruled_out = (cr.worst_bound < 0);
      // chi = 2 - 2g <= worst_bound  =>  g >= (2 - worst_bound) / 2
      long long num = 2 - cr.worst_bound;
      cr.genus_min = num <= 0 ? 0 : (num + 1) / 2;
    }
    rep.classes.push_back(cr);
  }
  rep.all_candidates_refuted = !cands.empty() && !q.classes.empty();
  for (bool r : candidate_refuted) rep.all_candidates_refuted &= r;
  return rep;
}

long long hypersurface_genus_bound(int d) {
  if (d < 1) throw InputError("hypersurface degree must be positive");
  // h^2 = d, <c1,h> = (4-d)d; chi = 2-2g <= (4-d)d - d
  long long bound = (long long)(4 - d) * d - d;
  long long num = 2 - bound;
  return num <= 0 ? 0 : (num + 1) / 2;
}

}  // namespace trisym::tri
