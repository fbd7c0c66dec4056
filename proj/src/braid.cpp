#include "trisym/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trisym/errors.hpp"
#include "trisym/pd.hpp"

namespace trisym::braid {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
  if (n < 1) throw InputError("braid word needs at least one strand");
  for (int e : letters) {
    if (e == 0 || std::abs(e) > n - 1)
      throw InputError("braid letter out of range for strand count");
  }
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (int e : letters) s += (e > 0) ? 1 : -1;
  return s;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw InputError("compose: strand-count mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord invert(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  r.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

BraidWord free_reduce(const BraidWord& a) {
  BraidWord r;
  r.strands = a.strands;
  for (int e : a.letters) {
    if (!r.letters.empty() && r.letters.back() == -e)
      r.letters.pop_back();
    else
      r.letters.push_back(e);
  }
  return r;
}

BraidWord word_algebra(const BraidWord& a, const BraidWord& b, WordMode mode) {
  switch (mode) {
    case WordMode::Compose: return compose(a, b);
    case WordMode::Invert: return invert(a);
    case WordMode::Reduce: return free_reduce(a);
  }
  throw InputError("unknown word mode");
}

std::vector<int> underlying_permutation(const BraidWord& a) {
  std::vector<int> p(a.strands);
  std::iota(p.begin(), p.end(), 0);
  for (int e : a.letters) {
    int i = std::abs(e) - 1;
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

namespace {

// Free word on generators 1..n, letter sign = exponent.  Kept reduced.
using FWord = std::vector<int>;

void push_reduced(FWord& w, int g) {
  if (!w.empty() && w.back() == -g)
    w.pop_back();
  else
    w.push_back(g);
}

void append_word(FWord& w, const FWord& v, bool inverse, std::size_t cap) {
  if (!inverse) {
    for (int g : v) push_reduced(w, g);
  } else {
    for (auto it = v.rbegin(); it != v.rend(); ++it) push_reduced(w, -*it);
  }
  if (w.size() > cap) throw BudgetError("free-word length cap exceeded in Artin action");
}

// Images of the free generators under the automorphism of the word,
// composed so that appending a braid letter rewrites only two entries:
//   sigma_i:   u_i -> u_i u_{i+1} u_i^-1,  u_{i+1} -> u_i
//   sigma_i^-: u_i -> u_{i+1},             u_{i+1} -> u_{i+1}^-1 u_i u_{i+1}
std::vector<FWord> artin_images(const BraidWord& a, std::size_t cap) {
  std::vector<FWord> u(a.strands);
  for (int i = 0; i < a.strands; ++i) u[i] = {i + 1};
  for (int e : a.letters) {
    int i = std::abs(e) - 1;
    if (e > 0) {
      FWord ni;
      append_word(ni, u[i], false, cap);
      append_word(ni, u[i + 1], false, cap);
      append_word(ni, u[i], true, cap);
      u[i + 1] = std::move(u[i]);
      u[i] = std::move(ni);
    } else {
      FWord nj;
      append_word(nj, u[i + 1], true, cap);
      append_word(nj, u[i], false, cap);
      append_word(nj, u[i + 1], false, cap);
      u[i] = std::move(u[i + 1]);
      u[i + 1] = std::move(nj);
    }
  }
  return u;
}

}  // namespace

bool artin_equal(const BraidWord& a, const BraidWord& b, std::size_t max_letters) {
  if (a.strands != b.strands) throw InputError("artin_equal: strand-count mismatch");
  return artin_images(a, max_letters) == artin_images(b, max_letters);
}

BraidWord full_twist(int n) {
  if (n < 2) throw InputError("full twist needs n >= 2");
  BraidWord r;
  r.strands = n;
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i < n; ++i) r.letters.push_back(i);
  return r;
}

BraidWord FactorizationRecord::assemble() const {
  BraidWord prod;
  prod.strands = degree;
  for (const auto& f : factors) {
    if (f.conjugator.strands != degree)
      throw InputError("factorization: conjugator strand count differs from degree");
    BraidWord mid;
    mid.strands = degree;
    int reps = std::abs(f.exponent);
    for (int k = 0; k < reps; ++k) mid.letters.push_back(f.exponent > 0 ? 1 : -1);
    prod = compose(compose(compose(prod, f.conjugator), mid), invert(f.conjugator));
  }
  return free_reduce(prod);
}

Verdict verify_factorization(const FactorizationRecord& f, std::size_t max_letters) {
  if (f.degree < 2) throw InputError("factorization degree must be >= 2");
  if (f.factors.empty())
    return Verdict::violated(0, f.degree * (f.degree - 1), "exponent-sum");
  for (const auto& fac : f.factors) {
    int i = fac.exponent;
    if (!(i == -2 || i == 1 || i == 2 || i == 3))
      return Verdict::violated(i, 0, "exponent-set");
  }
  long long esum = 0;
  for (const auto& fac : f.factors) esum += fac.exponent;
  long long want = (long long)f.degree * (f.degree - 1);
  if (esum != want) return Verdict::violated(esum, want, "exponent-sum");

  BraidWord prod = f.assemble();
  std::vector<int> perm = underlying_permutation(prod);
  for (int i = 0; i < (int)perm.size(); ++i)
    if (perm[i] != i) return Verdict::violated(i, perm[i], "permutation");

  if (!artin_equal(prod, full_twist(f.degree), max_letters))
    return Verdict::violated(0, 0, "artin");
  return Verdict::holds(esum, want);
}

pd::PlanarDiagram closure_pd(const BraidWord& a) {
  pd::PlanarDiagram d;
  int n = a.strands;
  // Current edge label at each strand position; fresh labels per crossing,
  // then closure identifications merged at the end.
  std::vector<int> cur(n), first(n);
  int next = 1;
  for (int i = 0; i < n; ++i) cur[i] = first[i] = next++;
  std::vector<bool> touched(n, false);

  struct RawX {
    int a, b, c, d, sign;
  };
  std::vector<RawX> raw;
  for (int e : a.letters) {
    int i = std::abs(e) - 1;
    touched[i] = touched[i + 1] = true;
    int p = next++;  // new edge at position i above the crossing
    int q = next++;  // new edge at position i+1
    if (e > 0)
      raw.push_back({cur[i + 1], q, p, cur[i], +1});
    else
      raw.push_back({cur[i], cur[i + 1], q, p, -1});
    cur[i] = p;
    cur[i + 1] = q;
  }

  // Trace closure: final edge at position i is the same edge as the initial.
  std::vector<int> repr(next);
  std::iota(repr.begin(), repr.end(), 0);
  auto find = [&](int x) {
    while (repr[x] != x) x = repr[x] = repr[repr[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    int x = find(cur[i]), y = find(first[i]);
    if (x != y) repr[x] = y;
  }

  // Relabel surviving classes 1..E.
  std::vector<int> relab(next, 0);
  int edges = 0;
  auto label = [&](int x) {
    int r = find(x);
    if (relab[r] == 0) relab[r] = ++edges;
    return relab[r];
  };
  for (const auto& rx : raw)
    d.crossings.push_back({{label(rx.a), label(rx.b), label(rx.c), label(rx.d)}, rx.sign});
  for (int i = 0; i < n; ++i)
    if (!touched[i]) d.free_loops++;
  d.validate();
  return d;
}

long long transverse_self_linking(const BraidWord& a) {
  return (long long)a.exponent_sum() - a.strands;
}

std::string to_string(const BraidWord& a) {
  std::ostringstream os;
  os << "B" << a.strands << "[";
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    if (i) os << " ";
    os << a.letters[i];
  }
  os << "]";
  return os.str();
}

}  // namespace trisym::braid
