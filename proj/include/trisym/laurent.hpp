#pragma once

// Laurent polynomials in the quantum variable q with int64 coefficients.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace trisym {

struct Laurent {
  std::map<int, long long> c;  // exponent -> coefficient, zeros erased

  void add(int exp, long long coeff) {
    if (coeff == 0) return;
    auto it = c.find(exp);
    if (it == c.end()) {
      c[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c.erase(it);
    }
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [e, k] : b.c) r.add(e, k);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [e1, k1] : a.c)
      for (auto& [e2, k2] : b.c) r.add(e1 + e2, k1 * k2);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }

  static Laurent one() {
    Laurent r;
    r.add(0, 1);
    return r;
  }
  static Laurent term(int exp, long long coeff = 1) {
    Laurent r;
    r.add(exp, coeff);
    return r;
  }
  // q + q^-1
  static Laurent circle() {
    Laurent r;
    r.add(1, 1);
    r.add(-1, 1);
    return r;
  }

  Laurent pow(int k) const {
    Laurent r = one();
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      long long k = it->second;
      if (!first) os << (k > 0 ? " + " : " - ");
      else if (k < 0) os << "-";
      long long mag = k > 0 ? k : -k;
      int e = it->first;
      if (mag != 1 || e == 0) os << mag;
      if (e != 0) {
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }
};

}  // namespace trisym
