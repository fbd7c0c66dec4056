#pragma once

// Artin braid words, the induced free-group automorphisms, full-twist
// factorizations and trace closures.

#include <cstdint>
#include <string>
#include <vector>

#include "trisym/verdict.hpp"

namespace trisym::pd {
struct PlanarDiagram;
}

namespace trisym::braid {

// Word in the Artin generators of B_n.  A letter e with 1 <= |e| <= n-1
// stands for sigma_|e| raised to sign(e).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w);

  int exponent_sum() const;
  bool empty() const { return letters.empty(); }
};

enum class WordMode { Compose, Invert, Reduce };

BraidWord word_algebra(const BraidWord& a, const BraidWord& b, WordMode mode);
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord free_reduce(const BraidWord& a);

// Permutation of {0..n-1} induced by the word (letters applied left to right).
std::vector<int> underlying_permutation(const BraidWord& a);

// Equality in B_n via the induced automorphisms of the free group F_n.
// Intermediate free words are capped at `max_letters`; overflow throws
// BudgetError.
bool artin_equal(const BraidWord& a, const BraidWord& b,
                 std::size_t max_letters = 1000000);

// (sigma_1 ... sigma_{n-1})^n, the generator of the center for n >= 3.
BraidWord full_twist(int n);

// Product of conjugated powers of sigma_1 on `degree` strands.
struct FactorizationRecord {
  int degree = 2;
  struct Factor {
    BraidWord conjugator;  // word on `degree` strands
    int exponent = 1;      // in {-2, 1, 2, 3}
  };
  std::vector<Factor> factors;

  BraidWord assemble() const;
};

// Staged check that the record multiplies out to the full twist.  The
// verdict witness names the first failing stage: "exponent-set",
// "exponent-sum", "permutation", "artin".
Verdict verify_factorization(const FactorizationRecord& f,
                             std::size_t max_letters = 1000000);

// Trace closure (all strands closed off to the right); returns a planar
// diagram with one crossing per letter.
pd::PlanarDiagram closure_pd(const BraidWord& a);

// Self-linking of the transverse closure: exponent sum minus strand count.
long long transverse_self_linking(const BraidWord& a);

std::string to_string(const BraidWord& a);

}  // namespace trisym::braid
