#pragma once

// Free-group words over named generators, plus the longitude normal form
// l^p * (word in longitude-conjugated meridians).

#include <string>
#include <vector>

namespace trisym::fg {

struct Letter {
  std::string gen;
  int sign = +1;  // +-1

  bool inverse_of(const Letter& o) const { return gen == o.gen && sign == -o.sign; }
  bool operator==(const Letter& o) const = default;
};

struct FreeWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const FreeWord& o) const = default;
};

enum class WordMode { Reduce, Multiply, Invert, Conjugate };

FreeWord reduce(const FreeWord& u);
FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
// v^-1 u v, reduced.
FreeWord conjugate(const FreeWord& u, const FreeWord& v);
FreeWord word_ops(const FreeWord& u, const FreeWord& v, WordMode mode);

// Parses words like "a b^-1 c^2"; empty string is the empty word.
FreeWord parse_word(const std::string& text);
std::string word_to_string(const FreeWord& w);

// Meridian conjugated by a power of the longitude: l^-depth gen^sign l^depth.
struct ConjLetter {
  std::string gen;
  int sign = +1;
  long long depth = 0;

  bool operator==(const ConjLetter& o) const = default;
};

// Normal form l^p * tail with an l-free tail of conjugated meridians.
struct LongWord {
  long long p = 0;
  std::vector<ConjLetter> tail;

  bool trivial() const { return p == 0 && tail.empty(); }
  bool operator==(const LongWord& o) const = default;
};

// Moves every longitude letter of `w` to the front using the rewriting rule
// x l = l (l^-1 x l); `longitude` names the l-generator.
LongWord longitude_normal_form(const FreeWord& w, const std::string& longitude);

// Expands l^p and the conjugated letters back into a plain reduced word.
FreeWord expand(const LongWord& nf, const std::string& longitude);

LongWord lw_multiply(const LongWord& a, const LongWord& b);
LongWord lw_invert(const LongWord& a);
LongWord lw_power_l(long long k);  // l^k

// The half-twist relation table; k must be one of -2, 1, 2, 3.
std::pair<FreeWord, FreeWord> half_twist_relations(int k);

}  // namespace trisym::fg
