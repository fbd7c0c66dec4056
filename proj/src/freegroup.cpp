#include "trisym/freegroup.hpp"

#include <sstream>

#include "trisym/errors.hpp"

namespace trisym::fg {

FreeWord reduce(const FreeWord& u) {
  FreeWord r;
  for (const auto& l : u.letters) {
    if (!r.letters.empty() && r.letters.back().inverse_of(l))
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  FreeWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return reduce(r);
}

FreeWord invert(const FreeWord& u) {
  FreeWord r;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    r.letters.push_back({it->gen, -it->sign});
  return r;
}

FreeWord conjugate(const FreeWord& u, const FreeWord& v) {
  return multiply(multiply(invert(v), u), v);
}

FreeWord word_ops(const FreeWord& u, const FreeWord& v, WordMode mode) {
  switch (mode) {
    case WordMode::Reduce: return reduce(u);
    case WordMode::Multiply: return multiply(u, v);
    case WordMode::Invert: return invert(u);
    case WordMode::Conjugate: return conjugate(u, v);
  }
  throw InputError("unknown free-word mode");
}

FreeWord parse_word(const std::string& text) {
  FreeWord w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::string gen = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      gen = tok.substr(0, caret);
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (...) {
        throw InputError("bad exponent in word token '" + tok + "'");
      }
    }
    if (gen.empty()) throw InputError("empty generator in word");
    int sign = exp >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(exp); ++i) w.letters.push_back({gen, sign});
  }
  return w;
}

std::string word_to_string(const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << " ";
    os << w.letters[i].gen;
    if (w.letters[i].sign < 0) os << "^-1";
  }
  return os.str();
}

namespace {

void push_conj(std::vector<ConjLetter>& tail, const ConjLetter& c) {
  if (!tail.empty() && tail.back().gen == c.gen && tail.back().depth == c.depth &&
      tail.back().sign == -c.sign)
    tail.pop_back();
  else
    tail.push_back(c);
}

}  // namespace

LongWord longitude_normal_form(const FreeWord& w, const std::string& longitude) {
  LongWord nf;
  for (const auto& l : reduce(w).letters) {
    if (l.gen == longitude) {
      // moving l^s to the front conjugates every letter collected so far
      for (auto& c : nf.tail) c.depth += l.sign;
      nf.p += l.sign;
    } else {
      push_conj(nf.tail, {l.gen, l.sign, 0});
    }
  }
  return nf;
}

FreeWord expand(const LongWord& nf, const std::string& longitude) {
  FreeWord w;
  auto push_l = [&](long long k) {
    int s = k >= 0 ? 1 : -1;
    for (long long i = 0; i < std::abs(k); ++i) w.letters.push_back({longitude, s});
  };
  push_l(nf.p);
  for (const auto& c : nf.tail) {
    push_l(-c.depth);
    w.letters.push_back({c.gen, c.sign});
    push_l(c.depth);
  }
  return reduce(w);
}

LongWord lw_multiply(const LongWord& a, const LongWord& b) {
  LongWord r;
  r.p = a.p + b.p;
  // l^pa A l^pb B = l^(pa+pb) (A shifted by pb) B
  for (const auto& c : a.tail) push_conj(r.tail, {c.gen, c.sign, c.depth + b.p});
  for (const auto& c : b.tail) push_conj(r.tail, c);
  return r;
}

LongWord lw_invert(const LongWord& a) {
  LongWord r;
  r.p = -a.p;
  for (auto it = a.tail.rbegin(); it != a.tail.rend(); ++it)
    push_conj(r.tail, {it->gen, -it->sign, it->depth - a.p});
  return r;
}

LongWord lw_power_l(long long k) {
  LongWord r;
  r.p = k;
  return r;
}

std::pair<FreeWord, FreeWord> half_twist_relations(int k) {
  switch (k) {
    case 1: return {parse_word("a d"), parse_word("c b")};
    case 2: return {parse_word("a^-1 d a b"), parse_word("c b^-1 a b")};
    case -2:
      return {parse_word("a b^-1 a^-1 c a b"), parse_word("b^-1 d b a b a^-1")};
    case 3:
      return {parse_word("a^-1 d a b^-1 a b"), parse_word("c b^-1 a^-1 b a b")};
    default:
      throw InputError("half-twist exponent must be one of -2, 1, 2, 3");
  }
}

}  // namespace trisym::fg
