#include "trisym/tangle.hpp"

#include <algorithm>
#include <set>

#include "trisym/errors.hpp"

namespace trisym::tangle {

using fg::FreeWord;

TanglePresentation wirtinger(const TangleDiagram& d) {
  TanglePresentation p;
  p.generators = d.arcs;
  p.bottom = d.bottom;
  p.kill = d.kill;
  p.longitude = d.longitude;
  p.substitution = d.substitution;

  std::set<std::string> declared(d.arcs.begin(), d.arcs.end());
  for (const auto& b : d.bottom)
    if (!declared.count(b)) throw InputError("bottom arc '" + b + "' not declared");
  for (const auto& k : d.kill)
    if (!declared.count(k)) throw InputError("killed arc '" + k + "' not declared");

  std::set<std::string> bottom(d.bottom.begin(), d.bottom.end());
  std::set<std::string> defined;
  for (const auto& x : d.crossings) {
    for (const auto& a : {x.over, x.in, x.out})
      if (!declared.count(a)) throw InputError("crossing uses undeclared arc '" + a + "'");
    if (bottom.count(x.out))
      throw InputError("bottom arc '" + x.out + "' cannot be a crossing output");
    if (defined.count(x.out))
      throw InputError("arc '" + x.out + "' is the output of two crossings");
    defined.insert(x.out);

    FreeWord rhs;
    rhs.letters.push_back({x.over, -x.sign});
    rhs.letters.push_back({x.in, +1});
    rhs.letters.push_back({x.over, +x.sign});
    p.rules[x.out] = rhs;

    FreeWord relator;
    relator.letters.push_back({x.out, -1});
    for (const auto& l : rhs.letters) relator.letters.push_back(l);
    p.relators.push_back(relator);
  }
  for (const auto& a : d.arcs)
    if (!bottom.count(a) && !defined.count(a))
      throw InputError("arc '" + a + "' is neither bottom nor produced by a crossing");

  // Height check: iteratively peel arcs all of whose rule inputs have heights.
  std::map<std::string, int> height;
  for (const auto& b : d.bottom) height[b] = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [out, rhs] : p.rules) {
      if (height.count(out)) continue;
      int h = 0;
      bool ready = true;
      for (const auto& l : rhs.letters) {
        auto it = height.find(l.gen);
        if (it == height.end()) {
          ready = false;
          break;
        }
        h = std::max(h, it->second + 1);
      }
      if (ready) {
        height[out] = h;
        progress = true;
      }
    }
  }
  for (const auto& [out, rhs] : p.rules)
    if (!height.count(out))
      throw InputError("rewriting rules for arc '" + out +
                       "' admit no height function (not a swept trivial tangle)");
  return p;
}

FreeWord rewrite(const fg::FreeWord& w, const TanglePresentation& p) {
  std::set<std::string> killed(p.kill.begin(), p.kill.end());
  // Substitute one outermost derived generator at a time; heights strictly
  // decrease so this terminates.
  FreeWord cur = fg::reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    FreeWord next;
    for (const auto& l : cur.letters) {
      if (killed.count(l.gen)) {
        changed = true;
        continue;
      }
      auto it = p.rules.find(l.gen);
      if (it == p.rules.end()) {
        next.letters.push_back(l);
        continue;
      }
      changed = true;
      const FreeWord& rhs = it->second;
      if (l.sign > 0) {
        for (const auto& r : rhs.letters) next.letters.push_back(r);
      } else {
        for (auto rit = rhs.letters.rbegin(); rit != rhs.letters.rend(); ++rit)
          next.letters.push_back({rit->gen, -rit->sign});
      }
    }
    cur = fg::reduce(next);
  }
  return cur;
}

int presented_free_rank(const TanglePresentation& p) {
  std::set<std::string> killed(p.kill.begin(), p.kill.end());
  int rank = 0;
  for (const auto& b : p.bottom)
    if (!killed.count(b)) rank++;
  if (p.longitude && !killed.count(*p.longitude)) rank++;
  return rank;
}

bool verify_relation_trivial(const fg::FreeWord& rho, const TanglePresentation& p) {
  FreeWord img;
  for (const auto& l : rho.letters) {
    auto it = p.substitution.find(l.gen);
    fg::FreeWord piece;
    if (it != p.substitution.end()) {
      piece = it->second;
    } else if (std::find(p.generators.begin(), p.generators.end(), l.gen) !=
               p.generators.end()) {
      piece.letters.push_back({l.gen, +1});
    } else {
      throw InputError("surface letter '" + l.gen + "' has no substitution");
    }
    if (l.sign < 0) piece = fg::invert(piece);
    for (const auto& q : piece.letters) img.letters.push_back(q);
  }
  return rewrite(img, p).empty();
}

TangleDiagram half_twist_local_model(int k) {
  TangleDiagram d;
  auto sub = [&](const std::string& sym, const std::string& text) {
    d.substitution[sym] = fg::parse_word(text);
  };
  switch (k) {
    case 1:
      // Two disjoint cap arcs; the far endpoint of an arc carries the
      // inverse meridian of its near endpoint.
      d.arcs = {"p", "q"};
      d.bottom = {"p", "q"};
      sub("a", "p");
      sub("d", "p^-1");
      sub("c", "q");
      sub("b", "q^-1");
      break;
    case 2:
      // Clasp: each cap passes once under the other.
      d.arcs = {"y1", "x1", "y2", "x2"};
      d.bottom = {"y1", "x1"};
      d.crossings = {{"x1", "y1", "y2", +1}, {"y1", "x1", "x2", -1}};
      sub("a", "y1");
      sub("b", "x1");
      sub("c", "y2^-1");
      sub("d", "x2^-1");
      break;
    case -2:
      // Mirror clasp; the access paths to the far endpoints wind once
      // around the near strands.
      d.arcs = {"y1", "x1", "y2", "x2"};
      d.bottom = {"y1", "x1"};
      d.crossings = {{"x1", "y1", "y2", -1}, {"y1", "x1", "x2", -1}};
      sub("a", "y1");
      sub("b", "x1");
      sub("c", "y1 y2^-1 y1^-1");
      sub("d", "x1 x2^-1 x1^-1");
      break;
    case 3:
      // Cusp model: the second undercrossing passes under the already
      // rewritten strand.
      d.arcs = {"y1", "x1", "y2", "x2"};
      d.bottom = {"y1", "x1"};
      d.crossings = {{"x1", "y1", "y2", +1}, {"y2", "x1", "x2", +1}};
      sub("a", "y1");
      sub("b", "x1");
      sub("c", "x2^-1");
      sub("d", "y1 y2^-1 y1^-1");
      break;
    default:
      throw InputError("half-twist exponent must be one of -2, 1, 2, 3");
  }
  return d;
}

}  // namespace trisym::tangle
