#pragma once

// Wirtinger presentations of trivial-tangle diagrams and the directed
// rewriting engine for loop-triviality checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trisym/freegroup.hpp"

namespace trisym::tangle {

// One crossing of a tangle diagram: the under-strand arc `in` ends and the
// arc `out` begins; `over` is the arc passing over.  Sign +1 yields the
// relator out = over^-1 in over, sign -1 yields out = over in over^-1.
struct Crossing {
  std::string over, in, out;
  int sign = +1;
};

struct TangleDiagram {
  std::vector<std::string> arcs;
  std::vector<std::string> bottom;  // height-0 arcs (free generators)
  std::vector<Crossing> crossings;
  std::vector<std::string> kill;                 // generators set to identity
  std::optional<std::string> longitude;          // distinguished generator
  std::map<std::string, fg::FreeWord> substitution;  // surface letter -> meridian word
};

struct TanglePresentation {
  std::vector<std::string> generators;
  std::vector<std::string> bottom;
  std::vector<fg::FreeWord> relators;  // out^-1 over^-+ in over^+- per crossing
  // Directed rules out -> replacement, acyclic by the height check.
  std::map<std::string, fg::FreeWord> rules;
  std::vector<std::string> kill;
  std::optional<std::string> longitude;
  std::map<std::string, fg::FreeWord> substitution;
};

// Builds the presentation; validates arc labels and that the directed rules
// admit a height function (each out-arc strictly above its inputs).
TanglePresentation wirtinger(const TangleDiagram& d);

// Fully rewrites a word: substitute derived arcs by their rules, delete
// killed generators, free-reduce.  The result is a normal form in the free
// group on the surviving bottom generators.
fg::FreeWord rewrite(const fg::FreeWord& w, const TanglePresentation& p);

// Rank of the presented group after rewriting (surviving free generators).
int presented_free_rank(const TanglePresentation& p);

// Applies the substitution map to a surface word, then rewrites; true iff
// the image is the empty word.
bool verify_relation_trivial(const fg::FreeWord& rho, const TanglePresentation& p);

// The four local tangle models of a conjugated half-twist, keyed by the
// exponent k in {-2, 1, 2, 3}.  Both words of half_twist_relations(k) are
// trivial over the model.
TangleDiagram half_twist_local_model(int k);

}  // namespace trisym::tangle
