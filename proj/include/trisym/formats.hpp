#pragma once

// Line-oriented text formats: first non-comment line names the kind, the
// rest are `key = value` lines; `#` starts a comment, rationals are p/q,
// integer lists are space-separated.  Emission is canonical, so
// emit(parse(x)) is byte-identical on canonical files.

#include <string>
#include <vector>

#include "trisym/braid.hpp"
#include "trisym/graft.hpp"
#include "trisym/grid.hpp"
#include "trisym/lattice.hpp"
#include "trisym/monodromy.hpp"
#include "trisym/pd.hpp"
#include "trisym/tangle.hpp"
#include "trisym/torus_diagram.hpp"
#include "trisym/trirec.hpp"

namespace trisym::fmt {

enum class Kind {
  Braid,
  Factorization,
  Pd,
  Tangle,
  Monodromy,
  TorusDiagram,
  Trirec,
  Lattice,
  Grid,
  FormField,
};

Kind kind_of(const std::string& text);
const char* kind_name(Kind k);

braid::BraidWord parse_braid(const std::string& text);
std::string emit(const braid::BraidWord& w);

braid::FactorizationRecord parse_factorization(const std::string& text);
std::string emit(const braid::FactorizationRecord& f);

pd::PlanarDiagram parse_pd(const std::string& text);
std::string emit(const pd::PlanarDiagram& d);

tangle::TangleDiagram parse_tangle(const std::string& text);
std::string emit(const tangle::TangleDiagram& d);

mono::MonodromyAssignment parse_monodromy(const std::string& text);
std::string emit(const mono::MonodromyAssignment& m);

tri::TorusDiagram parse_torusdiagram(const std::string& text);
std::string emit(const tri::TorusDiagram& d);

tri::BridgeTrisectionRecord parse_trirec(const std::string& text);
std::string emit(const tri::BridgeTrisectionRecord& r);

tri::LatticeQuery parse_lattice(const std::string& text);
std::string emit(const tri::LatticeQuery& q);

graft::GridChart parse_grid(const std::string& text);
std::string emit(const graft::GridChart& c);

// Symbolic form description: terms `coeff monomial basis` where monomial is
// `const` or a single coordinate name and basis is `.` (degree 0) or
// `d<axis>` (degree 1).
struct FormTerm {
  double coeff = 0;
  std::string monomial;  // "const" or an axis name
  std::string basis;     // "." or "d<axis>"
};

struct FormSpec {
  int degree = 0;
  std::vector<FormTerm> terms;

  graft::FormField instantiate(const graft::GridChart& chart) const;
};

FormSpec parse_formfield(const std::string& text);
std::string emit(const FormSpec& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace trisym::fmt
