#include "trisym/formats.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "trisym/errors.hpp"

namespace trisym::fmt {

namespace {

struct Line {
  int number = 0;
  std::string key, value;
};

struct Parsed {
  std::string kind;
  std::vector<Line> lines;

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw InputError("line " + std::to_string(line) + ": " + msg);
  }

  // Single-occurrence key; `required` controls the missing-key behavior.
  const Line* one(const std::string& key, bool required = true) const {
    const Line* found = nullptr;
    for (const auto& l : lines) {
      if (l.key != key) continue;
      if (found) fail(l.number, "duplicate key '" + key + "'");
      found = &l;
    }
    if (!found && required) throw InputError("missing key '" + key + "'");
    return found;
  }

  std::vector<const Line*> all(const std::string& key) const {
    std::vector<const Line*> out;
    for (const auto& l : lines)
      if (l.key == key) out.push_back(&l);
    return out;
  }

  void allow_keys(const std::set<std::string>& keys) const {
    for (const auto& l : lines)
      if (!keys.count(l.key)) fail(l.number, "unknown key '" + l.key + "'");
  }
};

Parsed parse_lines(const std::string& text) {
  Parsed p;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    number++;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    auto b = std::find_if(line.begin(), line.end(), notspace);
    auto e = std::find_if(line.rbegin(), line.rend(), notspace).base();
    if (b >= e) continue;
    line = std::string(b, e);
    if (p.kind.empty()) {
      if (line.find('=') != std::string::npos)
        throw InputError("line " + std::to_string(number) + ": expected a kind header");
      p.kind = line;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("line " + std::to_string(number) + ": expected key = value");
    auto trim = [&](std::string s) {
      auto b2 = std::find_if(s.begin(), s.end(), notspace);
      auto e2 = std::find_if(s.rbegin(), s.rend(), notspace).base();
      return b2 >= e2 ? std::string() : std::string(b2, e2);
    };
    p.lines.push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
  }
  if (p.kind.empty()) throw InputError("empty input file");
  return p;
}

long long to_int(const Parsed& p, const Line& l, const std::string& tok) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trail");
    return v;
  } catch (...) {
    p.fail(l.number, "expected an integer, got '" + tok + "'");
  }
}

double to_double(const Parsed& p, const Line& l, const std::string& tok) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trail");
    return v;
  } catch (...) {
    p.fail(l.number, "expected a number, got '" + tok + "'");
  }
}

Rat64 to_rat(const Parsed& p, const Line& l, const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rat64(to_int(p, l, tok));
  long long num = to_int(p, l, tok.substr(0, slash));
  long long den = to_int(p, l, tok.substr(slash + 1));
  if (den == 0) p.fail(l.number, "zero denominator");
  return Rat64(num, den);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::vector<long long> int_list(const Parsed& p, const Line& l) {
  std::vector<long long> out;
  for (const auto& t : tokens(l.value)) out.push_back(to_int(p, l, t));
  return out;
}

std::string rat_str(const Rat64& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string dbl_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void expect_kind(const Parsed& p, const std::string& want) {
  if (p.kind != want)
    throw InputError("expected kind '" + want + "', file says '" + p.kind + "'");
}

}  // namespace

Kind kind_of(const std::string& text) {
  Parsed p = parse_lines(text);
  static const std::map<std::string, Kind> names = {
      {"braid", Kind::Braid},           {"factorization", Kind::Factorization},
      {"pd", Kind::Pd},                 {"tangle", Kind::Tangle},
      {"monodromy", Kind::Monodromy},   {"torusdiagram", Kind::TorusDiagram},
      {"trirec", Kind::Trirec},         {"lattice", Kind::Lattice},
      {"grid", Kind::Grid},             {"formfield", Kind::FormField},
  };
  auto it = names.find(p.kind);
  if (it == names.end()) throw InputError("unknown input kind '" + p.kind + "'");
  return it->second;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Braid: return "braid";
    case Kind::Factorization: return "factorization";
    case Kind::Pd: return "pd";
    case Kind::Tangle: return "tangle";
    case Kind::Monodromy: return "monodromy";
    case Kind::TorusDiagram: return "torusdiagram";
    case Kind::Trirec: return "trirec";
    case Kind::Lattice: return "lattice";
    case Kind::Grid: return "grid";
    case Kind::FormField: return "formfield";
  }
  return "?";
}

braid::BraidWord parse_braid(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "braid");
  p.allow_keys({"strands", "word"});
  const Line* s = p.one("strands");
  const Line* w = p.one("word");
  long long n = to_int(p, *s, s->value);
  if (n < 1 || n > 64) p.fail(s->number, "strand count out of range");
  std::vector<int> letters;
  for (const auto& t : tokens(w->value)) {
    long long e = to_int(p, *w, t);
    if (e == 0 || std::llabs(e) > n - 1)
      p.fail(w->number, "generator index " + t + " illegal for " + std::to_string(n) +
                            " strands");
    letters.push_back((int)e);
  }
  return braid::BraidWord((int)n, letters);
}

std::string emit(const braid::BraidWord& w) {
  std::ostringstream os;
  os << "braid\nstrands = " << w.strands << "\nword =";
  for (int e : w.letters) os << " " << e;
  os << "\n";
  return os.str();
}

braid::FactorizationRecord parse_factorization(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "factorization");
  p.allow_keys({"degree", "factor"});
  const Line* d = p.one("degree");
  braid::FactorizationRecord f;
  long long deg = to_int(p, *d, d->value);
  if (deg < 2 || deg > 64) p.fail(d->number, "degree out of range");
  f.degree = (int)deg;
  for (const Line* l : p.all("factor")) {
    auto colon = l->value.find(':');
    if (colon == std::string::npos) p.fail(l->number, "factor needs 'exponent : conjugator'");
    braid::FactorizationRecord::Factor fac;
    fac.exponent = (int)to_int(p, *l, tokens(l->value.substr(0, colon)).at(0));
    std::vector<int> letters;
    for (const auto& t : tokens(l->value.substr(colon + 1))) {
      long long e = to_int(p, *l, t);
      if (e == 0 || std::llabs(e) > f.degree - 1) p.fail(l->number, "conjugator letter illegal");
      letters.push_back((int)e);
    }
    fac.conjugator = braid::BraidWord(f.degree, letters);
    f.factors.push_back(std::move(fac));
  }
  return f;
}

std::string emit(const braid::FactorizationRecord& f) {
  std::ostringstream os;
  os << "factorization\ndegree = " << f.degree << "\n";
  for (const auto& fac : f.factors) {
    os << "factor = " << fac.exponent << " :";
    for (int e : fac.conjugator.letters) os << " " << e;
    os << "\n";
  }
  return os.str();
}

pd::PlanarDiagram parse_pd(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "pd");
  p.allow_keys({"free_loops", "crossing"});
  pd::PlanarDiagram d;
  if (const Line* fl = p.one("free_loops", false))
    d.free_loops = (int)to_int(p, *fl, fl->value);
  for (const Line* l : p.all("crossing")) {
    auto tk = tokens(l->value);
    if (tk.size() != 5) p.fail(l->number, "crossing needs four edges and a sign");
    pd::Crossing x;
    for (int i = 0; i < 4; ++i) {
      long long e = to_int(p, *l, tk[i]);
      if (e < 1) p.fail(l->number, "edge labels are positive");
      x.e[i] = (int)e;
    }
    long long s = to_int(p, *l, tk[4]);
    if (s != 1 && s != -1) p.fail(l->number, "crossing sign must be +1 or -1");
    x.sign = (int)s;
    d.crossings.push_back(x);
  }
  d.validate();
  return d;
}

std::string emit(const pd::PlanarDiagram& d) {
  std::ostringstream os;
  os << "pd\nfree_loops = " << d.free_loops << "\n";
  for (const auto& x : d.crossings) {
    os << "crossing = " << x.e[0] << " " << x.e[1] << " " << x.e[2] << " " << x.e[3] << " "
       << (x.sign > 0 ? "+1" : "-1") << "\n";
  }
  return os.str();
}

tangle::TangleDiagram parse_tangle(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "tangle");
  p.allow_keys({"arcs", "bottom", "crossing", "kill", "longitude", "subst"});
  tangle::TangleDiagram d;
  d.arcs = tokens(p.one("arcs")->value);
  d.bottom = tokens(p.one("bottom")->value);
  if (const Line* k = p.one("kill", false)) d.kill = tokens(k->value);
  if (const Line* l = p.one("longitude", false)) {
    auto tk = tokens(l->value);
    if (tk.size() > 1) p.fail(l->number, "longitude takes one generator");
    if (!tk.empty()) d.longitude = tk[0];
  }
  for (const Line* l : p.all("crossing")) {
    auto tk = tokens(l->value);
    if (tk.size() != 4) p.fail(l->number, "crossing needs 'over in out sign'");
    long long s = to_int(p, *l, tk[3]);
    if (s != 1 && s != -1) p.fail(l->number, "crossing sign must be +1 or -1");
    d.crossings.push_back({tk[0], tk[1], tk[2], (int)s});
  }
  for (const Line* l : p.all("subst")) {
    auto colon = l->value.find(':');
    if (colon == std::string::npos) p.fail(l->number, "subst needs 'letter : word'");
    auto lhs = tokens(l->value.substr(0, colon));
    if (lhs.size() != 1) p.fail(l->number, "subst needs a single letter on the left");
    d.substitution[lhs[0]] = fg::parse_word(l->value.substr(colon + 1));
  }
  return d;
}

std::string emit(const tangle::TangleDiagram& d) {
  std::ostringstream os;
  os << "tangle\narcs =";
  for (const auto& a : d.arcs) os << " " << a;
  os << "\nbottom =";
  for (const auto& a : d.bottom) os << " " << a;
  os << "\n";
  for (const auto& x : d.crossings)
    os << "crossing = " << x.over << " " << x.in << " " << x.out << " "
       << (x.sign > 0 ? "+1" : "-1") << "\n";
  if (!d.kill.empty()) {
    os << "kill =";
    for (const auto& k : d.kill) os << " " << k;
    os << "\n";
  }
  if (d.longitude) os << "longitude = " << *d.longitude << "\n";
  for (const auto& [sym, w] : d.substitution)
    os << "subst = " << sym << " : " << fg::word_to_string(w) << "\n";
  return os.str();
}

mono::MonodromyAssignment parse_monodromy(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "monodromy");
  p.allow_keys({"degree", "map"});
  mono::MonodromyAssignment m;
  const Line* d = p.one("degree");
  long long n = to_int(p, *d, d->value);
  if (n < 1 || n > 1000) p.fail(d->number, "degree out of range");
  m.degree = (int)n;
  for (const Line* l : p.all("map")) {
    auto colon = l->value.find(':');
    if (colon == std::string::npos) p.fail(l->number, "map needs 'generator : images'");
    auto lhs = tokens(l->value.substr(0, colon));
    if (lhs.size() != 1) p.fail(l->number, "map needs a single generator");
    std::vector<int> perm;
    for (const auto& t : tokens(l->value.substr(colon + 1))) {
      long long v = to_int(p, *l, t);
      if (v < 1 || v > m.degree) p.fail(l->number, "permutation image out of range");
      perm.push_back((int)v - 1);
    }
    if ((int)perm.size() != m.degree) p.fail(l->number, "permutation has wrong length");
    m.images[lhs[0]] = perm;
  }
  return m;
}

std::string emit(const mono::MonodromyAssignment& m) {
  std::ostringstream os;
  os << "monodromy\ndegree = " << m.degree << "\n";
  for (const auto& [g, perm] : m.images) {
    os << "map = " << g << " :";
    for (int v : perm) os << " " << v + 1;
    os << "\n";
  }
  return os.str();
}

tri::TorusDiagram parse_torusdiagram(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "torusdiagram");
  p.allow_keys({"point", "arc"});
  tri::TorusDiagram d;
  for (const Line* l : p.all("point")) {
    auto tk = tokens(l->value);
    if (tk.size() != 3) p.fail(l->number, "point needs 'x y sign'");
    tri::BridgePoint bp;
    bp.pos.x = to_rat(p, *l, tk[0]);
    bp.pos.y = to_rat(p, *l, tk[1]);
    long long s = to_int(p, *l, tk[2]);
    if (s != 1 && s != -1) p.fail(l->number, "point sign must be +1 or -1");
    bp.sign = (int)s;
    d.points.push_back(bp);
  }
  for (const Line* l : p.all("arc")) {
    // family tail head : x y ; x y ... : ox oy ; ox oy ...
    auto c1 = l->value.find(':');
    if (c1 == std::string::npos) p.fail(l->number, "arc needs vertex data");
    auto c2 = l->value.find(':', c1 + 1);
    auto head_tk = tokens(l->value.substr(0, c1));
    if (head_tk.size() != 3) p.fail(l->number, "arc needs 'family tail head'");
    tri::Arc a;
    if (head_tk[0] == "A") a.family = tri::Family::A;
    else if (head_tk[0] == "B") a.family = tri::Family::B;
    else if (head_tk[0] == "C") a.family = tri::Family::C;
    else p.fail(l->number, "family must be A, B or C");
    a.tail = (int)to_int(p, *l, head_tk[1]);
    a.head = (int)to_int(p, *l, head_tk[2]);

    std::string vtx = l->value.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                      : c2 - c1 - 1);
    std::istringstream vs(vtx);
    std::string chunk;
    while (std::getline(vs, chunk, ';')) {
      auto ct = tokens(chunk);
      if (ct.empty()) continue;
      if (ct.size() != 2) p.fail(l->number, "vertex needs 'x y'");
      a.vertices.push_back({to_rat(p, *l, ct[0]), to_rat(p, *l, ct[1])});
    }
    if (c2 != std::string::npos) {
      std::istringstream ls(l->value.substr(c2 + 1));
      while (std::getline(ls, chunk, ';')) {
        auto ct = tokens(chunk);
        if (ct.empty()) continue;
        if (ct.size() != 2) p.fail(l->number, "lift needs 'ox oy'");
        a.lift.emplace_back((int)to_int(p, *l, ct[0]), (int)to_int(p, *l, ct[1]));
      }
    }
    d.arcs.push_back(std::move(a));
  }
  d.validate();
  return d;
}

std::string emit(const tri::TorusDiagram& d) {
  std::ostringstream os;
  os << "torusdiagram\n";
  for (const auto& bp : d.points)
    os << "point = " << rat_str(bp.pos.x) << " " << rat_str(bp.pos.y) << " "
       << (bp.sign > 0 ? "+1" : "-1") << "\n";
  for (const auto& a : d.arcs) {
    os << "arc = " << (a.family == tri::Family::A ? "A" : a.family == tri::Family::B ? "B" : "C")
       << " " << a.tail << " " << a.head << " :";
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
      os << " " << rat_str(a.vertices[i].x) << " " << rat_str(a.vertices[i].y);
      if (i + 1 < a.vertices.size()) os << " ;";
    }
    os << " :";
    for (std::size_t i = 0; i < a.lift.size(); ++i) {
      os << " " << a.lift[i].first << " " << a.lift[i].second;
      if (i + 1 < a.lift.size()) os << " ;";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

tri::Provenance to_prov(const Parsed& p, const Line& l, const std::string& tok) {
  if (tok == "diagram") return tri::Provenance::DiagramComputed;
  if (tok == "user") return tri::Provenance::UserSupplied;
  p.fail(l.number, "provenance must be 'diagram' or 'user'");
}

const char* prov_str(tri::Provenance pr) {
  return pr == tri::Provenance::DiagramComputed ? "diagram" : "user";
}

}  // namespace

tri::BridgeTrisectionRecord parse_trirec(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "trirec");
  p.allow_keys({"b", "c", "w", "lk_self", "lk_next", "w_prov", "lk_self_prov",
                "lk_next_prov", "braid_1", "braid_2", "braid_3", "spine"});
  tri::BridgeTrisectionRecord r;
  const Line* bl = p.one("b");
  r.b = to_int(p, *bl, bl->value);
  auto triple = [&](const char* key, auto set) {
    const Line* l = p.one(key);
    auto v = int_list(p, *l);
    if (v.size() != 3) p.fail(l->number, std::string(key) + " needs three integers");
    for (int i = 0; i < 3; ++i) set(i, v[i]);
  };
  triple("c", [&](int i, long long v) { r.c[i] = v; });
  triple("w", [&](int i, long long v) { r.sector[i].writhe_framing = v; });
  triple("lk_self", [&](int i, long long v) { r.sector[i].lk_self = v; });
  triple("lk_next", [&](int i, long long v) { r.sector[i].lk_next = v; });
  auto prov_triple = [&](const char* key, auto set) {
    const Line* l = p.one(key, false);
    if (!l) return;
    auto tk = tokens(l->value);
    if (tk.size() != 3) p.fail(l->number, std::string(key) + " needs three tags");
    for (int i = 0; i < 3; ++i) set(i, to_prov(p, *l, tk[i]));
  };
  prov_triple("w_prov", [&](int i, tri::Provenance v) { r.sector[i].w_prov = v; });
  prov_triple("lk_self_prov", [&](int i, tri::Provenance v) { r.sector[i].lk_self_prov = v; });
  prov_triple("lk_next_prov", [&](int i, tri::Provenance v) { r.sector[i].lk_next_prov = v; });
  if (const Line* l = p.one("spine", false)) {
    auto v = int_list(p, *l);
    if (v.size() != 3) p.fail(l->number, "spine needs three integers");
    for (int i = 0; i < 3; ++i) r.sector[i].spine_summands = (int)v[i];
  }
  for (int i = 1; i <= 3; ++i) {
    const Line* l = p.one("braid_" + std::to_string(i), false);
    if (!l) continue;
    auto colon = l->value.find(':');
    if (colon == std::string::npos) p.fail(l->number, "braid needs 'strands : letters'");
    long long n = to_int(p, *l, tokens(l->value.substr(0, colon)).at(0));
    std::vector<int> letters;
    for (const auto& t : tokens(l->value.substr(colon + 1)))
      letters.push_back((int)to_int(p, *l, t));
    try {
      r.sector[i - 1].braid = braid::BraidWord((int)n, letters);
    } catch (const InputError& e) {
      p.fail(l->number, e.what());
    }
  }
  r.validate();
  return r;
}

std::string emit(const tri::BridgeTrisectionRecord& r) {
  std::ostringstream os;
  os << "trirec\nb = " << r.b << "\n";
  os << "c = " << r.c[0] << " " << r.c[1] << " " << r.c[2] << "\n";
  os << "w = " << r.sector[0].writhe_framing << " " << r.sector[1].writhe_framing << " "
     << r.sector[2].writhe_framing << "\n";
  os << "lk_self = " << r.sector[0].lk_self << " " << r.sector[1].lk_self << " "
     << r.sector[2].lk_self << "\n";
  os << "lk_next = " << r.sector[0].lk_next << " " << r.sector[1].lk_next << " "
     << r.sector[2].lk_next << "\n";
  os << "w_prov = " << prov_str(r.sector[0].w_prov) << " " << prov_str(r.sector[1].w_prov)
     << " " << prov_str(r.sector[2].w_prov) << "\n";
  os << "lk_self_prov = " << prov_str(r.sector[0].lk_self_prov) << " "
     << prov_str(r.sector[1].lk_self_prov) << " " << prov_str(r.sector[2].lk_self_prov) << "\n";
  os << "lk_next_prov = " << prov_str(r.sector[0].lk_next_prov) << " "
     << prov_str(r.sector[1].lk_next_prov) << " " << prov_str(r.sector[2].lk_next_prov) << "\n";
  os << "spine = " << r.sector[0].spine_summands << " " << r.sector[1].spine_summands << " "
     << r.sector[2].spine_summands << "\n";
  for (int i = 0; i < 3; ++i) {
    if (!r.sector[i].braid) continue;
    os << "braid_" << i + 1 << " = " << r.sector[i].braid->strands << " :";
    for (int e : r.sector[i].braid->letters) os << " " << e;
    os << "\n";
  }
  return os.str();
}

tri::LatticeQuery parse_lattice(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "lattice");
  p.allow_keys({"diag", "hyperbolic", "even8", "chi", "sigma", "coefficient", "bound",
                "class", "candidate"});
  tri::LatticeQuery q;
  if (const Line* l = p.one("diag", false)) {
    for (long long v : int_list(p, *l)) {
      if (v != 1 && v != -1) p.fail(l->number, "diagonal entries must be +1 or -1");
      q.form.diag.push_back((int)v);
    }
  }
  if (const Line* l = p.one("hyperbolic", false)) q.form.hyperbolic = (int)to_int(p, *l, l->value);
  if (const Line* l = p.one("even8", false)) q.form.even8 = (int)to_int(p, *l, l->value);
  const Line* chi = p.one("chi");
  q.chi_top = to_int(p, *chi, chi->value);
  const Line* sg = p.one("sigma");
  q.sigma = to_int(p, *sg, sg->value);
  if (const Line* l = p.one("coefficient", false)) {
    long long v = to_int(p, *l, l->value);
    if (v != 2 && v != 3) p.fail(l->number, "coefficient must be 2 or 3");
    q.sigma_coefficient = (int)v;
  }
  if (const Line* l = p.one("bound", false)) q.coord_bound = to_int(p, *l, l->value);
  for (const Line* l : p.all("class")) {
    auto v = int_list(p, *l);
    if ((int)v.size() != q.form.coord_count()) p.fail(l->number, "class has wrong length");
    q.classes.push_back(v);
  }
  for (const Line* l : p.all("candidate")) {
    auto v = int_list(p, *l);
    if ((int)v.size() != q.form.coord_count()) p.fail(l->number, "candidate has wrong length");
    q.explicit_candidates.push_back(v);
  }
  return q;
}

std::string emit(const tri::LatticeQuery& q) {
  std::ostringstream os;
  os << "lattice\ndiag =";
  for (int v : q.form.diag) os << " " << (v > 0 ? "+1" : "-1");
  os << "\nhyperbolic = " << q.form.hyperbolic << "\neven8 = " << q.form.even8;
  os << "\nchi = " << q.chi_top << "\nsigma = " << q.sigma;
  os << "\ncoefficient = " << q.sigma_coefficient << "\nbound = " << q.coord_bound << "\n";
  for (const auto& k : q.classes) {
    os << "class =";
    for (long long v : k) os << " " << v;
    os << "\n";
  }
  for (const auto& c : q.explicit_candidates) {
    os << "candidate =";
    for (long long v : c) os << " " << v;
    os << "\n";
  }
  return os.str();
}

graft::GridChart parse_grid(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "grid");
  p.allow_keys({"axis"});
  graft::GridChart c;
  for (const Line* l : p.all("axis")) {
    auto tk = tokens(l->value);
    if (tk.size() != 5) p.fail(l->number, "axis needs 'name lo hi samples periodic|open'");
    graft::Axis a;
    a.name = tk[0];
    a.lo = to_double(p, *l, tk[1]);
    a.hi = to_double(p, *l, tk[2]);
    long long n = to_int(p, *l, tk[3]);
    if (n < 8 || n > 4096) p.fail(l->number, "axis samples out of range");
    a.samples = (int)n;
    if (tk[4] == "periodic") a.periodic = true;
    else if (tk[4] == "open") a.periodic = false;
    else p.fail(l->number, "axis flag must be 'periodic' or 'open'");
    c.axes.push_back(a);
  }
  c.validate();
  return c;
}

std::string emit(const graft::GridChart& c) {
  std::ostringstream os;
  os << "grid\n";
  for (const auto& a : c.axes)
    os << "axis = " << a.name << " " << dbl_str(a.lo) << " " << dbl_str(a.hi) << " "
       << a.samples << " " << (a.periodic ? "periodic" : "open") << "\n";
  return os.str();
}

graft::FormField FormSpec::instantiate(const graft::GridChart& chart) const {
  int nc = graft::component_count(degree, chart.dim());
  std::vector<std::function<double(const std::vector<double>&)>> fns(nc);
  std::vector<std::vector<FormTerm>> per_comp(nc);
  for (const auto& t : terms) {
    int comp = 0;
    if (degree == 1) {
      if (t.basis.size() < 2 || t.basis[0] != 'd')
        throw InputError("degree-1 term basis must be d<axis>");
      comp = chart.axis_index(t.basis.substr(1));
      if (comp < 0) throw InputError("term basis names unknown axis '" + t.basis + "'");
    } else if (degree == 0) {
      if (t.basis != ".") throw InputError("degree-0 term basis must be '.'");
    } else {
      throw InputError("formfield files support degrees 0 and 1");
    }
    per_comp[comp].push_back(t);
  }
  for (int k = 0; k < nc; ++k) {
    std::vector<std::pair<double, int>> mono;  // coeff, axis (-1 = const)
    for (const auto& t : per_comp[k]) {
      int ax = -1;
      if (t.monomial != "const") {
        ax = chart.axis_index(t.monomial);
        if (ax < 0) throw InputError("term monomial names unknown axis '" + t.monomial + "'");
      }
      mono.emplace_back(t.coeff, ax);
    }
    fns[k] = [mono](const std::vector<double>& x) {
      double v = 0;
      for (const auto& [c2, ax] : mono) v += c2 * (ax < 0 ? 1.0 : x[ax]);
      return v;
    };
  }
  return graft::FormField::sample(chart, degree, fns);
}

FormSpec parse_formfield(const std::string& text) {
  Parsed p = parse_lines(text);
  expect_kind(p, "formfield");
  p.allow_keys({"degree", "term"});
  FormSpec f;
  const Line* d = p.one("degree");
  long long deg = to_int(p, *d, d->value);
  if (deg < 0 || deg > 1) p.fail(d->number, "formfield degree must be 0 or 1");
  f.degree = (int)deg;
  for (const Line* l : p.all("term")) {
    auto tk = tokens(l->value);
    if (tk.size() != 3) p.fail(l->number, "term needs 'coeff monomial basis'");
    f.terms.push_back({to_double(p, *l, tk[0]), tk[1], tk[2]});
  }
  return f;
}

std::string emit(const FormSpec& f) {
  std::ostringstream os;
  os << "formfield\ndegree = " << f.degree << "\n";
  for (const auto& t : f.terms)
    os << "term = " << dbl_str(t.coeff) << " " << t.monomial << " " << t.basis << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write '" + path + "'");
  os << text;
}

}  // namespace trisym::fmt
