// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria run against the frozen corpus and randomized suites
// with fixed seeds.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "trisym/braid.hpp"
#include "trisym/formats.hpp"
#include "trisym/freegroup.hpp"
#include "trisym/graft.hpp"
#include "trisym/homotopy.hpp"
#include "trisym/khovanov.hpp"
#include "trisym/lattice.hpp"
#include "trisym/lee.hpp"
#include "trisym/tangle.hpp"
#include "trisym/torus_diagram.hpp"
#include "trisym/trirec.hpp"

using namespace trisym;
using braid::BraidWord;

namespace {

const std::string kCorpus = TRISYM_CORPUS_DIR;
const std::string kCli = TRISYM_CLI_PATH;

int failures = 0;

struct Criterion {
  std::string name;
  std::ostringstream detail;
  bool ok = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  ~Criterion() {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("CRITERION %s: %s (%.1fs)%s\n", name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.str().c_str());
    if (!ok) failures++;
  }
};

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, w);
}

// One random braid-relation rewrite (insertion, far commutation or the
// Yang-Baxter move where applicable).
BraidWord rewrite_once(std::mt19937& rng, const BraidWord& w) {
  BraidWord out = w;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> gen(1, w.strands - 1);
  switch (kind(rng)) {
    case 0: {  // insert a cancelling pair
      std::uniform_int_distribution<std::size_t> pos(0, out.letters.size());
      int i = gen(rng);
      auto it = out.letters.begin() + pos(rng);
      it = out.letters.insert(it, -i);
      out.letters.insert(it, i);
      break;
    }
    case 1: {  // far commutation
      for (std::size_t i = 0; i + 1 < out.letters.size(); ++i) {
        if (std::abs(std::abs(out.letters[i]) - std::abs(out.letters[i + 1])) >= 2) {
          std::swap(out.letters[i], out.letters[i + 1]);
          break;
        }
      }
      break;
    }
    default: {  // sigma_i sigma_{i+1} sigma_i -> sigma_{i+1} sigma_i sigma_{i+1}
      for (std::size_t i = 0; i + 2 < out.letters.size(); ++i) {
        int a = out.letters[i], b = out.letters[i + 1], c = out.letters[i + 2];
        if (a > 0 && b > 0 && c > 0 && a == c && b == a + 1) {
          out.letters[i] = b;
          out.letters[i + 1] = a;
          out.letters[i + 2] = b;
          break;
        }
      }
      break;
    }
  }
  return out;
}

BraidWord random_knot_word(std::mt19937& rng, int max_len) {
  for (;;) {
    std::uniform_int_distribution<int> nd(2, 3);
    int n = nd(rng);
    std::uniform_int_distribution<int> len(3, max_len);
    BraidWord w = random_word(rng, n, len(rng));
    w = braid::free_reduce(w);
    if (w.letters.empty()) continue;
    if (braid::closure_pd(w).components() == 1) return w;
  }
}

int run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WEXITSTATUS(st);
}

void criterion1() {
  Criterion c("1 braid kernel");
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> nd(2, 6);
  std::uniform_int_distribution<int> len(1, 40);
  for (int trial = 0; trial < 500; ++trial) {
    int n = nd(rng);
    BraidWord a = random_word(rng, n, len(rng));
    BraidWord b = rewrite_once(rng, a);
    if (!braid::artin_equal(a, b)) {
      c.require(false, "relation rewrite not artin-equal");
      break;
    }
  }

  braid::FactorizationRecord good;
  good.degree = 2;
  good.factors = {{BraidWord(2, {}), 2}};
  c.require(braid::verify_factorization(good).status == Status::Holds, "delta2 accepted");

  braid::FactorizationRecord bad_set = good;
  bad_set.factors[0].exponent = -1;
  Verdict v = braid::verify_factorization(bad_set);
  c.require(v.status == Status::Violated && v.witness == "exponent-set", "exponent-set stage");

  braid::FactorizationRecord bad_sum = good;
  bad_sum.factors[0].exponent = 1;
  v = braid::verify_factorization(bad_sum);
  c.require(v.status == Status::Violated && v.witness == "exponent-sum", "exponent-sum stage");

  braid::FactorizationRecord bad_perm;
  bad_perm.degree = 3;
  bad_perm.factors = {{BraidWord(3, {}), 3}, {BraidWord(3, {2}), 3}};
  v = braid::verify_factorization(bad_perm);
  c.require(v.status == Status::Violated && v.witness == "permutation", "permutation stage");

  braid::FactorizationRecord bad_artin;
  bad_artin.degree = 3;
  bad_artin.factors = {{BraidWord(3, {}), 3}, {BraidWord(3, {}), 3}};
  v = braid::verify_factorization(bad_artin);
  c.require(v.status == Status::Violated && v.witness == "artin", "artin stage");

  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    BraidWord w = random_word(rng, n, 12);
    BraidWord tw = braid::full_twist(n);
    if (!braid::artin_equal(braid::compose(tw, w), braid::compose(w, tw))) {
      c.require(false, "full twist centrality");
      break;
    }
  }
}

void criterion2() {
  Criterion c("2 homology engine");
  kh::BigradedRanks unknot = kh::khovanov(pd::PlanarDiagram::unknot(), kh::Coeff::Q);
  c.require(unknot.rank.size() == 2 && unknot.rank.count({0, -1}) && unknot.rank.count({0, 1}),
            "Kh(unknot)");

  pd::PlanarDiagram trefoil = braid::closure_pd(BraidWord(2, {1, 1, 1}));
  kh::BigradedRanks tre = kh::khovanov(trefoil, kh::Coeff::Q);
  std::map<std::pair<int, int>, int> expect = {{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}};
  c.require(tre.rank == expect, "Kh(right trefoil)");

  std::vector<pd::PlanarDiagram> corpus = {
      pd::PlanarDiagram::unknot(),
      pd::PlanarDiagram::unlink(2),
      braid::closure_pd(BraidWord(2, {1})),
      braid::closure_pd(BraidWord(2, {1, 1})),
      trefoil,
      trefoil.mirror(),
      braid::closure_pd(BraidWord(3, {1, -2, 1, -2})),
      braid::closure_pd(BraidWord(2, {1, 1, 1, 1, 1})),
      braid::closure_pd(BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2})),
      braid::closure_pd(BraidWord(3, {1, -1, 2, 2})),
      braid::closure_pd(BraidWord(3, {-1, 2, -1, 2})),
  };
  for (const auto& d : corpus) {
    if (!(kh::khovanov(d, kh::Coeff::Q).graded_euler() == kh::kauffman_bracket(d))) {
      c.require(false, "graded euler = bracket");
      break;
    }
    if (kh::lee_summary(d).total_rank != (1LL << d.components())) {
      c.require(false, "lee rank 2^components");
      break;
    }
  }

  c.require(kh::lee_s_invariant(trefoil).s == 2, "s(trefoil)=2");
  c.require(kh::lee_s_invariant(braid::closure_pd(BraidWord(2, {1, 1, 1, 1, 1}))).s == 4,
            "s(T(2,5))=4");
  c.require(kh::lee_s_invariant(braid::closure_pd(BraidWord(3, {1, -2, 1, -2}))).s == 0,
            "s(figure-eight)=0");

  // positive braid closures with ≤ 10 crossings are sharp
  std::vector<BraidWord> positives = {
      BraidWord(2, {1, 1, 1}),
      BraidWord(2, {1, 1, 1, 1, 1}),
      BraidWord(2, {1, 1, 1, 1, 1, 1, 1}),
      BraidWord(2, {1, 1, 1, 1, 1, 1, 1, 1, 1}),
      BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2}),
      BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}),
      BraidWord(3, {1, 1, 1, 2, 2, 2}),
  };
  for (const auto& w : positives) {
    if (kh::slice_bennequin_gap(w) != 0) {
      c.require(false, "positive braid gap 0");
      break;
    }
  }

  std::mt19937 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = random_knot_word(rng, 10);
    if (kh::slice_bennequin_gap(w) < 0) {
      c.require(false, "random knot gap >= 0");
      break;
    }
  }
}

void criterion3() {
  Criterion c("3 relation table");
  for (int k : {-2, 1, 2, 3}) {
    auto pres = tangle::wirtinger(tangle::half_twist_local_model(k));
    auto [r1, r2] = fg::half_twist_relations(k);
    c.require(tangle::verify_relation_trivial(r1, pres),
              "rho1 trivial at k=" + std::to_string(k));
    c.require(tangle::verify_relation_trivial(r2, pres),
              "rho2 trivial at k=" + std::to_string(k));
  }

  std::mt19937 rng(303);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> len(1, 16);
  const char* gens[4] = {"l", "x", "y", "z"};
  for (int trial = 0; trial < 1000; ++trial) {
    fg::FreeWord w;
    int L = len(rng);
    for (int i = 0; i < L; ++i)
      w.letters.push_back({gens[pick(rng)], coin(rng) ? 1 : -1});
    auto nf = fg::longitude_normal_form(w, "l");
    for (const auto& cl : nf.tail)
      if (cl.gen == "l") c.require(false, "tail not l-free");
    if (!(fg::expand(nf, "l") == fg::reduce(w))) {
      c.require(false, "re-expansion equality");
      break;
    }
  }
}

void criterion4() {
  Criterion c("4 trisection formulas");
  tri::BridgeTrisectionRecord line = tri::line_record();
  c.require(tri::euler_characteristic(line) == 2, "chi(line)=2");
  c.require(tri::c1_pairing(line) == 3, "c1 pairing 3");
  Verdict ident = tri::total_self_linking_identity(line);
  c.require(ident.status == Status::Holds && ident.lhs == -3 && ident.rhs == -3,
            "total-sl both sides -3");
  tri::WhitneyBookkeeping w0 = tri::whitney_band_bookkeeping(line, 0);
  c.require(w0.chiF == 3 && w0.slL == -3 && w0.sbi.status == Status::Holds && w0.slL == -w0.chiF,
            "whitney n=0 equality");
  Verdict adj = tri::adjunction_verdict(2, tri::c1_pairing(line), tri::self_intersection(line));
  c.require(adj.status == Status::Holds && adj.rhs - adj.lhs == 0, "line adjunction slack 0");

  tri::LatticeQuery cp2;
  cp2.form.diag = {1, 1, 1};
  cp2.chi_top = 5;
  cp2.sigma = 3;
  cp2.classes = {{0, 0, 1}};
  tri::LatticeReport rep = tri::lattice_obstructions(cp2);
  bool cands_ok = rep.candidates.size() == 3;
  for (const auto& cand : rep.candidates) {
    std::vector<long long> mags;
    for (long long v : cand) mags.push_back(std::llabs(v));
    std::sort(mags.begin(), mags.end());
    cands_ok &= (mags == std::vector<long long>{1, 3, 3});
  }
  c.require(cands_ok, "#3CP2 candidate set (3,3,1)");
  c.require(rep.classes[0].sphere_ruled_out, "#3CP2 sphere ruled out");

  tri::LatticeQuery k3;
  k3.form.hyperbolic = 3;
  k3.form.even8 = -2;
  k3.chi_top = 24;
  k3.sigma = -16;
  k3.explicit_candidates = {std::vector<long long>(6, 0)};
  k3.classes = {{1, 0, 0, 0, 0, 0}};
  tri::LatticeReport k3rep = tri::lattice_obstructions(k3);
  c.require(k3rep.classes[0].square == 0 && k3rep.classes[0].sphere_ruled_out,
            "K3 0-square sphere ruled out");

  c.require(tri::hypersurface_genus_bound(5) == 6, "V5 genus >= 6");
}

void criterion5() {
  Criterion c("5 homotopy normalization");
  std::mt19937 rng(505);
  std::uniform_int_distribution<int> bd(1, 4);
  std::uniform_int_distribution<int> pv(-3, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    int b = bd(rng);
    tri::SurfaceHomotopyRecord r;
    r.alphabet["z"] = true;
    for (int i = 0; i < 2 * b; ++i) r.point_signs.push_back(i % 2 ? -1 : +1);
    for (int i = 0; i < b; ++i) {
      fg::LongWord cls = fg::lw_power_l(pv(rng));
      if (coin(rng)) cls.tail.push_back({"z", 1, 0});
      r.arcs.push_back({1, 2 * i, 2 * i + 1, cls});
    }
    for (int i = 0; i < b; ++i)
      r.arcs.push_back({2, 2 * i + 1, (2 * i + 2) % (2 * b), {}});
    for (int i = 0; i < b; ++i)
      r.arcs.push_back({3, 2 * i + 1, (2 * i + 2) % (2 * b), {}});
    r.c[0] = r.c[1] = r.c[2] = b;
    r.validate();
    if (!r.connected()) continue;

    long long chi = r.euler_characteristic();
    long long total = 0;
    for (const auto& a : r.arcs)
      if (a.sector == 1) total += a.cls.p;

    tri::SurfaceHomotopyRecord t = r;
    for (int moves = 0; moves < 4; ++moves) {
      std::uniform_int_distribution<int> fam(2, 3);
      std::uniform_int_distribution<int> idx(0, b - 1);
      t = tri::transfer_longitude(t, fam(rng), idx(rng), coin(rng));
    }
    long long total_t = 0;
    for (const auto& a : t.arcs)
      if (a.sector == 1) total_t += a.cls.p;
    if (total_t != total || t.euler_characteristic() != chi) {
      c.require(false, "transfer preserves chi and longitude count");
      break;
    }

    tri::FlattenResult f = tri::flatten_and_count(t);
    if (f.record.euler_characteristic() != chi || f.longitude_count != total ||
        f.area_positive != (total > 0)) {
      c.require(false, "flatten preserves chi and longitude count");
      break;
    }

    tri::SurfaceHomotopyRecord conc = tri::concentrate_longitudes(t);
    long long first_p = -999;
    long long rest = 0;
    for (const auto& a : conc.arcs) {
      if (a.sector != 1) continue;
      if (first_p == -999) first_p = a.cls.p;
      else rest += std::llabs(a.cls.p);
    }
    if (first_p != total || rest != 0) {
      c.require(false, "concentration onto the first arc");
      break;
    }
  }

  // records carrying diagrams: flattening of the line record agrees with the
  // area sign of its torus diagram
  tri::SurfaceHomotopyRecord line = tri::line_homotopy_record();
  tri::FlattenResult f = tri::flatten_and_count(line);
  tri::TorusDiagram dia = tri::line_diagram();
  bool area_pos = tri::symplectic_area(dia) > Rat64(0);
  c.require(f.area_positive == area_pos && f.longitude_count == 1,
            "line record area sign matches the diagram");
}

void criterion6() {
  Criterion c("6 graft lab");
  graft::FsReport rep = graft::verify_fs_identities(64);
  c.require(rep.identity_residual < 1e-8, "fs residual < 1e-8");
  c.require(rep.contact_margin > 0, "fs contact margin > 0");

  graft::GridChart sigma{{{"x", 0.0, 1.0, 32, true}, {"y", 0.0, 1.0, 32, true}}};
  auto constant2 = [&](double a, double b) {
    return graft::FormField::sample(sigma, 1,
                                    {[=](const std::vector<double>&) { return a; },
                                     [=](const std::vector<double>&) { return b; }});
  };
  graft::FormField beta1 = constant2(1, 0), beta2 = constant2(0, 1);
  graft::GridChart prod = graft::graft_chart(sigma, 64);
  graft::FormField mu1 = graft::FormField::sample(
      prod, 1,
      {[](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>& x) { return -x[2]; },
       [](const std::vector<double>&) { return 0.0; }});
  graft::FormField mu2 = graft::FormField::sample(
      prod, 1,
      {[](const std::vector<double>& x) { return x[2]; },
       [](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>&) { return 0.0; }});
  graft::TuneResult tr = graft::tune_graft(beta1, beta2, mu1, mu2, {}, 64);
  c.require(tr.found && tr.margin > 0, "collar graft margin > 0");

  // delta = 0 with a singular point: non-positive on the arc
  graft::GridChart sq{{{"x", -1.0, 1.0, 33, false}, {"y", -1.0, 1.0, 33, false}}};
  graft::FormField b1 = graft::FormField::sample(
      sq, 1, {[](const std::vector<double>& x) { return 2 * x[0]; },
              [](const std::vector<double>& x) { return -2 * x[1]; }});
  graft::FormField b2 = graft::FormField::sample(
      sq, 1, {[](const std::vector<double>& x) { return 2 * x[1]; },
              [](const std::vector<double>& x) { return 2 * x[0]; }});
  graft::GridChart prodsq = graft::graft_chart(sq, 33);
  graft::FormField m1 = graft::FormField::sample(
      prodsq, 1, {[](const std::vector<double>& x) { return -x[2] * 2 * x[1]; },
                  [](const std::vector<double>& x) { return -x[2] * 2 * x[0]; },
                  [](const std::vector<double>&) { return 0.0; }});
  graft::FormField m2 = graft::FormField::sample(
      prodsq, 1, {[](const std::vector<double>& x) { return x[2] * 2 * x[0]; },
                  [](const std::vector<double>& x) { return -x[2] * 2 * x[1]; },
                  [](const std::vector<double>&) { return 0.0; }});
  std::vector<graft::SingularPoint> sing = {{0.0, 0.0, +1, +1, +1}};
  graft::GraftConfig degen;
  degen.eps = 0;
  degen.delta = 0;
  graft::GraftResult r0 = graft::grafted_form(b1, b2, m1, m2, sing, degen, 33);
  c.require(r0.near_arc_margin <= 0, "delta=0 singular margin non-positive");

  // margin stability under grid doubling
  graft::GridChart sigma2{{{"x", 0.0, 1.0, 64, true}, {"y", 0.0, 1.0, 64, true}}};
  graft::FormField beta1b = graft::FormField::sample(
      sigma2, 1, {[](const std::vector<double>&) { return 1.0; },
                  [](const std::vector<double>&) { return 0.0; }});
  graft::FormField beta2b = graft::FormField::sample(
      sigma2, 1, {[](const std::vector<double>&) { return 0.0; },
                  [](const std::vector<double>&) { return 1.0; }});
  graft::GridChart prod2 = graft::graft_chart(sigma2, 128);
  graft::FormField mu1b = graft::FormField::sample(
      prod2, 1,
      {[](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>& x) { return -x[2]; },
       [](const std::vector<double>&) { return 0.0; }});
  graft::FormField mu2b = graft::FormField::sample(
      prod2, 1,
      {[](const std::vector<double>& x) { return x[2]; },
       [](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>&) { return 0.0; }});
  graft::GraftResult fine = graft::grafted_form(beta1b, beta2b, mu1b, mu2b, {}, tr.config, 128);
  c.require(std::abs(fine.report.margin - tr.margin) <= 0.1 * std::abs(fine.report.margin),
            "margin stable within 10% under doubling");
}

void criterion7() {
  Criterion c("7 end-to-end");
  std::string line = kCorpus + "/line.trirec";
  c.require(run_cli("trisect-check --trirec " + line) == 0, "trisect-check exit 0");
  c.require(run_cli("adjunction --trirec " + line + " --chi 2") == 0, "adjunction exit 0");

  // mutation test: adding 1 to any one of the nine sl-relevant integers
  // flips the identity to violated
  tri::BridgeTrisectionRecord base = fmt::parse_trirec(fmt::read_file(line));
  int detected = 0;
  for (int i = 0; i < 9; ++i) {
    tri::BridgeTrisectionRecord m = base;
    if (i < 3) m.sector[i].writhe_framing += 1;
    else if (i < 6) m.sector[i - 3].lk_self += 1;
    else m.sector[i - 6].lk_next += 1;
    std::string tmp =
        (std::filesystem::temp_directory_path() / ("trisym_mut" + std::to_string(i) + ".trirec"))
            .string();
    fmt::write_file(tmp, fmt::emit(m));
    if (run_cli("trisect-check --trirec " + tmp) == 1) detected++;
    std::filesystem::remove(tmp);
  }
  c.require(detected == 9, "mutations detected " + std::to_string(detected) + "/9");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
