// Command-line surface tying the engines together.  Exit codes:
//   0 holds/consistent, 1 violated/refuted, 2 input error, 3 budget exceeded.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trisym/errors.hpp"
#include "trisym/formats.hpp"
#include "trisym/freegroup.hpp"
#include "trisym/graft.hpp"
#include "trisym/homotopy.hpp"
#include "trisym/khovanov.hpp"
#include "trisym/lattice.hpp"
#include "trisym/lee.hpp"
#include "trisym/tangle.hpp"
#include "trisym/trirec.hpp"

using namespace trisym;

namespace {

int exit_code(Status s) {
  switch (s) {
    case Status::Holds:
    case Status::Consistent: return 0;
    case Status::Violated:
    case Status::Refuted: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

std::string dbl(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Report {
  std::ostringstream human, machine;

  void kv(const std::string& key, const std::string& value) {
    machine << "report." << key << " = " << value << "\n";
  }
  void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
  void print() const {
    std::cout << human.str();
    std::cout << machine.str();
  }
};

braid::BraidWord load_braid(const std::string& path) {
  return fmt::parse_braid(fmt::read_file(path));
}

pd::PlanarDiagram load_pd_or_braid(const std::string& pd_path, const std::string& braid_path) {
  if (!pd_path.empty()) return fmt::parse_pd(fmt::read_file(pd_path));
  if (!braid_path.empty()) return braid::closure_pd(load_braid(braid_path));
  throw InputError("need --pd or --braid input");
}

int cmd_verify_factorization(const std::string& path) {
  auto f = fmt::parse_factorization(fmt::read_file(path));
  Verdict v = braid::verify_factorization(f);
  Report r;
  r.human << "factorization of degree " << f.degree << " with " << f.factors.size()
          << " factors: " << to_string(v.status);
  if (!v.witness.empty()) r.human << " (stage " << v.witness << ")";
  r.human << "\n";
  r.kv("status", to_string(v.status));
  r.kv("degree", f.degree);
  r.kv("factors", (long long)f.factors.size());
  r.kv("stage", v.witness.empty() ? "all" : v.witness);
  r.print();
  return exit_code(v.status);
}

int cmd_sl(const std::string& path) {
  braid::BraidWord w = load_braid(path);
  long long sl = braid::transverse_self_linking(w);
  Report r;
  r.human << sl << "\n";
  r.kv("self_linking", sl);
  r.kv("exponent_sum", w.exponent_sum());
  r.kv("strands", w.strands);
  r.print();
  return 0;
}

int cmd_s_invariant(const std::string& braid_path, const std::string& pd_path, int budget) {
  pd::PlanarDiagram d = load_pd_or_braid(pd_path, braid_path);
  kh::LeeSummary lee = kh::lee_s_invariant(d, budget);
  Report r;
  if (!lee.s_defined) throw InputError("s requested on a multi-component closure");
  r.human << "s = " << lee.s << "\n";
  r.kv("s", lee.s);
  if (!braid_path.empty()) {
    long long sl = braid::transverse_self_linking(load_braid(braid_path));
    long long gap = (lee.s - 1) - sl;
    r.human << "slice-bennequin gap = " << gap << "\n";
    r.kv("self_linking", sl);
    r.kv("gap", gap);
  }
  r.print();
  return 0;
}

int cmd_kh(const std::string& braid_path, const std::string& pd_path,
           const std::string& coeff, int budget) {
  pd::PlanarDiagram d = load_pd_or_braid(pd_path, braid_path);
  kh::Coeff c = coeff == "f2" ? kh::Coeff::F2 : kh::Coeff::Q;
  kh::BigradedRanks ranks = kh::khovanov(d, c, budget);
  Report r;
  r.human << "bigraded ranks over " << (c == kh::Coeff::Q ? "Q" : "F2") << ":\n";
  for (auto& [ij, k] : ranks.rank)
    r.human << "  i=" << ij.first << " j=" << ij.second << " rank=" << k << "\n";
  r.human << "graded euler characteristic: " << ranks.graded_euler().str() << "\n";
  r.kv("coeff", c == kh::Coeff::Q ? "q" : "f2");
  r.kv("euler", ranks.graded_euler().str());
  for (auto& [ij, k] : ranks.rank) {
    r.kv("rank." + std::to_string(ij.first) + "." + std::to_string(ij.second), k);
  }
  r.print();
  return 0;
}

int cmd_unlink_cert(const std::string& pd_path, int budget) {
  pd::PlanarDiagram d = fmt::parse_pd(fmt::read_file(pd_path));
  Verdict v = kh::unlink_certificate(d, budget);
  Report r;
  r.human << "unlink certificate: " << to_string(v.status) << " (" << v.witness << ")\n";
  r.kv("status", to_string(v.status));
  r.kv("components", d.components());
  r.print();
  return exit_code(v.status);
}

int cmd_trisect_check(const std::string& path) {
  tri::BridgeTrisectionRecord rec = fmt::parse_trirec(fmt::read_file(path));
  Report r;
  long long chi = tri::euler_characteristic(rec);
  long long c1 = tri::c1_pairing(rec);
  long long k2 = tri::self_intersection(rec);
  r.human << "chi = " << chi << ", <c1,K> = " << c1 << ", K.K = " << k2 << "\n";
  std::string warn;
  for (int l = 1; l <= 3; ++l) {
    long long sl = tri::sector_self_linking(rec, l, &warn);
    r.human << "sl(K_" << l << ") = " << sl << "\n";
    r.kv("sl." + std::to_string(l), sl);
    if (!warn.empty()) {
      r.human << "warning: " << warn << "\n";
      r.kv("warning." + std::to_string(l), warn);
      warn.clear();
    }
  }
  Verdict v = tri::total_self_linking_identity(rec);
  r.human << "total self-linking identity: " << to_string(v.status) << " (lhs " << v.lhs
          << ", rhs " << v.rhs << ")\n";
  r.kv("chi", chi);
  r.kv("c1_pairing", c1);
  r.kv("self_intersection", k2);
  r.kv("identity", to_string(v.status));
  r.kv("identity.lhs", v.lhs);
  r.kv("identity.rhs", v.rhs);
  bool user_supplied = false;
  for (const auto& s : rec.sector)
    user_supplied |= (s.w_prov == tri::Provenance::UserSupplied ||
                      s.lk_self_prov == tri::Provenance::UserSupplied ||
                      s.lk_next_prov == tri::Provenance::UserSupplied);
  r.kv("provenance", user_supplied ? "user-supplied-data" : "diagram-computed");
  r.print();
  return exit_code(v.status);
}

int cmd_adjunction(const std::string& trirec_path, long long chi, long long c1k, long long k2,
                   bool have_chi, bool have_c1k, bool have_k2, bool zero_area) {
  if (!trirec_path.empty()) {
    tri::BridgeTrisectionRecord rec = fmt::parse_trirec(fmt::read_file(trirec_path));
    if (!have_chi) {
      chi = tri::euler_characteristic(rec);
      have_chi = true;
    }
    if (!have_c1k) c1k = tri::c1_pairing(rec);
    if (!have_k2) k2 = tri::self_intersection(rec);
  } else if (!(have_chi && have_c1k && have_k2)) {
    throw InputError("adjunction needs --chi/--c1k/--k2 or a --trirec input");
  }
  Verdict v = tri::adjunction_verdict(
      chi, c1k, k2, zero_area ? tri::AdjunctionMode::ZeroArea : tri::AdjunctionMode::Standard);
  Report r;
  r.human << "adjunction: chi = " << chi << " vs bound " << v.rhs << ": " << to_string(v.status)
          << " (slack " << (v.rhs - v.lhs) << ")\n";
  r.kv("status", to_string(v.status));
  r.kv("chi", chi);
  r.kv("bound", v.rhs);
  r.kv("slack", v.rhs - v.lhs);
  r.print();
  return exit_code(v.status);
}

int cmd_whitney(const std::string& path, long long n) {
  tri::BridgeTrisectionRecord rec = fmt::parse_trirec(fmt::read_file(path));
  tri::WhitneyBookkeeping w = tri::whitney_band_bookkeeping(rec, n);
  Report r;
  r.human << "n = " << n << ": chi(F) = " << w.chiF << ", sl(L) = " << w.slL
          << ", slice-bennequin: " << to_string(w.sbi.status) << "\n";
  r.kv("n", n);
  r.kv("chiF", w.chiF);
  r.kv("slL", w.slL);
  r.kv("sbi", to_string(w.sbi.status));
  r.print();
  return exit_code(w.sbi.status);
}

int cmd_lattice(const std::string& path, int sigma_coefficient) {
  tri::LatticeQuery q = fmt::parse_lattice(fmt::read_file(path));
  if (sigma_coefficient) q.sigma_coefficient = sigma_coefficient;
  tri::LatticeReport rep = tri::lattice_obstructions(q);
  Report r;
  if (rep.coefficient_warning)
    r.human << "warning: sigma coefficient 2 selected (printed relation); standard value is 3\n";
  r.human << "c^2 target = " << rep.c_square_target << ", " << rep.candidates.size()
          << " candidate(s)\n";
  for (const auto& c : rep.candidates) {
    r.human << "  c =";
    for (long long v : c) r.human << " " << v;
    r.human << "\n";
  }
  if (rep.no_candidate) r.human << "no characteristic vector attains the target\n";
  r.kv("target", rep.c_square_target);
  r.kv("candidates", (long long)rep.candidates.size());
  int idx = 0;
  bool all_spheres_ruled_out = !rep.classes.empty();
  for (const auto& cr : rep.classes) {
    r.human << "class";
    for (long long v : cr.k) r.human << " " << v;
    r.human << ": square " << cr.square << ", bound " << cr.max_bound << ", genus >= "
            << cr.genus_min << (cr.sphere_ruled_out ? ", sphere ruled out" : "") << "\n";
    std::string key = "class." + std::to_string(idx++);
    r.kv(key + ".square", cr.square);
    r.kv(key + ".bound", cr.max_bound);
    r.kv(key + ".genus_min", cr.genus_min);
    r.kv(key + ".sphere_ruled_out", cr.sphere_ruled_out ? 1 : 0);
    all_spheres_ruled_out &= cr.sphere_ruled_out;
  }
  r.print();
  if (rep.no_candidate && q.explicit_candidates.empty()) return 1;
  return all_spheres_ruled_out || rep.classes.empty() ? 0 : 1;
}

int cmd_fs_check(int grid, double tol) {
  graft::FsReport rep = graft::verify_fs_identities(grid);
  Report r;
  r.human << "foliation identity residual: " << dbl(rep.identity_residual) << "\n";
  r.human << "boundary contact margin: " << dbl(rep.contact_margin) << " (argmin u = "
          << dbl(rep.argmin_u) << ")\n";
  r.human << "derivative stencil residual: " << dbl(rep.d_stencil_residual) << "\n";
  r.kv("identity_residual", dbl(rep.identity_residual));
  r.kv("contact_margin", dbl(rep.contact_margin));
  r.kv("d_stencil_residual", dbl(rep.d_stencil_residual));
  r.print();
  return (rep.identity_residual < tol && rep.contact_margin > 0) ? 0 : 1;
}

int cmd_relations_table() {
  Report r;
  bool all = true;
  for (int k : {1, 2, -2, 3}) {
    auto pres = tangle::wirtinger(tangle::half_twist_local_model(k));
    auto [r1, r2] = fg::half_twist_relations(k);
    bool ok1 = tangle::verify_relation_trivial(r1, pres);
    bool ok2 = tangle::verify_relation_trivial(r2, pres);
    all &= ok1 && ok2;
    r.human << "k=" << k << ": rho1 " << (ok1 ? "trivial" : "NOT trivial") << ", rho2 "
            << (ok2 ? "trivial" : "NOT trivial") << "\n";
    r.kv("k" + std::to_string(k) + ".rho1", ok1 ? "trivial" : "nontrivial");
    r.kv("k" + std::to_string(k) + ".rho2", ok2 ? "trivial" : "nontrivial");
  }
  r.kv("status", all ? "holds" : "violated");
  r.print();
  return all ? 0 : 1;
}

int cmd_graft_verify(const std::string& grid_path, const std::string& b1p,
                     const std::string& b2p, const std::string& m1p, const std::string& m2p,
                     const std::vector<double>& sing_flat, bool tune, double eps, double delta,
                     double eps0, int t_samples) {
  graft::GridChart sigma = fmt::parse_grid(fmt::read_file(grid_path));
  if (sigma.dim() != 2) throw InputError("graft-verify needs a 2-dimensional sigma grid");
  graft::FormField b1 = fmt::parse_formfield(fmt::read_file(b1p)).instantiate(sigma);
  graft::FormField b2 = fmt::parse_formfield(fmt::read_file(b2p)).instantiate(sigma);
  graft::GridChart prod = graft::graft_chart(sigma, t_samples);
  graft::FormField m1 = fmt::parse_formfield(fmt::read_file(m1p)).instantiate(prod);
  graft::FormField m2 = fmt::parse_formfield(fmt::read_file(m2p)).instantiate(prod);
  if (sing_flat.size() % 3) throw InputError("--sing takes triples x y sign");
  std::vector<graft::SingularPoint> sing;
  for (std::size_t i = 0; i + 2 < sing_flat.size(); i += 3)
    sing.push_back({sing_flat[i], sing_flat[i + 1], (int)sing_flat[i + 2], +1, +1});

  Report r;
  if (tune) {
    graft::TuneResult tr = graft::tune_graft(b1, b2, m1, m2, sing, t_samples);
    r.human << (tr.found ? "found" : "exhausted") << " after " << tr.evaluations
            << " evaluations: margin " << dbl(tr.margin) << " at eps " << dbl(tr.config.eps)
            << ", delta " << dbl(tr.config.delta) << ", eps0 " << dbl(tr.config.eps0) << "\n";
    r.kv("found", tr.found ? 1 : 0);
    r.kv("margin", dbl(tr.margin));
    r.kv("eps", dbl(tr.config.eps));
    r.kv("delta", dbl(tr.config.delta));
    r.kv("eps0", dbl(tr.config.eps0));
    r.kv("evaluations", tr.evaluations);
    r.print();
    return tr.found ? 0 : 1;
  }
  graft::GraftConfig cfg;
  cfg.eps = eps;
  cfg.delta = delta;
  cfg.eps0 = eps0;
  graft::GraftResult res = graft::grafted_form(b1, b2, m1, m2, sing, cfg, t_samples);
  r.human << "margin " << dbl(res.report.margin) << " at (" << dbl(res.report.argmin[0]) << ", "
          << dbl(res.report.argmin[1]) << ", " << dbl(res.report.argmin[2]) << ")\n";
  if (!sing.empty()) r.human << "near-arc margin " << dbl(res.near_arc_margin) << "\n";
  r.kv("margin", dbl(res.report.margin));
  r.kv("near_arc_margin", dbl(res.near_arc_margin));
  r.print();
  return res.report.margin > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trisym: braid, homology, trisection and contact-form toolkit"};
  app.require_subcommand(1);

  std::string in_path, pd_path, braid_path, coeff = "q";
  std::string b1p, b2p, m1p, m2p;
  long long chi = 0, c1k = 0, k2 = 0, nbands = 0;
  int budget = 14, grid = 64, t_samples = 32, sigma_coefficient = 0;
  double tol = 1e-8, eps = 0.1, delta = 0.1, eps0 = 0.15;
  bool zero_area = false, tune = false;
  std::vector<double> sing;

  auto* vf = app.add_subcommand("verify-factorization", "check a full-twist factorization");
  vf->add_option("--input", in_path)->required();

  auto* sl = app.add_subcommand("sl", "transverse self-linking of a braid closure");
  sl->add_option("--braid", braid_path)->required();

  auto* si = app.add_subcommand("s-invariant", "Lee s-invariant (and gap for braid input)");
  si->add_option("--braid", braid_path);
  si->add_option("--pd", pd_path);
  si->add_option("--budget", budget);

  auto* khc = app.add_subcommand("kh", "bigraded Khovanov ranks");
  khc->add_option("--braid", braid_path);
  khc->add_option("--pd", pd_path);
  khc->add_option("--coeff", coeff)->check(CLI::IsMember({"q", "f2"}));
  khc->add_option("--budget", budget);

  auto* uc = app.add_subcommand("unlink-cert", "unlink consistency certificate");
  uc->add_option("--pd", pd_path)->required();
  uc->add_option("--budget", budget);

  auto* tc = app.add_subcommand("trisect-check", "chi, c1 pairing, K.K and the total-sl identity");
  tc->add_option("--trirec", in_path)->required();

  auto* adj = app.add_subcommand("adjunction", "adjunction inequality verdict");
  auto* optchi = adj->add_option("--chi", chi);
  auto* optc1k = adj->add_option("--c1k", c1k);
  auto* optk2 = adj->add_option("--k2", k2);
  adj->add_option("--trirec", in_path);
  adj->add_flag("--zero-area", zero_area);

  auto* wh = app.add_subcommand("whitney", "whitney-band bookkeeping");
  wh->add_option("--trirec", in_path)->required();
  wh->add_option("--n", nbands)->required();

  auto* lat = app.add_subcommand("lattice", "characteristic-vector obstructions");
  lat->add_option("--input", in_path)->required();
  lat->add_option("--sigma-coefficient", sigma_coefficient)->check(CLI::IsMember({2, 3}));

  auto* fs = app.add_subcommand("fs-check", "standard-sector form identities");
  fs->add_option("--grid", grid);
  fs->add_option("--tol", tol);

  long long vd_degree = 5;
  auto* vd = app.add_subcommand("vd", "hypersurface hyperplane-class genus bound");
  vd->add_option("--degree", vd_degree)->required();

  auto* rt = app.add_subcommand("relations-table", "verify the half-twist relation table");
  (void)rt;

  auto* gv = app.add_subcommand("graft-verify", "grafted contact form margins");
  gv->add_option("--grid", in_path)->required();
  gv->add_option("--beta1", b1p)->required();
  gv->add_option("--beta2", b2p)->required();
  gv->add_option("--mu1", m1p)->required();
  gv->add_option("--mu2", m2p)->required();
  gv->add_option("--sing", sing);
  gv->add_flag("--tune", tune);
  gv->add_option("--eps", eps);
  gv->add_option("--delta", delta);
  gv->add_option("--eps0", eps0);
  gv->add_option("--tsamples", t_samples);

  CLI11_PARSE(app, argc, argv);

  try {
    if (vf->parsed()) return cmd_verify_factorization(in_path);
    if (sl->parsed()) return cmd_sl(braid_path);
    if (si->parsed()) return cmd_s_invariant(braid_path, pd_path, budget);
    if (khc->parsed()) return cmd_kh(braid_path, pd_path, coeff, budget);
    if (uc->parsed()) return cmd_unlink_cert(pd_path, budget);
    if (tc->parsed()) return cmd_trisect_check(in_path);
    if (adj->parsed())
      return cmd_adjunction(in_path, chi, c1k, k2, optchi->count() > 0, optc1k->count() > 0,
                            optk2->count() > 0, zero_area);
    if (wh->parsed()) return cmd_whitney(in_path, nbands);
    if (lat->parsed()) return cmd_lattice(in_path, sigma_coefficient);
    if (fs->parsed()) return cmd_fs_check(grid, tol);
    if (vd->parsed()) {
      long long g = tri::hypersurface_genus_bound((int)vd_degree);
      long long h2 = vd_degree;
      long long c1h = (4 - vd_degree) * vd_degree;
      std::cout << "degree " << vd_degree << ": h.h = " << h2 << ", <c1,h> = " << c1h
                << ", genus >= " << g << "\n";
      std::cout << "report.genus_min = " << g << "\n";
      std::cout << "report.c1h = " << c1h << "\n";
      return 0;
    }
    if (rt->parsed()) return cmd_relations_table();
    if (gv->parsed())
      return cmd_graft_verify(in_path, b1p, b2p, m1p, m2p, sing, tune, eps, delta, eps0,
                              t_samples);
  } catch (const BudgetError& e) {
    std::cout << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cout << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
