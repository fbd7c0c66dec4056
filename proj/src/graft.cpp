#include "trisym/graft.hpp"

#include <algorithm>
#include <cmath>

#include "trisym/errors.hpp"

namespace trisym::graft {

double smoothstep(double x) {
  if (x <= 0) return 0;
  if (x >= 1) return 1;
  return x * x * x * (10 + x * (-15 + 6 * x));
}

namespace {

struct PolarVal {
  double r[4] = {0, 0, 0, 0};  // r[1..3]
};

// Reads r_lambda from chart coordinates / fixed values.
double coord_or_fixed(const GridChart& c, const std::vector<double>& x,
                      const std::map<std::string, double>& fixed, const std::string& name) {
  int ai = c.axis_index(name);
  if (ai >= 0) return x[ai];
  auto it = fixed.find(name);
  if (it == fixed.end()) throw InputError("fs form: coordinate '" + name + "' unnamed");
  return it->second;
}

}  // namespace

FormField fs_liouville(int lambda, const GridChart& chart,
                       const std::map<std::string, double>& fixed) {
  if (lambda < 1 || lambda > 3) throw InputError("sector must be 1, 2 or 3");
  chart.validate();
  int mu = lambda % 3 + 1;  // lambda + 1 cyclically
  std::string rl = "r" + std::to_string(lambda), tl = "t" + std::to_string(lambda);
  std::string rm = "r" + std::to_string(mu), tm = "t" + std::to_string(mu);

  std::vector<std::function<double(const std::vector<double>&)>> fns;
  for (int a = 0; a < chart.dim(); ++a) {
    std::string nm = chart.axes[a].name;
    fns.push_back([=, &chart](const std::vector<double>& x) -> double {
      double r1 = coord_or_fixed(chart, x, fixed, rl);
      double r2 = coord_or_fixed(chart, x, fixed, rm);
      double f = 1.0 / (1.0 + r1 * r1 + r2 * r2);
      if (nm == tl) return 2.0 * r1 * r1 * f;
      if (nm == tm) return 2.0 * r2 * r2 * f;
      return 0.0;
    });
  }
  return FormField::sample(chart, 1, fns);
}

FormField fs_alpha3_in_chart1(const GridChart& chart,
                              const std::map<std::string, double>& fixed) {
  chart.validate();
  // s1 = r1/r2, psi1 = t1 - t2, s3 = 1/r2, psi3 = -t2; only dt components
  // survive on charts without r-differentials of the third chart.
  std::vector<std::function<double(const std::vector<double>&)>> fns;
  for (int a = 0; a < chart.dim(); ++a) {
    std::string nm = chart.axes[a].name;
    fns.push_back([=, &chart](const std::vector<double>& x) -> double {
      double r1 = coord_or_fixed(chart, x, fixed, "r1");
      double r2 = coord_or_fixed(chart, x, fixed, "r2");
      double s1 = r1 / r2, s3 = 1.0 / r2;
      double g = 1.0 / (1.0 + s1 * s1 + s3 * s3);
      // alpha3 = g (2 s1^2 dpsi1 + 2 s3^2 dpsi3), dpsi1 = dt1 - dt2, dpsi3 = -dt2
      if (nm == "t1") return 2.0 * s1 * s1 * g;
      if (nm == "t2") return -2.0 * s1 * s1 * g - 2.0 * s3 * s3 * g;
      return 0.0;
    });
  }
  return FormField::sample(chart, 1, fns);
}

FsReport verify_fs_identities(int resolution) {
  if (resolution < 16) throw InputError("fs check needs resolution >= 16");
  FsReport rep;
  const double twopi = 2.0 * std::acos(-1.0);

  // Torus slice |z2| = 1, |z1| <= 1: chart (r1, t1, t2) with r2 fixed to 1.
  GridChart chart{{{"r1", 0.0, 1.0, resolution, false},
                   {"t1", 0.0, twopi, resolution, true},
                   {"t2", 0.0, twopi, resolution, true}}};
  std::map<std::string, double> fixed{{"r2", 1.0}};
  FormField a1 = fs_liouville(1, chart, fixed);
  FormField a3 = fs_alpha3_in_chart1(chart, fixed);
  FormField two_dt2 = FormField::sample(
      chart, 1,
      {[](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>&) { return 0.0; },
       [](const std::vector<double>&) { return 2.0; }});
  FormField resid = add(a1, scale(add(a3, two_dt2), -1.0));
  // resid = a1 - (a3 + 2 dt2)?  identity is a1 - a3 = 2 dt2.
  rep.identity_residual = resid.max_abs();

  // Stencil d(alpha1) against the closed form, r2 = 1.
  {
    FormField da = exterior_derivative(a1);
    double worst = 0;
    std::vector<int> idx(3, 0);
    std::vector<double> x(3);
    const double s = 1.0;  // r2
    for (int i = 0; i < resolution; ++i) {
      double r1 = chart.coord(0, i);
      double f = 1.0 / (1.0 + r1 * r1 + s * s);
      double d01 = 4 * r1 * f - 4 * r1 * r1 * r1 * f * f;  // (r1,t1)
      double d02 = -4 * s * s * r1 * f * f;                // (r1,t2)
      for (int j = 0; j < resolution; ++j) {
        for (int k = 0; k < resolution; ++k) {
          idx = {i, j, k};
          std::size_t flat = da.flat_index(idx);
          worst = std::max(worst, std::abs(da.comp[0][flat] - d01));
          worst = std::max(worst, std::abs(da.comp[1][flat] - d02));
          worst = std::max(worst, std::abs(da.comp[2][flat]));
        }
      }
    }
    rep.d_stencil_residual = worst;
  }

  // Contact margin on the smoothed boundary r1^4 + r2^4 = 1, evaluated from
  // the closed-form pullback; theta-independent, so sample in u only.
  {
    int nu = resolution * 4;
    double margin = 0;
    bool first = true;
    for (int i = 1; i < nu; ++i) {
      double u = (std::acos(-1.0) / 2.0) * i / nu;
      double r1 = std::sqrt(std::cos(u));
      double r2 = std::sqrt(std::sin(u));
      double r1p = -std::sin(u) / (2.0 * std::sqrt(std::cos(u)));
      double r2p = std::cos(u) / (2.0 * std::sqrt(std::sin(u)));
      double f = 1.0 / (1.0 + r1 * r1 + r2 * r2);
      double A = 2 * r1 * r1 * f, B = 2 * r2 * r2 * f;
      double A1 = 4 * r1 * f - 4 * r1 * r1 * r1 * f * f;
      double A2 = -4 * r1 * r1 * r2 * f * f;
      double B1 = -4 * r2 * r2 * r1 * f * f;
      double B2 = 4 * r2 * f - 4 * r2 * r2 * r2 * f * f;
      double g = (B * A1 - A * B1) * r1p + (B * A2 - A * B2) * r2p;
      double value = -g;  // boundary orientation (outward normal first)
      if (first || value < margin) {
        margin = value;
        rep.argmin_u = u;
        first = false;
      }
    }
    rep.contact_margin = margin;
  }
  return rep;
}

Verdict compatibility_check(const FormField& beta1, const FormField& beta2,
                            const std::vector<SingularPoint>& sing, double tol,
                            double loci_tol) {
  if (beta1.degree != 1 || beta2.degree != 1 || beta1.chart.dim() != 2)
    throw InputError("compatibility check needs 1-forms on a 2-chart");
  FormField w = wedge(beta1, beta2);
  double minw = w.comp[0].empty() ? 0 : w.comp[0][0];
  for (double v : w.comp[0]) minw = std::min(minw, v);
  if (minw < -tol)
    return Verdict::violated(0, 0, "beta1 ^ beta2 attains " + std::to_string(minw));

  // Near-zero loci of the two forms must coincide within one grid cell.
  const GridChart& c = beta1.chart;
  int nx = c.axes[0].samples, ny = c.axes[1].samples;
  double scale1 = beta1.max_abs(), scale2 = beta2.max_abs();
  auto loci = [&](const FormField& b, double scale) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        std::size_t flat = (std::size_t)i * ny + j;
        double n2 = std::hypot(b.comp[0][flat], b.comp[1][flat]);
        if (n2 <= loci_tol * std::max(1.0, scale)) out.emplace_back(i, j);
      }
    return out;
  };
  auto z1 = loci(beta1, scale1), z2 = loci(beta2, scale2);
  auto near = [&](const std::pair<int, int>& p, const std::vector<std::pair<int, int>>& zs) {
    for (const auto& q2 : zs)
      if (std::abs(p.first - q2.first) <= 1 && std::abs(p.second - q2.second) <= 1) return true;
    return false;
  };
  for (const auto& p : z1)
    if (!near(p, z2)) return Verdict::violated(0, 0, "zero loci differ");
  for (const auto& p : z2)
    if (!near(p, z1)) return Verdict::violated(0, 0, "zero loci differ");

  for (const auto& s : sing)
    if (s.orient1 != s.orient2)
      return Verdict::violated(0, 0, "orientations disagree at a singular point");
  return Verdict::holds(0, 0);
}

namespace {

GridChart product_chart(const GridChart& sigma, int t_samples, double collar) {
  GridChart c = sigma;
  c.axes.push_back({"t", -1.0 - collar, 1.0 + collar, t_samples, false});
  return c;
}

// Extends a 2-chart form to the product chart, constant in t.
FormField extend_t(const FormField& f, const GridChart& prod) {
  FormField out = FormField::zero(prod, 1);
  int nt = prod.axes[2].samples;
  std::size_t base = f.chart.point_count();
  for (int k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < base; ++i)
      for (int t = 0; t < nt; ++t) out.comp[k][i * nt + t] = f.comp[k][i];
  return out;
}

}  // namespace

GridChart graft_chart(const GridChart& sigma, int t_samples, double collar) {
  return product_chart(sigma, t_samples, collar);
}

GraftResult grafted_form(const FormField& beta1, const FormField& beta2,
                         const FormField& mu1, const FormField& mu2,
                         const std::vector<SingularPoint>& sing, const GraftConfig& cfg,
                         int t_samples) {
  Verdict compat = compatibility_check(beta1, beta2, sing);
  if (!compat.ok()) throw InputError("grafted form: compatibility fails: " + compat.witness);
  if (cfg.eps0 <= 0 || cfg.eps < 0 || cfg.delta < 0)
    throw InputError("grafted form: profile constants must be positive");
  GridChart prod = product_chart(beta1.chart, t_samples, cfg.collar);
  if (mu1.chart.dim() != 3 || mu2.chart.dim() != 3)
    throw InputError("grafted form: mu must live on the product chart");

  FormField b1 = extend_t(beta1, prod);
  FormField b2 = extend_t(beta2, prod);

  int taxis = 2;
  auto tcoord = [&](const std::vector<double>& x) { return x[taxis]; };
  auto phi = [&](double t) { return smoothstep((t + 1.0) / 2.0); };
  auto qbump = [&](double t) {
    return smoothstep((t + 1.0) / cfg.q_width) * smoothstep((1.0 - t) / cfg.q_width);
  };
  auto psi_bottom = [&](double t) {
    return 1.0 - smoothstep((t - (-1.0 + cfg.eps0)) / cfg.eps0);
  };
  auto psi_top = [&](double t) { return 1.0 - smoothstep(((1.0 - cfg.eps0) - t) / cfg.eps0); };

  FormField phif = FormField::sample(prod, 0, {[&](const std::vector<double>& x) {
    return phi(tcoord(x));
  }});
  FormField one_minus_phi = FormField::sample(prod, 0, {[&](const std::vector<double>& x) {
    return 1.0 - phi(tcoord(x));
  }});
  FormField alpha = add(wedge(phif, b1), wedge(one_minus_phi, b2));

  // Inosculation patches.
  double hx = beta1.chart.axes[0].spacing();
  double hy = beta1.chart.axes[1].spacing();
  double radius = cfg.bump_cells * std::max(hx, hy);
  for (const auto& s : sing) {
    std::vector<std::function<double(const std::vector<double>&)>> fns(3);
    // plateau bump: identically 1 inside radius/2, 0 outside radius
    auto bump = [=](const std::vector<double>& x) {
      double r = std::hypot(x[0] - s.x, x[1] - s.y);
      return 1.0 - smoothstep(2.0 * r / radius - 1.0);
    };
    double sgn = s.sign;
    fns[0] = [=](const std::vector<double>& x) {
      return cfg.delta * qbump(x[2]) * sgn * bump(x) * (-(x[1] - s.y));  // -(y-ys) dx
    };
    fns[1] = [=](const std::vector<double>& x) {
      return cfg.delta * qbump(x[2]) * sgn * bump(x) * (x[0] - s.x);  // (x-xs) dy
    };
    fns[2] = [=](const std::vector<double>& x) {
      return cfg.delta * qbump(x[2]) * sgn * bump(x);  // dt
    };
    alpha = add(alpha, FormField::sample(prod, 1, fns));
  }

  // Collar primitives: the bottom window rides with beta2's side, the top
  // window with beta1's side.
  FormField psi1 = FormField::sample(prod, 0, {[&](const std::vector<double>& x) {
    return psi_bottom(tcoord(x));
  }});
  FormField psi2 = FormField::sample(prod, 0, {[&](const std::vector<double>& x) {
    return psi_top(tcoord(x));
  }});
  alpha = add(alpha, scale(wedge(psi1, mu2), cfg.eps));
  alpha = add(alpha, scale(wedge(psi2, mu1), cfg.eps));

  // Collar strip positivity pre-check: beta_i ^ d mu_i > 0 where its window
  // is active.  Columns through declared singular points are exempt (the
  // restricted betas vanish there by construction).
  {
    FormField w1 = wedge(b1, exterior_derivative(mu1));
    FormField w2 = wedge(b2, exterior_derivative(mu2));
    int nt = prod.axes[2].samples;
    int ny = beta1.chart.axes[1].samples;
    std::size_t base = beta1.chart.point_count();
    for (std::size_t i = 0; i < base; ++i) {
      double xc = beta1.chart.coord(0, (int)(i / ny));
      double yc = beta1.chart.coord(1, (int)(i % ny));
      bool exempt = false;
      for (const auto& s : sing)
        exempt |= (std::hypot(xc - s.x, yc - s.y) <= radius);
      if (exempt) continue;
      for (int t = 0; t < nt; ++t) {
        double tc = prod.coord(2, t);
        std::size_t flat = i * nt + t;
        if (psi_top(tc) > 0.5 && w1.comp[0][flat] <= 0)
          throw InputError("grafted form: beta1 ^ d mu1 not positive on its strip");
        if (psi_bottom(tc) > 0.5 && w2.comp[0][flat] <= 0)
          throw InputError("grafted form: beta2 ^ d mu2 not positive on its strip");
      }
    }
  }

  GraftResult res;
  res.alpha = alpha;
  res.report = contact_margin(alpha);

  // Margin along the singular columns, inner t-window.
  if (!sing.empty()) {
    FormField vol = wedge(alpha, exterior_derivative(alpha));
    const GridChart& c = beta1.chart;
    int nt = prod.axes[2].samples;
    double best = 0;
    bool first = true;
    for (int i = 0; i < c.axes[0].samples; ++i) {
      for (int j = 0; j < c.axes[1].samples; ++j) {
        double x = c.coord(0, i), y = c.coord(1, j);
        bool near = false;
        for (const auto& s : sing)
          near |= (std::hypot(x - s.x, y - s.y) <= radius / 2);
        if (!near) continue;
        for (int t = 0; t < nt; ++t) {
          if (std::abs(prod.coord(2, t)) > 0.5) continue;
          double v = vol.comp[0][((std::size_t)i * c.axes[1].samples + j) * nt + t];
          if (first || v < best) {
            best = v;
            first = false;
          }
        }
      }
    }
    res.near_arc_margin = first ? 0 : best;
  } else {
    res.near_arc_margin = res.report.margin;
  }
  return res;
}

TuneResult tune_graft(const FormField& beta1, const FormField& beta2,
                      const FormField& mu1, const FormField& mu2,
                      const std::vector<SingularPoint>& sing, int t_samples,
                      int max_evals) {
  Verdict compat = compatibility_check(beta1, beta2, sing);
  if (!compat.ok()) throw InputError("tune_graft: compatibility fails");
  TuneResult best;
  const double eps_grid[] = {0.4, 0.2, 0.1, 0.05, 0.025};
  const double delta_grid[] = {0.2, 0.1, 0.05, 0.025};
  const double eps0_grid[] = {0.2, 0.1};
  for (double eps0 : eps0_grid) {
    for (double eps : eps_grid) {
      if (sing.empty()) {
        if (best.evaluations >= max_evals) return best;
        GraftConfig cfg;
        cfg.eps = eps;
        cfg.delta = 0;
        cfg.eps0 = eps0;
        GraftResult r = grafted_form(beta1, beta2, mu1, mu2, sing, cfg, t_samples);
        best.evaluations++;
        double margin = r.report.margin;
        if (margin > best.margin || !best.found) {
          best.margin = margin;
          best.config = cfg;
        }
        if (margin > 0) {
          best.found = true;
          return best;
        }
      } else {
        for (double delta : delta_grid) {
          if (best.evaluations >= max_evals) return best;
          GraftConfig cfg;
          cfg.eps = eps;
          cfg.delta = delta;
          cfg.eps0 = eps0;
          GraftResult r = grafted_form(beta1, beta2, mu1, mu2, sing, cfg, t_samples);
          best.evaluations++;
          double margin = r.near_arc_margin;
          if (margin > best.margin || !best.found) {
            best.margin = margin;
            best.config = cfg;
          }
          if (margin > 0) {
            best.found = true;
            return best;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace trisym::graft
