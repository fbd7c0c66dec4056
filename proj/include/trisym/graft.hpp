#pragma once

// Fubini-Study sector forms, the compatibility check for interface forms,
// and the grafted contact form construction with parameter search.

#include <optional>
#include <vector>

#include "trisym/grid.hpp"

namespace trisym::graft {

// Liouville 1-form of sector lambda sampled in its own polar coordinates
// (axes named r1,t1,r2,t2,r3,t3 as available); `fixed` supplies values for
// coordinates not on the chart.
FormField fs_liouville(int lambda, const GridChart& chart,
                       const std::map<std::string, double>& fixed = {});

// The third sector's Liouville form pulled back to the first chart's
// coordinates (r1, t1, t2 with r2 fixed).
FormField fs_alpha3_in_chart1(const GridChart& chart,
                              const std::map<std::string, double>& fixed = {});

struct FsReport {
  double identity_residual = 0;   // max |(alpha1 - alpha3) - 2 dt2| on the torus slice
  double contact_margin = 0;      // min alpha1 ^ d alpha1 on smoothed boundary samples
  double argmin_u = 0;            // parameter of the boundary minimum
  double d_stencil_residual = 0;  // max |stencil d(alpha1) - exact d(alpha1)|
};

FsReport verify_fs_identities(int resolution);

struct SingularPoint {
  double x = 0, y = 0;
  int sign = +1;       // inosculation patch sign
  int orient1 = +1;    // orientation induced by d mu_1 at the point
  int orient2 = +1;
};

// (beta1 ^ beta2) >= -tol, near-zero loci within one grid cell of each
// other, and matching declared orientations at the singular points.
Verdict compatibility_check(const FormField& beta1, const FormField& beta2,
                            const std::vector<SingularPoint>& sing,
                            double tol = 1e-9, double loci_tol = 1e-6);

struct GraftConfig {
  double eps = 0.1;
  double delta = 0.1;
  double eps0 = 0.15;
  double q_width = 0.25;       // ramp width of the mid bump
  double bump_cells = 8;       // inosculation patch radius in grid cells
  double collar = 0.2;         // t extends over [-1-collar, 1+collar]
};

struct GraftResult {
  FormField alpha;               // on the product 3-chart (x, y, t)
  PositivityReport report;       // global margin
  double near_arc_margin = 0;    // margin over the singular columns, |t| <= 1/2
};

// The product chart sigma x [-1-collar, 1+collar] the grafted form lives on;
// mu inputs must be sampled on this chart.
GridChart graft_chart(const GridChart& sigma, int t_samples, double collar = 0.2);

// Assembles the grafted form on sigma x [-1-collar, 1+collar].  beta1/beta2
// live on the 2-chart sigma; mu1/mu2 on the product chart.  Preconditions:
// compatibility holds and beta_i ^ d mu_i > 0 on the matching collar strip.
GraftResult grafted_form(const FormField& beta1, const FormField& beta2,
                         const FormField& mu1, const FormField& mu2,
                         const std::vector<SingularPoint>& sing,
                         const GraftConfig& cfg, int t_samples = 32);

struct TuneResult {
  GraftConfig config;
  double margin = 0;
  int evaluations = 0;
  bool found = false;
};

// Sweeps (eps, delta, eps0) and returns the first configuration with a
// positive margin (global margin without singularities, near-arc margin
// with them).
TuneResult tune_graft(const FormField& beta1, const FormField& beta2,
                      const FormField& mu1, const FormField& mu2,
                      const std::vector<SingularPoint>& sing, int t_samples = 32,
                      int max_evals = 40);

// Quintic smoothstep: 0 below 0, 1 above 1, C^2 at both ends.
double smoothstep(double x);

}  // namespace trisym::graft
