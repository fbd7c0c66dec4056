#pragma once

// Grid-sampled differential forms on 2- and 3-dimensional charts: 4th-order
// finite-difference exterior derivative, pointwise wedge, contact margins
// and the positive-path reachability check.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trisym/verdict.hpp"

namespace trisym::graft {

struct Axis {
  std::string name;
  double lo = 0, hi = 1;
  int samples = 8;
  bool periodic = false;

  double spacing() const { return (hi - lo) / (periodic ? samples : samples - 1); }
};

struct GridChart {
  std::vector<Axis> axes;

  int dim() const { return (int)axes.size(); }
  double coord(int axis, int idx) const { return axes[axis].lo + axes[axis].spacing() * idx; }
  std::size_t point_count() const;
  int axis_index(const std::string& name) const;  // -1 when absent
  void validate() const;                          // >= 8 samples per axis, dim 2 or 3
};

// Basis component count of a degree-k form in dimension d (binomial d choose k).
int component_count(int degree, int dim);

struct FormField {
  GridChart chart;
  int degree = 0;
  // Components in lexicographic basis order: deg 1: (0),(1),(2); deg 2 in 3d:
  // (01),(02),(12); deg 2 in 2d / deg 3 in 3d: single component.
  std::vector<std::vector<double>> comp;

  static FormField zero(const GridChart& c, int degree);
  // Samples coefficient functions of the coordinates.
  static FormField sample(const GridChart& c, int degree,
                          const std::vector<std::function<double(const std::vector<double>&)>>& fns);

  std::size_t flat_index(const std::vector<int>& idx) const;
  void point(const std::vector<int>& idx, std::vector<double>* coords) const;
  double max_abs() const;
};

FormField exterior_derivative(const FormField& f);
FormField wedge(const FormField& a, const FormField& b);
FormField add(const FormField& a, const FormField& b);
FormField scale(const FormField& a, double s);

struct PositivityReport {
  double margin = 0;
  std::vector<double> argmin;
  std::map<std::string, double> residuals;
};

// Minimum of the alpha ^ d(alpha) coefficient over the chart (degree-1 input
// on a 3-chart), against the chart's coordinate volume element.
PositivityReport contact_margin(const FormField& alpha);

// Reachability p -> q through grid steps with strictly positive pairing
// against the 1-form beta.  Indices are grid multi-indices.
Verdict calabi_positive_path(const FormField& beta, const std::vector<int>& p,
                             const std::vector<int>& q, double tol = 1e-9);

}  // namespace trisym::graft
