#include "trisym/grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "trisym/errors.hpp"

namespace trisym::graft {

std::size_t GridChart::point_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.samples;
  return n;
}

int GridChart::axis_index(const std::string& name) const {
  for (int i = 0; i < (int)axes.size(); ++i)
    if (axes[i].name == name) return i;
  return -1;
}

void GridChart::validate() const {
  if (dim() != 2 && dim() != 3) throw InputError("chart dimension must be 2 or 3");
  for (const auto& a : axes) {
    if (a.samples < 8) throw InputError("chart axes need at least 8 samples");
    if (!(a.hi > a.lo)) throw InputError("chart axis has empty range");
  }
}

int component_count(int degree, int dim) {
  if (degree < 0 || degree > dim) return 0;
  int n = 1, d = 1;
  for (int i = 0; i < degree; ++i) {
    n *= (dim - i);
    d *= (i + 1);
  }
  return n / d;
}

FormField FormField::zero(const GridChart& c, int degree) {
  c.validate();
  if (degree < 0 || degree > c.dim()) throw InputError("form degree out of range");
  FormField f;
  f.chart = c;
  f.degree = degree;
  f.comp.assign(component_count(degree, c.dim()),
                std::vector<double>(c.point_count(), 0.0));
  return f;
}

FormField FormField::sample(
    const GridChart& c, int degree,
    const std::vector<std::function<double(const std::vector<double>&)>>& fns) {
  FormField f = zero(c, degree);
  if ((int)fns.size() != (int)f.comp.size())
    throw InputError("component function count does not match form degree");
  int d = c.dim();
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  for (std::size_t flat = 0; flat < c.point_count(); ++flat) {
    std::size_t rem = flat;
    for (int a = d - 1; a >= 0; --a) {
      idx[a] = (int)(rem % c.axes[a].samples);
      rem /= c.axes[a].samples;
    }
    for (int a = 0; a < d; ++a) x[a] = c.coord(a, idx[a]);
    for (std::size_t k = 0; k < fns.size(); ++k) f.comp[k][flat] = fns[k](x);
  }
  return f;
}

std::size_t FormField::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < chart.dim(); ++a) flat = flat * chart.axes[a].samples + idx[a];
  return flat;
}

void FormField::point(const std::vector<int>& idx, std::vector<double>* coords) const {
  coords->resize(chart.dim());
  for (int a = 0; a < chart.dim(); ++a) (*coords)[a] = chart.coord(a, idx[a]);
}

double FormField::max_abs() const {
  double m = 0;
  for (const auto& c : comp)
    for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// 4th-order first derivative along one axis; periodic wrap or one-sided
// stencils at the ends.
std::vector<double> partial(const std::vector<double>& data, const GridChart& c, int axis) {
  int d = c.dim();
  std::vector<int> n(d);
  for (int a = 0; a < d; ++a) n[a] = c.axes[a].samples;
  double h = c.axes[axis].spacing();
  std::vector<double> out(data.size(), 0.0);

  std::vector<std::size_t> stride(d, 1);
  for (int a = d - 2; a >= 0; --a) stride[a] = stride[a + 1] * n[a + 1];

  int na = n[axis];
  bool per = c.axes[axis].periodic;
  auto at = [&](std::size_t base, int i) { return data[base + (std::size_t)i * stride[axis]]; };

  std::vector<int> idx(d, 0);
  std::size_t total = data.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int a = d - 1; a >= 0; --a) {
      idx[a] = (int)(rem % n[a]);
      rem /= n[a];
    }
    if (idx[axis] != 0) continue;  // sweep whole lines at once
    std::size_t base = flat;
    for (int i = 0; i < na; ++i) {
      double v;
      if (per) {
        auto w = [&](int k) { return at(base, ((i + k) % na + na) % na); };
        v = (-w(2) + 8 * w(1) - 8 * w(-1) + w(-2)) / (12 * h);
      } else if (i >= 2 && i <= na - 3) {
        v = (-at(base, i + 2) + 8 * at(base, i + 1) - 8 * at(base, i - 1) + at(base, i - 2)) /
            (12 * h);
      } else if (i == 0) {
        v = (-25 * at(base, 0) + 48 * at(base, 1) - 36 * at(base, 2) + 16 * at(base, 3) -
             3 * at(base, 4)) /
            (12 * h);
      } else if (i == 1) {
        v = (-3 * at(base, 0) - 10 * at(base, 1) + 18 * at(base, 2) - 6 * at(base, 3) +
             at(base, 4)) /
            (12 * h);
      } else if (i == na - 2) {
        v = (3 * at(base, na - 1) + 10 * at(base, na - 2) - 18 * at(base, na - 3) +
             6 * at(base, na - 4) - at(base, na - 5)) /
            (12 * h);
      } else {  // i == na - 1
        v = (25 * at(base, na - 1) - 48 * at(base, na - 2) + 36 * at(base, na - 3) -
             16 * at(base, na - 4) + 3 * at(base, na - 5)) /
            (12 * h);
      }
      out[base + (std::size_t)i * stride[axis]] = v;
    }
  }
  return out;
}

void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace

FormField exterior_derivative(const FormField& f) {
  int dim = f.chart.dim();
  if (f.degree >= dim) throw InputError("exterior derivative: degree overflow");
  FormField out = FormField::zero(f.chart, f.degree + 1);
  if (f.degree == 0) {
    for (int a = 0; a < dim; ++a) out.comp[a] = partial(f.comp[0], f.chart, a);
  } else if (f.degree == 1 && dim == 2) {
    out.comp[0] = partial(f.comp[1], f.chart, 0);
    axpy(out.comp[0], -1.0, partial(f.comp[0], f.chart, 1));
  } else if (f.degree == 1 && dim == 3) {
    out.comp[0] = partial(f.comp[1], f.chart, 0);  // (01)
    axpy(out.comp[0], -1.0, partial(f.comp[0], f.chart, 1));
    out.comp[1] = partial(f.comp[2], f.chart, 0);  // (02)
    axpy(out.comp[1], -1.0, partial(f.comp[0], f.chart, 2));
    out.comp[2] = partial(f.comp[2], f.chart, 1);  // (12)
    axpy(out.comp[2], -1.0, partial(f.comp[1], f.chart, 2));
  } else if (f.degree == 2 && dim == 3) {
    out.comp[0] = partial(f.comp[2], f.chart, 0);  // d(12) part
    axpy(out.comp[0], -1.0, partial(f.comp[1], f.chart, 1));
    axpy(out.comp[0], 1.0, partial(f.comp[0], f.chart, 2));
  } else {
    throw InputError("exterior derivative: unsupported degree/dimension");
  }
  return out;
}

FormField wedge(const FormField& a, const FormField& b) {
  if (a.chart.axes.size() != b.chart.axes.size())
    throw InputError("wedge: chart mismatch");
  for (std::size_t i = 0; i < a.chart.axes.size(); ++i)
    if (a.chart.axes[i].name != b.chart.axes[i].name ||
        a.chart.axes[i].samples != b.chart.axes[i].samples)
      throw InputError("wedge: chart mismatch");
  int dim = a.chart.dim();
  int dg = a.degree + b.degree;
  if (dg > dim) throw InputError("wedge: degree overflow");
  FormField out = FormField::zero(a.chart, dg);
  std::size_t n = a.chart.point_count();

  auto mul_into = [&](int oc, double s, const std::vector<double>& u,
                      const std::vector<double>& v) {
    for (std::size_t i = 0; i < n; ++i) out.comp[oc][i] += s * u[i] * v[i];
  };

  if (a.degree == 0) {
    for (std::size_t k = 0; k < b.comp.size(); ++k) mul_into((int)k, 1.0, a.comp[0], b.comp[k]);
  } else if (b.degree == 0) {
    for (std::size_t k = 0; k < a.comp.size(); ++k) mul_into((int)k, 1.0, a.comp[k], b.comp[0]);
  } else if (a.degree == 1 && b.degree == 1 && dim == 2) {
    mul_into(0, 1.0, a.comp[0], b.comp[1]);
    mul_into(0, -1.0, a.comp[1], b.comp[0]);
  } else if (a.degree == 1 && b.degree == 1 && dim == 3) {
    mul_into(0, 1.0, a.comp[0], b.comp[1]);  // (01)
    mul_into(0, -1.0, a.comp[1], b.comp[0]);
    mul_into(1, 1.0, a.comp[0], b.comp[2]);  // (02)
    mul_into(1, -1.0, a.comp[2], b.comp[0]);
    mul_into(2, 1.0, a.comp[1], b.comp[2]);  // (12)
    mul_into(2, -1.0, a.comp[2], b.comp[1]);
  } else if (a.degree == 1 && b.degree == 2 && dim == 3) {
    mul_into(0, 1.0, a.comp[0], b.comp[2]);   // dx ^ (12)
    mul_into(0, -1.0, a.comp[1], b.comp[1]);  // dy ^ (02)
    mul_into(0, 1.0, a.comp[2], b.comp[0]);   // dz ^ (01)
  } else if (a.degree == 2 && b.degree == 1 && dim == 3) {
    mul_into(0, 1.0, a.comp[2], b.comp[0]);
    mul_into(0, -1.0, a.comp[1], b.comp[1]);
    mul_into(0, 1.0, a.comp[0], b.comp[2]);
  } else {
    throw InputError("wedge: unsupported degree combination");
  }
  return out;
}

FormField add(const FormField& a, const FormField& b) {
  if (a.degree != b.degree || a.comp.size() != b.comp.size())
    throw InputError("add: degree mismatch");
  FormField out = a;
  for (std::size_t k = 0; k < b.comp.size(); ++k) axpy(out.comp[k], 1.0, b.comp[k]);
  return out;
}

FormField scale(const FormField& a, double s) {
  FormField out = a;
  for (auto& c : out.comp)
    for (auto& v : c) v *= s;
  return out;
}

PositivityReport contact_margin(const FormField& alpha) {
  if (alpha.degree != 1 || alpha.chart.dim() != 3)
    throw InputError("contact margin needs a 1-form on a 3-chart");
  FormField vol = wedge(alpha, exterior_derivative(alpha));
  PositivityReport rep;
  rep.margin = vol.comp[0][0];
  std::size_t arg = 0;
  for (std::size_t i = 0; i < vol.comp[0].size(); ++i) {
    if (vol.comp[0][i] < rep.margin) {
      rep.margin = vol.comp[0][i];
      arg = i;
    }
  }
  const auto& ax = alpha.chart.axes;
  std::vector<int> idx(3);
  std::size_t rem = arg;
  for (int a = 2; a >= 0; --a) {
    idx[a] = (int)(rem % ax[a].samples);
    rem /= ax[a].samples;
  }
  for (int a = 0; a < 3; ++a) rep.argmin.push_back(alpha.chart.coord(a, idx[a]));
  return rep;
}

Verdict calabi_positive_path(const FormField& beta, const std::vector<int>& p,
                             const std::vector<int>& q, double tol) {
  if (beta.degree != 1) throw InputError("positive path needs a 1-form");
  const GridChart& c = beta.chart;
  int d = c.dim();
  if ((int)p.size() != d || (int)q.size() != d)
    throw InputError("positive path: point dimension mismatch");

  auto norm_at = [&](std::size_t flat) {
    double s = 0;
    for (const auto& comp : beta.comp) s += comp[flat] * comp[flat];
    return std::sqrt(s);
  };
  auto flat_of = [&](const std::vector<int>& idx) {
    std::size_t f = 0;
    for (int a = 0; a < d; ++a) f = f * c.axes[a].samples + idx[a];
    return f;
  };
  for (const auto* pt : {&p, &q}) {
    for (int a = 0; a < d; ++a)
      if ((*pt)[a] < 0 || (*pt)[a] >= c.axes[a].samples)
        throw InputError("positive path: point outside grid");
    if (norm_at(flat_of(*pt)) < tol)
      throw InputError("positive path: endpoint sits at a zero of the form");
  }

  std::vector<char> seen(c.point_count(), 0);
  std::deque<std::vector<int>> queue{p};
  seen[flat_of(p)] = 1;
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    if (cur == q) return Verdict::holds(0, 0, "reachable");
    std::size_t cf = flat_of(cur);
    for (int a = 0; a < d; ++a) {
      for (int dir = -1; dir <= 1; dir += 2) {
        std::vector<int> nxt = cur;
        nxt[a] += dir;
        if (c.axes[a].periodic) {
          nxt[a] = (nxt[a] + c.axes[a].samples) % c.axes[a].samples;
        } else if (nxt[a] < 0 || nxt[a] >= c.axes[a].samples) {
          continue;
        }
        std::size_t nf = flat_of(nxt);
        if (seen[nf]) continue;
        // pairing of beta with the step, midpoint rule
        double pairing = 0.5 * (beta.comp[a][cf] + beta.comp[a][nf]) * dir * c.axes[a].spacing();
        if (pairing <= tol) continue;
        seen[nf] = 1;
        queue.push_back(nxt);
      }
    }
  }
  return Verdict::violated(0, 0, "unreachable");
}

}  // namespace trisym::graft
