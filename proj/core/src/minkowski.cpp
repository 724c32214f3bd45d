// SPDX-License-Identifier: Apache-2.0
#include "ortho/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ortho/rng.hpp"

namespace ortho {

double equidistance_residual(const Triangle<double>& t, const Point<double>& x,
                             const NormSpec& ns) {
  const double d0 = norm(x - t.vertex(0), ns);
  const double d1 = norm(x - t.vertex(1), ns);
  const double d2 = norm(x - t.vertex(2), ns);
  return (d0 - d1) * (d0 - d1) + (d1 - d2) * (d1 - d2);
}

namespace {

// Parameter space of the search: either the in-plane slice through the
// triangle or the ambient coordinates.
struct Chart {
  const Triangle<double>* tri;
  bool ambient;
  Vec<double> e1, e2;

  std::size_t dims() const { return ambient ? tri->vertex(0).dim() : 2; }

  Point<double> embed(const std::vector<double>& u) const {
    if (ambient) return Point<double>(std::vector<double>(u));
    return tri->vertex(0) + u[0] * e1 + u[1] * e2;
  }

  std::vector<double> project(const Point<double>& x) const {
    if (ambient) return x.coords();
    // Least-squares coordinates in the (possibly non-orthogonal) edge frame.
    const double g11 = norm_sq(e1), g12 = dot(e1, e2), g22 = norm_sq(e2);
    const Vec<double> d = x - tri->vertex(0);
    const double det = g11 * g22 - g12 * g12;
    return {(g22 * dot(d, e1) - g12 * dot(d, e2)) / det,
            (g11 * dot(d, e2) - g12 * dot(d, e1)) / det};
  }
};

struct Objective {
  const Chart* chart;
  NormSpec ns;

  double operator()(const std::vector<double>& u) const {
    return equidistance_residual(*chart->tri, chart->embed(u), ns);
  }
};

// Gradient of the residual for smooth p in (1, inf), chained into the chart.
std::vector<double> residual_gradient(const Chart& chart, const NormSpec& ns,
                                      const std::vector<double>& u) {
  const Point<double> x = chart.embed(u);
  const std::size_t n = x.dim();
  std::array<double, 3> d{};
  std::array<Vec<double>, 3> grads;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec<double> w = x - chart.tri->vertex(i);
    d[i] = norm(w, ns);
    Vec<double> g(n);
    if (d[i] > 0) {
      if (ns.is_euclidean_like()) {
        g = w / d[i];
      } else {
        for (std::size_t k = 0; k < n; ++k) {
          const double a = std::abs(w[k]);
          g[k] = a == 0.0 ? 0.0 : std::copysign(std::pow(a / d[i], ns.p - 1.0), w[k]);
        }
      }
    }
    grads[i] = std::move(g);
  }
  const Vec<double> gx = 2 * (d[0] - d[1]) * (grads[0] - grads[1]) +
                         2 * (d[1] - d[2]) * (grads[1] - grads[2]);
  if (chart.ambient) return gx.coords();
  return {dot(gx, chart.e1), dot(gx, chart.e2)};
}

// Golden-section minimization along one coordinate. Brackets by doubling the
// step in the downhill direction, then shrinks the interval to around 1e-14
// of the local scale. Residuals near a root are quadratic in the offset, so
// this squeezes them toward the arithmetic floor.
double line_min(const Objective& f, std::vector<double>& u, std::size_t k, double f0,
                double step) {
  const double x0 = u[k];
  auto eval = [&](double x) {
    u[k] = x;
    return f(u);
  };

  double a = x0, fa = f0;
  double dir = 0.0;
  double fl = eval(x0 - step), fr = eval(x0 + step);
  if (fl < f0 || fr < f0) {
    dir = fl < fr ? -step : step;
  } else {
    // Narrow valley: shrink before giving up on this coordinate.
    double s = step;
    for (int i = 0; i < 20 && dir == 0.0; ++i) {
      s *= 0.25;
      fl = eval(x0 - s);
      fr = eval(x0 + s);
      if (fl < f0 || fr < f0) dir = fl < fr ? -s : s;
    }
    if (dir == 0.0) {
      u[k] = x0;
      return f0;
    }
  }

  double b = a + dir, fb = std::min(fl, fr);
  double c = b + dir, fc = eval(c);
  while (fc < fb) {
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    dir *= 2.0;
    c = b + dir;
    fc = eval(c);
  }
  if (a > c) std::swap(a, c);

  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = c - kInvPhi * (c - a);
  double x2 = a + kInvPhi * (c - a);
  double f1 = eval(x1), f2 = eval(x2);
  const double width_tol = 1e-14 * std::max(1.0, std::abs(x0));
  for (int iter = 0; iter < 200 && c - a > width_tol; ++iter) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kInvPhi * (c - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (c - a);
      f2 = eval(x2);
    }
  }
  const double xm = f1 < f2 ? x1 : x2;
  const double fm = std::min(f1, f2);
  if (fm < f0) {
    u[k] = xm;
    return fm;
  }
  u[k] = x0;
  return f0;
}

struct LocalResult {
  std::vector<double> u;
  double residual;
  int sweeps;
};

LocalResult minimize_from(const Objective& f, std::vector<double> u, const NormSpec& ns,
                          double scale, int max_sweeps) {
  double cur = f(u);

  // Gradient phase for smooth norms: cheap progress before the polish.
  if (ns.strictly_convex()) {
    double step = 0.5 * scale;
    for (int it = 0; it < 400 && cur > 0.0; ++it) {
      std::vector<double> g = residual_gradient(*f.chart, ns, u);
      double gn = 0.0;
      for (double v : g) gn += v * v;
      if (gn < 1e-300) break;
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> trial = u;
        for (std::size_t k = 0; k < u.size(); ++k) trial[k] -= step * g[k];
        const double ft = f(trial);
        if (ft < cur) {
          u = std::move(trial);
          cur = ft;
          step *= 1.5;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
  }

  // Coordinate-descent sweeps with golden-section line minimization.
  int sweep = 0;
  double step = 0.25 * scale;
  for (; sweep < max_sweeps; ++sweep) {
    const double before = cur;
    for (std::size_t k = 0; k < u.size(); ++k) cur = line_min(f, u, k, cur, step);
    if (cur <= 0.0) break;
    if (before - cur <= 1e-30 * std::max(1.0, before)) break;
    step = std::max(step * 0.5, 1e-13 * scale);
  }
  return {std::move(u), cur, sweep + 1};
}

}  // namespace

EquidistantSolution equidistant_solve(const EquidistantProblem& prob) {
  const Triangle<double>& t = prob.triangle;
  Chart chart{&t, prob.ambient, t.vertex(1) - t.vertex(0), t.vertex(2) - t.vertex(0)};
  Objective f{&chart, prob.norm};

  double scale = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      scale = std::max(scale, norm(t.vertex(i) - t.vertex(j), NormSpec::euclidean()));

  std::vector<std::vector<double>> starts;
  if (prob.initial) starts.push_back(chart.project(*prob.initial));
  starts.push_back(chart.project(circumcenter_inplane(t).center));
  starts.push_back(chart.project(centroid(t)));
  std::mt19937_64 rng(prob.seed);
  const Point<double> g = centroid(t);
  for (int i = 0; i < 6; ++i) {
    Point<double> x(g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k)
      x[k] = g[k] + (uniform_unit(rng) * 4.0 - 2.0) * scale;
    starts.push_back(chart.project(x));
  }

  LocalResult best{{}, std::numeric_limits<double>::infinity(), 0};
  int total_sweeps = 0;
  for (const auto& s : starts) {
    LocalResult r = minimize_from(f, s, prob.norm, scale, prob.max_sweeps);
    total_sweeps += r.sweeps;
    if (r.residual < best.residual) best = std::move(r);
    if (best.residual == 0.0) break;
  }

  EquidistantSolution sol;
  sol.point = chart.embed(best.u);
  sol.residual = best.residual;
  sol.sweeps = total_sweeps;
  sol.converged = best.residual <= prob.residual_tol;
  sol.nonunique_warning = !prob.norm.strictly_convex();
  return sol;
}

MinkowskiReport verify_under_norm(const Triangle<double>& t, const Point<double>& p,
                                  const NormSpec& ns, double metric_rel_tol,
                                  double residual_tol, std::int64_t snap_max_den) {
  const double residual = equidistance_residual(t, p, ns);
  if (residual > residual_tol) {
    std::ostringstream os;
    os << "verify_under_norm: equidistance residual " << residual << " exceeds tolerance "
       << residual_tol;
    throw GeometryError(os.str());
  }

  MinkowskiReport rep;
  rep.p = p;
  rep.residual = residual;

  BatteryOptions mopt;
  mopt.rel_tol = metric_rel_tol;
  rep.metric_clauses = theorem_battery(t, p, ns, mopt);

  // Affine identities hold for the points as constructed, so they can be
  // re-checked exactly: the vertices convert to their exact binary rationals
  // and P snaps to nearby small-denominator rationals.
  Point<Rational> snapped(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) snapped[i] = Rational::approximate(p[i], snap_max_den);
  Triangle<Rational> tr(to_exact(t.vertex(0)), to_exact(t.vertex(1)), to_exact(t.vertex(2)));
  BatteryOptions aopt;
  aopt.affine_only = true;
  rep.affine_clauses = theorem_battery(tr, snapped, NormSpec::euclidean(), aopt);

  if (!ns.strictly_convex())
    rep.warnings.push_back(
        "norm is not strictly convex (p in {1, inf}): equidistant points may be non-unique");
  return rep;
}

}  // namespace ortho
