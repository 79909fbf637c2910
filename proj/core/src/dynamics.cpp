// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "darboux/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/errors.hpp"
#include "darboux/parser.hpp"
#include "darboux/search.hpp"

namespace darboux {

namespace {

double norm2(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double dist(const Vec3& a, const Vec3& b) {
  return norm2({a[0] - b[0], a[1] - b[1], a[2] - b[2]});
}

bool finite(const Vec3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

/// Flat term list for fast double evaluation of an exact polynomial.
struct CompiledPoly {
  struct Term {
    double c;
    int ex, ey, ez;
  };
  std::vector<Term> terms;

  static CompiledPoly from(const Poly& p) {
    CompiledPoly out;
    for (const auto& [m, c] : p.terms()) {
      if (!c.is_constant())
        throw Error("numeric evaluation needs fixed parameters");
      out.terms.push_back({c.constant_value().to_double(), m.x, m.y, m.z});
    }
    return out;
  }

  double eval(const Vec3& p) const {
    double sum = 0.0;
    for (const auto& t : terms) {
      double v = t.c;
      for (int i = 0; i < t.ex; ++i) v *= p[0];
      for (int i = 0; i < t.ey; ++i) v *= p[1];
      for (int i = 0; i < t.ez; ++i) v *= p[2];
      sum += v;
    }
    return sum;
  }
};

struct CompiledField {
  std::array<CompiledPoly, 3> f;
  std::array<std::array<CompiledPoly, 3>, 3> jac;
  bool reversed = false;

  static CompiledField from(const Field& x, bool reversed = false) {
    CompiledField out;
    out.reversed = reversed;
    auto j = jacobian(x);
    for (int i = 0; i < 3; ++i) {
      out.f[i] = CompiledPoly::from(x.component(i));
      for (int k = 0; k < 3; ++k) out.jac[i][k] = CompiledPoly::from(j[i][k]);
    }
    return out;
  }

  Vec3 eval(const Vec3& p) const {
    double s = reversed ? -1.0 : 1.0;
    return {s * f[0].eval(p), s * f[1].eval(p), s * f[2].eval(p)};
  }

  std::array<std::array<double, 3>, 3> jacobian_at(const Vec3& p) const {
    std::array<std::array<double, 3>, 3> m;
    double s = reversed ? -1.0 : 1.0;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) m[i][k] = s * jac[i][k].eval(p);
    return m;
  }
};

Vec3 rk4_step(const CompiledField& f, const Vec3& y, double h) {
  Vec3 k1 = f.eval(y);
  Vec3 k2 = f.eval({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1],
                    y[2] + 0.5 * h * k1[2]});
  Vec3 k3 = f.eval({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1],
                    y[2] + 0.5 * h * k2[2]});
  Vec3 k4 = f.eval({y[0] + h * k3[0], y[1] + h * k3[1], y[2] + h * k3[2]});
  return {y[0] + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
          y[2] + h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])};
}

bool solve3(std::array<std::array<double, 3>, 3> a, Vec3 b, Vec3& out) {
  // Gaussian elimination with partial pivoting.
  std::array<int, 3> perm = {0, 1, 2};
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(a[perm[r]][c]) > std::abs(a[perm[piv]][c])) piv = r;
    std::swap(perm[c], perm[piv]);
    double p = a[perm[c]][c];
    if (std::abs(p) < 1e-300) return false;
    for (int r = c + 1; r < 3; ++r) {
      double f = a[perm[r]][c] / p;
      if (f == 0.0) continue;
      for (int k = c; k < 3; ++k) a[perm[r]][k] -= f * a[perm[c]][k];
      b[perm[r]] -= f * b[perm[c]];
    }
  }
  for (int c = 2; c >= 0; --c) {
    double s = b[perm[c]];
    for (int k = c + 1; k < 3; ++k) s -= a[perm[c]][k] * out[k];
    out[c] = s / a[perm[c]][c];
  }
  return true;
}

/// Roots of t^3 + c2 t^2 + c1 t + c0: closed form for the real root(s),
/// Newton polish, exact complex pair from the deflated quadratic.
std::array<std::complex<double>, 3> cubic_roots(double c2, double c1,
                                                double c0) {
  auto polish = [&](double t) {
    for (int i = 0; i < 40; ++i) {
      double f = ((t + c2) * t + c1) * t + c0;
      double df = (3.0 * t + 2.0 * c2) * t + c1;
      if (df == 0.0) break;
      double step = f / df;
      t -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(t))) break;
    }
    return t;
  };

  double sh = c2 / 3.0;
  double p = c1 - c2 * c2 / 3.0;
  double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  double disc = q * q / 4.0 + p * p * p / 27.0;
  if (disc >= 0.0) {
    double s = std::sqrt(disc);
    double r = polish(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) - sh);
    // Deflate: t^2 + (c2 + r) t + (c1 + r(c2 + r)).
    double b1 = c2 + r, b0 = c1 + r * b1;
    std::complex<double> d = std::sqrt(std::complex<double>(b1 * b1 - 4 * b0));
    return {std::complex<double>(r),
            (-b1 + d) / 2.0,
            (-b1 - d) / 2.0};
  }
  double rad = std::sqrt(-p * p * p / 27.0);
  double phi = std::acos(std::clamp(-q / (2.0 * rad), -1.0, 1.0));
  double mag = 2.0 * std::sqrt(-p / 3.0);
  std::array<std::complex<double>, 3> roots;
  for (int k = 0; k < 3; ++k)
    roots[k] = polish(mag * std::cos((phi + 2.0 * M_PI * k) / 3.0) - sh);
  return roots;
}

std::optional<Rat> rational_near(double v, long max_den = 1000000L) {
  if (!std::isfinite(v)) return std::nullopt;
  // Continued-fraction reconstruction; candidate accepted by the caller
  // only after an exact check.
  double val = v;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 48; ++it) {
    double fl = std::floor(val);
    if (std::abs(fl) > 9e15) return std::nullopt;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    double frac = val - fl;
    if (frac < 1e-12) break;
    val = 1.0 / frac;
  }
  if (q1 <= 0) return std::nullopt;
  return Rat(p1, q1);
}

/// Builtin-family parameters when the linear part is diagonal and fixed.
struct DiagParams {
  Rat a, b;
};

std::optional<DiagParams> diagonal_params(const Field& x) {
  if (!x.is_param_free() || !x.linear_part_is_diagonal()) return std::nullopt;
  auto lin = x.linear_matrix();
  return DiagParams{lin[0][0].constant_value(), lin[1][1].constant_value()};
}

}  // namespace

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::source: return "source";
    case StabilityClass::sink: return "sink";
    case StabilityClass::saddle: return "saddle";
    case StabilityClass::nonhyperbolic: return "nonhyperbolic";
  }
  return "?";
}

FixedPointRecord classify(const Field& x, const Vec3& p,
                          const DynOptions& opt) {
  CompiledField cf = CompiledField::from(x);
  if (norm2(cf.eval(p)) >= opt.newton_tol)
    throw Error("classify: point is not an equilibrium at the requested "
                "tolerance");

  FixedPointRecord rec;
  rec.location = p;

  // Attach the exact form when a nearby rational point kills the field
  // exactly.
  std::array<Rat, 3> exact;
  bool have_exact = true;
  for (int i = 0; i < 3 && have_exact; ++i) {
    auto r = rational_near(p[i]);
    if (r && std::abs(r->to_double() - p[i]) < 1e-9) exact[i] = *r;
    else have_exact = false;
  }
  if (have_exact) {
    bool zero = true;
    for (int i = 0; i < 3; ++i)
      zero = zero && x.component(i).eval({exact[0], exact[1], exact[2]}).is_zero();
    if (zero) rec.exact = exact;
  }

  auto j = cf.jacobian_at(p);
  double tr = j[0][0] + j[1][1] + j[2][2];
  double minors = j[0][0] * j[1][1] - j[0][1] * j[1][0] + j[0][0] * j[2][2] -
                  j[0][2] * j[2][0] + j[1][1] * j[2][2] - j[1][2] * j[2][1];
  double det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
               j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
               j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
  rec.eigenvalues = cubic_roots(-tr, minors, -det);
  std::sort(rec.eigenvalues.begin(), rec.eigenvalues.end(),
            [](const std::complex<double>& l, const std::complex<double>& r) {
              if (l.real() != r.real()) return l.real() < r.real();
              return l.imag() < r.imag();
            });

  int pos = 0, neg = 0, center = 0;
  for (const auto& ev : rec.eigenvalues) {
    if (std::abs(ev.real()) < opt.hyperbolic_tol) ++center;
    else if (ev.real() > 0) ++pos;
    else ++neg;
  }
  rec.stable_manifold_dim = neg;
  if (center > 0) rec.stability = StabilityClass::nonhyperbolic;
  else if (pos == 3) rec.stability = StabilityClass::source;
  else if (neg == 3) rec.stability = StabilityClass::sink;
  else rec.stability = StabilityClass::saddle;
  return rec;
}

FixedPointScan find_fixed_points(const Field& x, double box_lo, double box_hi,
                                 int seeds_per_axis, const DynOptions& opt) {
  if (!x.is_param_free()) throw Error("fixed-point scan needs fixed parameters");
  if (seeds_per_axis < 2) seeds_per_axis = 2;
  CompiledField cf = CompiledField::from(x);

  FixedPointScan scan;

  // Whole axes of equilibria are detected exactly: the field restricted to
  // the axis must vanish identically.
  for (int axis = 0; axis < 3; ++axis) {
    bool vanish = true;
    for (int i = 0; i < 3 && vanish; ++i) {
      for (const auto& [m, c] : x.component(i).terms()) {
        int off_axis = (axis == 0 ? m.y + m.z : axis == 1 ? m.x + m.z : m.x + m.y);
        if (off_axis == 0 && !c.is_zero()) {
          vanish = false;
          break;
        }
      }
    }
    if (vanish) {
      scan.degenerate_axes.push_back(axis);
      for (double t : {-1.0, -0.5, 0.5, 1.0}) {
        Vec3 s{0, 0, 0};
        s[axis] = t;
        scan.axis_samples.push_back(s);
      }
    }
  }

  std::vector<Vec3> seeds;
  double span = box_hi - box_lo;
  for (int i = 0; i < seeds_per_axis; ++i)
    for (int j = 0; j < seeds_per_axis; ++j)
      for (int k = 0; k < seeds_per_axis; ++k)
        seeds.push_back({box_lo + span * i / (seeds_per_axis - 1),
                         box_lo + span * j / (seeds_per_axis - 1),
                         box_lo + span * k / (seeds_per_axis - 1)});
  seeds.push_back({0, 0, 0});

  // Exact-formula seeds for the builtin family at a = b < 0: both signs of
  // the last coordinate are injected so Newton can settle on the right one.
  if (auto dp = diagonal_params(x); dp && x.is_builtin_d2() &&
                                    dp->a == dp->b && dp->a.sign() < 0) {
    double s = std::sqrt(-dp->a.to_double());
    double az = dp->a.to_double();
    for (double sx : {-1.0, 1.0})
      for (double sy : {-1.0, 1.0})
        for (double sz : {-1.0, 1.0})
          seeds.push_back({sx * s, sy * s, sz * az});
  }

  std::vector<Vec3> found;
  for (const Vec3& seed : seeds) {
    Vec3 p = seed;
    bool ok = false;
    for (int it = 0; it < 80; ++it) {
      Vec3 fv = cf.eval(p);
      if (!finite(p) || norm2(p) > 1e8) break;
      if (norm2(fv) < opt.newton_tol) {
        ok = true;
        break;
      }
      Vec3 step{};
      if (!solve3(cf.jacobian_at(p), {-fv[0], -fv[1], -fv[2]}, step)) break;
      p = {p[0] + step[0], p[1] + step[1], p[2] + step[2]};
    }
    if (!ok) continue;
    double margin = 1e-6 * std::max(1.0, span);
    if (p[0] < box_lo - margin || p[0] > box_hi + margin ||
        p[1] < box_lo - margin || p[1] > box_hi + margin ||
        p[2] < box_lo - margin || p[2] > box_hi + margin)
      continue;
    // Points on a degenerate axis belong to the family report.
    bool on_axis = false;
    for (int axis : scan.degenerate_axes) {
      double off = 0;
      for (int i = 0; i < 3; ++i)
        if (i != axis) off += p[i] * p[i];
      if (std::sqrt(off) < 1e-6) on_axis = true;
    }
    if (on_axis) continue;
    bool dup = false;
    for (const Vec3& q : found)
      if (dist(p, q) < 1e-7) dup = true;
    if (!dup) found.push_back(p);
  }

  std::sort(found.begin(), found.end(), [](const Vec3& l, const Vec3& r) {
    for (int i = 0; i < 3; ++i)
      if (std::abs(l[i] - r[i]) > 1e-9) return l[i] < r[i];
    return false;
  });
  for (const Vec3& p : found) scan.points.push_back(classify(x, p, opt));
  return scan;
}

Trajectory integrate(const Field& x, const Vec3& x0, double tmax, double h,
                     const DynOptions& opt) {
  if (h <= 0) throw Error("step size must be positive");
  if (tmax == 0) throw Error("tmax must be nonzero");
  bool reversed = tmax < 0;
  double horizon = std::abs(tmax);
  CompiledField cf = CompiledField::from(x, reversed);

  Trajectory out;
  out.step = h;
  out.time_reversed = reversed;
  out.samples.emplace_back(0.0, x0);

  Vec3 y = x0;
  long steps = static_cast<long>(std::ceil(horizon / h - 1e-9));
  for (long i = 1; i <= steps; ++i) {
    Vec3 next = rk4_step(cf, y, h);
    if (!finite(next)) {
      out.status = Trajectory::Status::nonfinite;
      return out;
    }
    y = next;
    out.samples.emplace_back(i * h, y);
    if (norm2(y) > opt.escape_radius) {
      out.status = Trajectory::Status::escaped;
      return out;
    }
  }
  return out;
}

double invariance_drift(const Field& x, const Poly& f, const Rat& c0,
                        const Vec3& x0, double tmax, double h,
                        const DynOptions& opt) {
  if (!verify_darboux(x, f, Poly(ParamPoly(c0))))
    throw Error("invariance_drift: (f, c0) is not a verified pair for X");
  CompiledPoly cp = CompiledPoly::from(f);
  double c = c0.to_double();
  Trajectory traj = integrate(x, x0, tmax, h, opt);
  double f0 = cp.eval(x0);
  double denom = std::max(std::abs(f0), 1.0);
  double drift = 0.0;
  for (const auto& [t, p] : traj.samples) {
    double v = cp.eval(p) * std::exp(-c * (traj.time_reversed ? -t : t));
    drift = std::max(drift, std::abs(v - f0) / denom);
  }
  return drift;
}

PlanarField restrict_to_plane(const Field& x, InvariantPlane plane) {
  Poly marker = parse_polynomial("x^2 - y^2");
  if (!extract_constant_cofactor(x, marker))
    throw Error("the planes x = +-y are not invariant for these parameters");

  int sign = plane == InvariantPlane::x_eq_y ? 1 : -1;
  auto subst_y = [&](const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
      ParamPoly coeff = (sign < 0 && m.y % 2 == 1) ? -c : c;
      out += Poly::term(coeff, Monomial{m.x + m.y, 0, m.z});
    }
    return out;
  };
  return {subst_y(x.component(0)), subst_y(x.component(2))};
}

LyapunovReport lyapunov_check(const PlanarField& field, const Poly& v,
                              int sample_count, double radius, unsigned seed) {
  if (v.is_zero()) throw Error("Lyapunov candidate is identically zero");
  auto origin_term = v.terms().find(Monomial{0, 0, 0});
  if (origin_term != v.terms().end())
    throw Error("Lyapunov candidate must vanish at the origin");

  // Derivative of v along the planar field, computed exactly first.
  Poly lv = field.du * v.partial(0) + field.dw * v.partial(2);
  CompiledPoly clv = CompiledPoly::from(lv);

  LyapunovReport rep;
  std::uint64_t state = seed ? seed : 1;
  auto next01 = [&state]() {
    // xorshift64*; bit-stable across platforms
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return static_cast<double>((state * 0x2545F4914F6CDD1DULL) >> 11) /
           9007199254740992.0;
  };

  int first_sign = 0;
  for (int i = 0; i < sample_count; ++i) {
    double r = radius * std::sqrt(next01());
    double th = 2.0 * M_PI * next01();
    std::array<double, 2> pt{r * std::cos(th), r * std::sin(th)};
    double val = clv.eval({pt[0], 0.0, pt[1]});
    if (i == 0 || val < rep.min_value) {
      rep.min_value = val;
      rep.argmin = pt;
    }
    if (i == 0 || val > rep.max_value) {
      rep.max_value = val;
      rep.argmax = pt;
    }
    int s = val > 0 ? 1 : val < 0 ? -1 : 0;
    if (s > 0) ++rep.positive;
    else if (s < 0) ++rep.negative;
    else ++rep.zero;
    if (s != 0) {
      if (first_sign == 0) first_sign = s;
      else if (s != first_sign && !rep.first_sign_violation)
        rep.first_sign_violation = pt;
    }
  }
  return rep;
}

namespace {

struct ProbeOutcome {
  bool reached = false;
  double closest = 0.0;
  double plane_residual = 0.0;
};

// Integrates from `start`, watching the distance to `goal` and the plane
// residual |x -+ y|. Stops on arrival, escape, or the time horizon.
ProbeOutcome run_probe(const CompiledField& cf, Vec3 start, const Vec3& goal,
                       int plane_sign, double tol, double h, double tmax,
                       double escape_radius) {
  ProbeOutcome out;
  Vec3 y = start;
  out.closest = dist(y, goal);
  long steps = static_cast<long>(tmax / h);
  for (long i = 0; i < steps; ++i) {
    y = rk4_step(cf, y, h);
    if (!finite(y) || norm2(y) > escape_radius) break;
    double residual = std::abs(plane_sign > 0 ? y[0] - y[1] : y[0] + y[1]);
    out.plane_residual = std::max(out.plane_residual, residual);
    double d = dist(y, goal);
    out.closest = std::min(out.closest, d);
    if (d < tol) {
      out.reached = true;
      break;
    }
  }
  return out;
}

}  // namespace

HeteroclinicReport heteroclinic_probe(const Field& x, const DynOptions& opt) {
  auto dp = diagonal_params(x);
  if (!x.is_builtin_d2() || !dp || !(dp->a == dp->b) || dp->a.sign() >= 0)
    throw Error("heteroclinic probe requires the builtin field at a = b < 0");

  double a = dp->a.to_double();
  double s = std::sqrt(-a);
  CompiledField forward = CompiledField::from(x, false);
  CompiledField backward = CompiledField::from(x, true);

  HeteroclinicReport rep;
  rep.tol = opt.heteroclinic_tol;

  struct Equilibrium {
    Vec3 p;
    int plane_sign;  // +1: x = y, -1: x = -y
  };
  // Nontrivial equilibria: x = +-sqrt(-a), y = +-sqrt(-a), z = x*y.
  std::vector<Equilibrium> eqs = {
      {{s, s, -a}, +1},
      {{-s, -s, -a}, +1},
      {{s, -s, a}, -1},
      {{-s, s, a}, -1},
  };

  const double eps = opt.perturbation;
  const Vec3 origin{0, 0, 0};
  for (const auto& eq : eqs) {
    HeteroclinicConnection conn;
    conn.equilibrium = eq.p;
    conn.plane = eq.plane_sign > 0 ? "x=y" : "x=-y";
    conn.direction = "undetermined";
    conn.closest_approach = dist(eq.p, origin);

    // The origin's in-plane eigendirections are the plane axes themselves:
    // the u-direction (eigenvalue a < 0, stable) and the w-direction
    // (eigenvalue 1, unstable). Tracing the stable one backward follows the
    // unique in-plane stable manifold toward whatever feeds it.
    double su = eq.p[0] > 0 ? 1.0 : -1.0;
    Vec3 stable_start{su * eps, eq.plane_sign * su * eps, 0.0};
    ProbeOutcome back = run_probe(backward, stable_start, eq.p, eq.plane_sign,
                                  opt.heteroclinic_tol, opt.step,
                                  opt.probe_tmax, opt.escape_radius);
    if (back.reached) {
      conn.connected = true;
      conn.direction = "equilibrium_to_origin";
      conn.plane_residual = back.plane_residual;
      conn.closest_approach = back.closest;
      conn.method = "origin_stable_manifold_backward";
    } else {
      // Forward launches off the equilibrium (its in-plane linearization may
      // be a focus, so perturb along both plane axes), watching for an
      // approach to the origin; plus the reverse-direction probe from the
      // origin's unstable axis.
      double best = back.closest;
      double best_residual = back.plane_residual;
      bool reached = false;
      std::string method;
      for (int axis = 0; axis < 2 && !reached; ++axis) {
        for (double sgn : {1.0, -1.0}) {
          Vec3 start = eq.p;
          if (axis == 0) {
            start[0] += sgn * eps;
            start[1] += eq.plane_sign * sgn * eps;
          } else {
            start[2] += sgn * eps;
          }
          ProbeOutcome fwd = run_probe(forward, start, origin, eq.plane_sign,
                                       opt.heteroclinic_tol, opt.step,
                                       opt.probe_tmax, opt.escape_radius);
          if (fwd.closest < best) {
            best = fwd.closest;
            best_residual = fwd.plane_residual;
          }
          if (fwd.reached) {
            reached = true;
            method = "equilibrium_forward_launch";
            break;
          }
        }
      }
      if (!reached) {
        Vec3 unstable_start{0.0, 0.0, eps};
        ProbeOutcome rev = run_probe(forward, unstable_start, eq.p,
                                     eq.plane_sign, opt.heteroclinic_tol,
                                     opt.step, opt.probe_tmax,
                                     opt.escape_radius);
        if (rev.reached) {
          conn.connected = true;
          conn.direction = "origin_to_equilibrium";
          conn.plane_residual = rev.plane_residual;
          conn.closest_approach = rev.closest;
          conn.method = "origin_unstable_manifold_forward";
        }
      }
      if (reached) {
        conn.connected = true;
        conn.direction = "equilibrium_to_origin";
        conn.plane_residual = best_residual;
        conn.closest_approach = best;
        conn.method = method;
      } else if (!conn.connected) {
        conn.closest_approach = best;
        conn.plane_residual = best_residual;
        conn.method = "inconclusive";
      }
    }
    rep.connections.push_back(std::move(conn));
  }
  return rep;
}

}  // namespace darboux
