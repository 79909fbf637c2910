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

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "darboux/field.hpp"
#include "darboux/poly.hpp"

namespace darboux {

using Vec3 = std::array<double, 3>;

/// Tolerances and integrator defaults for the numeric layer. All of them
/// are overridable from the CLI.
struct DynOptions {
  double newton_tol = 1e-12;
  double hyperbolic_tol = 1e-6;
  double heteroclinic_tol = 1e-4;
  double perturbation = 1e-6;
  double escape_radius = 1e6;
  double step = 1e-3;
  double tmax = 5.0;
  double probe_tmax = 200.0;
};

enum class StabilityClass { source, sink, saddle, nonhyperbolic };

std::string to_string(StabilityClass c);

/// A located equilibrium with its linearization data. `exact` is attached
/// when a nearby rational point makes the field vanish identically.
struct FixedPointRecord {
  Vec3 location{};
  std::optional<std::array<Rat, 3>> exact;
  std::array<std::complex<double>, 3> eigenvalues{};
  StabilityClass stability = StabilityClass::nonhyperbolic;
  int stable_manifold_dim = 0;
};

/// Result of a fixed-point scan. Whole coordinate axes of equilibria (which
/// occur on parameter degeneracies) are reported as flagged families, not
/// as isolated records.
struct FixedPointScan {
  std::vector<FixedPointRecord> points;
  std::vector<int> degenerate_axes;        // 0 = x-axis, 1 = y, 2 = z
  std::vector<Vec3> axis_samples;          // a few representatives per axis
};

/// Newton iteration over a seed grid in [box_lo, box_hi]^3, plus exact seeds
/// for the builtin family where closed forms are known. Diverging seeds are
/// skipped; duplicates merge. Each surviving point is classified.
FixedPointScan find_fixed_points(const Field& x, double box_lo, double box_hi,
                                 int seeds_per_axis,
                                 const DynOptions& opt = {});

/// Eigenvalues of the Jacobian at p (via the characteristic cubic, closed
/// form plus Newton polish) and the stability class they imply. Requires
/// |X(p)| below newton_tol.
FixedPointRecord classify(const Field& x, const Vec3& p,
                          const DynOptions& opt = {});

struct Trajectory {
  enum class Status { completed, escaped, nonfinite };

  std::vector<std::pair<double, Vec3>> samples;  // strictly increasing t
  double step = 0.0;
  std::string method = "rk4";
  bool time_reversed = false;  // samples carry elapsed backward time
  Status status = Status::completed;
};

/// Fixed-step classical 4th-order Runge-Kutta integration from x0. Negative
/// tmax integrates the time-reversed flow (samples then carry elapsed
/// backward time). Stops early when the state norm passes the escape radius
/// (status escaped) or stops being finite (status nonfinite, last valid
/// sample kept).
Trajectory integrate(const Field& x, const Vec3& x0, double tmax, double h,
                     const DynOptions& opt = {});

/// Exponential-invariance drift of a verified pair (f, c0): the relation
/// L_X f = c0 f forces f(x(t)) = f(x0) e^{c0 t} along trajectories, so this
/// returns max_t |f(x(t)) e^{-c0 t} - f(x0)| / max(|f(x0)|, 1). Escaped
/// trajectories are evaluated over the pre-escape window.
double invariance_drift(const Field& x, const Poly& f, const Rat& c0,
                        const Vec3& x0, double tmax, double h,
                        const DynOptions& opt = {});

enum class InvariantPlane { x_eq_y, x_eq_neg_y };

/// Planar field in the coordinates (u, w) of an invariant plane x = +-y.
struct PlanarField {
  Poly du;  // in the variables u (index 0) and w (index 2)
  Poly dw;
};

/// Restriction of X to the plane x = +-y. The plane must be invariant for
/// the given parameters (exactly checked through the invariance of
/// x^2 - y^2); otherwise this is an error.
PlanarField restrict_to_plane(const Field& x, InvariantPlane plane);

struct LyapunovReport {
  double min_value = 0.0;
  double max_value = 0.0;
  std::array<double, 2> argmin{};
  std::array<double, 2> argmax{};
  int positive = 0;
  int negative = 0;
  int zero = 0;
  /// First sampled point whose sign differs from the first nonzero sample,
  /// if any. Violations are data, not failures.
  std::optional<std::array<double, 2>> first_sign_violation;
};

/// Samples the derivative of V along the planar field on random points of
/// the disk of the given radius (deterministic seed). V must vanish at the
/// origin and not be identically zero.
LyapunovReport lyapunov_check(const PlanarField& field, const Poly& v,
                              int sample_count, double radius,
                              unsigned seed = 0x5eed);

struct HeteroclinicConnection {
  Vec3 equilibrium{};
  std::string plane;      // "x=y" or "x=-y"
  bool connected = false;
  std::string direction;  // "equilibrium_to_origin", "origin_to_equilibrium"
                          // or "undetermined"
  double plane_residual = 0.0;     // max |x -+ y| along the successful trace
  double closest_approach = 0.0;   // min distance to the far end
  std::string method;
};

struct HeteroclinicReport {
  std::vector<HeteroclinicConnection> connections;
  double tol = 0.0;
};

/// Probes the connections between each nontrivial equilibrium and the
/// origin inside the invariant planes, for the builtin family at a = b < 0.
/// Launches sit a small perturbation off the relevant eigendirections at
/// both ends (the one-dimensional manifold is traced from the origin side,
/// where the eigendirection is real); the report carries the empirically
/// observed flow direction.
HeteroclinicReport heteroclinic_probe(const Field& x,
                                      const DynOptions& opt = {});

}  // namespace darboux
