#pragma once

#include "amspace/force_law.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace amspace {

struct OrbitState {
  double t = 0.0;
  double r = 0.0;
  double r_dot = 0.0;
  double phi = 0.0;
};

struct InitialConditions {
  double r0 = 1.0;
  double r_dot0 = 0.0;
  double phi0 = 0.0;
  double J = 0.0;  // angular momentum per unit mass; phi_dot(0) = J / r0^2
};

enum class Termination { Completed, CollapseToCenter, EscapeBeyondGuard };

std::string to_string(Termination t);

inline constexpr double kRadiusMinGuard = 1e-9;
inline constexpr double kRadiusMaxGuard = 1e9;

struct OrbitTrace {
  std::vector<OrbitState> states;
  double J0 = 0.0;
  double E0 = 0.0;
  double max_J_drift = 0.0;
  double max_E_drift = 0.0;
  Termination outcome = Termination::Completed;
};

/// Classical fixed-step RK4 on
///
///     r' = v,   v' = J^2 / r^3 - U'(r),   phi' = J / r^2
///
/// with J held fixed. Every step is recorded. Integration stops early,
/// with the outcome set, when any stage radius leaves the guard interval.
/// Throws std::invalid_argument for r0 <= 0, dt <= 0 or t_end <= 0;
/// EvaluationDomainError propagates from the law.
OrbitTrace simulate(const ForceLaw& law, const InitialConditions& init, double t_end, double dt);

/// ddot(r) - r phidot^2 + U'(r) evaluated with phidot = J / r^2.
double radial_acceleration(const ForceLaw& law, double J, double r);

/// E(t) = r_dot^2 / 2 + J^2 / (2 r^2) + U(r)
double orbit_energy(const ForceLaw& law, double J, const OrbitState& s);

struct Prop21Report {
  std::size_t violations = 0;
  double worst_excess = 0.0;  // largest violation of either inequality, 0 if none
  std::optional<std::size_t> worst_index;
  double tol = 0.0;
};

/// Checks V_J(r(t)) <= E + tol and W_E(r(t)) >= J^2 - tol at every sample,
/// tol = 1e-6 (1 + |E|).
Prop21Report check_prop21(const OrbitTrace& trace, const ForceLaw& law, double J, double E);

struct KineticReport {
  double max_J_resid = 0.0;  // max |r^2 phidot - J0|, phidot by finite differences
  double max_E_resid = 0.0;  // max |E(t) - E0|
};

/// Requires at least two samples.
KineticReport kinetic_check(const OrbitTrace& trace, const ForceLaw& law);

/// Per-sample r^2 phidot - J0 with phidot from three-point differences
/// (one-sided at the ends, second order throughout).
std::vector<double> angular_residuals(const OrbitTrace& trace);

/// Header `t,r,r_dot,phi,J_resid,E_resid`, one row per sample, 17
/// significant digits.
void write_trace_csv(const OrbitTrace& trace, const ForceLaw& law, std::ostream& out);
void write_trace_csv(const OrbitTrace& trace, const ForceLaw& law, const std::string& path);

}  // namespace amspace
