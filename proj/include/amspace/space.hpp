#pragma once

#include "amspace/effective.hpp"
#include "amspace/force_law.hpp"

#include <optional>
#include <string>
#include <vector>

namespace amspace {

enum class Membership { Yes, No, BoundaryAttained };
enum class Route { V, W };

std::string to_string(Membership m);
std::string to_string(Route r);

struct SpaceOptions {
  std::optional<SearchWindow> window;  // unset: law preference, then default
  bool all_witnesses = false;          // is_uniform_rotation: collect every witness
};

/// Boundary tolerances: 1e-9 (1 + |E|) on the V route, 1e-9 (1 + J^2) on
/// the W route.
double tolerance_V(const JEState& state);
double tolerance_W(const JEState& state);

struct Classification {
  Membership member = Membership::No;
  Route route = Route::V;
  ExtremumReport evidence;
  // E - inf V on the V route, sup W - J^2 on the W route.
  double margin = 0.0;
  double tol = 0.0;
  // Uniform-rotation witness radius; set for boundary-attained states.
  std::optional<double> witness;

  bool in_space() const noexcept { return member != Membership::No; }
  /// |margin| <= 10 tol, where route verdicts may legitimately differ.
  bool in_boundary_band() const noexcept;
};

/// Membership by E versus inf_r V_J(r).
Classification classify(const ForceLaw& law, const JEState& state, const SpaceOptions& opts = {});

/// Membership by J^2 versus sup_r W_E(r).
Classification classify_via_W(const ForceLaw& law, const JEState& state, const SpaceOptions& opts = {});

/// Circular motion at radius s.
struct UniformRotation {
  double s = 0.0;
  double J = 0.0;  // nonnegative root; (-J, E) is the mirrored state
  double E = 0.0;
  double angular_rate = 0.0;  // J / s^2
};

/// U'(s) >= 0 up to rounding: U'(s) >= -1e-12 (1 + |U(s)| / s).
bool admits_uniform_rotation(const ForceLaw& law, double s);

/// J^2 = s^3 U'(s), E = U(s) + s U'(s) / 2. Empty when U'(s) < 0.
std::optional<UniformRotation> uniform_rotation_at(const ForceLaw& law, double s);

/// Uniform rotations at n log-spaced radii in [lo, hi]; radii without one
/// are skipped.
std::vector<UniformRotation> ur_curve(const ForceLaw& law, double lo, double hi, std::size_t n);

struct UniformRotationCheck {
  bool found = false;
  std::vector<double> witnesses;  // ascending; one entry unless all_witnesses

  std::optional<double> smallest() const
  {
    if (witnesses.empty()) return std::nullopt;
    return witnesses.front();
  }
};

/// Whether some critical point s of V_J has V_J(s) = E within tolerance_V.
/// Critical points are sign changes of V_J' on the window grid refined by
/// bisection, plus grid points where V_J' vanishes to rounding.
UniformRotationCheck is_uniform_rotation(const ForceLaw& law, const JEState& state, const SpaceOptions& opts = {});

struct RadiusInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Radii in the window where U' >= 0, as sorted disjoint closed intervals.
std::vector<RadiusInterval> allowed_radii(const ForceLaw& law, const std::optional<SearchWindow>& window = {});

enum class FullPlaneVerdict { EntirePlane, NotEntirePlane, Undecidable };

std::string to_string(FullPlaneVerdict v);

/// Whether every (J, E) is a state, decided from the asymptotic tags alone:
/// entire plane iff lim inf r^2 U at 0 or lim inf U at infinity is -inf.
FullPlaneVerdict full_plane(const ForceLaw& law);

}  // namespace amspace
