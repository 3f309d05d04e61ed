#pragma once

#include "amspace/force_law.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace amspace {

/// Angular momentum and total energy per unit mass.
struct JEState {
  double J = 0.0;
  double E = 0.0;
};

enum class ExtremumKind {
  AttainedInterior,         // golden-section point inside the window
  AttainedAtCriticalPoint,  // additionally polished to a zero of the derivative
  LimitAtZero,              // approached toward the lower window edge, not attained
  LimitAtInfinity,          // approached toward the upper window edge, not attained
  Unbounded,                // -inf for an infimum, +inf for a supremum
};

std::string to_string(ExtremumKind kind);

/// Evidence for an infimum of V or a supremum of W over r > 0.
struct ExtremumReport {
  ExtremumKind kind = ExtremumKind::Unbounded;
  double value = 0.0;
  std::optional<double> arg_r;  // set iff attained
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::size_t samples = 0;
  // Unbounded verdicts from asymptotic tags are exact; the dynamic-range
  // fallback only has sampled evidence.
  bool heuristic = false;

  bool attained() const noexcept
  {
    return kind == ExtremumKind::AttainedInterior || kind == ExtremumKind::AttainedAtCriticalPoint;
  }
};

/// V_J(r) = J^2 / (2 r^2) + U(r)
double eval_V(const ForceLaw& law, double J, double r);
/// V_J'(r) = -J^2 / r^3 + U'(r)
double eval_dV(const ForceLaw& law, double J, double r);
/// W_E(r) = 2 r^2 (E - U(r))
double eval_W(const ForceLaw& law, double E, double r);
/// W_E'(r) = 4 r (E - U(r)) - 2 r^2 U'(r)
double eval_dW(const ForceLaw& law, double E, double r);

/// Explicit window if given, else the law's preferred one, else the default
/// [1e-6, 1e6] with 2048 points.
SearchWindow resolve_window(const ForceLaw& law, const std::optional<SearchWindow>& requested);

/// Validates 0 < r_lo < r_hi and n_grid >= 64; throws std::invalid_argument.
void validate_window(const SearchWindow& window);

/// inf over r > 0 of V_J. Samples V on the log grid, refines every local
/// minimum by golden section and reports the lowest one (smallest radius
/// on ties). Asymptotic tags that force -inf short-circuit the search.
ExtremumReport inf_V(const ForceLaw& law, double J, const SearchWindow& window);

/// sup over r > 0 of W_E; mirror of inf_V.
ExtremumReport sup_W(const ForceLaw& law, double E, const SearchWindow& window);

}  // namespace amspace
