#include "amspace/space.hpp"

#include "amspace/search1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amspace {

std::string to_string(Membership m)
{
  switch (m) {
    case Membership::Yes: return "member";
    case Membership::No: return "non-member";
    case Membership::BoundaryAttained: return "boundary-attained";
  }
  return "unknown";
}

std::string to_string(Route r) { return r == Route::V ? "V" : "W"; }

std::string to_string(FullPlaneVerdict v)
{
  switch (v) {
    case FullPlaneVerdict::EntirePlane: return "entire-plane";
    case FullPlaneVerdict::NotEntirePlane: return "not-entire-plane";
    case FullPlaneVerdict::Undecidable: return "undecidable";
  }
  return "undecidable";
}

double tolerance_V(const JEState& state) { return 1e-9 * (1.0 + std::abs(state.E)); }
double tolerance_W(const JEState& state) { return 1e-9 * (1.0 + state.J * state.J); }

bool Classification::in_boundary_band() const noexcept { return std::abs(margin) <= 10.0 * tol; }

namespace {

Membership verdict(double margin, double tol, const ExtremumReport& evidence)
{
  if (margin > tol) return Membership::Yes;
  if (std::abs(margin) <= tol && evidence.attained()) return Membership::BoundaryAttained;
  return Membership::No;
}

void attach_witness(Classification& c, const ForceLaw& law, const JEState& state, const SpaceOptions& opts)
{
  if (c.member != Membership::BoundaryAttained) return;
  SpaceOptions first = opts;
  first.all_witnesses = false;
  c.witness = is_uniform_rotation(law, state, first).smallest();
}

}  // namespace

Classification classify(const ForceLaw& law, const JEState& state, const SpaceOptions& opts)
{
  const SearchWindow w = resolve_window(law, opts.window);
  Classification c;
  c.route = Route::V;
  c.evidence = inf_V(law, state.J, w);
  c.margin = state.E - c.evidence.value;
  c.tol = tolerance_V(state);
  c.member = verdict(c.margin, c.tol, c.evidence);
  attach_witness(c, law, state, opts);
  return c;
}

Classification classify_via_W(const ForceLaw& law, const JEState& state, const SpaceOptions& opts)
{
  const SearchWindow w = resolve_window(law, opts.window);
  Classification c;
  c.route = Route::W;
  c.evidence = sup_W(law, state.E, w);
  c.margin = c.evidence.value - state.J * state.J;
  c.tol = tolerance_W(state);
  c.member = verdict(c.margin, c.tol, c.evidence);
  attach_witness(c, law, state, opts);
  return c;
}

bool admits_uniform_rotation(const ForceLaw& law, double s)
{
  return law.u_prime(s) >= -1e-12 * (1.0 + std::abs(law.u(s)) / s);
}

std::optional<UniformRotation> uniform_rotation_at(const ForceLaw& law, double s)
{
  if (!(s > 0.0)) throw std::invalid_argument("uniform_rotation_at: radius must be positive");
  if (!admits_uniform_rotation(law, s)) return std::nullopt;
  const double du = std::max(0.0, law.u_prime(s));
  UniformRotation ur;
  ur.s = s;
  ur.J = std::sqrt(s * s * s * du);
  ur.E = law.u(s) + 0.5 * s * du;
  ur.angular_rate = ur.J / (s * s);
  return ur;
}

std::vector<UniformRotation> ur_curve(const ForceLaw& law, double lo, double hi, std::size_t n)
{
  std::vector<UniformRotation> out;
  for (double s : log_grid(lo, hi, n)) {
    if (auto ur = uniform_rotation_at(law, s)) out.push_back(*ur);
  }
  return out;
}

UniformRotationCheck is_uniform_rotation(const ForceLaw& law, const JEState& state, const SpaceOptions& opts)
{
  const SearchWindow w = resolve_window(law, opts.window);
  validate_window(w);
  const double J = state.J;
  const double tol = tolerance_V(state);
  const std::vector<double> r = log_grid(w.r_lo, w.r_hi, w.n_grid);
  const std::size_t n = r.size();

  std::vector<double> d(n);
  std::vector<bool> flat(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double centrifugal = J * J / (r[i] * r[i] * r[i]);
    const double du = law.u_prime(r[i]);
    d[i] = du - centrifugal;
    flat[i] = std::abs(d[i]) <= 1e-12 * (centrifugal + std::abs(du));
  }

  UniformRotationCheck out;
  auto offer = [&](double s) {
    if (std::abs(eval_V(law, J, s) - state.E) <= tol) {
      out.found = true;
      out.witnesses.push_back(s);
    }
    return out.found && !opts.all_witnesses;
  };
  const ScalarFunction dV = [&](double x) { return eval_dV(law, J, x); };

  for (std::size_t i = 0; i < n; ++i) {
    if (flat[i]) {
      if (offer(r[i])) break;
      continue;
    }
    if (i + 1 < n && !flat[i + 1] && (d[i] < 0.0) != (d[i + 1] < 0.0)) {
      if (offer(bisect_root(dV, r[i], r[i + 1], 1e-12))) break;
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

std::vector<RadiusInterval> allowed_radii(const ForceLaw& law, const std::optional<SearchWindow>& window)
{
  const SearchWindow w = resolve_window(law, window);
  validate_window(w);
  const std::vector<double> r = log_grid(w.r_lo, w.r_hi, w.n_grid);
  const std::size_t n = r.size();
  std::vector<bool> ok(n);
  for (std::size_t i = 0; i < n; ++i) ok[i] = admits_uniform_rotation(law, r[i]);

  const ScalarFunction du = [&](double x) { return law.u_prime(x); };
  auto crossing = [&](std::size_t i) {
    // Sign change of U' between r[i] and r[i + 1]; fall back to the grid
    // point when the tolerance band hides the sign change.
    const double a = law.u_prime(r[i]);
    const double b = law.u_prime(r[i + 1]);
    if ((a < 0.0) != (b < 0.0) || a == 0.0 || b == 0.0) return bisect_root(du, r[i], r[i + 1], 1e-13);
    return ok[i] ? r[i] : r[i + 1];
  };

  std::vector<RadiusInterval> out;
  std::size_t i = 0;
  while (i < n) {
    if (!ok[i]) {
      ++i;
      continue;
    }
    const double lo = i == 0 ? r[0] : crossing(i - 1);
    std::size_t j = i;
    while (j + 1 < n && ok[j + 1]) ++j;
    const double hi = j + 1 == n ? r[n - 1] : crossing(j);
    out.push_back({lo, hi});
    i = j + 1;
  }
  return out;
}

FullPlaneVerdict full_plane(const ForceLaw& law)
{
  const AsymTag& z = law.asym_zero();
  const AsymTag& big = law.asym_inf();
  if (z.is_minus_infinity() || big.is_minus_infinity()) return FullPlaneVerdict::EntirePlane;
  if (z.is_unknown() || big.is_unknown()) return FullPlaneVerdict::Undecidable;
  return FullPlaneVerdict::NotEntirePlane;
}

}  // namespace amspace
