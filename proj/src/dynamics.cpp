#include "amspace/dynamics.hpp"

#include "amspace/effective.hpp"
#include "amspace/format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace amspace {

std::string to_string(Termination t)
{
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::CollapseToCenter: return "collapse-to-center";
    case Termination::EscapeBeyondGuard: return "escape-beyond-guard";
  }
  return "unknown";
}

double radial_acceleration(const ForceLaw& law, double J, double r) { return J * J / (r * r * r) - law.u_prime(r); }

double orbit_energy(const ForceLaw& law, double J, const OrbitState& s)
{
  return 0.5 * s.r_dot * s.r_dot + J * J / (2.0 * s.r * s.r) + law.u(s.r);
}

namespace {

struct Deriv {
  double dr;
  double dv;
  double dphi;
};

std::optional<Termination> guard(double r)
{
  if (!(r >= kRadiusMinGuard)) return Termination::CollapseToCenter;
  if (!(r <= kRadiusMaxGuard)) return Termination::EscapeBeyondGuard;
  return std::nullopt;
}

}  // namespace

OrbitTrace simulate(const ForceLaw& law, const InitialConditions& init, double t_end, double dt)
{
  if (!(init.r0 > 0.0)) throw std::invalid_argument("simulate: r0 must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
  if (!(t_end > 0.0)) throw std::invalid_argument("simulate: t_end must be positive");

  const double J = init.J;
  OrbitTrace trace;
  trace.J0 = J;
  OrbitState s{0.0, init.r0, init.r_dot0, init.phi0};
  trace.E0 = orbit_energy(law, J, s);
  if (auto g = guard(s.r)) {
    trace.outcome = *g;
    return trace;
  }
  trace.states.push_back(s);

  auto rhs = [&](double r, double v) { return Deriv{v, radial_acceleration(law, J, r), J / (r * r)}; };

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  trace.states.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t_next = i + 1 == steps ? t_end : static_cast<double>(i + 1) * dt;
    const double h = t_next - s.t;

    const Deriv k1 = rhs(s.r, s.r_dot);
    const double r2 = s.r + 0.5 * h * k1.dr;
    if (auto g = guard(r2)) {
      trace.outcome = *g;
      break;
    }
    const Deriv k2 = rhs(r2, s.r_dot + 0.5 * h * k1.dv);
    const double r3 = s.r + 0.5 * h * k2.dr;
    if (auto g = guard(r3)) {
      trace.outcome = *g;
      break;
    }
    const Deriv k3 = rhs(r3, s.r_dot + 0.5 * h * k2.dv);
    const double r4 = s.r + h * k3.dr;
    if (auto g = guard(r4)) {
      trace.outcome = *g;
      break;
    }
    const Deriv k4 = rhs(r4, s.r_dot + h * k3.dv);

    OrbitState next;
    next.t = t_next;
    next.r = s.r + h / 6.0 * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
    next.r_dot = s.r_dot + h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    next.phi = s.phi + h / 6.0 * (k1.dphi + 2.0 * k2.dphi + 2.0 * k3.dphi + k4.dphi);
    if (auto g = guard(next.r)) {
      trace.outcome = *g;
      break;
    }
    s = next;
    trace.states.push_back(s);
    trace.max_E_drift = std::max(trace.max_E_drift, std::abs(orbit_energy(law, J, s) - trace.E0));
  }

  if (trace.states.size() >= 2) {
    for (double res : angular_residuals(trace)) trace.max_J_drift = std::max(trace.max_J_drift, std::abs(res));
  }
  return trace;
}

namespace {

// Derivative at x[k] of the quadratic through three samples; handles the
// uneven final step.
double quadratic_slope(const double (&x)[3], const double (&y)[3], std::size_t k)
{
  double slope = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    // d/dx of the Lagrange basis l_j at x[k]
    double d = 0.0;
    for (std::size_t m = 0; m < 3; ++m) {
      if (m == j) continue;
      double term = 1.0 / (x[j] - x[m]);
      for (std::size_t l = 0; l < 3; ++l) {
        if (l != j && l != m) term *= (x[k] - x[l]) / (x[j] - x[l]);
      }
      d += term;
    }
    slope += (y[j] - y[k]) * d;  // basis slopes sum to zero
  }
  return slope;
}

}  // namespace

std::vector<double> angular_residuals(const OrbitTrace& trace)
{
  const auto& st = trace.states;
  const std::size_t n = st.size();
  std::vector<double> out(n, 0.0);
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    double phidot;
    if (n == 2) {
      phidot = (st[1].phi - st[0].phi) / (st[1].t - st[0].t);
    } else {
      const std::size_t a = i == 0 ? 0 : (i + 1 == n ? n - 3 : i - 1);
      const double x[3] = {st[a].t, st[a + 1].t, st[a + 2].t};
      const double y[3] = {st[a].phi, st[a + 1].phi, st[a + 2].phi};
      phidot = quadratic_slope(x, y, i - a);
    }
    out[i] = st[i].r * st[i].r * phidot - trace.J0;
  }
  return out;
}

Prop21Report check_prop21(const OrbitTrace& trace, const ForceLaw& law, double J, double E)
{
  Prop21Report rep;
  rep.tol = 1e-6 * (1.0 + std::abs(E));
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const double r = trace.states[i].r;
    const double v_excess = eval_V(law, J, r) - E;
    const double w_deficit = J * J - eval_W(law, E, r);
    const double excess = std::max(v_excess, w_deficit);
    if (excess > rep.tol) {
      ++rep.violations;
      if (excess > rep.worst_excess) {
        rep.worst_excess = excess;
        rep.worst_index = i;
      }
    }
  }
  return rep;
}

KineticReport kinetic_check(const OrbitTrace& trace, const ForceLaw& law)
{
  if (trace.states.size() < 2) throw std::invalid_argument("kinetic_check: need at least two samples");
  KineticReport rep;
  for (double res : angular_residuals(trace)) rep.max_J_resid = std::max(rep.max_J_resid, std::abs(res));
  for (const OrbitState& s : trace.states) {
    rep.max_E_resid = std::max(rep.max_E_resid, std::abs(orbit_energy(law, trace.J0, s) - trace.E0));
  }
  return rep;
}

void write_trace_csv(const OrbitTrace& trace, const ForceLaw& law, std::ostream& out)
{
  out << "t,r,r_dot,phi,J_resid,E_resid\n";
  const std::vector<double> jres = angular_residuals(trace);
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const OrbitState& s = trace.states[i];
    const double eres = orbit_energy(law, trace.J0, s) - trace.E0;
    out << format_g17(s.t) << ',' << format_g17(s.r) << ',' << format_g17(s.r_dot) << ',' << format_g17(s.phi) << ','
        << format_g17(jres[i]) << ',' << format_g17(eres) << '\n';
  }
}

void write_trace_csv(const OrbitTrace& trace, const ForceLaw& law, const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_trace_csv(trace, law, f);
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace amspace
