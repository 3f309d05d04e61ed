#include "amspace/dynamics.hpp"
#include "amspace/effective.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

using namespace amspace;

namespace {

ForceLaw grav() { return builtin("gravitational", {{"k", 1.0}}); }

double max_radius_error(const OrbitTrace& trace, double s)
{
  double worst = 0.0;
  for (const OrbitState& st : trace.states) worst = std::max(worst, std::abs(st.r - s));
  return worst;
}

}  // namespace

TEST_CASE("circular gravitational orbit stays on r = 1")
{
  const OrbitTrace trace = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 100.0, 1e-3);
  CHECK(trace.outcome == Termination::Completed);
  CHECK(trace.states.size() == 100001);
  CHECK(trace.states.back().t == 100.0);
  CHECK(max_radius_error(trace, 1.0) <= 1e-6);
  // phi advances at J / r^2 = 1
  CHECK(trace.states.back().phi == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("free radial motion")
{
  const OrbitTrace trace = simulate(builtin("zero"), {1.0, 1.0, 0.0, 0.0}, 10.0, 1e-2);
  for (const OrbitState& st : trace.states) CHECK(std::abs(st.r - (1.0 + st.t)) <= 1e-9);
  for (double res : angular_residuals(trace)) CHECK(res == 0.0);
  CHECK(kinetic_check(trace, builtin("zero")).max_J_resid == 0.0);
}

TEST_CASE("elliptic gravitational orbit conserves energy")
{
  const OrbitTrace trace = simulate(grav(), {2.0, 0.0, 0.0, 1.0}, 50.0, 1e-3);
  CHECK(trace.E0 == -0.375);
  CHECK(trace.J0 == 1.0);
  CHECK(trace.max_E_drift <= 1e-8);
  CHECK(trace.max_J_drift <= 1e-6);
}

TEST_CASE("V stays below E along simulated traces")
{
  const OrbitTrace circ = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 100.0, 1e-3);
  CHECK(check_prop21(circ, grav(), 1.0, -0.5).violations == 0);

  const OrbitTrace ell = simulate(grav(), {2.0, 0.0, 0.0, 1.0}, 50.0, 1e-3);
  CHECK(check_prop21(ell, grav(), 1.0, -0.375).violations == 0);
}

TEST_CASE("a corrupted sample is reported")
{
  OrbitTrace trace = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 10.0, 1e-2);
  trace.states[500].r *= 0.5;
  const Prop21Report rep = check_prop21(trace, grav(), 1.0, -0.5);
  CHECK(rep.violations == 1);
  REQUIRE(rep.worst_index);
  CHECK(*rep.worst_index == 500);
  // V(0.5) = 2 - 2 = 0 exceeds E = -0.5 by 0.5
  CHECK(rep.worst_excess == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("kinetic residuals on the circular orbit")
{
  const OrbitTrace trace = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 100.0, 1e-3);
  const KineticReport rep = kinetic_check(trace, grav());
  CHECK(rep.max_J_resid <= 1e-6);
  CHECK(rep.max_E_resid <= 1e-6);
}

TEST_CASE("halving the step shrinks the energy drift by a fourth-order factor")
{
  // At dt = 1e-3 the drift is already near rounding (about 2.5e-14), so
  // the ratio is measured at a coarser base step.
  const OrbitTrace coarse = simulate(grav(), {2.0, 0.0, 0.0, 1.0}, 50.0, 1e-2);
  const OrbitTrace fine = simulate(grav(), {2.0, 0.0, 0.0, 1.0}, 50.0, 5e-3);
  REQUIRE(fine.max_E_drift > 0.0);
  CHECK(coarse.max_E_drift / fine.max_E_drift >= 12.0);
  const KineticReport kc = kinetic_check(coarse, grav());
  const KineticReport kf = kinetic_check(fine, grav());
  CHECK(kc.max_E_resid / kf.max_E_resid >= 12.0);
}

TEST_CASE("circular orbits of stable laws are fixed points")
{
  // Where V'' < 0 (power with n > 1) the circular orbit is unstable and
  // rounding grows exponentially, so only stable laws are checked.
  const ForceLaw laws[] = {grav(), builtin("hooke", {{"k", 1.0}}),
                           builtin("gravity_plus_inverse_square", {{"k", 1.0}, {"q", 1.0}}),
                           builtin("power", {{"k", 1.0}, {"n", 0.5}}), builtin("power", {{"k", 1.0}, {"n", 0.75}})};
  for (const ForceLaw& law : laws) {
    for (double s : {0.5, 1.0, 2.0}) {
      const double J = std::sqrt(s * s * s * law.u_prime(s));
      const double period = 2.0 * std::numbers::pi * s * s / J;
      const double dt = std::min(1e-3, period / 2000.0);
      const OrbitTrace trace = simulate(law, {s, 0.0, 0.0, J}, 100.0, dt);
      CAPTURE(law.name());
      CAPTURE(s);
      CHECK(trace.outcome == Termination::Completed);
      CHECK(max_radius_error(trace, s) <= 1e-5 * s);
    }
  }
}

TEST_CASE("marginal inverse-square circular orbit")
{
  // J^2 = 2k makes every radius critical: V is identically zero.
  const ForceLaw law = builtin("inverse_square", {{"k", 1.0}});
  const OrbitTrace trace = simulate(law, {1.0, 0.0, 0.0, std::sqrt(2.0)}, 100.0, 1e-3);
  CHECK(max_radius_error(trace, 1.0) <= 1e-5);
}

TEST_CASE("V stays below E along orbits of every built-in law")
{
  struct Orbit {
    ForceLaw law;
    InitialConditions init;
    double t_end;
  };
  const Orbit orbits[] = {
      {builtin("zero"), {1.0, 0.5, 0.0, 0.7}, 20.0},
      {builtin("constant", {{"k", 3.0}}), {1.0, -0.2, 0.0, 1.0}, 20.0},
      {grav(), {1.5, 0.3, 0.0, 0.9}, 40.0},
      {builtin("inverse_square", {{"k", 1.0}}), {1.0, 0.5, 0.0, 2.0}, 20.0},
      {builtin("hooke", {{"k", 1.0}}), {1.0, 0.4, 0.0, 0.5}, 40.0},
      {builtin("repulsive_elastic", {{"k", 1.0}}), {1.0, 0.0, 0.0, 1.0}, 5.0},
      {builtin("gravity_plus_inverse_square", {{"k", 1.0}, {"q", 0.3}}), {1.0, 0.2, 0.0, 1.2}, 40.0},
      {builtin("power", {{"k", 1.0}, {"n", 2.0}}), {1.0, 0.1, 0.0, 2.5}, 10.0},
      {builtin("power", {{"k", 1.0}, {"n", 0.5}}), {1.0, 0.1, 0.0, 0.8}, 40.0},
      {builtin("oscillatory", {{"q", 1.0}}), {0.5, 0.0, 0.0, 0.3}, 20.0},
  };
  for (const Orbit& o : orbits) {
    const OrbitTrace trace = simulate(o.law, o.init, o.t_end, 1e-3);
    const Prop21Report rep = check_prop21(trace, o.law, trace.J0, trace.E0);
    CAPTURE(o.law.name());
    CHECK(trace.states.size() > 100);
    CHECK(rep.violations == 0);
  }
}

TEST_CASE("guard radii end the integration")
{
  const OrbitTrace fall = simulate(grav(), {1.0, 0.0, 0.0, 0.0}, 10.0, 1e-3);
  CHECK(fall.outcome == Termination::CollapseToCenter);
  CHECK(fall.states.back().t < 10.0);
  for (const OrbitState& st : fall.states) CHECK(std::isfinite(st.r));

  const OrbitTrace away = simulate(builtin("repulsive_elastic", {{"k", 1.0}}), {1.0, 0.0, 0.0, 0.0}, 40.0, 1e-2);
  CHECK(away.outcome == Termination::EscapeBeyondGuard);
  CHECK(away.states.back().r <= kRadiusMaxGuard);
}

TEST_CASE("step bookkeeping")
{
  const OrbitTrace trace = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 1.0, 0.3);
  REQUIRE(trace.states.size() == 5);
  CHECK(trace.states[1].t == doctest::Approx(0.3));
  CHECK(trace.states.back().t == 1.0);
}

TEST_CASE("invalid inputs")
{
  CHECK_THROWS_AS(simulate(grav(), {0.0, 0.0, 0.0, 1.0}, 1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(simulate(grav(), {1.0, 0.0, 0.0, 1.0}, -1.0, 1e-3), std::invalid_argument);
  OrbitTrace one;
  one.states.push_back({});
  CHECK_THROWS(kinetic_check(one, grav()));
}

TEST_CASE("radial acceleration and orbit energy")
{
  CHECK(radial_acceleration(grav(), 1.0, 1.0) == 0.0);
  CHECK(radial_acceleration(grav(), 0.0, 2.0) == -0.25);
  CHECK(orbit_energy(grav(), 1.0, {0.0, 2.0, 0.0, 0.0}) == -0.375);
  CHECK(orbit_energy(grav(), 1.0, {0.0, 2.0, 1.0, 0.0}) == 0.125);
}

TEST_CASE("trace CSV")
{
  const OrbitTrace trace = simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 0.5, 0.1);
  std::ostringstream out;
  write_trace_csv(trace, grav(), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,r,r_dot,phi,J_resid,E_resid");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == trace.states.size());

  std::ostringstream again;
  write_trace_csv(simulate(grav(), {1.0, 0.0, 0.0, 1.0}, 0.5, 0.1), grav(), again);
  CHECK(again.str() == out.str());
}
