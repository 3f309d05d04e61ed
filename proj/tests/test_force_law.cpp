#include "amspace/errors.hpp"
#include "amspace/force_law.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace amspace;

namespace {

std::map<std::string, double> params_for(const std::string& name)
{
  if (name == "zero") return {};
  if (name == "gravity_plus_inverse_square") return {{"k", 1.0}, {"q", 1.0}};
  if (name == "power") return {{"k", 1.0}, {"n", 2.0}};
  if (name == "oscillatory") return {{"q", 1.0}};
  return {{"k", 1.0}};
}

std::vector<double> test_radii()
{
  std::vector<double> r(64);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::pow(10.0, -3.0 + 6.0 * static_cast<double>(i) / 63.0);
  return r;
}

}  // namespace

TEST_CASE("gravitational built-in")
{
  const ForceLaw g = builtin("gravitational", {{"k", 1.0}});
  CHECK(g.u(2.0) == -0.5);
  CHECK(g.u_prime(2.0) == 0.25);
  CHECK(g.asym_inf() == AsymTag::finite(0.0));
  CHECK(g.asym_zero() == AsymTag::finite(0.0));
}

TEST_CASE("zero built-in")
{
  const ForceLaw z = builtin("zero");
  for (double r : {1e-3, 1.0, 1e3}) {
    CHECK(z.u(r) == 0.0);
    CHECK(z.u_prime(r) == 0.0);
  }
}

TEST_CASE("power built-in")
{
  const ForceLaw p = builtin("power", {{"k", 1.0}, {"n", 2.0}});
  CHECK(p.u(1.0) == doctest::Approx(-1.0));
  CHECK(p.u_prime(1.0) == doctest::Approx(4.0));
  // U' = 2nk / r^(2n+1)
  CHECK(p.u_prime(2.0) == doctest::Approx(4.0 / 32.0));
  CHECK(p.asym_zero().is_minus_infinity());
  CHECK(builtin("power", {{"k", 1.0}, {"n", 0.5}}).asym_zero() == AsymTag::finite(0.0));
  CHECK(builtin("power", {{"k", 3.0}, {"n", 1.0}}).asym_zero() == AsymTag::finite(-3.0));
}

TEST_CASE("built-in tags")
{
  CHECK(builtin("hooke", {{"k", 1.0}}).asym_inf().kind == AsymTag::Kind::PlusInfinity);
  CHECK(builtin("repulsive_elastic", {{"k", 1.0}}).asym_inf().is_minus_infinity());
  CHECK(builtin("inverse_square", {{"k", 2.0}}).asym_zero() == AsymTag::finite(-2.0));
  CHECK(builtin("gravity_plus_inverse_square", {{"k", 1.0}, {"q", 0.5}}).asym_zero() == AsymTag::finite(-0.5));
  CHECK(builtin("constant", {{"k", -2.0}}).asym_inf() == AsymTag::finite(-2.0));
  const ForceLaw osc = builtin("oscillatory", {{"q", 1.0}});
  REQUIRE(osc.preferred_window());
  CHECK(osc.preferred_window()->r_lo == 1e-3);
  CHECK(osc.preferred_window()->r_hi == 10.0);
  CHECK(osc.preferred_window()->n_grid == 65536);
}

TEST_CASE("built-in parameter validation")
{
  CHECK_THROWS_AS(builtin("gravitational"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("gravitational", {{"k", -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin("gravitational", {{"k", 1.0}, {"q", 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin("hooke", {{"k", std::nan("")}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin("no_such_law"), std::invalid_argument);
  CHECK_NOTHROW(builtin("constant", {{"k", -5.0}}));
}

TEST_CASE("evaluation outside the domain")
{
  const ForceLaw g = builtin("gravitational", {{"k", 1.0}});
  CHECK_THROWS_AS(g.u(0.0), EvaluationDomainError);
  CHECK_THROWS_AS(g.u(-1.0), EvaluationDomainError);
  CHECK_THROWS_AS(g.u_prime(0.0), EvaluationDomainError);
  const ForceLaw bad = parse_law("ln(r-1)", {});
  CHECK_THROWS_AS(bad.u(0.5), EvaluationDomainError);
}

TEST_CASE("parsed laws")
{
  const ForceLaw g = parse_law("-k/r", {{"k", 1.0}});
  CHECK(g.u(2.0) == -0.5);
  CHECK(g.u_prime(2.0) == 0.25);
  CHECK(g.asym_zero().is_unknown());
  CHECK(g.asym_inf().is_unknown());
  CHECK(g.source() == "-k/r");

  const ForceLaw osc = parse_law("q*sin(1/r)", {{"q", 1.0}});
  for (double r : {0.2, 0.5, 3.0}) CHECK(osc.u_prime(r) == doctest::Approx(-std::cos(1.0 / r) / (r * r)));
  CHECK(std::abs(osc.u_prime(2.0 / std::numbers::pi)) <= 1e-15);

  CHECK_THROWS_AS(parse_law("r^x", {}), UnboundParameterError);
}

TEST_CASE("shifted law")
{
  const ForceLaw g = builtin("gravitational", {{"k", 1.0}});
  const ForceLaw s = g.shifted(2.5);
  CHECK(s.u(2.0) == 2.0);
  CHECK(s.u_prime(2.0) == 0.25);
  CHECK(s.asym_inf() == AsymTag::finite(2.5));
  CHECK(s.asym_zero() == AsymTag::finite(0.0));
  CHECK(builtin("hooke", {{"k", 1.0}}).shifted(1.0).asym_inf().kind == AsymTag::Kind::PlusInfinity);
}

TEST_CASE("asymptotic tag text")
{
  CHECK(AsymTag::parse("-inf").is_minus_infinity());
  CHECK(AsymTag::parse("+inf").kind == AsymTag::Kind::PlusInfinity);
  CHECK(AsymTag::parse("unknown").is_unknown());
  CHECK(AsymTag::parse("-1.5") == AsymTag::finite(-1.5));
  CHECK_THROWS(AsymTag::parse("nonsense"));
  for (const AsymTag& t : {AsymTag::finite(0.25), AsymTag::minus_infinity(), AsymTag::plus_infinity(), AsymTag::unknown()}) {
    CHECK(AsymTag::parse(t.to_string()) == t);
  }
}

TEST_CASE("built-in derivatives match central differences")
{
  for (const std::string& name : builtin_names()) {
    const ForceLaw law = builtin(name, params_for(name));
    for (double r : test_radii()) {
      const double h = 1e-6 * r;
      const double fd = (law.u(r + h) - law.u(r - h)) / (2.0 * h);
      CAPTURE(name);
      CAPTURE(r);
      CHECK(std::abs(law.u_prime(r) - fd) <= 1e-6 * (1.0 + std::abs(law.u_prime(r))));
    }
  }
}

TEST_CASE("parsed built-in sources agree with the built-ins")
{
  for (const std::string& name : builtin_names()) {
    const ForceLaw law = builtin(name, params_for(name));
    const ForceLaw parsed = parse_law(law.source(), law.params());
    for (double r : test_radii()) {
      CAPTURE(name);
      CAPTURE(r);
      CHECK(std::abs(parsed.u(r) - law.u(r)) <= 1e-12 * std::abs(law.u(r)));
      CHECK(std::abs(parsed.u_prime(r) - law.u_prime(r)) <= 1e-12 * std::abs(law.u_prime(r)));
    }
  }
}
