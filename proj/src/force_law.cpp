#include "amspace/force_law.hpp"

#include "amspace/errors.hpp"
#include "amspace/expr.hpp"
#include "amspace/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace amspace {

namespace {

double checked(double value, double r, const std::string& law, const char* what)
{
  if (!std::isfinite(value)) {
    throw EvaluationDomainError(law + ": " + what + " is not finite at r = " + format_g17(r));
  }
  return value;
}

void require_positive_radius(double r, const std::string& law)
{
  if (!(r > 0.0)) throw EvaluationDomainError(law + ": radius must be positive, got " + format_g17(r));
}

}  // namespace

std::string AsymTag::to_string() const
{
  switch (kind) {
    case Kind::Finite: return format_g17(value);
    case Kind::MinusInfinity: return "-inf";
    case Kind::PlusInfinity: return "+inf";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

AsymTag AsymTag::parse(std::string_view text)
{
  if (text == "unknown") return unknown();
  if (text == "-inf") return minus_infinity();
  if (text == "+inf" || text == "inf") return plus_infinity();
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw std::invalid_argument("invalid asymptotic tag '" + std::string(text) + "'");
  }
  return finite(v);
}

ForceLaw::ForceLaw(std::string name, Evaluator u, Evaluator u_prime, std::map<std::string, double> params,
                   AsymTag asym_zero, AsymTag asym_inf)
    : name_(std::move(name)),
      u_(std::move(u)),
      u_prime_(std::move(u_prime)),
      params_(std::move(params)),
      asym_zero_(asym_zero),
      asym_inf_(asym_inf)
{
}

double ForceLaw::u(double r) const
{
  require_positive_radius(r, name_);
  return checked(u_(r), r, name_, "U");
}

double ForceLaw::u_prime(double r) const
{
  require_positive_radius(r, name_);
  return checked(u_prime_(r), r, name_, "U'");
}

ForceLaw ForceLaw::with_tags(AsymTag asym_zero, AsymTag asym_inf) const
{
  ForceLaw copy = *this;
  copy.asym_zero_ = asym_zero;
  copy.asym_inf_ = asym_inf;
  return copy;
}

ForceLaw ForceLaw::with_source(std::string source) const
{
  ForceLaw copy = *this;
  copy.source_ = std::move(source);
  return copy;
}

ForceLaw ForceLaw::with_window(SearchWindow window) const
{
  ForceLaw copy = *this;
  copy.window_ = window;
  return copy;
}

ForceLaw ForceLaw::shifted(double c) const
{
  ForceLaw copy = *this;
  copy.name_ = name_ + "+(" + format_g17(c) + ")";
  copy.u_ = [u = u_, c](double r) { return u(r) + c; };
  if (asym_inf_.is_finite()) copy.asym_inf_ = AsymTag::finite(asym_inf_.value + c);
  if (!source_.empty()) copy.source_ = "(" + source_ + ") + (" + format_g17(c) + ")";
  return copy;
}

const std::vector<std::string>& builtin_names()
{
  static const std::vector<std::string> names = {
      "zero",   "constant",          "gravitational", "inverse_square", "hooke", "repulsive_elastic",
      "gravity_plus_inverse_square", "power",         "oscillatory",
  };
  return names;
}

namespace {

using Params = std::map<std::string, double>;

void expect_params(std::string_view law, const Params& params, std::initializer_list<const char*> names)
{
  for (const char* n : names) {
    if (!params.count(n)) throw std::invalid_argument(std::string(law) + ": missing parameter '" + n + "'");
  }
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const char* n : names) known = known || key == n;
    if (!known) throw std::invalid_argument(std::string(law) + ": unexpected parameter '" + key + "'");
    if (!std::isfinite(value)) throw std::invalid_argument(std::string(law) + ": parameter '" + key + "' must be finite");
  }
}

double positive(std::string_view law, const Params& params, const char* key)
{
  const double v = params.at(key);
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(law) + ": parameter '" + key + "' must be > 0, got " + format_g17(v));
  }
  return v;
}

}  // namespace

ForceLaw builtin(std::string_view name, const Params& params)
{
  const std::string n(name);
  using Tag = AsymTag;

  if (name == "zero") {
    expect_params(name, params, {});
    return ForceLaw(n, [](double) { return 0.0; }, [](double) { return 0.0; }, params, Tag::finite(0.0),
                    Tag::finite(0.0))
        .with_source("0");
  }
  if (name == "constant") {
    expect_params(name, params, {"k"});
    const double k = params.at("k");
    return ForceLaw(n, [k](double) { return k; }, [](double) { return 0.0; }, params, Tag::finite(0.0),
                    Tag::finite(k))
        .with_source("k");
  }
  if (name == "gravitational") {
    expect_params(name, params, {"k"});
    const double k = positive(name, params, "k");
    return ForceLaw(n, [k](double r) { return -k / r; }, [k](double r) { return k / (r * r); }, params,
                    Tag::finite(0.0), Tag::finite(0.0))
        .with_source("-k/r");
  }
  if (name == "inverse_square") {
    expect_params(name, params, {"k"});
    const double k = positive(name, params, "k");
    return ForceLaw(n, [k](double r) { return -k / (r * r); }, [k](double r) { return 2.0 * k / (r * r * r); },
                    params, Tag::finite(-k), Tag::finite(0.0))
        .with_source("-k/r^2");
  }
  if (name == "hooke") {
    expect_params(name, params, {"k"});
    const double k = positive(name, params, "k");
    return ForceLaw(n, [k](double r) { return 0.5 * k * r * r; }, [k](double r) { return k * r; }, params,
                    Tag::finite(0.0), Tag::plus_infinity())
        .with_source("k/2*r^2");
  }
  if (name == "repulsive_elastic") {
    expect_params(name, params, {"k"});
    const double k = positive(name, params, "k");
    return ForceLaw(n, [k](double r) { return -0.5 * k * r * r; }, [k](double r) { return -k * r; }, params,
                    Tag::finite(0.0), Tag::minus_infinity())
        .with_source("-k/2*r^2");
  }
  if (name == "gravity_plus_inverse_square") {
    expect_params(name, params, {"k", "q"});
    const double k = positive(name, params, "k");
    const double q = positive(name, params, "q");
    // r^2 U = -k r - q -> -q as r -> 0
    return ForceLaw(
               n, [k, q](double r) { return -k / r - q / (r * r); },
               [k, q](double r) { return k / (r * r) + 2.0 * q / (r * r * r); }, params, Tag::finite(-q),
               Tag::finite(0.0))
        .with_source("-k/r - q/r^2");
  }
  if (name == "power") {
    expect_params(name, params, {"k", "n"});
    const double k = positive(name, params, "k");
    const double p = positive(name, params, "n");
    // r^2 U = -k r^(2 - 2n)
    Tag zero_tag = p < 1.0 ? Tag::finite(0.0) : p == 1.0 ? Tag::finite(-k) : Tag::minus_infinity();
    return ForceLaw(
               n, [k, p](double r) { return -k * std::pow(r, -2.0 * p); },
               [k, p](double r) { return 2.0 * p * k * std::pow(r, -2.0 * p - 1.0); }, params, zero_tag,
               Tag::finite(0.0))
        .with_source("-k/r^(2*n)");
  }
  if (name == "oscillatory") {
    expect_params(name, params, {"q"});
    const double q = positive(name, params, "q");
    // Wells of U accumulate at r -> 0; the grid has to resolve them.
    return ForceLaw(
               n, [q](double r) { return q * std::sin(1.0 / r); },
               [q](double r) { return -q * std::cos(1.0 / r) / (r * r); }, params, Tag::finite(0.0),
               Tag::finite(0.0))
        .with_source("q*sin(1/r)")
        .with_window({1e-3, 10.0, 65536});
  }
  throw std::invalid_argument("unknown built-in law '" + n + "'");
}

ForceLaw parse_law(std::string_view source, const Params& params)
{
  const Expr u = parse_expr(source, params);
  const Expr du = u.derivative();
  return ForceLaw(
             "expr", [u](double r) { return u.eval(r); }, [du](double r) { return du.eval(r); }, params,
             AsymTag::unknown(), AsymTag::unknown())
      .with_source(std::string(source));
}

}  // namespace amspace
