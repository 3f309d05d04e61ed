#include "amspace/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace amspace {

LawCase parse_law_case(std::string_view label)
{
  if (label == "4.1") return LawCase::Isolated;
  if (label == "constant" || label == "4.1c") return LawCase::Constant;
  if (label == "4.2") return LawCase::Gravitational;
  if (label == "4.3") return LawCase::InverseSquare;
  if (label == "4.4") return LawCase::Hooke;
  if (label == "4.5") return LawCase::RepulsiveElastic;
  if (label == "4.6") return LawCase::GravityPlusInverseSquare;
  if (label == "4.7") return LawCase::Power;
  if (label == "4.8") return LawCase::Oscillatory;
  throw std::invalid_argument("unknown law case '" + std::string(label) + "'");
}

std::string to_string(LawCase c)
{
  switch (c) {
    case LawCase::Isolated: return "4.1";
    case LawCase::Constant: return "constant";
    case LawCase::Gravitational: return "4.2";
    case LawCase::InverseSquare: return "4.3";
    case LawCase::Hooke: return "4.4";
    case LawCase::RepulsiveElastic: return "4.5";
    case LawCase::GravityPlusInverseSquare: return "4.6";
    case LawCase::Power: return "4.7";
    case LawCase::Oscillatory: return "4.8";
  }
  return "?";
}

const std::vector<LawCase>& all_law_cases()
{
  static const std::vector<LawCase> cases = {
      LawCase::Isolated, LawCase::Constant,         LawCase::Gravitational,
      LawCase::InverseSquare, LawCase::Hooke,       LawCase::RepulsiveElastic,
      LawCase::GravityPlusInverseSquare, LawCase::Power, LawCase::Oscillatory,
  };
  return cases;
}

ForceLaw law_for_case(LawCase c, const OracleParams& p)
{
  switch (c) {
    case LawCase::Isolated: return builtin("zero");
    case LawCase::Constant: return builtin("constant", {{"k", p.k}});
    case LawCase::Gravitational: return builtin("gravitational", {{"k", p.k}});
    case LawCase::InverseSquare: return builtin("inverse_square", {{"k", p.k}});
    case LawCase::Hooke: return builtin("hooke", {{"k", p.k}});
    case LawCase::RepulsiveElastic: return builtin("repulsive_elastic", {{"k", p.k}});
    case LawCase::GravityPlusInverseSquare: return builtin("gravity_plus_inverse_square", {{"k", p.k}, {"q", p.q}});
    case LawCase::Power: return builtin("power", {{"k", p.k}, {"n", p.n}});
    case LawCase::Oscillatory: return builtin("oscillatory", {{"q", p.q}});
  }
  throw std::invalid_argument("unknown law case");
}

namespace {

void require_positive(double v, const char* name)
{
  if (!(v > 0.0)) throw std::invalid_argument(std::string("oracle: parameter ") + name + " must be > 0");
}

struct Equality {
  double tol;
  bool operator()(double lhs, double rhs) const
  {
    if (tol == 0.0) return lhs == rhs;
    return std::abs(lhs - rhs) <= tol * (1.0 + std::abs(rhs));
  }
};

// Closest approach of (|J|, E) to the curve
//   s -> (sqrt(-q s cos(1/s)), q sin(1/s) - q cos(1/s) / (2 s))
// over the radii where cos(1/s) <= 0, swept on 250 intervals with 400
// samples each and refined by ternary search.
double oscillatory_ur_distance(double q, double J, double E)
{
  constexpr int kIntervals = 250;
  constexpr int kSamples = 400;
  const double pi = std::numbers::pi;
  const double aj = std::abs(J);
  auto dist2 = [&](double s) {
    const double x = 1.0 / s;
    const double j = std::sqrt(std::max(0.0, -q * s * std::cos(x)));
    const double e = q * std::sin(x) - q * std::cos(x) * x / 2.0;
    return (j - aj) * (j - aj) + (e - E) * (e - E);
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> d(kSamples);
  for (int k = 0; k < kIntervals; ++k) {
    const double lo = 2.0 / ((4.0 * k + 3.0) * pi);
    const double hi = 2.0 / ((4.0 * k + 1.0) * pi);
    const double h = (hi - lo) / (kSamples - 1);
    for (int i = 0; i < kSamples; ++i) d[i] = dist2(lo + h * i);
    // The curve folds back on itself, so every sampled local minimum is
    // refined, not only the nearest sample.
    for (int i = 0; i < kSamples; ++i) {
      best = std::min(best, d[i]);
      const bool left_ok = i == 0 || d[i] <= d[i - 1];
      const bool right_ok = i == kSamples - 1 || d[i] <= d[i + 1];
      if (!left_ok || !right_ok) continue;
      double a = lo + h * std::max(0, i - 1);
      double b = lo + h * std::min(kSamples - 1, i + 1);
      for (int it = 0; it < 200 && b - a > 1e-16 * b; ++it) {
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        if (dist2(m1) <= dist2(m2)) {
          b = m2;
        } else {
          a = m1;
        }
      }
      best = std::min(best, dist2(0.5 * (a + b)));
    }
  }
  return std::sqrt(best);
}

}  // namespace

OracleVerdict oracle(LawCase c, const OracleParams& p, double J, double E, double ur_tol)
{
  OracleVerdict v;
  v.law_case = c;
  const Equality eq{ur_tol};
  const double J2 = J * J;

  switch (c) {
    case LawCase::Isolated:
      v.in_space = E > 0.0 || (J == 0.0 && E == 0.0);
      v.in_ur = J == 0.0 && eq(E, 0.0);
      break;
    case LawCase::Constant:
      // The zero-law space shifted by (0, k).
      v.in_space = E > p.k || (J == 0.0 && E == p.k);
      v.in_ur = J == 0.0 && eq(E, p.k);
      break;
    case LawCase::Gravitational: {
      require_positive(p.k, "k");
      const double bound = -p.k * p.k / 2.0;
      v.in_space = E * J2 >= bound;
      v.in_ur = eq(E * J2, bound);
      break;
    }
    case LawCase::InverseSquare: {
      require_positive(p.k, "k");
      const double twok = 2.0 * p.k;
      v.in_space = (J2 > twok && E > 0.0) || (J2 == twok && E >= 0.0) || J2 < twok;
      v.in_ur = eq(J2, twok) && eq(E, 0.0);
      break;
    }
    case LawCase::Hooke: {
      require_positive(p.k, "k");
      const double edge = std::sqrt(p.k) * std::abs(J);
      const bool origin = J == 0.0 && E == 0.0;
      v.in_space = E >= edge && !origin;
      v.in_ur = eq(E, edge) && !origin;
      break;
    }
    case LawCase::RepulsiveElastic:
      require_positive(p.k, "k");
      v.in_space = true;
      v.in_ur = false;
      break;
    case LawCase::GravityPlusInverseSquare: {
      require_positive(p.k, "k");
      require_positive(p.q, "q");
      const double bound = -p.k * p.k / 2.0;
      const double excess = J2 - 2.0 * p.q;
      v.in_space = J2 <= 2.0 * p.q || (excess > 0.0 && E * excess >= bound);
      v.in_ur = E < 0.0 && eq(E * excess, bound);
      break;
    }
    case LawCase::Power: {
      require_positive(p.k, "k");
      require_positive(p.n, "n");
      const double n = p.n;
      if (n == 1.0) return oracle(LawCase::InverseSquare, p, J, E, ur_tol);
      // E |J|^(2n/(1-n)) against (n-1) (2n)^(n/(1-n)) k^(1/(1-n)); |J| keeps
      // the fractional power real for negative J.
      const double expo = 2.0 * n / (1.0 - n);
      const double rhs = (n - 1.0) * std::pow(2.0 * n, n / (1.0 - n)) * std::pow(p.k, 1.0 / (1.0 - n));
      if (n > 1.0) {
        v.in_space = true;
        v.in_ur = J != 0.0 && eq(E * std::pow(std::abs(J), expo), rhs);
      } else {
        const double lhs = J == 0.0 ? 0.0 : E * std::pow(std::abs(J), expo);
        v.in_space = lhs >= rhs;
        v.in_ur = J != 0.0 && eq(lhs, rhs);
      }
      break;
    }
    case LawCase::Oscillatory: {
      require_positive(p.q, "q");
      v.in_space = E > -p.q || (J == 0.0 && E == -p.q);
      v.in_ur = oscillatory_ur_distance(p.q, J, E) <= std::max(ur_tol, 1e-6);
      break;
    }
  }
  return v;
}

}  // namespace amspace
