#include "amspace/effective.hpp"

#include "amspace/search1d.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace amspace {

std::string to_string(ExtremumKind kind)
{
  switch (kind) {
    case ExtremumKind::AttainedInterior: return "attained-interior";
    case ExtremumKind::AttainedAtCriticalPoint: return "attained-at-critical-point";
    case ExtremumKind::LimitAtZero: return "limit-at-zero";
    case ExtremumKind::LimitAtInfinity: return "limit-at-infinity";
    case ExtremumKind::Unbounded: return "unbounded";
  }
  return "unknown";
}

double eval_V(const ForceLaw& law, double J, double r) { return J * J / (2.0 * r * r) + law.u(r); }

double eval_dV(const ForceLaw& law, double J, double r) { return -J * J / (r * r * r) + law.u_prime(r); }

double eval_W(const ForceLaw& law, double E, double r) { return 2.0 * r * r * (E - law.u(r)); }

double eval_dW(const ForceLaw& law, double E, double r)
{
  return 4.0 * r * (E - law.u(r)) - 2.0 * r * r * law.u_prime(r);
}

SearchWindow resolve_window(const ForceLaw& law, const std::optional<SearchWindow>& requested)
{
  if (requested) return *requested;
  if (law.preferred_window()) return *law.preferred_window();
  return SearchWindow{};
}

void validate_window(const SearchWindow& window)
{
  if (!(window.r_lo > 0.0) || !std::isfinite(window.r_hi)) {
    throw std::invalid_argument("search window needs 0 < r_lo and finite r_hi");
  }
  if (!(window.r_lo < window.r_hi)) throw std::invalid_argument("search window too narrow: r_lo >= r_hi");
  if (window.n_grid < 64) throw std::invalid_argument("search window needs at least 64 grid points");
}

namespace {

constexpr double kGoldenRelTol = 1e-10;
constexpr double kDynamicRange = 1e12;

double tie_tolerance(double v) { return 1e-12 * (1.0 + std::abs(v)); }

ExtremumReport tag_unbounded(const SearchWindow& w, double value)
{
  ExtremumReport rep;
  rep.kind = ExtremumKind::Unbounded;
  rep.value = value;
  rep.bracket_lo = w.r_lo;
  rep.bracket_hi = w.r_hi;
  rep.samples = 0;
  rep.heuristic = false;
  return rep;
}

struct Refined {
  double r;
  double value;
  bool critical;
};

// Golden section inside the cell around a sampled local minimum, then a
// bisection on the derivative when it brackets a sign change near the
// golden point. Near a minimum, f is flat to rounding over a relative width
// of about 1e-8, which limits golden section alone.
Refined refine_cell(const ScalarFunction& f, const ScalarFunction& df, double a, double b, double r_sample,
                    double v_sample)
{
  const double xg = golden_section_minimize(f, a, b, kGoldenRelTol);
  const double fg = f(xg);
  Refined best{xg, fg, false};
  if (v_sample < fg) best = {r_sample, v_sample, false};

  const double lo = std::max(a, xg * (1.0 - 1e-6));
  const double hi = std::min(b, xg * (1.0 + 1e-6));
  double plo = lo;
  double phi = hi;
  double dlo = df(plo);
  double dhi = df(phi);
  if (!(dlo < 0.0 && dhi > 0.0)) {
    plo = a;
    phi = b;
    dlo = df(plo);
    dhi = df(phi);
  }
  if (dlo < 0.0 && dhi > 0.0) {
    const double xp = bisect_root(df, plo, phi, 1e-15);
    const double fp = f(xp);
    if (fp <= best.value + tie_tolerance(best.value)) best = {xp, fp, true};
  }
  return best;
}

// Shared engine: infimum of f over the window, f' = df.
ExtremumReport minimize_on_grid(const ScalarFunction& f, const ScalarFunction& df, const SearchWindow& w)
{
  validate_window(w);
  const std::vector<double> r = log_grid(w.r_lo, w.r_hi, w.n_grid);
  const std::size_t n = r.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(r[i]);

  ExtremumReport rep;
  rep.bracket_lo = w.r_lo;
  rep.bracket_hi = w.r_hi;
  rep.samples = n;

  // Runs of equal samples are treated as one point: a run is a local
  // minimum only when the samples rise on both sides. Near a horizontal
  // asymptote rounding produces such runs on a still-descending function.
  struct Edge {
    double value;
    ExtremumKind kind;
  };
  std::optional<Refined> best;
  std::optional<Edge> edge;
  auto offer = [&](const Refined& cand) {
    if (!best || cand.value < best->value - tie_tolerance(best->value)) {
      best = cand;
    } else if (std::abs(cand.value - best->value) <= tie_tolerance(best->value) && cand.r < best->r) {
      best = cand;
    }
  };
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && v[j + 1] == v[i]) ++j;
    const bool left_higher = i > 0 && v[i - 1] > v[i];
    const bool right_higher = j + 1 < n && v[j + 1] > v[i];
    if (i == 0 && j + 1 == n) {
      offer(refine_cell(f, df, r[0], r[1], r[0], v[0]));  // flat over the whole window
    } else if (i == 0) {
      if (j == 0 && right_higher) {
        edge = Edge{v[0], ExtremumKind::LimitAtZero};
      } else if (right_higher) {
        offer(refine_cell(f, df, r[0], r[2], r[1], v[1]));
      }
    } else if (j + 1 == n) {
      if (left_higher && (!edge || v[j] < edge->value)) edge = Edge{v[j], ExtremumKind::LimitAtInfinity};
    } else if (left_higher && right_higher) {
      offer(refine_cell(f, df, r[i - 1], r[i + 1], r[i], v[i]));
    }
    i = j + 1;
  }

  if (best && (!edge || edge->value >= best->value - tie_tolerance(best->value))) {
    rep.kind = best->critical ? ExtremumKind::AttainedAtCriticalPoint : ExtremumKind::AttainedInterior;
    rep.value = best->value;
    rep.arg_r = best->r;
    return rep;
  }
  if (!edge) throw std::logic_error("minimize_on_grid: no extremum candidate");

  const double center = v[(n - 1) / 2];
  if (center - edge->value > kDynamicRange * (1.0 + std::abs(center))) {
    rep.kind = ExtremumKind::Unbounded;
    rep.value = -std::numeric_limits<double>::infinity();
    rep.heuristic = true;
    return rep;
  }
  rep.kind = edge->kind;
  rep.value = edge->value;
  return rep;
}

}  // namespace

ExtremumReport inf_V(const ForceLaw& law, double J, const SearchWindow& window)
{
  validate_window(window);
  const double inf = std::numeric_limits<double>::infinity();
  const AsymTag& z = law.asym_zero();
  const AsymTag& big = law.asym_inf();
  // r^2 V = J^2/2 + r^2 U, so a negative lim inf of that sum at 0 drives
  // V to -inf; so does U -> -inf at infinity.
  if (z.is_minus_infinity() || big.is_minus_infinity()) return tag_unbounded(window, -inf);
  if (z.is_finite() && 0.5 * J * J + z.value < 0.0) return tag_unbounded(window, -inf);

  ExtremumReport rep = minimize_on_grid([&](double r) { return eval_V(law, J, r); },
                                        [&](double r) { return eval_dV(law, J, r); }, window);
  // lim inf V at infinity equals lim inf U there; the window edge only
  // bounds it from above.
  if (big.is_finite() && rep.kind != ExtremumKind::Unbounded &&
      big.value < rep.value - (rep.attained() ? tie_tolerance(rep.value) : 0.0)) {
    rep.kind = ExtremumKind::LimitAtInfinity;
    rep.value = big.value;
    rep.arg_r.reset();
  }
  return rep;
}

ExtremumReport sup_W(const ForceLaw& law, double E, const SearchWindow& window)
{
  validate_window(window);
  const double inf = std::numeric_limits<double>::infinity();
  const AsymTag& z = law.asym_zero();
  const AsymTag& big = law.asym_inf();
  // W = 2 r^2 E - 2 r^2 U grows without bound when r^2 U -> -inf at 0, or
  // when E exceeds lim inf U at infinity.
  if (z.is_minus_infinity() || big.is_minus_infinity()) return tag_unbounded(window, inf);
  if (big.is_finite() && E > big.value) return tag_unbounded(window, inf);

  ExtremumReport rep = minimize_on_grid([&](double r) { return -eval_W(law, E, r); },
                                        [&](double r) { return -eval_dW(law, E, r); }, window);
  rep.value = -rep.value;
  // lim sup W at 0 is -2 lim inf r^2 U.
  if (z.is_finite() && rep.kind != ExtremumKind::Unbounded) {
    const double at_zero = -2.0 * z.value;
    if (at_zero > rep.value + (rep.attained() ? tie_tolerance(rep.value) : 0.0)) {
      rep.kind = ExtremumKind::LimitAtZero;
      rep.value = at_zero;
      rep.arg_r.reset();
    }
  }
  return rep;
}

}  // namespace amspace
