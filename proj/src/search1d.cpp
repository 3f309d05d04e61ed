#include "amspace/search1d.hpp"

#include <cmath>
#include <stdexcept>

namespace amspace {

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_grid: need 0 < lo < hi");
  if (n < 2) throw std::invalid_argument("log_grid: need at least two points");
  std::vector<double> out(n);
  const double llo = std::log(lo);
  const double span = std::log(hi) - llo;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(llo + span * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  // Pin the ends so callers see the exact bracket.
  out.front() = lo;
  out.back() = hi;
  return out;
}

double golden_section_minimize(const ScalarFunction& f, double a, double b, double rel_tol)
{
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 400; ++iter) {
    if (b - a <= rel_tol * 0.5 * std::abs(a + b)) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

double bisect_root(const ScalarFunction& g, double a, double b, double rel_tol)
{
  double ga = g(a);
  if (ga == 0.0) return a;
  const double gb = g(b);
  if (gb == 0.0) return b;
  if ((ga < 0.0) == (gb < 0.0)) throw std::invalid_argument("bisect_root: no sign change on bracket");
  for (int iter = 0; iter < 400; ++iter) {
    const double m = 0.5 * (a + b);
    if (b - a <= rel_tol * std::abs(m) || m == a || m == b) return m;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace amspace
