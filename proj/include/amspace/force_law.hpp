#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace amspace {

/// What is known about a lim inf of the law: r^2 U(r) as r -> 0, or U(r)
/// as r -> infinity. These are carried as data; they are never inferred
/// from samples.
struct AsymTag {
  enum class Kind { Finite, MinusInfinity, PlusInfinity, Unknown };

  Kind kind = Kind::Unknown;
  double value = 0.0;  // meaningful only for Finite

  static AsymTag finite(double v) { return {Kind::Finite, v}; }
  static AsymTag minus_infinity() { return {Kind::MinusInfinity, 0.0}; }
  static AsymTag plus_infinity() { return {Kind::PlusInfinity, 0.0}; }
  static AsymTag unknown() { return {Kind::Unknown, 0.0}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_minus_infinity() const noexcept { return kind == Kind::MinusInfinity; }
  bool is_unknown() const noexcept { return kind == Kind::Unknown; }

  /// "-inf", "+inf", "unknown" or a decimal value.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts "inf" for +inf. Throws
  /// std::invalid_argument.
  static AsymTag parse(std::string_view text);

  friend bool operator==(const AsymTag&, const AsymTag&) = default;
};

/// Log-spaced search window over radii.
struct SearchWindow {
  double r_lo = 1e-6;
  double r_hi = 1e6;
  std::size_t n_grid = 2048;
};

/// A force function per unit mass U together with U'.
///
/// Immutable after construction. Both evaluators throw
/// EvaluationDomainError for r <= 0 or a non-finite result.
class ForceLaw {
public:
  using Evaluator = std::function<double(double)>;

  ForceLaw(std::string name, Evaluator u, Evaluator u_prime, std::map<std::string, double> params,
           AsymTag asym_zero, AsymTag asym_inf);

  double u(double r) const;
  double u_prime(double r) const;

  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  const AsymTag& asym_zero() const noexcept { return asym_zero_; }
  const AsymTag& asym_inf() const noexcept { return asym_inf_; }

  /// DSL text equivalent to this law, when one exists.
  const std::string& source() const noexcept { return source_; }

  /// Search window preferred by this law, if it differs from the default.
  const std::optional<SearchWindow>& preferred_window() const noexcept { return window_; }

  ForceLaw with_tags(AsymTag asym_zero, AsymTag asym_inf) const;
  ForceLaw with_source(std::string source) const;
  ForceLaw with_window(SearchWindow window) const;

  /// U + c. The r -> infinity tag shifts by c; the r -> 0 tag is unchanged.
  ForceLaw shifted(double c) const;

private:
  std::string name_;
  Evaluator u_;
  Evaluator u_prime_;
  std::map<std::string, double> params_;
  AsymTag asym_zero_;
  AsymTag asym_inf_;
  std::string source_;
  std::optional<SearchWindow> window_;
};

/// Names accepted by builtin(), in a fixed order.
const std::vector<std::string>& builtin_names();

/// Built-in law with analytic U, U' and exact asymptotic tags.
///
///   zero                           U = 0
///   constant(k)                    U = k             (any real k)
///   gravitational(k)               U = -k/r
///   inverse_square(k)              U = -k/r^2
///   hooke(k)                       U = k r^2 / 2
///   repulsive_elastic(k)           U = -k r^2 / 2
///   gravity_plus_inverse_square(k,q)  U = -k/r - q/r^2
///   power(k,n)                     U = -k / r^(2n)
///   oscillatory(q)                 U = q sin(1/r)
///
/// k, q and n must be strictly positive except for `constant`. Throws
/// std::invalid_argument for unknown names, missing or extra parameters
/// and sign violations.
ForceLaw builtin(std::string_view name, const std::map<std::string, double>& params = {});

/// Law from DSL text (see parse_expr). U' is the symbolic derivative.
/// Tags are unknown.
ForceLaw parse_law(std::string_view source, const std::map<std::string, double>& params);

}  // namespace amspace
