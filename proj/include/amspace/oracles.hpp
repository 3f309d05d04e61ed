#pragma once

#include "amspace/force_law.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace amspace {

/// Force laws with a known closed-form state space.
enum class LawCase {
  Isolated,                  // U = 0
  Constant,                  // U = k
  Gravitational,             // U = -k/r
  InverseSquare,             // U = -k/r^2
  Hooke,                     // U = k r^2 / 2
  RepulsiveElastic,          // U = -k r^2 / 2
  GravityPlusInverseSquare,  // U = -k/r - q/r^2
  Power,                     // U = -k / r^(2n)
  Oscillatory,               // U = q sin(1/r)
};

/// Case labels "4.1" ... "4.8", plus "constant".
LawCase parse_law_case(std::string_view label);
std::string to_string(LawCase c);
const std::vector<LawCase>& all_law_cases();

struct OracleParams {
  double k = 1.0;
  double q = 1.0;
  double n = 1.0;
};

/// The built-in law matching a case.
ForceLaw law_for_case(LawCase c, const OracleParams& p);

struct OracleVerdict {
  bool in_space = false;
  bool in_ur = false;
  LawCase law_case = LawCase::Isolated;
};

/// Closed-form membership in the state space and in the uniform-rotation set.
///
/// Inequalities are evaluated exactly. Equalities that define the
/// uniform-rotation sets are exact when `ur_tol` is 0 and otherwise accept
/// |lhs - rhs| <= ur_tol (1 + |rhs|). For the oscillatory law the
/// uniform-rotation set has no closed test; it is approximated by a dense
/// sweep of the parametric curve with proximity max(ur_tol, 1e-6).
///
/// Throws std::invalid_argument when parameters violate k, q, n > 0.
OracleVerdict oracle(LawCase c, const OracleParams& p, double J, double E, double ur_tol = 0.0);

}  // namespace amspace
