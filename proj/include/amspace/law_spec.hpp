#pragma once

#include "amspace/force_law.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amspace {

class LawSpecError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Command-line description of a force law:
///
///     builtin:<name>[:<param>=<value>,...]
///     expr:<DSL>[:<param>=<value>,...]
///
/// The parameter list may also carry `asym0=<tag>` and `asymInf=<tag>`
/// overrides, where a tag is `-inf`, `+inf`, `unknown` or a number.
struct LawSpec {
  enum class Form { Builtin, Expr };

  Form form = Form::Builtin;
  std::string body;  // built-in name or DSL text
  std::map<std::string, double> params;
  std::optional<AsymTag> asym_zero;
  std::optional<AsymTag> asym_inf;

  /// Throws LawSpecError for malformed text.
  static LawSpec parse(std::string_view text);

  /// Builds the law; errors from builtin()/parse_law() propagate.
  ForceLaw build() const;
};

}  // namespace amspace
