#pragma once

#include <string>
#include <string_view>

namespace amspace {

/// printf "%.17g": enough digits to round-trip any double; infinities and
/// NaN print as "inf", "-inf", "nan".
std::string format_g17(double v);

/// Parses a complete decimal (or inf/nan) token. Throws
/// std::invalid_argument on trailing characters or an empty token.
double parse_double(std::string_view text);

}  // namespace amspace
