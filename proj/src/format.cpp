#include "amspace/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace amspace {

std::string format_g17(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view text)
{
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw std::invalid_argument("invalid number '" + s + "'");
  return v;
}

}  // namespace amspace
