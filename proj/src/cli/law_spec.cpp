#include "amspace/law_spec.hpp"

#include "amspace/format.hpp"

namespace amspace {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

LawSpec LawSpec::parse(std::string_view text)
{
  LawSpec spec;
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw LawSpecError("law spec needs 'builtin:' or 'expr:' prefix");
  const std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (kind == "builtin") {
    spec.form = Form::Builtin;
  } else if (kind == "expr") {
    spec.form = Form::Expr;
  } else {
    throw LawSpecError("unknown law form '" + std::string(kind) + "'");
  }
  if (rest.find("builtin:") != std::string_view::npos || rest.find("expr:") != std::string_view::npos) {
    throw LawSpecError("law spec mixes 'builtin:' and 'expr:' forms");
  }

  const std::size_t sep = rest.find(':');
  spec.body = std::string(trim(rest.substr(0, sep)));
  if (spec.body.empty()) throw LawSpecError("law spec has an empty body");
  if (sep == std::string_view::npos) return spec;

  std::string_view list = rest.substr(sep + 1);
  if (list.find(':') != std::string_view::npos) throw LawSpecError("law spec has too many ':' sections");
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw LawSpecError("expected name=value, got '" + std::string(item) + "'");
    const std::string key(trim(item.substr(0, eq)));
    const std::string_view value = trim(item.substr(eq + 1));
    try {
      if (key == "asym0") {
        spec.asym_zero = AsymTag::parse(value);
      } else if (key == "asymInf") {
        spec.asym_inf = AsymTag::parse(value);
      } else {
        if (key.empty()) throw LawSpecError("empty parameter name");
        if (spec.params.count(key)) throw LawSpecError("parameter '" + key + "' given twice");
        spec.params[key] = parse_double(value);
      }
    } catch (const LawSpecError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw LawSpecError("bad value for '" + key + "': " + e.what());
    }
  }
  return spec;
}

ForceLaw LawSpec::build() const
{
  ForceLaw law = form == Form::Builtin ? builtin(body, params) : parse_law(body, params);
  if (asym_zero || asym_inf) {
    law = law.with_tags(asym_zero.value_or(law.asym_zero()), asym_inf.value_or(law.asym_inf()));
  }
  return law;
}

}  // namespace amspace
