#include "amspace/cli.hpp"

#include "amspace/dynamics.hpp"
#include "amspace/effective.hpp"
#include "amspace/format.hpp"
#include "amspace/law_spec.hpp"
#include "amspace/oracles.hpp"
#include "amspace/scan.hpp"
#include "amspace/space.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace amspace::cli {

namespace {

// Malformed flag values; reported with the usage exit code.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_colon(const std::string& text)
{
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double number(const std::string& text, const std::string& flag)
{
  try {
    return parse_double(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": '" + text + "' is not a number");
  }
}

std::size_t count(const std::string& text, const std::string& flag)
{
  const double v = number(text, flag);
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e9) throw UsageError(flag + ": '" + text + "' is not a count");
  return static_cast<std::size_t>(v);
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& flag)
{
  const auto parts = split_colon(text);
  if (parts.size() != 2) throw UsageError(flag + " expects lo:hi");
  return {number(parts[0], flag), number(parts[1], flag)};
}

Axis parse_axis(const std::string& text, const std::string& flag)
{
  const auto parts = split_colon(text);
  if (parts.size() != 3) throw UsageError(flag + " expects lo:hi:n");
  return {number(parts[0], flag), number(parts[1], flag), count(parts[2], flag)};
}

ForceLaw load_law(const std::string& text)
{
  LawSpec spec;
  try {
    spec = LawSpec::parse(text);
  } catch (const LawSpecError& e) {
    throw UsageError(std::string("--law: ") + e.what());
  }
  return spec.build();
}

struct WindowFlags {
  std::string bracket;
  std::size_t grid = 0;

  void add_to(CLI::App& cmd)
  {
    cmd.add_option("--bracket", bracket, "search radii lo:hi");
    cmd.add_option("--grid", grid, "log-grid sample count");
  }

  std::optional<SearchWindow> resolve(const ForceLaw& law) const
  {
    if (bracket.empty() && grid == 0) return std::nullopt;
    SearchWindow w = resolve_window(law, std::nullopt);
    if (!bracket.empty()) std::tie(w.r_lo, w.r_hi) = parse_pair(bracket, "--bracket");
    if (grid != 0) w.n_grid = grid;
    validate_window(w);
    return w;
  }
};

std::ofstream open_out(const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

std::string shortest(double v)
{
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print_config(std::ostream& out)
{
  const SearchWindow w;
  out << "bracket = " << shortest(w.r_lo) << ':' << shortest(w.r_hi) << '\n'
      << "grid = " << w.n_grid << '\n'
      << "oscillatory.bracket = 0.001:10\n"
      << "oscillatory.grid = 65536\n"
      << "tol.V = 1e-9 * (1 + |E|)\n"
      << "tol.W = 1e-9 * (1 + J^2)\n"
      << "boundary_band = 10 * tol\n"
      << "golden_section.rel_tol = 1e-10\n"
      << "derivative_polish.rel_tol = 1e-15\n"
      << "critical_point.rel_tol = 1e-12\n"
      << "tie.rel_tol = 1e-12\n"
      << "unbounded.dynamic_range = 1e12\n"
      << "prop21.tol = 1e-6 * (1 + |E|)\n"
      << "guard.r_min = " << shortest(kRadiusMinGuard) << '\n'
      << "guard.r_max = " << shortest(kRadiusMaxGuard) << '\n'
      << "check.J_range = -3:3:41\n"
      << "check.E_range = -3:3:41\n"
      << "threads = 0 (available parallelism)\n";
}

void print_classification(std::ostream& out, const Classification& c)
{
  out << "route: " << to_string(c.route) << '\n'
      << "verdict: " << to_string(c.member) << '\n'
      << "margin: " << format_g17(c.margin) << '\n'
      << "tol: " << format_g17(c.tol) << '\n'
      << "evidence: " << to_string(c.evidence.kind) << (c.evidence.heuristic ? " (heuristic)" : "") << '\n'
      << (c.route == Route::V ? "inf: " : "sup: ") << format_g17(c.evidence.value) << '\n';
  const char* arg_label = c.route == Route::V ? "argmin-r: " : "argmax-r: ";
  out << arg_label << (c.evidence.arg_r ? format_g17(*c.evidence.arg_r) : "none") << '\n';
}

int exit_for(Membership m)
{
  switch (m) {
    case Membership::Yes: return kExitMember;
    case Membership::No: return kExitNonMember;
    case Membership::BoundaryAttained: return kExitBoundary;
  }
  return kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Angular momentum-energy state spaces of central-force motion", "amspace"};
  app.require_subcommand(0, 1);
  bool show_config = false;
  app.add_flag("--show-config", show_config, "print default settings and exit");

  std::string law_text;
  auto add_law = [&](CLI::App* cmd) { cmd->add_option("--law", law_text, "law spec")->required(); };

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "membership of one (J, E) state");
  add_law(classify_cmd);
  double J = 0.0;
  double E = 0.0;
  std::string route = "V";
  WindowFlags window_flags;
  classify_cmd->add_option("--J", J, "angular momentum")->required();
  classify_cmd->add_option("--E", E, "energy")->required();
  classify_cmd->add_option("--route", route, "V, W or both")->check(CLI::IsMember({"V", "W", "both"}));
  window_flags.add_to(*classify_cmd);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "classify a J x E lattice");
  add_law(scan_cmd);
  std::string J_range;
  std::string E_range;
  std::string out_path;
  std::string pgm_path;
  unsigned threads = 0;
  scan_cmd->add_option("--J-range", J_range, "lo:hi:n")->required();
  scan_cmd->add_option("--E-range", E_range, "lo:hi:n")->required();
  scan_cmd->add_option("--out", out_path, "CSV path (default: stdout)");
  scan_cmd->add_option("--pgm", pgm_path, "PGM image path");
  scan_cmd->add_option("--threads", threads, "worker threads (0: available parallelism)");
  window_flags.add_to(*scan_cmd);

  // ur-curve
  auto* ur_cmd = app.add_subcommand("ur-curve", "uniform rotations over a radius range");
  add_law(ur_cmd);
  std::string s_range;
  ur_cmd->add_option("--s-range", s_range, "lo:hi:n, log-spaced")->required();
  ur_cmd->add_option("--out", out_path, "CSV path (default: stdout)");

  // radii
  auto* radii_cmd = app.add_subcommand("radii", "radii admitting uniform rotation");
  add_law(radii_cmd);
  window_flags.add_to(*radii_cmd);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "integrate one orbit");
  add_law(sim_cmd);
  InitialConditions init;
  double t_end = 0.0;
  double dt = 0.0;
  sim_cmd->add_option("--r0", init.r0, "initial radius")->required();
  sim_cmd->add_option("--rdot0", init.r_dot0, "initial radial velocity");
  sim_cmd->add_option("--phi0", init.phi0, "initial polar angle");
  sim_cmd->add_option("--J", init.J, "angular momentum")->required();
  sim_cmd->add_option("--t-end", t_end, "final time")->required();
  sim_cmd->add_option("--dt", dt, "step size")->required();
  sim_cmd->add_option("--out", out_path, "trace CSV path");

  // full-plane
  auto* full_cmd = app.add_subcommand("full-plane", "whether every (J, E) is a state");
  add_law(full_cmd);

  // check
  auto* check_cmd = app.add_subcommand("check", "compare numeric scan with the closed-form oracle");
  std::string case_label;
  OracleParams params;
  std::string check_J = "-3:3:41";
  std::string check_E = "-3:3:41";
  check_cmd->add_option("--law-case", case_label, "4.1 .. 4.8 or constant")->required();
  check_cmd->add_option("--k", params.k, "k parameter");
  check_cmd->add_option("--q", params.q, "q parameter");
  check_cmd->add_option("--n", params.n, "n parameter");
  check_cmd->add_option("--J-range", check_J, "lo:hi:n");
  check_cmd->add_option("--E-range", check_E, "lo:hi:n");
  check_cmd->add_option("--threads", threads, "worker threads (0: available parallelism)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (show_config) {
    print_config(out);
    return 0;
  }

  try {
    if (classify_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      SpaceOptions opts;
      opts.window = window_flags.resolve(law);
      const JEState state{J, E};
      out << "law: " << law.name() << '\n' << "J: " << format_g17(J) << '\n' << "E: " << format_g17(E) << '\n';

      std::optional<Classification> cv;
      std::optional<Classification> cw;
      if (route != "W") cv = classify(law, state, opts);
      if (route != "V") cw = classify_via_W(law, state, opts);
      if (cv) print_classification(out, *cv);
      if (cw) print_classification(out, *cw);

      const UniformRotationCheck ur = is_uniform_rotation(law, state, opts);
      out << "ur-witness: " << (ur.smallest() ? format_g17(*ur.smallest()) : "none") << '\n';

      if (cv && cw) {
        const bool diverge = cv->in_space() != cw->in_space() && !cv->in_boundary_band() && !cw->in_boundary_band();
        out << "routes: " << (diverge ? "diverge" : "agree") << '\n';
        if (diverge) {
          err << "error: V and W routes disagree off the boundary band\n";
          return kExitError;
        }
      }
      return exit_for(cv ? cv->member : cw->member);
    }

    if (scan_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      const Axis ja = parse_axis(J_range, "--J-range");
      const Axis ea = parse_axis(E_range, "--E-range");
      ScanOptions opts;
      opts.space.window = window_flags.resolve(law);
      opts.threads = threads;
      const ScanGrid grid = scan(law, ja, ea, opts);
      if (out_path.empty()) {
        write_csv(grid, out);
      } else {
        write_csv(grid, out_path);
      }
      if (!pgm_path.empty()) write_pgm(grid, pgm_path);
      std::size_t errors = 0;
      for (const ScanCell& c : grid.cells) errors += c.error ? 1 : 0;
      if (errors) {
        err << "error: " << errors << " cells failed to evaluate\n";
        return kExitError;
      }
      return 0;
    }

    if (ur_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      const Axis sa = parse_axis(s_range, "--s-range");
      if (sa.count < 2 || !(sa.lo > 0.0) || !(sa.lo < sa.hi) || !std::isfinite(sa.hi)) {
        throw std::invalid_argument("--s-range needs 0 < lo < hi and at least two points");
      }
      const auto curve = ur_curve(law, sa.lo, sa.hi, sa.count);
      std::ofstream file;
      if (!out_path.empty()) file = open_out(out_path);
      std::ostream& dst = out_path.empty() ? out : file;
      dst << "s,J,E,omega\n";
      for (const UniformRotation& u : curve) {
        dst << format_g17(u.s) << ',' << format_g17(u.J) << ',' << format_g17(u.E) << ','
            << format_g17(u.angular_rate) << '\n';
      }
      if (!dst) throw std::runtime_error("failed writing ur-curve output");
      return 0;
    }

    if (radii_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      for (const RadiusInterval& iv : allowed_radii(law, window_flags.resolve(law))) {
        out << format_g17(iv.lo) << ' ' << format_g17(iv.hi) << '\n';
      }
      return 0;
    }

    if (sim_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      const OrbitTrace trace = simulate(law, init, t_end, dt);
      if (!out_path.empty()) write_trace_csv(trace, law, out_path);
      const Prop21Report p21 = check_prop21(trace, law, trace.J0, trace.E0);
      out << "outcome: " << to_string(trace.outcome) << '\n'
          << "samples: " << trace.states.size() << '\n'
          << "t-final: " << format_g17(trace.states.back().t) << '\n'
          << "r-final: " << format_g17(trace.states.back().r) << '\n'
          << "J: " << format_g17(trace.J0) << '\n'
          << "E: " << format_g17(trace.E0) << '\n'
          << "max-E-drift: " << format_g17(trace.max_E_drift) << '\n'
          << "prop21-violations: " << p21.violations << '\n';
      return 0;
    }

    if (full_cmd->parsed()) {
      const ForceLaw law = load_law(law_text);
      out << to_string(full_plane(law)) << '\n';
      return 0;
    }

    if (check_cmd->parsed()) {
      LawCase lc;
      try {
        lc = parse_law_case(case_label);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--law-case: ") + e.what());
      }
      const Axis ja = parse_axis(check_J, "--J-range");
      const Axis ea = parse_axis(check_E, "--E-range");
      const ForceLaw law = law_for_case(lc, params);
      ScanOptions opts;
      opts.threads = threads;
      const ScanGrid grid = scan(law, ja, ea, opts);

      std::size_t disagreements = 0;
      std::size_t band = 0;
      std::size_t members = 0;
      std::size_t errors = 0;
      for (std::size_t iE = 0; iE < grid.nE(); ++iE) {
        for (std::size_t iJ = 0; iJ < grid.nJ(); ++iJ) {
          const ScanCell& c = grid.at(iJ, iE);
          if (c.error) {
            ++errors;
            continue;
          }
          const JEState st{ja.value(iJ), ea.value(iE)};
          members += c.member ? 1 : 0;
          if (std::abs(c.margin) <= 10.0 * tolerance_V(st)) {
            ++band;
            continue;
          }
          if (oracle(lc, params, st.J, st.E).in_space != c.member) ++disagreements;
        }
      }
      out << "law-case: " << to_string(lc) << '\n'
          << "cells: " << grid.cells.size() << '\n'
          << "members: " << members << '\n'
          << "boundary-band: " << band << '\n'
          << "disagreements: " << disagreements << '\n';
      if (errors) {
        err << "error: " << errors << " cells failed to evaluate\n";
        return kExitError;
      }
      return disagreements == 0 ? 0 : 1;
    }

    out << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace amspace::cli
