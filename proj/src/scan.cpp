#include "amspace/scan.hpp"

#include "amspace/format.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace amspace {

double Axis::value(std::size_t i) const
{
  if (count <= 1) return lo;
  if (i + 1 == count) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

namespace {

void validate_axis(const Axis& a, const char* name)
{
  if (a.count == 0) throw std::invalid_argument(std::string(name) + " axis needs at least one point");
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) {
    throw std::invalid_argument(std::string(name) + " axis range must be finite");
  }
  if (a.count == 1 ? a.lo != a.hi : !(a.lo < a.hi)) {
    throw std::invalid_argument(std::string(name) + " axis must be increasing, or a single point with lo == hi");
  }
}

ScanCell classify_cell(const ForceLaw& law, const JEState& state, const SpaceOptions& opts)
{
  ScanCell cell;
  try {
    const Classification c = classify(law, state, opts);
    cell.member = c.in_space();
    cell.boundary = c.member == Membership::BoundaryAttained;
    cell.margin = c.margin;
    cell.ur = is_uniform_rotation(law, state, opts).found;
  } catch (const std::exception& e) {
    cell = ScanCell{};
    cell.margin = std::numeric_limits<double>::quiet_NaN();
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

ScanGrid scan(const ForceLaw& law, const Axis& J_axis, const Axis& E_axis, const ScanOptions& opts)
{
  validate_axis(J_axis, "J");
  validate_axis(E_axis, "E");
  ScanGrid grid;
  grid.J_axis = J_axis;
  grid.E_axis = E_axis;
  grid.cells.resize(J_axis.count * E_axis.count);

  const std::size_t rows = E_axis.count;
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, rows));

  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t iE = next_row++; iE < rows; iE = next_row++) {
      const double E = E_axis.value(iE);
      for (std::size_t iJ = 0; iJ < J_axis.count; ++iJ) {
        grid.at(iJ, iE) = classify_cell(law, {J_axis.value(iJ), E}, opts.space);
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return grid;
}

void write_csv(const ScanGrid& grid, std::ostream& out)
{
  out << "J,E,member,boundary,ur,margin\n";
  for (std::size_t iE = 0; iE < grid.nE(); ++iE) {
    for (std::size_t iJ = 0; iJ < grid.nJ(); ++iJ) {
      const ScanCell& c = grid.at(iJ, iE);
      out << format_g17(grid.J_axis.value(iJ)) << ',' << format_g17(grid.E_axis.value(iE)) << ','
          << (c.member ? 1 : 0) << ',' << (c.boundary ? 1 : 0) << ',' << (c.ur ? 1 : 0) << ','
          << format_g17(c.error ? std::numeric_limits<double>::quiet_NaN() : c.margin) << '\n';
    }
  }
}

void write_csv(const ScanGrid& grid, const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_csv(grid, f);
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

namespace {

struct Row {
  double J;
  double E;
  ScanCell cell;
};

bool parse_flag(const std::string& s)
{
  if (s == "0") return false;
  if (s == "1") return true;
  throw std::runtime_error("scan csv: invalid flag '" + s + "'");
}

Row parse_row(const std::string& line, std::size_t lineno)
{
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (fields.size() != 6) throw std::runtime_error("scan csv: line " + std::to_string(lineno) + " needs 6 fields");
  try {
    Row row;
    row.J = parse_double(fields[0]);
    row.E = parse_double(fields[1]);
    row.cell.member = parse_flag(fields[2]);
    row.cell.boundary = parse_flag(fields[3]);
    row.cell.ur = parse_flag(fields[4]);
    row.cell.margin = parse_double(fields[5]);
    return row;
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("scan csv: line " + std::to_string(lineno) + ": " + e.what());
  }
}

}  // namespace

ScanGrid read_csv(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line) || line != "J,E,member,boundary,ur,margin") {
    throw std::runtime_error("scan csv: missing or unexpected header");
  }
  std::vector<Row> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    rows.push_back(parse_row(line, lineno));
  }
  if (rows.empty()) throw std::runtime_error("scan csv: no data rows");

  std::size_t nJ = 1;
  while (nJ < rows.size() && rows[nJ].E == rows[0].E) ++nJ;
  if (rows.size() % nJ != 0) throw std::runtime_error("scan csv: row count is not a multiple of the J count");

  ScanGrid grid;
  grid.J_axis = {rows[0].J, rows[nJ - 1].J, nJ};
  grid.E_axis = {rows[0].E, rows.back().E, rows.size() / nJ};
  grid.cells.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t iJ = i % nJ;
    const std::size_t iE = i / nJ;
    if (rows[i].J != grid.J_axis.value(iJ) || rows[i].E != grid.E_axis.value(iE)) {
      throw std::runtime_error("scan csv: rows do not form a linear lattice");
    }
    grid.cells.push_back(rows[i].cell);
  }
  return grid;
}

ScanGrid read_csv(const std::string& path)
{
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return read_csv(f);
}

void write_pgm(const ScanGrid& grid, std::ostream& out)
{
  out << "P2\n" << grid.nJ() << ' ' << grid.nE() << "\n255\n";
  for (std::size_t row = 0; row < grid.nE(); ++row) {
    const std::size_t iE = grid.nE() - 1 - row;
    for (std::size_t iJ = 0; iJ < grid.nJ(); ++iJ) {
      const ScanCell& c = grid.at(iJ, iE);
      const int pixel = (c.boundary || c.ur) ? 255 : c.member ? 128 : 0;
      if (iJ) out << ' ';
      out << pixel;
    }
    out << '\n';
  }
}

void write_pgm(const ScanGrid& grid, const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_pgm(grid, f);
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace amspace
