#pragma once

#include "amspace/force_law.hpp"
#include "amspace/space.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace amspace {

/// Inclusive linear range: value(i) = lo + (hi - lo) i / (count - 1), with
/// the last value exactly hi.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;

  double value(std::size_t i) const;
};

struct ScanCell {
  bool member = false;    // classify says member or boundary-attained
  bool boundary = false;  // boundary-attained
  bool ur = false;        // is_uniform_rotation found a witness
  double margin = 0.0;    // E - inf V
  std::optional<std::string> error;  // evaluation failure for this cell
};

/// Cells are stored E-major: index = iE * nJ + iJ.
struct ScanGrid {
  Axis J_axis;
  Axis E_axis;
  std::vector<ScanCell> cells;

  std::size_t nJ() const noexcept { return J_axis.count; }
  std::size_t nE() const noexcept { return E_axis.count; }
  const ScanCell& at(std::size_t iJ, std::size_t iE) const { return cells.at(iE * nJ() + iJ); }
  ScanCell& at(std::size_t iJ, std::size_t iE) { return cells.at(iE * nJ() + iJ); }
};

struct ScanOptions {
  SpaceOptions space;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Classifies every lattice point of J_axis x E_axis. Rows are farmed out
/// to worker threads; the result does not depend on the thread count.
/// Evaluation errors are recorded in the cell. Throws std::invalid_argument
/// for empty axes, non-finite or non-increasing ranges, and single-point
/// axes with lo != hi.
ScanGrid scan(const ForceLaw& law, const Axis& J_axis, const Axis& E_axis, const ScanOptions& opts = {});

/// Header `J,E,member,boundary,ur,margin`; E-major rows; flags 0/1; reals
/// with 17 significant digits. Errored cells carry margin `nan`.
void write_csv(const ScanGrid& grid, std::ostream& out);
void write_csv(const ScanGrid& grid, const std::string& path);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
ScanGrid read_csv(std::istream& in);
ScanGrid read_csv(const std::string& path);

/// Plain PGM (P2), nJ x nE, maxval 255, highest E on the top row.
/// 255 for boundary or uniform-rotation cells, 128 for members, 0 otherwise.
void write_pgm(const ScanGrid& grid, std::ostream& out);
void write_pgm(const ScanGrid& grid, const std::string& path);

}  // namespace amspace
