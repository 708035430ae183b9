#pragma once

#include "tbundle/exactla/bigint.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tbundle::sw {

/// Inclusive integer range lo..hi.
struct IntRange {
  long lo = 0;
  long hi = -1;

  std::size_t size() const noexcept { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

/// Parses "a..b" (both ends inclusive, either may be negative). Throws
/// std::invalid_argument on anything else or when a > b.
IntRange parse_range(const std::string& text);

/// One evaluated grid cell.
struct SweepCell {
  int genus = 0;
  long m = 0;
  long n = 0;
  BigInt coset;
  std::optional<BigInt> closed;       // when closed_form_defined(m, n)
  std::optional<BigInt> nonpullback;  // same domain

  friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

struct SweepCounterexample {
  SweepCell cell;
  std::string reason;
};

struct SweepReport {
  std::size_t cases = 0;
  std::size_t skipped = 0;         // grid points with m = 0 or n = 0
  std::size_t closed_checked = 0;  // cells where closed and coset were compared
  bool all_even = true;
  std::vector<SweepCounterexample> counterexamples;
};

/// Every (g, m, n) of the grid with m, n != 0, in lexicographic (g, m, n)
/// order. Serial reference implementation.
std::vector<SweepCell> sweep_cells_serial(IntRange genus, IntRange m, IntRange n);

/// Same result, grid cells evaluated in parallel with OpenMP.
std::vector<SweepCell> sweep_cells(IntRange genus, IntRange m, IntRange n);

/// Evenness of every value, closed == coset where the closed form exists.
SweepReport summarize(const std::vector<SweepCell>& cells, std::size_t skipped);

/// Number of grid points dropped because m = 0 or n = 0.
std::size_t skipped_cells(IntRange genus, IntRange m, IntRange n);

/// sweep_cells + summarize.
SweepReport parity_sweep(IntRange genus, IntRange m, IntRange n);

}  // namespace tbundle::sw
