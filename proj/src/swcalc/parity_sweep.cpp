#include "tbundle/swcalc/parity_sweep.hpp"

#include "tbundle/swcalc/sw4_zero.hpp"
#include "tbundle/swcalc/sw_polynomial.hpp"

#include <omp.h>

#include <charconv>
#include <stdexcept>

namespace tbundle::sw {

namespace {

std::vector<long> nonzero_values(IntRange r) {
  std::vector<long> v;
  for (long x = r.lo; x <= r.hi; ++x)
    if (x != 0) v.push_back(x);
  return v;
}

void check_genus(IntRange genus) {
  if (genus.size() > 0 && genus.lo < 2)
    throw std::invalid_argument("parity sweep: genus range must start at 2 or above");
}

// Circle-bundle polynomials, indexed [g - g_lo][n position].
using PolyTable = std::vector<std::vector<SWPolynomial>>;

SweepCell evaluate_cell(const SWPolynomial& poly, int g, long m, long n) {
  SweepCell cell{g, m, n, sw4_zero_coset(poly, m, n), std::nullopt, std::nullopt};
  if (closed_form_defined(m, n)) {
    cell.closed = sw4_zero_closed(g, m, n);
    cell.nonpullback = sw4_zero_nonpullback(g, m, n);
  }
  return cell;
}

bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range \"" + text + "\": expected a..b");
  auto parse_end = [&](std::string_view part) {
    long v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last)
      throw std::invalid_argument("range \"" + text + "\": bad endpoint \"" + std::string(part) + "\"");
    return v;
  };
  const std::string_view all(text);
  IntRange r{parse_end(all.substr(0, dots)), parse_end(all.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("range \"" + text + "\": empty (a > b)");
  return r;
}

std::vector<SweepCell> sweep_cells_serial(IntRange genus, IntRange m, IntRange n) {
  check_genus(genus);
  const std::vector<long> ms = nonzero_values(m);
  const std::vector<long> ns = nonzero_values(n);
  std::vector<SweepCell> cells;
  cells.reserve(genus.size() * ms.size() * ns.size());
  for (long g = genus.lo; g <= genus.hi; ++g) {
    std::vector<SWPolynomial> polys;
    for (long nv : ns) polys.push_back(sw_poly_circle_bundle(static_cast<int>(g), nv));
    for (long mv : ms)
      for (std::size_t k = 0; k < ns.size(); ++k)
        cells.push_back(evaluate_cell(polys[k], static_cast<int>(g), mv, ns[k]));
  }
  return cells;
}

std::vector<SweepCell> sweep_cells(IntRange genus, IntRange m, IntRange n) {
  check_genus(genus);
  const std::vector<long> ms = nonzero_values(m);
  const std::vector<long> ns = nonzero_values(n);
  const long gs = static_cast<long>(genus.size());
  const long nm = static_cast<long>(ms.size());
  const long nn = static_cast<long>(ns.size());

  PolyTable polys(static_cast<std::size_t>(gs), std::vector<SWPolynomial>(ns.size()));
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (long gi = 0; gi < gs; ++gi)
    for (long k = 0; k < nn; ++k)
      polys[gi][k] = sw_poly_circle_bundle(static_cast<int>(genus.lo + gi), ns[k]);

  // Each cell writes its own slot, so the output order is the lexicographic
  // (g, m, n) order regardless of scheduling.
  const long total = gs * nm * nn;
  std::vector<SweepCell> cells(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (long idx = 0; idx < total; ++idx) {
    const long gi = idx / (nm * nn);
    const long mi = (idx / nn) % nm;
    const long ni = idx % nn;
    cells[idx] = evaluate_cell(polys[gi][ni], static_cast<int>(genus.lo + gi), ms[mi], ns[ni]);
  }
  return cells;
}

std::size_t skipped_cells(IntRange genus, IntRange m, IntRange n) {
  return genus.size() * (m.size() * n.size() - nonzero_values(m).size() * nonzero_values(n).size());
}

SweepReport summarize(const std::vector<SweepCell>& cells, std::size_t skipped) {
  SweepReport rep;
  rep.cases = cells.size();
  rep.skipped = skipped;
  for (const auto& c : cells) {
    std::string reason;
    if (is_odd(c.coset)) reason = "coset value is odd";
    if (c.closed) {
      ++rep.closed_checked;
      if (*c.closed != c.coset) reason += (reason.empty() ? "" : "; ") + std::string("closed form disagrees with coset");
      if (is_odd(*c.closed)) reason += (reason.empty() ? "" : "; ") + std::string("closed value is odd");
    }
    if (c.nonpullback && is_odd(*c.nonpullback))
      reason += (reason.empty() ? "" : "; ") + std::string("non-pullback value is odd");
    if (!reason.empty()) {
      if (reason.find("odd") != std::string::npos) rep.all_even = false;
      rep.counterexamples.push_back({c, std::move(reason)});
    }
  }
  return rep;
}

SweepReport parity_sweep(IntRange genus, IntRange m, IntRange n) {
  return summarize(sweep_cells(genus, m, n), skipped_cells(genus, m, n));
}

}  // namespace tbundle::sw
