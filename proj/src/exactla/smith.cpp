#include "tbundle/exactla/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace tbundle::la {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of smallest absolute value in the trailing block [t.., t..].
std::optional<Position> smallest_nonzero(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  BigInt best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

// Truncating quotient; the remainder is strictly smaller than |den| in size.
BigInt tquot(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Row Hermite normal form of the rows of `k`, in place. Rows are assumed
// linearly independent.
void row_hermite(IntMatrix& k) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < k.cols() && pivot_row < k.rows(); ++c) {
    // Euclid down column c until a single nonzero entry remains at pivot_row.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < k.rows(); ++r)
        if (k(r, c) != 0 && (!best || abs(k(r, c)) < abs(k(*best, c)))) best = r;
      if (!best) break;
      k.swap_rows(pivot_row, *best);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < k.rows(); ++r) {
        k.add_row_multiple(r, pivot_row, -tquot(k(r, c), k(pivot_row, c)));
        if (k(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (pivot_row >= k.rows() || k(pivot_row, c) == 0) continue;
    if (k(pivot_row, c) < 0) k.negate_row(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), k(r, c).get_mpz_t(), k(pivot_row, c).get_mpz_t());
      k.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = f.D;
  const std::size_t n = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < n; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = smallest_nonzero(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, pivot->row);
      f.U.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      f.V.swap_cols(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = -tquot(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        f.U.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = -tquot(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        f.V.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise pull the
      // offending row up and reduce again with a smaller remainder.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row_multiple(t, *offender, 1);
      f.U.add_row_multiple(t, *offender, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank(); }

AbelianGroup cokernel_structure(const IntMatrix& m) {
  const SmithForm f = snf(m);
  const std::size_t r = f.rank();
  std::vector<BigInt> orders;
  orders.reserve(r);
  for (std::size_t i = 0; i < r; ++i) orders.push_back(f.D(i, i));
  return {m.rows() - r, std::move(orders)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm f = snf(m);
  const std::size_t r = f.rank();
  const std::size_t dim = m.cols() - r;
  // Trailing columns of V span the kernel and extend to a basis of Z^cols,
  // so the lattice they span is saturated.
  IntMatrix rows_form = f.V.block(0, r, m.cols(), dim).transpose();
  row_hermite(rows_form);
  return rows_form.transpose();
}

IntMatrix saturated_column_span(const IntMatrix& m) {
  return integer_kernel(integer_kernel(m.transpose()).transpose());
}

}  // namespace tbundle::la
