#include "braidsurf/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidsurf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix reduction");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix reduction");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  return checked_sub(0, a);
}

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace

IntegerMatrix IntegerMatrix::zero(int rows, int cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
  IntegerMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * cols, 0);
  return m;
}

std::vector<std::int64_t> smith_normal_form(IntegerMatrix a) {
  const int rows = a.rows, cols = a.cols;
  const int k = std::min(rows, cols);
  std::vector<std::int64_t> diag(k, 0);

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
  };

  for (int t = 0; t < k; ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        std::int64_t v = a.at(r, c);
        if (v == 0) continue;
        if (pr < 0 || checked_abs(v) < checked_abs(a.at(pr, pc))) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int r = t + 1; r < rows; ++r) {
        if (a.at(r, t) == 0) continue;
        std::int64_t q = a.at(r, t) / a.at(t, t);
        for (int c = t; c < cols; ++c)
          a.at(r, c) = checked_sub(a.at(r, c), checked_mul(q, a.at(t, c)));
        if (a.at(r, t) != 0) {  // remainder smaller than the pivot
          swap_rows(t, r);
          dirty = true;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a.at(t, c) == 0) continue;
        std::int64_t q = a.at(t, c) / a.at(t, t);
        for (int r = t; r < rows; ++r)
          a.at(r, c) = checked_sub(a.at(r, c), checked_mul(q, a.at(r, t)));
        if (a.at(t, c) != 0) {
          swap_cols(t, c);
          dirty = true;
        }
      }
    }
    diag[t] = checked_abs(a.at(t, t));
  }

  // Divisibility chain: diag(a, b) is equivalent to diag(gcd, lcm).
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int i = 0; i + 1 < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (diag[i] == 0 && diag[j] != 0) {
          std::swap(diag[i], diag[j]);
          dirty = true;
        } else if (diag[i] != 0 && diag[j] != 0 && diag[j] % diag[i] != 0) {
          std::int64_t g = std::gcd(diag[i], diag[j]);
          diag[j] = checked_mul(diag[i] / g, diag[j]);
          diag[i] = g;
          dirty = true;
        }
      }
  }
  return diag;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m = IntegerMatrix::zero(p.relator_count(), p.generators());
  for (int r = 0; r < p.relator_count(); ++r)
    for (int l : p.relators()[r].letters())
      m.at(r, std::abs(l) - 1) += (l > 0) ? 1 : -1;
  return m;
}

AbelianInvariants abelianize(const Presentation& p) {
  AbelianInvariants out;
  std::vector<std::int64_t> d = smith_normal_form(relation_matrix(p));
  int nonzero = 0;
  for (std::int64_t v : d) {
    if (v == 0) continue;
    ++nonzero;
    if (v >= 2) out.torsion.push_back(v);
  }
  out.free_rank = p.generators() - nonzero;
  return out;
}

}  // namespace braidsurf
