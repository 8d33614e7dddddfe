#pragma once

#include <cstdint>
#include <vector>

#include "braidsurf/presentation.hpp"

namespace braidsurf {

// Dense integer matrix, row-major.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;

  static IntegerMatrix zero(int rows, int cols);

  std::int64_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
};

// Diagonal of the Smith normal form: nonnegative d1 | d2 | ... | dk with
// k = min(rows, cols), zeros trailing. Throws std::overflow_error when an
// intermediate value leaves the int64 range.
std::vector<std::int64_t> smith_normal_form(IntegerMatrix a);

// Exponent-sum matrix of a presentation: one row per relator, one column
// per generator.
IntegerMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors >= 2, each dividing the next

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianize(const Presentation& p);

}  // namespace braidsurf
