#pragma once

#include <string>
#include <vector>

#include "braidsurf/presentation.hpp"

namespace braidsurf {

// Cosets of the even-exponent-sum index-2 subgroup, transversal {1, x1}.
enum class SchreierCoset { identity, meridian };

// Schreier generator s(t, x_i) = t x_i rep(t x_i)^-1 for transversal rep t:
// coset == identity gives u_i = x_i x1^-1 (i >= 2; u_1 is trivial and
// omitted), coset == meridian gives v_i = x1 x_i.
struct SchreierOrigin {
  SchreierCoset coset;
  int generator;

  bool operator==(const SchreierOrigin&) const = default;
};

std::string origin_name(const SchreierOrigin& o);  // "u3", "v1"

// True when every relator has exponent sum zero, so the mod-2 exponent map
// is a well-defined surjection onto Z/2.
bool degree_zero_check(const Presentation& p);

// Reidemeister-Schreier rewriting of a word of even exponent sum, read off
// the coset walk beginning at start. Input rank m, output rank 2m-1 with
// u_2..u_m at 1..m-1 and v_1..v_m at m..2m-1.
FreeWord rs_rewrite(const FreeWord& w, SchreierCoset start);

struct CoverPresentation {
  Presentation presentation;
  std::vector<SchreierOrigin> origins;  // one per cover generator
};

// Presentation of the index-2 subgroup with all squared meridians added:
// for each relator r the rewrites of r and x1 r x1^-1, then for each i the
// rewrites of x_i^2 and x1 x_i^2 x1^-1.
CoverPresentation cover_presentation(const Presentation& p);

struct EnumerationResult {
  enum class Kind { order, inconclusive };
  Kind kind;
  long long order = 0;        // meaningful when kind == order
  long long cosets_used = 0;  // total cosets defined
};

// Coset enumeration over the trivial subgroup (Todd-Coxeter, HLT scanning
// with coincidence handling). Closes only after a verification sweep; an
// enumeration needing more than max_cosets live cosets is inconclusive.
EnumerationResult coset_enumerate(const Presentation& p, long long max_cosets);

}  // namespace braidsurf
