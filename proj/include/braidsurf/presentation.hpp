#pragma once

#include <string>
#include <vector>

#include "braidsurf/factorization.hpp"
#include "braidsurf/free_word.hpp"

namespace braidsurf {

// Finite group presentation <x1..xn | relators>.
class Presentation {
 public:
  Presentation() = default;
  Presentation(int generators, std::vector<FreeWord> relators);

  int generators() const { return generators_; }
  const std::vector<FreeWord>& relators() const { return relators_; }
  int relator_count() const { return static_cast<int>(relators_.size()); }

  bool operator==(const Presentation&) const = default;

 private:
  int generators_ = 0;
  std::vector<FreeWord> relators_;
};

// Relator of one band: with W_j = (Q^-1 acting on x_j), the reduced word
// W_core * W_{core+1}^-1.
FreeWord band_relator(const Band& b);

// Complement presentation: one meridian generator per strand, one band
// relator per band, in band order.
Presentation complement_presentation(const Factorization& f);

// Deterministic Tietze simplification: cyclic reduction, duplicate removal
// up to conjugacy and inversion, and elimination of generators that occur
// exactly once in some relator. A candidate elimination whose substituted
// total relator length would exceed size_budget is skipped.
Presentation tietze_simplify(const Presentation& p, int size_budget = 10000);

std::vector<std::string> relator_strings(const Presentation& p);

}  // namespace braidsurf
