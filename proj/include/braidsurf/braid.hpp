#pragma once

#include <string>
#include <vector>

#include "braidsurf/free_word.hpp"

namespace braidsurf {

// Word in the braid group B_strands. Letters are nonzero integers: +j is the
// Artin generator sigma_j (1 <= j < strands), -j its inverse.
class BraidWord {
 public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

BraidWord braid_concat(const BraidWord& u, const BraidWord& v);
BraidWord braid_inverse(const BraidWord& b);

// Permutation of {0, ..., degree-1}, stored as the list of images.
class Permutation {
 public:
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  // Composition: (*this) first, then next.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  // 1-based cycle notation, fixed points suppressed; identity is "()".
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

int cycle_count(const Permutation& p);

// Action of one braid letter on a free-group word of matching rank.
// Positive sigma_j sends x_j to x_{j+1} and x_{j+1} to x_{j+1} x_j x_{j+1}^-1.
FreeWord letter_apply(int letter, const FreeWord& w);

// Right action of the whole braid word, letters applied left to right.
FreeWord artin_apply(const BraidWord& b, const FreeWord& w);

// Equality in B_m, decided through the faithful action on F_m.
bool braid_equal(const BraidWord& a, const BraidWord& b);

// Induced permutation of strands, letters composed left to right.
Permutation perm_image(const BraidWord& b);

}  // namespace braidsurf
