#pragma once

#include <string>
#include <vector>

namespace braidsurf {

// Word in the free group F_rank. Letters are nonzero integers: +g is the
// generator x_g (1-based), -g its inverse. Always stored freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank);
  FreeWord(int rank, std::vector<int> letters);

  static FreeWord generator(int rank, int gen, int sign = +1);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int exponent_sum() const;

  bool operator==(const FreeWord&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

// Appends one letter to a reduced letter sequence, cancelling if possible.
void push_reduced(std::vector<int>& letters, int letter);

// Stack cancellation of adjacent inverse pairs.
std::vector<int> reduce_letters(const std::vector<int>& letters);

FreeWord free_reduce(const FreeWord& w);
FreeWord word_inverse(const FreeWord& w);
FreeWord word_concat(const FreeWord& u, const FreeWord& v);
FreeWord conjugate(const FreeWord& u, const FreeWord& by);

// Strips matching first/last letters until the word is cyclically reduced.
FreeWord cyclic_reduce(const FreeWord& w);

// Canonical representative of the conjugacy class of w: the least rotation
// of its cyclic reduction, or of the inverse's when allow_inverse is set.
std::vector<int> cyclic_canonical(const FreeWord& w, bool allow_inverse);

// True when u and v are conjugate in the free group (by cyclic words);
// with allow_inverse, u conjugate to v or to v^-1.
bool conjugate_in_free(const FreeWord& u, const FreeWord& v, bool allow_inverse = false);

// "x1 x3^-1"; the empty word renders as "1".
std::string word_str(const FreeWord& w);

}  // namespace braidsurf
