#include "braidsurf/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidsurf {

namespace {

void check_strands(int strands) {
  if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
}

void check_braid_letter(int strands, int letter) {
  if (letter == 0) throw std::invalid_argument("braid letter must be nonzero");
  if (std::abs(letter) > strands - 1)
    throw std::invalid_argument("braid letter index must be below strand count");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (int l : letters_) check_braid_letter(strands, l);
}

BraidWord braid_concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("braid_concat: strand mismatch");
  std::vector<int> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

BraidWord braid_inverse(const BraidWord& b) {
  std::vector<int> out(b.letters().rbegin(), b.letters().rend());
  for (int& l : out) l = -l;
  return BraidWord(b.strands(), std::move(out));
}

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be nonnegative");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("permutation images must be a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b)
    throw std::invalid_argument("transposition endpoints must be distinct and in range");
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) out[i] = next.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  const int n = degree();
  const bool spaced = n > 9;
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first && spaced) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

int cycle_count(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p.apply(j)) seen[j] = 1;
  }
  return cycles;
}

FreeWord letter_apply(int letter, const FreeWord& w) {
  const int m = w.rank();
  if (letter == 0) throw std::invalid_argument("braid letter must be nonzero");
  const int j = std::abs(letter);
  if (j + 1 > m) throw std::invalid_argument("braid letter index out of range for rank");
  std::vector<int> out;
  out.reserve(w.length() * 3);
  for (int l : w.letters()) {
    const int g = std::abs(l);
    const int s = (l > 0) ? 1 : -1;
    if (g != j && g != j + 1) {
      push_reduced(out, l);
      continue;
    }
    std::vector<int> image;
    if (letter > 0) {
      if (g == j)
        image = {j + 1};
      else
        image = {j + 1, j, -(j + 1)};
    } else {
      if (g == j)
        image = {-j, j + 1, j};
      else
        image = {j};
    }
    if (s < 0) {
      std::reverse(image.begin(), image.end());
      for (int& x : image) x = -x;
    }
    for (int x : image) push_reduced(out, x);
  }
  return FreeWord(m, std::move(out));
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& w) {
  if (b.strands() != w.rank())
    throw std::invalid_argument("artin_apply: strand count must equal word rank");
  FreeWord cur = w;
  for (int l : b.letters()) cur = letter_apply(l, cur);
  return cur;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braid_equal: strand mismatch");
  const int m = a.strands();
  for (int i = 1; i <= m; ++i) {
    FreeWord x = FreeWord::generator(m, i);
    if (artin_apply(a, x) != artin_apply(b, x)) return false;
  }
  return true;
}

Permutation perm_image(const BraidWord& b) {
  Permutation p(b.strands());
  for (int l : b.letters()) {
    const int j = std::abs(l);
    p = p.then(Permutation::transposition(b.strands(), j - 1, j));
  }
  return p;
}

}  // namespace braidsurf
