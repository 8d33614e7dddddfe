#include "braidsurf/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace braidsurf {

namespace {

void check_rank(int rank) {
  if (rank < 0) throw std::invalid_argument("free word rank must be nonnegative");
}

void check_letter(int rank, int letter) {
  if (letter == 0) throw std::invalid_argument("free word letter must be nonzero");
  if (std::abs(letter) > rank)
    throw std::invalid_argument("free word letter exceeds rank " + std::to_string(rank));
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
  check_rank(rank);
  for (int l : letters) check_letter(rank, l);
  letters_ = reduce_letters(letters);
}

FreeWord FreeWord::generator(int rank, int gen, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  if (gen < 1) throw std::invalid_argument("generator index must be positive");
  return FreeWord(rank, {sign * gen});
}

int FreeWord::exponent_sum() const {
  int s = 0;
  for (int l : letters_) s += (l > 0) ? 1 : -1;
  return s;
}

void push_reduced(std::vector<int>& letters, int letter) {
  if (!letters.empty() && letters.back() == -letter)
    letters.pop_back();
  else
    letters.push_back(letter);
}

std::vector<int> reduce_letters(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) push_reduced(out, l);
  return out;
}

FreeWord free_reduce(const FreeWord& w) { return w; }

FreeWord word_inverse(const FreeWord& w) {
  std::vector<int> out(w.letters().rbegin(), w.letters().rend());
  for (int& l : out) l = -l;
  return FreeWord(w.rank(), std::move(out));
}

FreeWord word_concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("word_concat: rank mismatch");
  std::vector<int> out = u.letters();
  for (int l : v.letters()) push_reduced(out, l);
  return FreeWord(u.rank(), std::move(out));
}

FreeWord conjugate(const FreeWord& u, const FreeWord& by) {
  return word_concat(word_concat(by, u), word_inverse(by));
}

FreeWord cyclic_reduce(const FreeWord& w) {
  std::vector<int> ls = w.letters();
  size_t a = 0, b = ls.size();
  while (b - a >= 2 && ls[a] == -ls[b - 1]) {
    ++a;
    --b;
  }
  return FreeWord(w.rank(), std::vector<int>(ls.begin() + a, ls.begin() + b));
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& v) {
  if (v.empty()) return v;
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

std::vector<int> cyclic_canonical(const FreeWord& w, bool allow_inverse) {
  FreeWord c = cyclic_reduce(w);
  std::vector<int> best = least_rotation(c.letters());
  if (allow_inverse) {
    std::vector<int> inv = least_rotation(word_inverse(c).letters());
    if (inv < best) best = inv;
  }
  return best;
}

bool conjugate_in_free(const FreeWord& u, const FreeWord& v, bool allow_inverse) {
  if (u.rank() != v.rank()) throw std::invalid_argument("conjugate_in_free: rank mismatch");
  if (cyclic_canonical(u, false) == cyclic_canonical(v, false)) return true;
  if (allow_inverse && cyclic_canonical(u, false) == cyclic_canonical(word_inverse(v), false))
    return true;
  return false;
}

std::string word_str(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace braidsurf
