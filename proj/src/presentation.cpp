#include "braidsurf/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

namespace braidsurf {

Presentation::Presentation(int generators, std::vector<FreeWord> relators)
    : generators_(generators), relators_(std::move(relators)) {
  if (generators < 0) throw std::invalid_argument("generator count must be nonnegative");
  for (const FreeWord& r : relators_)
    if (r.rank() != generators)
      throw std::invalid_argument("relator rank must equal generator count");
}

FreeWord band_relator(const Band& b) {
  const int m = b.conjugator.strands();
  BraidWord qinv = braid_inverse(b.conjugator);
  FreeWord wi = artin_apply(qinv, FreeWord::generator(m, b.core));
  FreeWord wj = artin_apply(qinv, FreeWord::generator(m, b.core + 1));
  return word_concat(wi, word_inverse(wj));
}

Presentation complement_presentation(const Factorization& f) {
  std::vector<FreeWord> rels;
  rels.reserve(f.bands().size());
  for (const Band& b : f.bands()) rels.push_back(band_relator(b));
  return Presentation(f.strands(), std::move(rels));
}

namespace {

// Cyclic reduction, empty-relator removal, duplicate removal up to
// conjugacy and inversion (first occurrence kept).
void normalize(std::vector<FreeWord>& rels) {
  std::vector<FreeWord> out;
  std::set<std::vector<int>> seen;
  for (const FreeWord& r : rels) {
    FreeWord c = cyclic_reduce(r);
    if (c.empty()) continue;
    std::vector<int> key = cyclic_canonical(c, true);
    if (seen.insert(key).second) out.push_back(c);
  }
  rels = std::move(out);
}

int occurrences(const FreeWord& r, int gen) {
  int n = 0;
  for (int l : r.letters())
    if (std::abs(l) == gen) ++n;
  return n;
}

// Letters of r with the unique occurrence of +-gen rotated to the front,
// solved for gen: the word gen must equal for r to die.
std::vector<int> replacement_for(const FreeWord& r, int gen) {
  const std::vector<int>& ls = r.letters();
  size_t k = 0;
  while (std::abs(ls[k]) != gen) ++k;
  std::vector<int> rest;
  for (size_t i = 1; i < ls.size(); ++i) rest.push_back(ls[(k + i) % ls.size()]);
  if (ls[k] > 0) {
    std::reverse(rest.begin(), rest.end());
    for (int& l : rest) l = -l;
  }
  return rest;
}

std::vector<int> substitute(const std::vector<int>& letters, int gen,
                            const std::vector<int>& repl) {
  std::vector<int> out;
  for (int l : letters) {
    if (l == gen) {
      for (int x : repl) push_reduced(out, x);
    } else if (l == -gen) {
      for (auto it = repl.rbegin(); it != repl.rend(); ++it) push_reduced(out, -*it);
    } else {
      push_reduced(out, l);
    }
  }
  return out;
}

int renumber(int letter, int gen) {
  int g = std::abs(letter);
  if (g > gen) --g;
  return letter > 0 ? g : -g;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p, int size_budget) {
  if (size_budget < 0) throw std::invalid_argument("size budget must be nonnegative");
  int n = p.generators();
  std::vector<FreeWord> rels = p.relators();
  normalize(rels);

  for (;;) {
    // Candidates: generator occurring exactly once in some relator, ordered
    // by generator index, then relator length, then relator position.
    std::vector<std::tuple<int, int, int>> candidates;
    for (size_t ri = 0; ri < rels.size(); ++ri)
      for (int g = 1; g <= n; ++g)
        if (occurrences(rels[ri], g) == 1)
          candidates.emplace_back(g, rels[ri].length(), static_cast<int>(ri));
    std::sort(candidates.begin(), candidates.end());

    bool applied = false;
    for (const auto& [g, len, ri] : candidates) {
      std::vector<int> repl = replacement_for(rels[ri], g);
      std::vector<std::vector<int>> next;
      long total = 0;
      for (size_t j = 0; j < rels.size(); ++j) {
        if (static_cast<int>(j) == ri) continue;
        std::vector<int> sub = substitute(rels[j].letters(), g, repl);
        total += static_cast<long>(sub.size());
        next.push_back(std::move(sub));
      }
      if (total > size_budget) continue;

      std::vector<FreeWord> updated;
      for (std::vector<int>& ls : next) {
        for (int& l : ls) l = renumber(l, g);
        updated.emplace_back(n - 1, std::move(ls));
      }
      n -= 1;
      rels = std::move(updated);
      normalize(rels);
      applied = true;
      break;
    }
    if (!applied) break;
  }

  return Presentation(n, std::move(rels));
}

std::vector<std::string> relator_strings(const Presentation& p) {
  std::vector<std::string> out;
  out.reserve(p.relators().size());
  for (const FreeWord& r : p.relators()) out.push_back(word_str(r));
  return out;
}

}  // namespace braidsurf
