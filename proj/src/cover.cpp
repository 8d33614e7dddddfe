#include "braidsurf/cover.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidsurf {

std::string origin_name(const SchreierOrigin& o) {
  return (o.coset == SchreierCoset::identity ? "u" : "v") + std::to_string(o.generator);
}

bool degree_zero_check(const Presentation& p) {
  for (const FreeWord& r : p.relators())
    if (r.exponent_sum() != 0) return false;
  return true;
}

FreeWord rs_rewrite(const FreeWord& w, SchreierCoset start) {
  const int m = w.rank();
  if (m < 1) throw std::invalid_argument("rs_rewrite needs rank at least 1");
  if (w.exponent_sum() % 2 != 0)
    throw std::invalid_argument("rs_rewrite needs a word of even exponent sum");
  const int out_rank = 2 * m - 1;
  auto u_index = [&](int i) { return i - 1; };      // i >= 2
  auto v_index = [&](int i) { return m - 1 + i; };  // i >= 1

  std::vector<int> out;
  int coset = (start == SchreierCoset::identity) ? 0 : 1;
  for (int l : w.letters()) {
    const int i = std::abs(l);
    if (l > 0) {
      if (coset == 0) {
        if (i != 1) push_reduced(out, u_index(i));
      } else {
        push_reduced(out, v_index(i));
      }
      coset ^= 1;
    } else {
      coset ^= 1;  // the edge enters from the other coset
      if (coset == 0) {
        if (i != 1) push_reduced(out, -u_index(i));
      } else {
        push_reduced(out, -v_index(i));
      }
    }
  }
  return FreeWord(out_rank, std::move(out));
}

CoverPresentation cover_presentation(const Presentation& p) {
  const int m = p.generators();
  if (m < 1) throw std::invalid_argument("cover_presentation needs at least one generator");
  if (!degree_zero_check(p))
    throw std::invalid_argument("cover_presentation needs relators of exponent sum zero");

  const FreeWord x1 = FreeWord::generator(m, 1);
  std::vector<FreeWord> rels;
  rels.reserve(2 * (p.relator_count() + m));
  for (const FreeWord& r : p.relators()) {
    rels.push_back(rs_rewrite(r, SchreierCoset::identity));
    rels.push_back(rs_rewrite(conjugate(r, x1), SchreierCoset::identity));
  }
  for (int i = 1; i <= m; ++i) {
    FreeWord sq = word_concat(FreeWord::generator(m, i), FreeWord::generator(m, i));
    rels.push_back(rs_rewrite(sq, SchreierCoset::identity));
    rels.push_back(rs_rewrite(conjugate(sq, x1), SchreierCoset::identity));
  }

  CoverPresentation out;
  out.presentation = Presentation(2 * m - 1, std::move(rels));
  for (int i = 2; i <= m; ++i) out.origins.push_back({SchreierCoset::identity, i});
  for (int i = 1; i <= m; ++i) out.origins.push_back({SchreierCoset::meridian, i});
  return out;
}

namespace {

// HLT-style coset table over the trivial subgroup. Column 2g is the edge for
// generator g+1, column 2g+1 its inverse. Dead cosets stay in the table and
// are resolved through the union-find parent array.
class CosetTable {
 public:
  CosetTable(const Presentation& p, long long max_live)
      : width_(2 * p.generators()), max_live_(max_live) {
    for (const FreeWord& r : p.relators()) relators_.push_back(r.letters());
    tab_.push_back(std::vector<int>(width_, -1));
    parent_.push_back(0);
  }

  EnumerationResult run() {
    for (;;) {
      const long long v0 = version_;
      for (size_t c = 0; c < tab_.size(); ++c) {
        if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
        for (const std::vector<int>& rel : relators_) {
          if (!scan_and_fill(static_cast<int>(c), rel))
            return {EnumerationResult::Kind::inconclusive, 0,
                    static_cast<long long>(tab_.size())};
          if (find(static_cast<int>(c)) != static_cast<int>(c)) break;
        }
        if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
        for (int col = 0; col < width_; ++col) {
          if (entry(static_cast<int>(c), col) >= 0) continue;
          int d = new_coset();
          if (d < 0)
            return {EnumerationResult::Kind::inconclusive, 0,
                    static_cast<long long>(tab_.size())};
          install(static_cast<int>(c), col, d);
        }
      }
      if (version_ == v0) break;
    }
    verify();
    return {EnumerationResult::Kind::order, live_, static_cast<long long>(tab_.size())};
  }

 private:
  static int col_of(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inv_col(int col) { return col ^ 1; }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Resolved table lookup at a live coset.
  int entry(int c, int col) {
    int v = tab_[c][col];
    if (v < 0) return -1;
    v = find(v);
    tab_[c][col] = v;
    return v;
  }

  int new_coset() {
    if (live_ >= max_live_) return -1;
    tab_.push_back(std::vector<int>(width_, -1));
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_;
    ++version_;
    return static_cast<int>(tab_.size()) - 1;
  }

  // Both halves must be free (or fresh) when called.
  void install(int c, int col, int d) {
    tab_[c][col] = d;
    tab_[d][inv_col(col)] = c;
    ++version_;
  }

  void coincide(int a, int b) {
    std::vector<std::pair<int, int>> queue = {{a, b}};
    while (!queue.empty()) {
      auto [x0, y0] = queue.back();
      queue.pop_back();
      int x = find(x0), y = find(y0);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      parent_[y] = x;
      --live_;
      ++version_;
      for (int col = 0; col < width_; ++col) {
        int z0 = tab_[y][col];
        if (z0 < 0) continue;
        int z = find(z0);
        int w = tab_[x][col];
        if (w < 0)
          tab_[x][col] = z;
        else if (find(w) != z)
          queue.push_back({find(w), z});
        else
          tab_[x][col] = z;
        int t = tab_[z][inv_col(col)];
        if (t < 0)
          tab_[z][inv_col(col)] = x;
        else if (find(t) != x)
          queue.push_back({find(t), x});
        else
          tab_[z][inv_col(col)] = x;
      }
    }
  }

  bool scan_and_fill(int c, const std::vector<int>& rel) {
    int f = c;
    size_t i = 0;
    int b = c;
    size_t j = rel.size();
    for (;;) {
      while (i < j) {
        int nxt = entry(f, col_of(rel[i]));
        if (nxt < 0) break;
        f = nxt;
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return true;
      }
      while (j > i) {
        int prv = entry(b, col_of(-rel[j - 1]));
        if (prv < 0) break;
        b = prv;
        --j;
      }
      if (j == i) {
        if (f != b) coincide(f, b);
        return true;
      }
      if (j == i + 1) {
        install(f, col_of(rel[i]), b);
        return true;
      }
      int d = new_coset();
      if (d < 0) return false;
      install(f, col_of(rel[i]), d);
    }
  }

  void verify() {
    for (size_t c = 0; c < tab_.size(); ++c) {
      if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (int col = 0; col < width_; ++col) {
        int d = entry(static_cast<int>(c), col);
        if (d < 0 || entry(d, inv_col(col)) != static_cast<int>(c))
          throw std::logic_error("coset table failed the completeness sweep");
      }
      for (const std::vector<int>& rel : relators_) {
        int x = static_cast<int>(c);
        for (int l : rel) x = entry(x, col_of(l));
        if (x != static_cast<int>(c))
          throw std::logic_error("coset table failed the relator sweep");
      }
    }
  }

  int width_;
  long long max_live_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> parent_;
  long long live_ = 1;
  long long version_ = 0;
};

}  // namespace

EnumerationResult coset_enumerate(const Presentation& p, long long max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  return CosetTable(p, max_cosets).run();
}

}  // namespace braidsurf
