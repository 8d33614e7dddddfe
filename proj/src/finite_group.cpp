#include "braidsurf/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace braidsurf {

namespace {

constexpr int kMaxOrder = 40320;  // 8!
constexpr int kMaxPanelOrder = 5000;

}  // namespace

FiniteGroup::FiniteGroup(std::string label, int order, std::vector<int> table)
    : label_(std::move(label)), order_(order), table_(std::move(table)) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (order > kMaxOrder) throw std::invalid_argument("group order exceeds size bound");
  if (table_.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= order) throw std::invalid_argument("multiplication table entry out of range");

  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      ok = (mul(e, x) == x && mul(x, e) == x);
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw std::invalid_argument("multiplication table has no identity");

  inverses_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverses_[a] = b;
        break;
      }
    if (inverses_[a] < 0) throw std::invalid_argument("multiplication table lacks inverses");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group needs n >= 1");
  if (n > kMaxOrder) throw std::invalid_argument("cyclic group size bound exceeded");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup("Z" + std::to_string(n), n, std::move(table));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
  if (2 * n > kMaxOrder) throw std::invalid_argument("dihedral group size bound exceeded");
  const int order = 2 * n;
  // Element r + n*f: rotation by r, reflected when f = 1.
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    const int r1 = a % n, f1 = a / n;
    for (int b = 0; b < order; ++b) {
      const int r2 = b % n, f2 = b / n;
      int r, f;
      if (f1 == 0) {
        r = (r1 + r2) % n;
        f = f2;
      } else {
        r = ((r1 - r2) % n + n) % n;
        f = 1 - f2;
      }
      table[static_cast<size_t>(a) * order + b] = r + n * f;
    }
  }
  return FiniteGroup("D" + std::to_string(n), order, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric group size bound is 1 <= n <= 8");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;

  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int x = 0; x < n; ++x) comp[x] = perms[b][perms[a][x]];  // a first, then b
      table[static_cast<size_t>(a) * order + b] = index[comp];
    }
  return FiniteGroup("S" + std::to_string(n), order, std::move(table));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::verify_axioms() const {
  for (int a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) return false;
    if (mul(a, inverse(a)) != identity_ || mul(inverse(a), a) != identity_) return false;
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

int evaluate_word(const FreeWord& w, const std::vector<int>& assignment, const FiniteGroup& g) {
  if (static_cast<int>(assignment.size()) != w.rank())
    throw std::invalid_argument("assignment length must equal word rank");
  int v = g.identity();
  for (int l : w.letters()) {
    int e = assignment[std::abs(l) - 1];
    if (l < 0) e = g.inverse(e);
    v = g.mul(v, e);
  }
  return v;
}

namespace {

// Relators bucketed by the highest generator they mention; a relator can be
// checked as soon as that generator has an image.
std::vector<std::vector<const FreeWord*>> bucket_relators(const Presentation& p) {
  std::vector<std::vector<const FreeWord*>> buckets(p.generators() + 1);
  for (const FreeWord& r : p.relators()) {
    int mx = 0;
    for (int l : r.letters()) mx = std::max(mx, std::abs(l));
    buckets[mx].push_back(&r);
  }
  return buckets;
}

int eval_prefix(const FreeWord& w, const std::vector<int>& assign, const FiniteGroup& g) {
  int v = g.identity();
  for (int l : w.letters()) {
    int e = assign[std::abs(l) - 1];
    if (l < 0) e = g.inverse(e);
    v = g.mul(v, e);
  }
  return v;
}

bool generates_all(const std::vector<int>& images, const FiniteGroup& g) {
  const int order = g.order();
  std::vector<char> seen(order, 0);
  std::vector<int> frontier = {g.identity()};
  seen[g.identity()] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int im : images) {
      int y = g.mul(x, im);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  return reached == order;
}

template <typename Leaf>
void search_homs(const Presentation& p, const FiniteGroup& g, const Leaf& leaf) {
  const int n = p.generators();
  auto buckets = bucket_relators(p);
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return leaf(assign);
    for (int v = 0; v < g.order(); ++v) {
      assign[depth] = v;
      bool ok = true;
      for (const FreeWord* r : buckets[depth + 1])
        if (eval_prefix(*r, assign, g) != g.identity()) {
          ok = false;
          break;
        }
      if (ok && self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

long long count_homs(const Presentation& p, const FiniteGroup& g) {
  long long count = 0;
  search_homs(p, g, [&](const std::vector<int>&) {
    ++count;
    return false;
  });
  return count;
}

bool exists_surjection(const Presentation& p, const FiniteGroup& g) {
  bool found = false;
  search_homs(p, g, [&](const std::vector<int>& assign) {
    if (generates_all(assign, g)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& panel) {
  Fingerprint fp;
  fp.counts.reserve(panel.size());
  for (const FiniteGroup& g : panel) fp.counts.emplace_back(g.label(), count_homs(p, g));
  return fp;
}

bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b) {
  auto key = [](const Fingerprint& f) {
    auto v = f.counts;
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(a) == key(b);
}

namespace {

struct PanelItem {
  char kind;
  int n;
};

PanelItem parse_item(const std::string& item) {
  if (item.size() < 2 || (item[0] != 'Z' && item[0] != 'D' && item[0] != 'S'))
    throw std::invalid_argument("bad panel item '" + item + "'");
  for (size_t i = 1; i < item.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(item[i])))
      throw std::invalid_argument("bad panel item '" + item + "'");
  long n = std::stol(item.substr(1));
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("bad panel item '" + item + "'");
  return {item[0], static_cast<int>(n)};
}

long long item_order(PanelItem it) {
  if (it.kind == 'Z') return it.n;
  if (it.kind == 'D') return 2LL * it.n;
  long long o = 1;
  for (int i = 2; i <= it.n; ++i) o *= i;
  return o;
}

FiniteGroup build_item(PanelItem it) {
  if (item_order(it) > kMaxPanelOrder)
    throw std::invalid_argument("panel group order must be at most 5000");
  switch (it.kind) {
    case 'Z':
      return FiniteGroup::cyclic(it.n);
    case 'D':
      return FiniteGroup::dihedral(it.n);
    default:
      return FiniteGroup::symmetric(it.n);
  }
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<FiniteGroup> parse_panel(std::string_view spec) {
  std::vector<FiniteGroup> panel;
  std::string s(spec);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = trim(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
    pos = (comma == std::string::npos) ? s.size() + 1 : comma + 1;
    if (item.empty()) {
      if (spec.empty() && panel.empty()) break;  // empty spec: empty panel
      throw std::invalid_argument("empty panel item");
    }
    size_t dash = item.find('-');
    if (dash == std::string::npos) {
      panel.push_back(build_item(parse_item(item)));
    } else {
      PanelItem lo = parse_item(item.substr(0, dash));
      std::string hi_str = item.substr(dash + 1);
      if (!hi_str.empty() && std::isdigit(static_cast<unsigned char>(hi_str[0])))
        hi_str = std::string(1, lo.kind) + hi_str;
      PanelItem hi = parse_item(hi_str);
      if (hi.kind != lo.kind)
        throw std::invalid_argument("panel range endpoints must use the same family");
      if (hi.n < lo.n) throw std::invalid_argument("panel range must be ascending");
      for (int n = lo.n; n <= hi.n; ++n) panel.push_back(build_item({lo.kind, n}));
    }
  }
  return panel;
}

const char* const kDefaultPanelSpec = "Z2-Z6,S3,S4,D3-D8";

std::vector<FiniteGroup> default_panel() { return parse_panel(kDefaultPanelSpec); }

}  // namespace braidsurf
