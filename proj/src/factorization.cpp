#include "braidsurf/factorization.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace braidsurf {

namespace {

constexpr int kMaxStrands = 25;

void check_band(int strands, const Band& b) {
  if (b.conjugator.strands() != strands)
    throw std::invalid_argument("band conjugator strand count mismatch");
  if (b.core < 1 || b.core > strands - 1)
    throw std::invalid_argument("band core index out of range");
}

// Union-find over strand indices.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Factorization::Factorization(int strands, std::vector<Band> bands)
    : strands_(strands), bands_(std::move(bands)) {
  if (strands < 2 || strands > kMaxStrands)
    throw std::invalid_argument("strand count must be between 2 and 25");
  if (bands_.empty()) throw std::invalid_argument("factorization needs at least one band");
  for (const Band& b : bands_) check_band(strands, b);
}

BraidWord band_word(const Band& b) {
  check_band(b.conjugator.strands(), b);
  BraidWord core(b.conjugator.strands(), {b.core});
  return braid_concat(braid_concat(b.conjugator, core), braid_inverse(b.conjugator));
}

Permutation band_transposition(const Band& b) {
  check_band(b.conjugator.strands(), b);
  Permutation qinv = perm_image(b.conjugator).inverse();
  return Permutation::transposition(b.conjugator.strands(), qinv.apply(b.core - 1),
                                    qinv.apply(b.core));
}

BraidWord product_word(const Factorization& f) {
  BraidWord out(f.strands());
  for (const Band& b : f.bands()) out = braid_concat(out, band_word(b));
  return out;
}

SurfaceInvariants invariants(const Factorization& f) {
  SurfaceInvariants inv;
  inv.strands = f.strands();
  inv.band_count = f.band_count();
  inv.euler_characteristic = f.strands() - f.band_count();

  DisjointSets ds(f.strands());
  for (const Band& b : f.bands()) {
    Permutation t = band_transposition(b);
    for (int i = 0; i < f.strands(); ++i)
      if (t.apply(i) != i) {
        ds.unite(i, t.apply(i));
        break;
      }
  }
  int components = 0;
  for (int i = 0; i < f.strands(); ++i)
    if (ds.find(i) == i) ++components;
  inv.connected = (components == 1);

  inv.boundary_components = cycle_count(perm_image(product_word(f)));

  if (inv.connected) {
    const int twice_genus = 2 - inv.euler_characteristic - inv.boundary_components;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw std::domain_error("surface data does not give a nonnegative integral genus");
    inv.genus = twice_genus / 2;
  }
  return inv;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

namespace {

// Splits a line into whitespace-separated tokens, with '(' and ')' always
// standing alone.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    } else if (c == '(' || c == ')') {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
      tokens.push_back(std::string(1, c));
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

// Generator token -> signed index: a..y / A..Y or s<j> / S<j>.
int parse_gen_token(const std::string& tok, int line) {
  if (tok.size() == 1) {
    char c = tok[0];
    if (c >= 'a' && c <= 'y') return c - 'a' + 1;
    if (c >= 'A' && c <= 'Y') return -(c - 'A' + 1);
  } else if (tok.size() >= 2 && (tok[0] == 's' || tok[0] == 'S')) {
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw ParseError(line, "bad generator token '" + tok + "'");
    long v = std::stol(tok.substr(1));
    if (v < 1 || v > kMaxStrands - 1)
      throw ParseError(line, "generator index out of range in '" + tok + "'");
    return tok[0] == 's' ? static_cast<int>(v) : -static_cast<int>(v);
  }
  throw ParseError(line, "bad generator token '" + tok + "'");
}

}  // namespace

Factorization parse_factorization(std::string_view text) {
  int strands = 0;
  std::vector<Band> bands;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (tokens[0] == "strands") {
      if (strands != 0) throw ParseError(lineno, "duplicate strands header");
      if (!bands.empty()) throw ParseError(lineno, "strands header must come before bands");
      if (tokens.size() != 2) throw ParseError(lineno, "expected: strands <m>");
      int m = 0;
      try {
        size_t used = 0;
        m = std::stoi(tokens[1], &used);
        if (used != tokens[1].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad strand count '" + tokens[1] + "'");
      }
      if (m < 2 || m > kMaxStrands)
        throw ParseError(lineno, "strand count must be between 2 and 25");
      strands = m;
      continue;
    }

    if (tokens[0] == "band") {
      if (strands == 0) throw ParseError(lineno, "strands header must come first");
      if (tokens.size() < 4 || tokens[1] != "(")
        throw ParseError(lineno, "expected: band (<word>) <core>");
      size_t i = 2;
      std::vector<int> conj;
      while (i < tokens.size() && tokens[i] != ")") {
        int g = parse_gen_token(tokens[i], lineno);
        if (std::abs(g) > strands - 1)
          throw ParseError(lineno, "generator index must be below strand count");
        conj.push_back(g);
        ++i;
      }
      if (i >= tokens.size()) throw ParseError(lineno, "missing ')' in band line");
      ++i;
      if (i >= tokens.size()) throw ParseError(lineno, "missing core generator");
      int core = parse_gen_token(tokens[i], lineno);
      if (core < 0) throw ParseError(lineno, "core must be a positive generator");
      if (core > strands - 1)
        throw ParseError(lineno, "core index must be below strand count");
      if (i + 1 != tokens.size()) throw ParseError(lineno, "trailing tokens after core");
      bands.push_back(Band{BraidWord(strands, std::move(conj)), core});
      continue;
    }

    throw ParseError(lineno, "unrecognized line '" + tokens[0] + "'");
  }

  if (strands == 0) throw ParseError(0, "missing strands header");
  if (bands.empty()) throw ParseError(0, "factorization needs at least one band");
  return Factorization(strands, std::move(bands));
}

namespace {

char gen_char(int g) {
  return g > 0 ? static_cast<char>('a' + g - 1) : static_cast<char>('A' - g - 1);
}

}  // namespace

std::string serialize_factorization(const Factorization& f) {
  std::string out = "strands " + std::to_string(f.strands()) + "\n";
  for (const Band& b : f.bands()) {
    out += "band (";
    bool first = true;
    for (int l : b.conjugator.letters()) {
      if (!first) out += ' ';
      out += gen_char(l);
      first = false;
    }
    out += ") ";
    out += gen_char(b.core);
    out += '\n';
  }
  return out;
}

Factorization variant_factorization(const Factorization& f, int s) {
  if (s < 1 || s % 2 == 0) throw std::invalid_argument("variant exponent must be odd and positive");
  std::vector<Band> bands = f.bands();
  bands.back().conjugator = BraidWord(f.strands(), std::vector<int>(s, 1));
  return Factorization(f.strands(), std::move(bands));
}

Factorization read_factorization_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_factorization(buf.str());
}

}  // namespace braidsurf
