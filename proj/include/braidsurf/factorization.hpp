#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidsurf/braid.hpp"

namespace braidsurf {

// A band generator Q sigma_core Q^-1 of B_strands, given by its conjugator
// word Q and the index of the positive standard generator at its core.
struct Band {
  BraidWord conjugator;
  int core;
};

// Ordered factorization of a braid into band generators.
class Factorization {
 public:
  Factorization(int strands, std::vector<Band> bands);

  int strands() const { return strands_; }
  const std::vector<Band>& bands() const { return bands_; }
  int band_count() const { return static_cast<int>(bands_.size()); }

 private:
  int strands_;
  std::vector<Band> bands_;
};

BraidWord band_word(const Band& b);
Permutation band_transposition(const Band& b);
BraidWord product_word(const Factorization& f);

struct SurfaceInvariants {
  int strands = 0;
  int band_count = 0;
  int euler_characteristic = 0;
  bool connected = false;
  int boundary_components = 0;
  std::optional<int> genus;  // present iff connected
};

SurfaceInvariants invariants(const Factorization& f);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: a "strands <m>" header, then one "band (<word>) <core>" line
// per band. Letters a..y stand for sigma_1..sigma_25, uppercase for their
// inverses; s<j> and S<j> are numeric synonyms. '#' starts a comment line.
Factorization parse_factorization(std::string_view text);
std::string serialize_factorization(const Factorization& f);

Factorization read_factorization_file(const std::string& path);

// Same factorization with the final band's conjugator replaced by
// sigma_1^s; s must be odd so the band's transposition is unchanged.
Factorization variant_factorization(const Factorization& f, int s);

}  // namespace braidsurf
