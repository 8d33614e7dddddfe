#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidsurf/presentation.hpp"

namespace braidsurf {

// Finite group given by its multiplication table. Elements are 0..order-1.
class FiniteGroup {
 public:
  FiniteGroup(std::string label, int order, std::vector<int> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);   // order 2n, n >= 2
  static FiniteGroup symmetric(int n);  // order n!, n <= 8

  const std::string& label() const { return label_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverses_[a]; }

  bool is_abelian() const;
  // Full associativity/identity/inverse check by enumeration; meant for
  // small orders.
  bool verify_axioms() const;

 private:
  std::string label_;
  int order_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverses_;
};

// Image of a word under the assignment generator i -> assignment[i-1].
int evaluate_word(const FreeWord& w, const std::vector<int>& assignment, const FiniteGroup& g);

// Number of homomorphisms from the presented group to g, by deterministic
// backtracking over generator images in lexicographic order.
long long count_homs(const Presentation& p, const FiniteGroup& g);

// True when some homomorphism to g is surjective.
bool exists_surjection(const Presentation& p, const FiniteGroup& g);

struct Fingerprint {
  std::vector<std::pair<std::string, long long>> counts;  // (label, hom count) in panel order

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& panel);

// Label-wise comparison, independent of panel order; false when the label
// sets differ.
bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b);

// Panel mini-language: comma-separated items Z<n>, D<n>, S<n> or ranges
// like D3-D8. Group orders above 5000 are rejected.
std::vector<FiniteGroup> parse_panel(std::string_view spec);

extern const char* const kDefaultPanelSpec;  // "Z2-Z6,S3,S4,D3-D8"
std::vector<FiniteGroup> default_panel();

}  // namespace braidsurf
