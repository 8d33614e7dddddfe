#include <string>
#include <vector>

#include "braidsurf/factorization.hpp"
#include "braidsurf/finite_group.hpp"
#include "braidsurf/presentation.hpp"
#include "doctest.h"

using namespace braidsurf;

namespace {

Factorization fixture(const std::string& name) {
  return read_factorization_file(std::string(FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("Presentation validates") {
  CHECK_NOTHROW(Presentation(2, {FreeWord(2, {1, 2})}));
  CHECK_NOTHROW(Presentation(0, {}));
  CHECK_THROWS_AS(Presentation(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Presentation(2, {FreeWord(3, {1})}), std::invalid_argument);
}

TEST_CASE("band_relator examples") {
  CHECK(band_relator(Band{BraidWord(4, {}), 2}).letters() == std::vector<int>{2, -3});
  CHECK(band_relator(Band{BraidWord(4, {1, 3}), 2}).letters() ==
        std::vector<int>{1, -3, -4, 3});
  CHECK(band_relator(Band{BraidWord(4, {-3, -3, 2}), 1}).letters() ==
        std::vector<int>{1, -2, 4, -3, -4, 2});
  CHECK(band_relator(Band{BraidWord(4, {1, 1, 1}), 2}).letters() ==
        std::vector<int>{-1, -2, 1, 2, 1, -3});
}

TEST_CASE("band relators are nonempty with exponent sum zero") {
  for (const char* name : {"auroux1.fac", "auroux2.fac"}) {
    Factorization f = fixture(name);
    for (const Band& b : f.bands()) {
      FreeWord r = band_relator(b);
      CHECK(r.length() > 0);
      CHECK(r.exponent_sum() == 0);
    }
  }
}

TEST_CASE("complement_presentation of the fixtures") {
  Presentation p1 = complement_presentation(fixture("auroux1.fac"));
  CHECK(p1.generators() == 4);
  CHECK(p1.relator_count() == 7);
  CHECK(p1.relators()[0].letters() == std::vector<int>{1, -2, 4, -3, -4, 2});
  CHECK(p1.relators()[1].letters() == std::vector<int>{2, -3});

  Presentation p2 = complement_presentation(fixture("auroux2.fac"));
  CHECK(p2.generators() == 4);
  CHECK(p2.relator_count() == 7);
  CHECK(p2.relators()[0].letters() == std::vector<int>{2, -3});
  CHECK(p2.relators()[1].letters() == std::vector<int>{1, -3, -4, 3});
}

TEST_CASE("relator_strings") {
  Presentation p(3, {FreeWord(3, {1, -3}), FreeWord(3, {})});
  CHECK(relator_strings(p) == std::vector<std::string>{"x1 x3^-1", "1"});
}

TEST_CASE("tietze on a one-relation identification") {
  Presentation p(2, {FreeWord(2, {1, -2})});
  Presentation q = tietze_simplify(p);
  CHECK(q.generators() == 1);
  CHECK(q.relator_count() == 0);
}

TEST_CASE("tietze drops empty and duplicate relators") {
  // x^2 y^2 up to rotation, inversion and conjugation, plus an empty word;
  // no generator occurs exactly once, so only normalization applies.
  Presentation p(2, {FreeWord(2, {}), FreeWord(2, {1, 1, 2, 2}),
                     FreeWord(2, {-2, -2, -1, -1}), FreeWord(2, {2, 2, 1, 1}),
                     FreeWord(2, {-2, 1, 1, 2, 2, 2})});
  Presentation q = tietze_simplify(p);
  CHECK(q.generators() == 2);
  REQUIRE(q.relator_count() == 1);
  CHECK(q.relators()[0].letters() == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("tietze simplifies the first fixture complement to Z") {
  Presentation q = tietze_simplify(complement_presentation(fixture("auroux1.fac")));
  CHECK(q.generators() == 1);
  CHECK(q.relator_count() == 0);
}

TEST_CASE("tietze simplifies the second fixture complement to two generators") {
  Presentation q = tietze_simplify(complement_presentation(fixture("auroux2.fac")));
  CHECK(q.generators() == 2);
  REQUIRE(q.relator_count() == 1);
  CHECK(conjugate_in_free(q.relators()[0], FreeWord(2, {1, 2, 1, -2, -1, -2}), true));
}

TEST_CASE("tietze respects the size budget") {
  // y occurs once in the first relator; eliminating it would rewrite y^5
  // to length 20, above a budget of 10.
  Presentation p(2, {FreeWord(2, {2, 1, 1, 1, 1}), FreeWord(2, {2, 2, 2, 2, 2})});
  Presentation blocked = tietze_simplify(p, 10);
  CHECK(blocked.generators() == 2);
  CHECK(blocked.relator_count() == 2);

  Presentation full = tietze_simplify(p);
  CHECK(full.generators() == 1);
  REQUIRE(full.relator_count() == 1);
  CHECK(full.relators()[0].length() == 20);

  FiniteGroup z4 = FiniteGroup::cyclic(4);
  long long reference = count_homs(p, z4);
  CHECK(reference == 4);
  CHECK(count_homs(blocked, z4) == reference);
  CHECK(count_homs(full, z4) == reference);
}

TEST_CASE("tietze keeps hom counts over the default panel on the fixtures") {
  Presentation p = complement_presentation(fixture("auroux2.fac"));
  Presentation q = tietze_simplify(p);
  for (const FiniteGroup& g : default_panel())
    CHECK(count_homs(p, g) == count_homs(q, g));
}
