#include "h2sl2/rational.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace h2sl2;

TEST_CASE("rational string round-trip") {
  CHECK(rat_to_string(rat(3, 2)) == "3/2");
  CHECK(rat_to_string(rat(-4, 2)) == "-2");
  CHECK(rat_from_string("3/2") == rat(3, 2));
  CHECK(rat_from_string("-7") == rat(-7));
  CHECK(rat_from_string("6/4") == rat(3, 2));
}

TEST_CASE("valuation examples") {
  CHECK(valuation(rat(8), 2) == 3);
  CHECK(valuation(rat(2, 3), 3) == -1);
  CHECK(valuation(rat(7, 5), 2) == 0);
  CHECK_THROWS(valuation(rat(0), 2));
  CHECK_THROWS(valuation(rat(3), 4));
}

TEST_CASE("valuation is additive") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    Rat r = testutil::random_nonzero_rat(rng);
    Rat s = testutil::random_nonzero_rat(rng);
    for (long p : {2L, 3L, 5L}) {
      CHECK(valuation(r * s, p) == valuation(r, p) + valuation(s, p));
    }
  }
}

TEST_CASE("residue units") {
  CHECK(residue_unit(rat(1, 2), 3).value == 2);
  CHECK(residue_unit(rat(1), 7).value == 1);
  CHECK(residue_unit(rat(-1), 5).value == 4);
  CHECK_THROWS(residue_unit(rat(3), 3));

  std::mt19937 rng(777);
  for (int i = 0; i < 500; ++i) {
    Rat r = testutil::random_nonzero_rat(rng);
    Rat s = testutil::random_nonzero_rat(rng);
    Int p = 7;
    if (valuation(r, p) != 0 || valuation(s, p) != 0) continue;
    CHECK(residue_unit(r * s, p) == residue_unit(r, p) * residue_unit(s, p));
  }
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(ResidueUnit(3, 2)) == 2);
  CHECK(multiplicative_order(ResidueUnit(5, 2)) == 4);
  CHECK(multiplicative_order(ResidueUnit(7, 2)) == 3);
  CHECK(multiplicative_order(ResidueUnit(7, 3)) == 6);
}

TEST_CASE("S-integer rings and units") {
  SIntegerRing r6(6);
  CHECK(r6.primes == std::vector<Int>{2, 3});
  CHECK(is_unit_in(rat(8), r6));
  CHECK(!is_unit_in(rat(5), r6));
  CHECK(is_unit_in(rat(-3, 2), r6));
  CHECK(!is_unit_in(rat(0), r6));

  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Rat r = testutil::random_nonzero_rat(rng);
    CHECK(is_unit_in(r, r6) == is_unit_in(1 / r, r6));
  }
}

TEST_CASE("S-unit primitive roots: reference instances") {
  CHECK(find_su_primitive_root(3, SIntegerRing(6)) == Rat(2));
  CHECK(find_su_primitive_root(3, SIntegerRing(30)) == Rat(2));
  CHECK(find_su_primitive_root(5, SIntegerRing(30)) == Rat(2));
  // 2 has order 3 mod 7; the smallest working S-unit of Z[1/42] is 3.
  CHECK(find_su_primitive_root(7, SIntegerRing(42)) == Rat(3));
}

TEST_CASE("S-unit primitive roots are certified") {
  for (long m : {6L, 30L, 42L, 66L, 210L, 2310L}) {
    SIntegerRing ring(m);
    for (const Int& q : ring.primes) {
      if (q == 2) continue;
      auto u = find_su_primitive_root(q, ring);
      REQUIRE(u.has_value());
      CHECK(is_unit_in(*u, ring));
      CHECK(multiplicative_order(residue_unit(*u, q)) == q - 1);
      for (const Int& p : ring.primes) {
        if (p == q) continue;
        CHECK(ResidueUnit(p, q % p).pow(valuation(*u, p)).is_one());
      }
    }
  }
}
