#include "h2sl2/io.hpp"
#include "h2sl2/symbols.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace h2sl2;

namespace {

std::vector<Int> small_primes = {2, 3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("invariant examples") {
  SymbolInvariant minus = invariant_of_symbol(rat(-1), rat(-1));
  CHECK(minus.sigma == 1);
  CHECK(minus.tame.empty());
  CHECK(!minus.order().has_value());

  SymbolInvariant i23 = invariant_of_symbol(rat(2), rat(3));
  CHECK(i23.sigma == 0);
  CHECK(i23.tame == std::map<Int, Int>{{3, 2}});
  CHECK(i23.order() == Int(2));

  CHECK(invariant_of_symbol(rat(5), rat(1)).is_zero());
  CHECK(SymbolInvariant{}.order() == Int(1));
  CHECK_THROWS(invariant_of_symbol(rat(0), rat(1)));
}

TEST_CASE("group law") {
  SymbolInvariant a = invariant_of_symbol(rat(2), rat(3));
  CHECK((a + (-a)).is_zero());
  CHECK((a * 2).is_zero());  // order 2
  SymbolInvariant b = invariant_of_symbol(rat(2), rat(5));
  CHECK(a + b == b + a);
}

TEST_CASE("Matsumoto relations vanish") {
  CHECK(matsumoto_residual(2, rat(2), rat(3)).is_zero());
  CHECK(matsumoto_residual(4, rat(2), rat(5)).is_zero());
  CHECK(matsumoto_residual(5, rat(2), rat(7)).is_zero());
  CHECK(matsumoto_residual(1, rat(1), rat(9)).is_zero());

  std::mt19937 rng(8);
  for (int rel = 1; rel <= 5; ++rel) {
    int done = 0;
    while (done < 200) {
      Rat u = testutil::random_nonzero_rat(rng);
      Rat v = testutil::random_nonzero_rat(rng);
      Rat w = testutil::random_nonzero_rat(rng);
      if (rel == 1) u = 1;
      if (rel == 5 && u == 1) continue;
      CHECK(matsumoto_residual(rel, u, v, w).is_zero());
      ++done;
    }
  }
}

TEST_CASE("square identities vanish") {
  for (auto& r : square_identities(rat(2), rat(3), rat(5))) CHECK(r.is_zero());
  for (auto& r : square_identities(rat(1), rat(4), rat(7))) CHECK(r.is_zero());
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    Rat u = testutil::random_nonzero_rat(rng);
    Rat v = testutil::random_nonzero_rat(rng);
    Rat w = testutil::random_nonzero_rat(rng);
    for (auto& r : square_identities(u, v, w)) CHECK(r.is_zero());
  }
}

TEST_CASE("star action on symbols") {
  std::mt19937 rng(10);
  for (int i = 0; i < 200; ++i) {
    Rat a = testutil::random_nonzero_rat(rng);
    Rat u = testutil::random_nonzero_rat(rng);
    Rat v = testutil::random_nonzero_rat(rng);
    CHECK(star_on_symbol(a * a, u, v) == invariant_of_symbol(u, v));
  }
  Rat a = rat(3), u = rat(5);
  CHECK(star_on_symbol(rat(1), u, rat(7)) == invariant_of_symbol(u, rat(7)));
  CHECK(star_on_symbol(a, u, rat(1)).is_zero());
}

TEST_CASE("antisymmetry consequence c(u,-u) = 0") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat u = testutil::random_nonzero_rat(rng);
    CHECK(invariant_of_symbol(u, -u).is_zero());
  }
}

TEST_CASE("decompose: fixed instances") {
  auto single = decompose(rat(3), rat(5), 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].x == rat(3));
  CHECK(single[0].u == rat(5));
  CHECK(single[0].exponent == 1);

  auto l = decompose(rat(4), rat(3), 3);
  SymbolInvariant sum;
  for (const auto& f : l) {
    CHECK(valuation(f.x, 3) == 1);
    CHECK(valuation(f.u, 3) == 0);
    sum += invariant_of_symbol(f.x, f.u) * f.exponent;
  }
  CHECK(sum == invariant_of_symbol(rat(4), rat(3)));
}

TEST_CASE("decompose: invariant-equality oracle") {
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    Rat a = testutil::random_nonzero_rat(rng);
    Rat b = testutil::random_nonzero_rat(rng);
    Int p = small_primes[i % small_primes.size()];
    SymbolInvariant sum;
    for (const auto& f : decompose(a, b, p)) {
      CHECK(valuation(f.x, p) == 1);
      CHECK(valuation(f.u, p) == 0);
      sum += invariant_of_symbol(f.x, f.u) * f.exponent;
    }
    CHECK(sum == invariant_of_symbol(a, b));
  }
}

TEST_CASE("Ktilde membership") {
  SIntegerRing r6(6);
  CHECK(is_in_Ktilde(invariant_of_symbol(rat(-1), rat(-1)), r6));
  CHECK(!is_in_Ktilde(invariant_of_symbol(rat(2), rat(5)), r6));
  CHECK(is_in_Ktilde(invariant_of_symbol(rat(2), rat(3)), r6));
}

TEST_CASE("invariant JSON shape") {
  json j = to_json(invariant_of_symbol(rat(2), rat(3)));
  CHECK(j["sigma"] == 0);
  CHECK(j["tame"]["3"] == "2");
}
