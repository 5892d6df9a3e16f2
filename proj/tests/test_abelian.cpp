#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crit/abelian.hpp"

using namespace crit;

TEST_CASE("from_factors canonicalizes to a divisibility chain") {
  AbelianGroup g = AbelianGroup::from_factors({Int(4), Int(6)});
  REQUIRE(g.invariant_factors().size() == 2);
  CHECK(g.invariant_factors()[0] == 2);
  CHECK(g.invariant_factors()[1] == 12);
  CHECK(g.order() == 24);

  AbelianGroup h = AbelianGroup::from_factors({Int(1), Int(1), Int(5)});
  CHECK(h == cyclic(Int(5)));

  CHECK(AbelianGroup::from_factors({Int(1)}).trivial());
  CHECK(AbelianGroup().order() == 1);
}

TEST_CASE("direct sum, isomorphism, chinese remainder") {
  AbelianGroup a = direct_sum(cyclic(Int(3)), cyclic(Int(4)));
  CHECK(is_isomorphic(a, cyclic(Int(12))));
  AbelianGroup b = direct_sum(cyclic(Int(2)), cyclic(Int(2)));
  CHECK(!is_isomorphic(b, cyclic(Int(4))));
  CHECK(is_isomorphic(cyclic_power(Int(2), 3),
                      direct_sum(b, cyclic(Int(2)))));
}

TEST_CASE("elementary divisors") {
  AbelianGroup g = AbelianGroup::from_factors({Int(2), Int(12)});
  std::vector<Int> ed = g.elementary_divisors();
  // multiset {2, 4, 3}
  std::sort(ed.begin(), ed.end());
  REQUIRE(ed.size() == 3);
  CHECK(ed[0] == 2);
  CHECK(ed[1] == 3);
  CHECK(ed[2] == 4);
}

TEST_CASE("sylow and prime-to parts") {
  AbelianGroup g = AbelianGroup::from_factors({Int(4), Int(6), Int(5)});
  CHECK(is_isomorphic(p_sylow(g, Int(2)), direct_sum(cyclic(Int(2)), cyclic(Int(4)))));
  CHECK(is_isomorphic(p_sylow(g, Int(3)), cyclic(Int(3))));
  CHECK(is_isomorphic(p_sylow(g, Int(7)), AbelianGroup()));
  CHECK(is_isomorphic(prime_to_part(g, Int(6)), cyclic(Int(5))));
  CHECK(is_isomorphic(prime_to_part(g, Int(30)), AbelianGroup()));
}

TEST_CASE("m-equivalence") {
  // same order at every prime, isomorphic away from 2
  AbelianGroup a = direct_sum(cyclic(Int(8)), cyclic(Int(3)));
  AbelianGroup b = direct_sum(cyclic_power(Int(2), 3), cyclic(Int(3)));
  CHECK(m_equivalent(a, b, Int(2)));
  CHECK(m_equivalent(a, b, Int(4)));
  CHECK(!is_isomorphic(a, b));
  CHECK(!m_equivalent(a, b, Int(3)));  // 2-parts not isomorphic, 2 not dividing 3
  AbelianGroup c = direct_sum(cyclic(Int(8)), cyclic(Int(9)));
  CHECK(!m_equivalent(a, c, Int(2)));  // |.|_3 differs
}

TEST_CASE("subtract_summand solves and rejects") {
  AbelianGroup total = AbelianGroup::from_factors({Int(2), Int(4), Int(3)});
  AbelianGroup part = cyclic(Int(6));
  AbelianGroup rest = subtract_summand(total, part);
  CHECK(is_isomorphic(direct_sum(rest, part), total));
  CHECK(is_isomorphic(rest, cyclic(Int(4))));
  CHECK_THROWS_AS(subtract_summand(total, cyclic(Int(5))), std::domain_error);
  CHECK_THROWS_AS(subtract_summand(cyclic(Int(4)), cyclic_power(Int(2), 2)),
                  std::domain_error);
}

TEST_CASE("factorize and primality") {
  auto f = factorize(Int(2 * 2 * 3 * 25 * 49));
  CHECK(f[Int(2)] == 2);
  CHECK(f[Int(3)] == 1);
  CHECK(f[Int(5)] == 2);
  CHECK(f[Int(7)] == 2);
  CHECK(factorize(Int(1)).empty());
  // semiprime beyond small trial division range
  Int p("1000003"), q("1000033");
  auto g = factorize(p * q);
  REQUIRE(g.size() == 2);
  CHECK(g[p] == 1);
  CHECK(g[q] == 1);
  CHECK(is_prime(p));
  CHECK(!is_prime(p * q));
  CHECK(!is_prime(Int(1)));
  CHECK(is_prime(Int(2)));
}

TEST_CASE("group_from_snf drops units") {
  AbelianGroup g = group_from_snf({Int(1), Int(1), Int(4), Int(12)});
  REQUIRE(g.invariant_factors().size() == 2);
  CHECK(g.invariant_factors()[0] == 4);
  CHECK(g.invariant_factors()[1] == 12);
  CHECK(g.str() == "Z/4 x Z/12");
}
