#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "classeq/arith.hpp"
#include "classeq/detail/combinations.hpp"
#include "classeq/element_set.hpp"
#include "classeq/error.hpp"
#include "classeq/rational.hpp"

using namespace classeq;

TEST_CASE("rational reduction and representation") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).numerator() == 2);
  CHECK(Rational(9, 2).str() == "9/2");
  CHECK(Rational(4).str() == "4");
}

TEST_CASE("rational arithmetic is exact") {
  // the class equation of the order-6 nonabelian group
  CHECK(Rational(1, 2) + Rational(1, 3) + Rational(1, 6) == Rational(1));
  CHECK(Rational(1, 3) + Rational(1, 3) + Rational(1, 3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 6) == Rational(3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
}

TEST_CASE("rational overflow is an explicit failure") {
  const Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big * big, OverflowError);
  CHECK_THROWS_AS(big + Rational(1), OverflowError);
  // near-limit values that reduce back into range are fine
  CHECK(Rational(INT64_MAX, INT64_MAX) == Rational(1));
}

TEST_CASE("arith helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(p_part(24, 2) == 8);
  CHECK(p_part(24, 3) == 3);
  CHECK(p_part(7, 2) == 1);
  CHECK(is_power_of(1, 3));
  CHECK(is_power_of(27, 3));
  CHECK_FALSE(is_power_of(12, 2));
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
}

TEST_CASE("element set basics") {
  ElementSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.to_vector() == std::vector<Element>{0, 64, 129});
  s.erase(64);
  CHECK_FALSE(s.contains(64));

  ElementSet t(130);
  t.insert(0);
  t.insert(5);
  const ElementSet u = s | t;
  CHECK(u.size() == 3);
  CHECK((s & t).to_vector() == std::vector<Element>{0});
  CHECK(t.is_subset_of(u));
  CHECK_FALSE(u.is_subset_of(t));
  CHECK(ElementSet::from(130, {5, 0}) == t);
}

TEST_CASE("combination visitor is lexicographic and stoppable") {
  std::vector<std::vector<int>> seen;
  detail::for_each_combination(4, 2, [&](const std::vector<int>& idx) {
    seen.push_back(idx);
    return true;
  });
  const std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {1, 3}, {2, 3}};
  CHECK(seen == want);

  int visits = 0;
  const bool completed = detail::for_each_combination(4, 2, [&](const std::vector<int>&) {
    return ++visits < 2;
  });
  CHECK_FALSE(completed);
  CHECK(visits == 2);

  visits = 0;
  detail::for_each_combination(3, 0, [&](const std::vector<int>& idx) {
    CHECK(idx.empty());
    ++visits;
    return true;
  });
  CHECK(visits == 1);
}
