#include "doctest.h"

#include "seifnet/tangle.hpp"

#include <map>

using namespace seifnet;

TEST_CASE("meridian lift") {
  CHECK(meridian_lift(ExtFrac::infinity()) == HomologyClass{-1, 0});
  CHECK(meridian_lift(ExtFrac(0)) == HomologyClass{0, 1});
  CHECK(meridian_lift(ExtFrac(1)) == HomologyClass{-1, 1});
}

TEST_CASE("meridian lift coefficients are coprime and determine r up to sign") {
  std::map<std::pair<Int, Int>, ExtFrac> seen;
  for (long long p = -20; p <= 20; ++p)
    for (long long q = -20; q <= 20; ++q) {
      if (p == 0 && q == 0) continue;
      ExtFrac r(p, q);
      HomologyClass h = meridian_lift(r);
      using boost::multiprecision::abs;
      CHECK(boost::multiprecision::gcd(abs(h.mu_coeff), abs(h.lambda_coeff)) == 1);
      // canonicalize the +- ambiguity and check injectivity
      auto key = std::make_pair(h.mu_coeff, h.lambda_coeff);
      if (h.lambda_coeff < 0 || (h.lambda_coeff == 0 && h.mu_coeff < 0))
        key = std::make_pair(-h.mu_coeff, -h.lambda_coeff);
      auto [it, inserted] = seen.emplace(key, r);
      if (!inserted) CHECK(it->second == r);
    }
}

TEST_CASE("covering slope") {
  for (long long l = -20; l <= 20; ++l)
    CHECK(covering_slope(l + 6, ExtFrac(1)) == ExtFrac(l + 5));
  CHECK(covering_slope(7, ExtFrac(0)) == ExtFrac(7));
  CHECK(covering_slope(0, ExtFrac(1, 2)) == ExtFrac(-1, 2));
  CHECK_THROWS_AS(covering_slope(3, ExtFrac::infinity()), domain_error);
}

TEST_CASE("slope differences are framing independent") {
  for (long long n : {-3LL, 0LL, 11LL})
    for (long long a = -6; a <= 6; ++a)
      for (long long b = 1; b <= 5; ++b) {
        ExtFrac s1(a, b), s2(b, 3);
        CHECK(covering_slope(n, s1) - covering_slope(n, s2) == s2 - s1);
      }
}

TEST_CASE("rational tangles compare by fraction") {
  RationalTangle t1({1, 1});
  RationalTangle t2({2});
  CHECK(t1.fraction() == ExtFrac(2));
  CHECK(t1 == t2);
  CHECK(t1.seq() != t2.seq());
  CHECK(RationalTangle({2, 0}).fraction() == ExtFrac(1, 2));
}
