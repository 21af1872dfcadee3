#include "doctest.h"

#include "seifnet/family.hpp"

using namespace seifnet;

TEST_CASE("params require m or p zero") {
  CHECK_NOTHROW(FamilyParams(2, 3, 1, 0));
  CHECK_NOTHROW(FamilyParams(2, 0, 1, 3));
  CHECK_NOTHROW(FamilyParams(2, 0, 1, 0));
  CHECK_THROWS_AS(FamilyParams(1, 1, 1, 1), constraint_error);
}

TEST_CASE("montesinos fractions") {
  auto f = montesinos_fractions(FamilyParams(2, 0, 1, 0));
  CHECK(f[0] == ExtFrac(4, 5));
  CHECK(f[1] == ExtFrac(-2, 7));
  CHECK(f[2] == ExtFrac(1, 2));

  f = montesinos_fractions(FamilyParams(2, 0, 1, 1));
  CHECK(f[0] == ExtFrac(4, 5));
  CHECK(f[1] == ExtFrac(-1, 3));
  CHECK(f[2] == ExtFrac(1, 2));

  f = montesinos_fractions(FamilyParams(2, 0, 0, 0));
  CHECK(f[0] == ExtFrac(1));
  CHECK(f[1] == ExtFrac(-1, 3));
  CHECK(f[2] == ExtFrac(1, 2));

  // l^2 n + l - 1 = 0 at (1, 0): the recorded degenerate point
  CHECK_THROWS_AS(montesinos_fractions(FamilyParams(1, 0, 0, 2)),
                  vanishing_denominator);
}

TEST_CASE("tangle sequences and their fractions") {
  auto s = tangle_sequences(FamilyParams(2, 0, 1, 0));
  CHECK(s[0] == std::vector<Int>{0, -2, -1, -2, -1, 2, 0});
  CHECK(s[1] == std::vector<Int>{-1, -1, -3, 0});
  CHECK(s[2] == std::vector<Int>{2, 0});

  s = tangle_sequences(FamilyParams(2, 0, 1, 1));
  CHECK(s[1] == std::vector<Int>{-1, 2, -1, -1, -3, 0});
  CHECK(cf_eval(s[1]) == ExtFrac(-1, 3));

  for (long long l : {-4LL, 2LL, 7LL}) {
    CHECK(tangle_sequences(FamilyParams(l, 3, 2, 0))[2] == std::vector<Int>{2, 0});
    CHECK(cf_eval(tangle_sequences(FamilyParams(l, 3, 2, 0))[2]) == ExtFrac(1, 2));
  }
}

TEST_CASE("surgery slope") {
  for (long long l = -10; l <= 10; ++l)
    CHECK(surgery_slope(FamilyParams(l, 0, 0, 0)) == l + 5);
  CHECK(surgery_slope(FamilyParams(2, 0, 1, 0)) == 71);
  CHECK(surgery_slope(FamilyParams(2, 1, 1, 0)) == -125);
  CHECK(surgery_slope(FamilyParams(2, 0, 1, 1)) == 71 - 100);
}

TEST_CASE("decomposition pieces") {
  auto [m1, m2] = decomposition_pieces(FamilyParams(2, 0, 1, 0));
  CHECK(m1.slots() == std::vector<ExtFrac>{ExtFrac(-4, 3), ExtFrac(-2, 3)});
  CHECK(m2.slots() == std::vector<ExtFrac>{ExtFrac(1, 2), ExtFrac(-1, 2)});
  CHECK(m1.base() == BaseSurface::Disk);
  CHECK(boundary_irreducible(m1));
  CHECK(boundary_irreducible(m2));

  for (long long l : {-3LL, 2LL, 5LL})
    for (long long p : {-2LL, 0LL, 3LL}) {
      auto second = decomposition_pieces(FamilyParams(l, 0, 4, p)).second;
      CHECK(second.slots() == std::vector<ExtFrac>{ExtFrac(1, l), ExtFrac(-1, 2)});
    }

  auto pieces = decomposition_pieces(FamilyParams(2, 0, 1, 1));
  CHECK(pieces.first.slots() == std::vector<ExtFrac>{ExtFrac(-4, 3), ExtFrac(-1)});
  CHECK_FALSE(boundary_irreducible(pieces.first));

  CHECK_THROWS_AS(decomposition_pieces(FamilyParams(0, 1, 1, 0)),
                  vanishing_denominator);
}

TEST_CASE("toroidal hypotheses") {
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(2, 1, -2, 0)));
  CHECK(toroidal_hypotheses(FamilyParams(3, 0, 1, 0)));
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(2, 0, -1, 0)));
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(-2, 0, 1, 0)));
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(1, 5, 3, 0)));
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(2, 0, -1, 3)));
  CHECK_FALSE(toroidal_hypotheses(FamilyParams(2, 0, 1, 1)));
  CHECK(toroidal_hypotheses(FamilyParams(2, 0, 1, 2)));
}

TEST_CASE("non primitive/Seifert hypotheses") {
  CHECK_FALSE(nonps_hypotheses(FamilyParams(-2, 0, 3, 0)));
  CHECK(nonps_hypotheses(FamilyParams(3, 2, 1, 0)));
  CHECK_FALSE(nonps_hypotheses(FamilyParams(-2, 0, 1, 2)));
  CHECK_FALSE(nonps_hypotheses(FamilyParams(-2, 2, 3, 0)));
  CHECK(nonps_hypotheses(FamilyParams(-2, 1, 3, 0)));
}

TEST_CASE("claim: Seifert invariant bounds") {
  CHECK(claim_seifert_invariant1(2, 0, 1));
  CHECK_FALSE(claim_seifert_invariant1(1, 0, 1));
  CHECK_FALSE(claim_seifert_invariant1(2, 1, -2));
}

TEST_CASE("case-4 homology orders") {
  CHECK(case4_h1_orders(FamilyParams(2, 1, 1, 0)) == 31);
  CHECK(case4_h1_orders(FamilyParams(-2, 3, 2, 0)) == 2);
  CHECK(case4_h1_orders(FamilyParams(-2, 0, 5, 1)) == 0);
  CHECK_THROWS_AS(case4_h1_orders(FamilyParams(3, 1, 1, 0)), domain_error);
}
