#pragma once

#include "seifnet/extfrac.hpp"

#include <vector>

namespace seifnet {

/// Rational tangle R(a_1, ..., a_n): the integer twist boxes (a_1 innermost)
/// together with the evaluated tangle fraction. By Conway's theorem two
/// rational tangles are equivalent iff their fractions agree, so equality is
/// by fraction only; the sequence is kept for provenance and printing.
class RationalTangle {
public:
  explicit RationalTangle(std::vector<Int> seq)
      : seq_(std::move(seq)), fraction_(cf_eval(seq_)) {}

  const std::vector<Int>& seq() const { return seq_; }
  const ExtFrac& fraction() const { return fraction_; }

  friend bool operator==(const RationalTangle& a, const RationalTangle& b) {
    return a.fraction_ == b.fraction_;
  }

private:
  std::vector<Int> seq_;
  ExtFrac fraction_;
};

/// Class in H_1 of the boundary torus of the branched double cover of a
/// rational tangle, written in the ([mu_inf], [lambda]) basis with the
/// orientation convention [mu_inf].[lambda] = +1 fixed globally.
struct HomologyClass {
  Int mu_coeff;
  Int lambda_coeff;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// Lift of a meridian of R(r) to the double cover: [mu_r] = -p[mu_inf] + q[lambda]
/// for r = p/q reduced. The coefficients are always coprime.
HomologyClass meridian_lift(const ExtFrac& r);

/// Covering slope of s-untangle surgery when the latitude of R(inf) lifts to
/// an n-framing longitude: n - s in preferred meridian-longitude coordinates.
/// Throws domain_error for s = inf (no surgery performed).
ExtFrac covering_slope(const Int& framing_n, const ExtFrac& s);

}  // namespace seifnet
