#pragma once

#include "seifnet/extfrac.hpp"
#include "seifnet/seifert.hpp"

#include <array>
#include <utility>
#include <vector>

namespace seifnet {

/// Index (l, m, n, p) of the surgery family K(l, m, n, p). The family is
/// only defined when m or p is zero; construction enforces that.
struct FamilyParams {
  long long l = 0, m = 0, n = 0, p = 0;

  FamilyParams(long long l_, long long m_, long long n_, long long p_)
      : l(l_), m(m_), n(n_), p(p_) {
    if (m != 0 && p != 0)
      throw constraint_error("FamilyParams: m or p must be zero");
  }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// The three Montesinos slot fractions of the branched double cover of the
/// family's 1-untangle surgery, reduced. Throws vanishing_denominator when a
/// closed-form denominator is zero at this parameter point.
std::array<ExtFrac, 3> montesinos_fractions(const FamilyParams& params);

/// The three twist-box sequences (a_1 innermost) whose tangles realize the
/// Montesinos slots; cf_eval of each equals the corresponding fraction.
std::array<std::vector<Int>, 3> tangle_sequences(const FamilyParams& params);

/// The surgery slope gamma_{l,m,n,p} =
///   5 + l + n(l^2+8l+12) + 2n^2(l+2)^2 - m(2nl+4n+l+4)^2 - p(2nl+4n+2)^2.
Int surgery_slope(const FamilyParams& params);

/// The two disk-base Seifert pieces of the torus decomposition at slope
/// gamma+1. The second piece is always D^2(1/l, -1/2). Throws
/// vanishing_denominator on zero denominators (including l = 0).
std::pair<SeifertSpace, SeifertSpace> decomposition_pieces(const FamilyParams& params);

/// Hypothesis list under which the gamma+1 surgery is toroidal:
/// p = 0: l != 0,+-1; n != 0,-1; (l,m,n) != (-2,0,1), (2,1,-2).
/// m = 0 (p != 0): l != 0,+-1; n != 0; (l,n) != (+-2,-+1); (n,p) != (-1,0), (1,1).
bool toroidal_hypotheses(const FamilyParams& params);

/// Hypothesis list under which the surgery has no primitive/Seifert position
/// (strengthens the toroidal list).
bool nonps_hypotheses(const FamilyParams& params);

/// |2n+1| >= 3, |l| >= 2, and |2lmn+lm-ln+2m-1| >= 2.
bool claim_seifert_invariant1(long long l, long long m, long long n);

/// |H_1| of the branched double cover arising in the Moebius-fibration case
/// of the tunnel-number argument, for l = +-2 only (0 encodes infinite H_1):
///   (l=+2, p=0): |16mn^2 + 24mn - 8n^2 + 9m - 8n - 2|
///   (l=-2, p=0): |m - 1|
///   (l=+2, m=0): |16n^2p - 8n^2 + 8np - 8n + p - 2|
///   (l=-2, m=0): |p - 1|
Int case4_h1_orders(const FamilyParams& params);

}  // namespace seifnet
