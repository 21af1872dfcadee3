#pragma once

#include "seifnet/extfrac.hpp"
#include "seifnet/family.hpp"

#include <utility>
#include <vector>

namespace seifnet {

/// State of a Seifert surgery along the family's twist path: the surgery
/// slope plus the linking numbers of the surgered knot with the two
/// seiferters c_a, c_b. lk(c_a, c_b) stays 2 throughout this family.
///
/// Linking numbers carry fixed initial orientations; slope updates are exact
/// while the (lk_a, lk_b) pair is only meaningful up to a simultaneous sign
/// flip (the squares in every slope formula kill the ambiguity).
struct SurgeryVertex {
  Int slope;
  Int lk_a;
  Int lk_b;
  Int lk_ab = 2;

  /// The family's start vertex: (l+5)-surgery on the trefoil, with
  /// lk(T_{3,2}, c_a) = l+4 and lk(T_{3,2}, c_b) = 2.
  static SurgeryVertex start(long long l) {
    return SurgeryVertex{Int(l) + 5, Int(l) + 4, 2, 2};
  }

  friend bool operator==(const SurgeryVertex&, const SurgeryVertex&) = default;
};

enum class TwistTarget { SeiferterA, SeiferterB, AnnularPair };

/// One edge bundle of the Seifert Surgery Network: a nonzero number of
/// twists along one seiferter or along the annular pair.
struct TwistStep {
  TwistTarget target;
  long long count;

  TwistStep(TwistTarget t, long long c) : target(t), count(c) {
    if (c == 0) throw domain_error("TwistStep: count must be nonzero");
  }

  friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

enum class Seiferter { A, B };

/// t-twist along one seiferter: the slope gains t * lk(K, c)^2 where c is
/// the twisted seiferter, and the other seiferter's linking number with K
/// gains t * lk(K, c) * lk(c_a, c_b). t = 0 is the identity.
SurgeryVertex twist_seiferter(const SurgeryVertex& v, Seiferter which, const Int& t);

/// n-twist along the annular pair (c_a, c_b):
///   slope += n(lk_a^2 - lk_b^2) + 2n^2(lk_a - lk_b)^2,
///   lk_a  += 2n(lk_a - lk_b),   lk_b += 2n(lk_a - lk_b).
SurgeryVertex annular_twist(const SurgeryVertex& v, const Int& n);

/// The explicit path from (T_{3,2}, l+5) to (K(l,m,n,p), gamma): n rounds of
/// [(-1) along c_a, (+1) along c_b] (inverse order and signs for n < 0),
/// then (-m) along c_a when p = 0, or (-p) along c_b when m = 0.
std::vector<TwistStep> path_from_trefoil(const FamilyParams& params);

/// Left-fold of the twist moves over the step list.
SurgeryVertex realize_path(SurgeryVertex start, const std::vector<TwistStep>& steps);

/// Simultaneous surgery coefficients of a p-twist along an annular pair with
/// linking number lk: (-1/p + lk, 1/p + lk). Throws at p = 0.
std::pair<ExtFrac, ExtFrac> annular_surgery_coeffs(const Int& p, const Int& lk);

/// Simultaneous surgery coefficients equivalent to (t1-twist along c_1, then
/// t2-twist along c_2) for linking number lk, in the original framing:
/// (-1/t1, -1/t2 - t1*lk^2). The t1-twist shifts the framing of c_2 by
/// t1*lk^2, so the second coefficient picks up the compensating term.
std::pair<ExtFrac, ExtFrac> compose_two_twists(const Int& t1, const Int& t2, const Int& lk);

}  // namespace seifnet
