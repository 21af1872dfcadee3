#include "seifnet/network.hpp"

namespace seifnet {

SurgeryVertex twist_seiferter(const SurgeryVertex& v, Seiferter which, const Int& t) {
  SurgeryVertex out = v;
  const Int& twisted = (which == Seiferter::A) ? v.lk_a : v.lk_b;
  Int& other = (which == Seiferter::A) ? out.lk_b : out.lk_a;
  out.slope += t * twisted * twisted;
  other += t * twisted * v.lk_ab;
  return out;
}

SurgeryVertex annular_twist(const SurgeryVertex& v, const Int& n) {
  SurgeryVertex out = v;
  Int d = v.lk_a - v.lk_b;
  out.slope += n * (v.lk_a * v.lk_a - v.lk_b * v.lk_b) + 2 * n * n * d * d;
  out.lk_a += 2 * n * d;
  out.lk_b += 2 * n * d;
  return out;
}

std::vector<TwistStep> path_from_trefoil(const FamilyParams& params) {
  std::vector<TwistStep> steps;
  if (params.n >= 0) {
    for (long long i = 0; i < params.n; ++i) {
      steps.emplace_back(TwistTarget::SeiferterA, -1);
      steps.emplace_back(TwistTarget::SeiferterB, 1);
    }
  } else {
    for (long long i = 0; i < -params.n; ++i) {
      steps.emplace_back(TwistTarget::SeiferterB, -1);
      steps.emplace_back(TwistTarget::SeiferterA, 1);
    }
  }
  if (params.p == 0 && params.m != 0)
    steps.emplace_back(TwistTarget::SeiferterA, -params.m);
  else if (params.m == 0 && params.p != 0)
    steps.emplace_back(TwistTarget::SeiferterB, -params.p);
  return steps;
}

SurgeryVertex realize_path(SurgeryVertex start, const std::vector<TwistStep>& steps) {
  for (const TwistStep& s : steps) {
    switch (s.target) {
      case TwistTarget::SeiferterA:
        start = twist_seiferter(start, Seiferter::A, s.count);
        break;
      case TwistTarget::SeiferterB:
        start = twist_seiferter(start, Seiferter::B, s.count);
        break;
      case TwistTarget::AnnularPair:
        start = annular_twist(start, s.count);
        break;
    }
  }
  return start;
}

std::pair<ExtFrac, ExtFrac> annular_surgery_coeffs(const Int& p, const Int& lk) {
  if (p == 0) throw domain_error("annular_surgery_coeffs: p must be nonzero");
  ExtFrac l(lk);
  return {ExtFrac(-1, p) + l, ExtFrac(1, p) + l};
}

std::pair<ExtFrac, ExtFrac> compose_two_twists(const Int& t1, const Int& t2, const Int& lk) {
  if (t1 == 0 || t2 == 0)
    throw domain_error("compose_two_twists: twist counts must be nonzero");
  return {ExtFrac(-1, t1), ExtFrac(-1, t2) - ExtFrac(t1 * lk * lk)};
}

}  // namespace seifnet
