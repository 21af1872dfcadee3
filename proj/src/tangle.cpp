#include "seifnet/tangle.hpp"

namespace seifnet {

HomologyClass meridian_lift(const ExtFrac& r) {
  return HomologyClass{-r.num(), r.den()};
}

ExtFrac covering_slope(const Int& framing_n, const ExtFrac& s) {
  if (s.is_infinite())
    throw domain_error("covering_slope: s = inf performs no surgery");
  return ExtFrac(framing_n) - s;
}

}  // namespace seifnet
