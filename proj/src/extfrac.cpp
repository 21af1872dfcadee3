#include "seifnet/extfrac.hpp"

#include <utility>

namespace seifnet {

ExtFrac::ExtFrac(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) {
    if (num_ == 0) throw domain_error("ExtFrac: 0/0 is not a value");
    num_ = 1;  // unique representation of infinity
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtFrac ExtFrac::inverse() const { return ExtFrac(den_, num_); }

ExtFrac ExtFrac::operator-() const {
  ExtFrac r = *this;
  if (!r.is_infinite()) r.num_ = -r.num_;
  return r;
}

ExtFrac operator+(const ExtFrac& a, const ExtFrac& b) {
  if (a.is_infinite() && b.is_infinite())
    throw domain_error("ExtFrac: inf + inf is undefined");
  if (a.is_infinite() || b.is_infinite()) return ExtFrac::infinity();
  return ExtFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExtFrac operator-(const ExtFrac& a, const ExtFrac& b) { return a + (-b); }

bool operator<(const ExtFrac& a, const ExtFrac& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Int ExtFrac::floor() const {
  if (is_infinite()) throw domain_error("ExtFrac: floor(inf) is undefined");
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string ExtFrac::str() const {
  if (is_infinite()) return "inf";
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExtFrac cf_eval(const std::vector<Int>& seq) {
  if (seq.empty()) throw domain_error("cf_eval: empty sequence");
  ExtFrac r(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i)
    r = ExtFrac(seq[i]) + r.inverse();  // integer + inf never hits inf + inf
  return r;
}

std::vector<Int> cf_expand(const ExtFrac& r) {
  if (r.is_infinite()) throw domain_error("cf_expand: inf has no expansion");
  std::vector<Int> quotients;
  ExtFrac x = r;
  for (;;) {
    Int q = x.floor();
    quotients.push_back(q);
    ExtFrac frac = x - ExtFrac(q);
    if (frac.is_zero()) break;
    x = frac.inverse();
  }
  // Partial quotients were produced outermost-first; cf_eval wants a_1 first.
  return {quotients.rbegin(), quotients.rend()};
}

}  // namespace seifnet
