#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace seifnet {

using Int = boost::multiprecision::cpp_int;

/// Arithmetic left the extended rationals (inf + inf, 1/0-surgery slot, ...).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A closed-form denominator of a parametric family vanished; the message
/// names the offending denominator so sweeps can record the skip.
struct vanishing_denominator : domain_error {
  using domain_error::domain_error;
};

/// A structural precondition was violated (m*p != 0, bad suite name, ...).
struct constraint_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact rational number extended with a single point at infinity.
///
/// Canonical form: gcd(|num|, den) = 1 and den >= 0, with infinity stored
/// uniquely as 1/0 and zero as 0/1. Equality is structural, which by the
/// canonical form is also semantic equality. 0/0 is not constructible.
///
/// This is the universal value type for tangle fractions, Seifert slot
/// invariants, and surgery slopes; all arithmetic is exact.
class ExtFrac {
public:
  ExtFrac() : num_(0), den_(1) {}
  ExtFrac(Int n) : num_(std::move(n)), den_(1) {}
  ExtFrac(long long n) : num_(n), den_(1) {}
  ExtFrac(Int n, Int d);

  static ExtFrac infinity() { return ExtFrac(1, 0); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0 && den_ != 0; }
  bool is_integer() const { return den_ == 1; }

  /// 1/x, with 1/0 = inf and 1/inf = 0. Total.
  ExtFrac inverse() const;

  ExtFrac operator-() const;

  /// Throws domain_error on inf + inf; x + inf = inf for finite x.
  friend ExtFrac operator+(const ExtFrac& a, const ExtFrac& b);
  friend ExtFrac operator-(const ExtFrac& a, const ExtFrac& b);

  friend bool operator==(const ExtFrac& a, const ExtFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExtFrac& a, const ExtFrac& b) { return !(a == b); }

  /// Order on the finite rationals; infinity sorts above every finite value.
  friend bool operator<(const ExtFrac& a, const ExtFrac& b);

  /// Largest integer <= value. Throws domain_error on infinity.
  Int floor() const;

  /// "p/q", plain "k" for integers, "inf" for the point at infinity.
  std::string str() const;

private:
  Int num_;
  Int den_;
};

/// Evaluates a_n + 1/(a_{n-1} + 1/(... a_2 + 1/a_1)) with seq = [a_1..a_n],
/// a_1 innermost. Zero intermediates are legal: the inf-aware arithmetic
/// absorbs them (1/0 = inf, k + inf = inf, 1/inf = 0). Throws on empty seq.
ExtFrac cf_eval(const std::vector<Int>& seq);

/// Canonical expansion inverse to cf_eval: the floor-based Euclidean partial
/// quotients, emitted innermost-first; the outermost entry is 0 exactly when
/// r is in [0, 1). cf_eval(cf_expand(r)) == r for every finite r. Throws on inf.
std::vector<Int> cf_expand(const ExtFrac& r);

}  // namespace seifnet
