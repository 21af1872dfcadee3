#include "seifnet/family.hpp"

namespace seifnet {

namespace {

// The p = 0 closed forms are used whenever p = 0; at m = p = 0 they agree
// with the m = 0 forms after reduction.
bool use_p0_case(const FamilyParams& params) { return params.p == 0; }

ExtFrac checked_frac(Int num, Int den, const char* what) {
  if (den == 0)
    throw vanishing_denominator(std::string(what) + " denominator vanishes");
  return ExtFrac(std::move(num), std::move(den));
}

}  // namespace

std::array<ExtFrac, 3> montesinos_fractions(const FamilyParams& params) {
  const Int l = params.l, m = params.m, n = params.n, p = params.p;
  if (use_p0_case(params)) {
    Int n1 = 2 * l * m * n + l * m - l * n + 2 * m * n + 3 * m - n - 1;
    Int d1 = 2 * l * l * m * n + l * l * m - l * l * n + 2 * l * m - 2 * m - l + 1;
    return {checked_frac(std::move(n1), std::move(d1), "Montesinos slot 1"),
            ExtFrac(-(n + 1), 4 * n + 3), ExtFrac(1, 2)};
  }
  Int n1 = l * n + n + 1;
  Int d1 = l * l * n + l - 1;
  Int n2 = -2 * n * p + n - p + 1;
  Int d2 = 8 * n * p - 4 * n + 2 * p - 3;
  return {checked_frac(std::move(n1), std::move(d1), "Montesinos slot 1"),
          checked_frac(std::move(n2), std::move(d2), "Montesinos slot 2"),
          ExtFrac(1, 2)};
}

std::array<std::vector<Int>, 3> tangle_sequences(const FamilyParams& params) {
  const Int l = params.l, m = params.m, n = params.n, p = params.p;
  if (use_p0_case(params))
    return {std::vector<Int>{m, -2, -n, -l, -1, l, 0},
            std::vector<Int>{-n, -1, -3, 0}, std::vector<Int>{2, 0}};
  return {std::vector<Int>{-n, -l, -1, l, 0},
          std::vector<Int>{-p, 2, -n, -1, -3, 0}, std::vector<Int>{2, 0}};
}

Int surgery_slope(const FamilyParams& params) {
  const Int l = params.l, m = params.m, n = params.n, p = params.p;
  Int a = 2 * n * l + 4 * n + l + 4;
  Int b = 2 * n * l + 4 * n + 2;
  return 5 + l + n * (l * l + 8 * l + 12) + 2 * n * n * (l + 2) * (l + 2) -
         m * a * a - p * b * b;
}

std::pair<SeifertSpace, SeifertSpace> decomposition_pieces(const FamilyParams& params) {
  const Int l = params.l, m = params.m, n = params.n, p = params.p;
  ExtFrac s1, s2;
  if (use_p0_case(params)) {
    Int n1 = 2 * l * m * n + l * m - l * n + 2 * m * n + 3 * m - n - 1;
    Int d1 = 2 * l * m * n + l * m - l * n + 2 * m - 1;
    s1 = checked_frac(-n1, std::move(d1), "M1 slot 1");
    s2 = ExtFrac(-(n + 1), 2 * n + 1);
  } else {
    s1 = checked_frac(-(l * n + n + 1), l * n + 1, "M1 slot 1");
    s2 = checked_frac(-(2 * n * p - n + p - 1), 4 * n * p - 2 * n - 1, "M1 slot 2");
  }
  SeifertSpace m1(BaseSurface::Disk, {std::move(s1), std::move(s2)});
  SeifertSpace m2(BaseSurface::Disk,
                  {checked_frac(1, l, "M2 slot 1"), ExtFrac(-1, 2)});
  return {std::move(m1), std::move(m2)};
}

bool toroidal_hypotheses(const FamilyParams& params) {
  const long long l = params.l, m = params.m, n = params.n, p = params.p;
  if (l == 0 || l == 1 || l == -1) return false;
  if (use_p0_case(params)) {
    if (n == 0 || n == -1) return false;
    if (l == -2 && m == 0 && n == 1) return false;
    if (l == 2 && m == 1 && n == -2) return false;
    return true;
  }
  if (n == 0) return false;
  if ((l == 2 && n == -1) || (l == -2 && n == 1)) return false;
  if ((n == -1 && p == 0) || (n == 1 && p == 1)) return false;
  return true;
}

bool nonps_hypotheses(const FamilyParams& params) {
  const long long l = params.l, m = params.m, n = params.n, p = params.p;
  if (l == 0 || l == 1 || l == -1) return false;
  if (use_p0_case(params)) {
    if (n == 0 || n == -1) return false;
    if (l == -2 && (m == 0 || m == 2)) return false;
    if (l == 2 && m == 1 && n == -2) return false;
    return true;
  }
  if (n == 0) return false;
  if ((l == 2 && n == -1) || (l == -2 && n == 1)) return false;
  if (l == -2 && (p == 0 || p == 2)) return false;
  if ((n == -1 && p == 0) || (n == 1 && p == 1)) return false;
  return true;
}

bool claim_seifert_invariant1(long long l, long long m, long long n) {
  const Int li = l, mi = m, ni = n;
  using boost::multiprecision::abs;
  return abs(Int(2 * ni + 1)) >= 3 && abs(li) >= 2 &&
         abs(2 * li * mi * ni + li * mi - li * ni + 2 * mi - 1) >= 2;
}

Int case4_h1_orders(const FamilyParams& params) {
  if (params.l != 2 && params.l != -2)
    throw domain_error("case4_h1_orders: defined only for l = +-2");
  const Int m = params.m, n = params.n, p = params.p;
  using boost::multiprecision::abs;
  if (use_p0_case(params)) {
    if (params.l == 2)
      return abs(16 * m * n * n + 24 * m * n - 8 * n * n + 9 * m - 8 * n - 2);
    return abs(m - 1);
  }
  if (params.l == 2)
    return abs(16 * n * n * p - 8 * n * n + 8 * n * p - 8 * n + p - 2);
  return abs(p - 1);
}

}  // namespace seifnet
