// Acceptance suite: the exact arithmetic identities the artifact stands on.
// One PASS/FAIL line per criterion; exit status is the number of failures.
// argv[1] is the path to the seifnet CLI (used by the determinism criterion).

#include "seifnet/family.hpp"
#include "seifnet/network.hpp"
#include "seifnet/seifert.hpp"
#include "seifnet/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace seifnet;
using boost::multiprecision::abs;

namespace {

struct Tally {
  long long checked = 0;
  long long skipped = 0;
  std::vector<std::string> errors;

  void fail(std::string msg) {
    if (errors.size() < 16) errors.push_back(std::move(msg));
  }
  bool ok() const { return errors.empty(); }
};

std::string pstr(long long l, long long m, long long n, long long p) {
  return "(" + std::to_string(l) + "," + std::to_string(m) + "," +
         std::to_string(n) + "," + std::to_string(p) + ")";
}

// l in [-8,8] minus {0, +-1}; (m, p) in [-8,8]^2 with m*p = 0; n in [-8,8].
template <typename Fn>
void criterion_box(const Fn& visit) {
  for (long long l = -8; l <= 8; ++l) {
    if (l == 0 || l == 1 || l == -1) continue;
    for (long long m = -8; m <= 8; ++m)
      for (long long n = -8; n <= 8; ++n)
        for (long long p = -8; p <= 8; ++p) {
          if (m != 0 && p != 0) continue;
          visit(l, m, n, p);
        }
  }
}

Tally triple_agreement() {
  Tally t;
  criterion_box([&t](long long l, long long m, long long n, long long p) {
    FamilyParams params(l, m, n, p);
    Int gamma = surgery_slope(params);
    Int path_slope =
        realize_path(SurgeryVertex::start(l), path_from_trefoil(params)).slope;
    if (path_slope != gamma) {
      t.fail(pstr(l, m, n, p) + " path slope " + path_slope.str() +
             " != gamma " + gamma.str());
      return;
    }
    std::array<ExtFrac, 3> fr;
    try {
      fr = montesinos_fractions(params);
    } catch (const vanishing_denominator&) {
      ++t.skipped;
      return;
    }
    H1Order h1 = h1_order(SeifertSpace(BaseSurface::Sphere, {fr[0], fr[1], fr[2]}));
    bool match = gamma == 0 ? h1.is_infinite()
                            : (!h1.is_infinite() && h1.value() == abs(gamma));
    if (!match)
      t.fail(pstr(l, m, n, p) + " h1 " + h1.str() + " != |gamma| " +
             Int(abs(gamma)).str());
    ++t.checked;
  });
  return t;
}

Tally cf_consistency() {
  Tally t;
  criterion_box([&t](long long l, long long m, long long n, long long p) {
    FamilyParams params(l, m, n, p);
    std::array<ExtFrac, 3> fr;
    try {
      fr = montesinos_fractions(params);
    } catch (const vanishing_denominator&) {
      ++t.skipped;
      return;
    }
    auto seqs = tangle_sequences(params);
    for (int i = 0; i < 3; ++i)
      if (cf_eval(seqs[i]) != fr[i])
        t.fail(pstr(l, m, n, p) + " slot " + std::to_string(i + 1) +
               ": cf_eval != closed form");
    ++t.checked;
  });
  return t;
}

Tally base_case() {
  Tally t;
  for (long long l = -50; l <= 50; ++l) {
    if (surgery_slope(FamilyParams(l, 0, 0, 0)) != l + 5)
      t.fail("gamma" + pstr(l, 0, 0, 0) + " != l+5");
    ++t.checked;
  }
  for (long long l = -20; l <= 20; ++l)
    for (long long n = -5; n <= 5; ++n) {
      Int li = l, ni = n;
      Int increment = ni * (li * li + 8 * li + 12) +
                      2 * ni * ni * (li + 2) * (li + 2);
      Int got = annular_twist(SurgeryVertex::start(l), n).slope - (li + 5);
      if (got != increment)
        t.fail("annular increment at l=" + std::to_string(l) +
               ", n=" + std::to_string(n));
      ++t.checked;
    }
  return t;
}

Tally isotopy_identity() {
  Tally t;
  for (long long l = -20; l <= 20; ++l) {
    if (l == 0) continue;
    for (long long n = -20; n <= 20; ++n) {
      FamilyParams lhs(l, 1, n - 1, 0), rhs(l, 0, n, 1);
      if (surgery_slope(lhs) != surgery_slope(rhs)) {
        t.fail("slope mismatch at l=" + std::to_string(l) + ", n=" + std::to_string(n));
        continue;
      }
      std::array<ExtFrac, 3> fa, fb;
      bool da = false, db = false;
      try {
        fa = montesinos_fractions(lhs);
      } catch (const vanishing_denominator&) {
        da = true;
      }
      try {
        fb = montesinos_fractions(rhs);
      } catch (const vanishing_denominator&) {
        db = true;
      }
      if (da != db) {
        t.fail("one-sided degeneracy at l=" + std::to_string(l) +
               ", n=" + std::to_string(n));
        continue;
      }
      if (da) {
        ++t.skipped;
        continue;
      }
      if (fa != fb)
        t.fail("slot mismatch at l=" + std::to_string(l) + ", n=" + std::to_string(n));
      ++t.checked;
    }
  }
  if (surgery_slope(FamilyParams(2, 1, 1, 0)) != -125 ||
      surgery_slope(FamilyParams(2, 0, 2, 1)) != -125)
    t.fail("spot value -125 at l=2, n=2");
  return t;
}

H1Order two_slot_h1(Int p1, Int q1, Int p2, Int q2) {
  return h1_order(SeifertSpace::from_raw(BaseSurface::Sphere,
                                         {{std::move(p1), std::move(q1)},
                                          {std::move(p2), std::move(q2)}}));
}

bool h1_equals(const H1Order& h, const Int& poly) {
  return poly == 0 ? h.is_infinite() : (!h.is_infinite() && h.value() == poly);
}

Tally homology_claims() {
  Tally t;
  for (long long mm = -10; mm <= 10; ++mm)
    for (long long nn = -10; nn <= 10; ++nn) {
      Int m = mm, n = nn;
      H1Order plus = two_slot_h1(-6 * m * n - 5 * m + 3 * n + 1,
                                 4 * m * n + 4 * m - 2 * n - 1, -n - 1, 2 * n + 1);
      Int poly_plus = abs(16 * m * n * n + 24 * m * n - 8 * n * n + 9 * m - 8 * n - 2);
      if (!h1_equals(plus, poly_plus))
        t.fail("l=2 polynomial at m=" + std::to_string(mm) + ", n=" + std::to_string(nn));
      H1Order minus = two_slot_h1(-2 * m * n + m + n - 1, 4 * m * n - 2 * n + 1,
                                  n, 2 * n + 1);
      if (!h1_equals(minus, abs(m - 1)))
        t.fail("l=-2 polynomial at m=" + std::to_string(mm) + ", n=" + std::to_string(nn));
      ++t.checked;
    }

  // S^3 only at n = -1 for the l = 2 family, over the extended box
  for (long long mm = -50; mm <= 50; ++mm)
    for (long long nn = -50; nn <= 50; ++nn) {
      Int m = mm, n = nn;
      Int poly = abs(16 * m * n * n + 24 * m * n - 8 * n * n + 9 * m - 8 * n - 2);
      H1Order h = two_slot_h1(-6 * m * n - 5 * m + 3 * n + 1,
                              4 * m * n + 4 * m - 2 * n - 1, -n - 1, 2 * n + 1);
      if (!h1_equals(h, poly))
        t.fail("extended-box polynomial at m=" + std::to_string(mm) +
               ", n=" + std::to_string(nn));
      if (poly == 1 && nn != -1)
        t.fail("order 1 away from n=-1 at m=" + std::to_string(mm) +
               ", n=" + std::to_string(nn));
      ++t.checked;
    }

  // m = 0 analogues
  for (long long nn = -10; nn <= 10; ++nn)
    for (long long pp = -10; pp <= 10; ++pp) {
      Int n = nn, p = pp;
      H1Order plus = two_slot_h1(-(3 * n + 1), 2 * n + 1,
                                 -(2 * n * p - n + p - 1), 4 * n * p - 2 * n - 1);
      Int poly_plus = abs(16 * n * n * p - 8 * n * n + 8 * n * p - 8 * n + p - 2);
      if (!h1_equals(plus, poly_plus))
        t.fail("l=2, m=0 polynomial at n=" + std::to_string(nn) +
               ", p=" + std::to_string(pp));
      H1Order minus = two_slot_h1(n - 1, -2 * n + 1, 2 * n * p - n - p,
                                  4 * n * p - 2 * n - 1);
      if (!h1_equals(minus, abs(p - 1)))
        t.fail("l=-2, m=0 polynomial at n=" + std::to_string(nn) +
               ", p=" + std::to_string(pp));
      ++t.checked;
    }
  return t;
}

Tally annulus_twist_identity() {
  Tally t;
  auto composed = compose_two_twists(-1, 1, 2);
  auto coeffs = annular_surgery_coeffs(1, 2);
  if (composed != coeffs)
    t.fail("compose(-1,1,2) != annular(1,2)");
  if (coeffs != std::make_pair(ExtFrac(1), ExtFrac(3)))
    t.fail("annular(1,2) != (1, 3)");
  ++t.checked;
  return t;
}

Tally hypothesis_implications() {
  Tally t;
  criterion_box([&t](long long l, long long m, long long n, long long p) {
    FamilyParams params(l, m, n, p);
    bool toroidal = toroidal_hypotheses(params);
    bool nonps = nonps_hypotheses(params);
    if (nonps && !toroidal)
      t.fail("nonps without toroidal at " + pstr(l, m, n, p));
    if (p == 0 && toroidal && !claim_seifert_invariant1(l, m, n))
      t.fail("toroidal without invariant bounds at " + pstr(l, m, n, p));
    if (nonps && (l == 2 || l == -2) && case4_h1_orders(params) == 1)
      t.fail("case-4 order 1 under nonps at " + pstr(l, m, n, p));
    ++t.checked;
  });
  return t;
}

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = "\"" + cli + "\" " + args;
  int status = std::system(cmd.c_str());
  return status;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tally determinism(const std::string& cli) {
  Tally t;
  if (cli.empty()) {
    t.fail("no CLI path given (pass it as argv[1])");
    return t;
  }
  const std::string f1 = "acceptance_jobs1.json";
  const std::string f8 = "acceptance_jobs8.json";
  if (run_cli(cli, "verify all --format json --jobs 1 --out " + f1) != 0)
    t.fail("verify all --jobs 1 exited nonzero");
  if (run_cli(cli, "verify all --format json --jobs 8 --out " + f8) != 0)
    t.fail("verify all --jobs 8 exited nonzero");
  std::string a = slurp(f1), b = slurp(f8);
  if (a.empty()) t.fail("empty report from --jobs 1");
  if (a != b) t.fail("JSON reports differ between --jobs 1 and --jobs 8");
  ++t.checked;
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  struct Criterion {
    const char* name;
    Tally tally;
    long long ms;
  };
  std::vector<Criterion> results;

  auto timed = [&results](const char* name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Tally tally = fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    results.push_back({name, std::move(tally), ms});
  };

  timed("triple agreement |gamma| = h1 = |path slope|", triple_agreement);
  timed("continued fractions match closed-form slots", cf_consistency);
  timed("base case gamma(l,0,0,0) = l+5 and annular increment", base_case);
  timed("isotopy identity K(l,1,n-1,0) = K(l,0,n,1)", isotopy_identity);
  timed("homology-claim polynomial reproduction", homology_claims);
  timed("annulus-twist composition identity (1, 3)", annulus_twist_identity);
  timed("hypothesis implications and S^3 exclusion", hypothesis_implications);
  timed("determinism of verify all across --jobs",
        [&cli] { return determinism(cli); });

  // the triple-agreement sweep must stay desk-scale
  if (results[0].ms >= 30'000)
    results[0].tally.fail("sweep took " + std::to_string(results[0].ms) + " ms (>= 30 s)");

  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    std::cout << "criterion " << (i + 1) << ": "
              << (c.tally.ok() ? "PASS" : "FAIL") << " - " << c.name << " ("
              << c.tally.checked << " checked, " << c.tally.skipped
              << " skipped, " << c.ms << " ms)\n";
    if (!c.tally.ok()) {
      ++failures;
      for (const std::string& e : c.tally.errors)
        std::cerr << "  " << e << "\n";
    }
  }
  return failures;
}
