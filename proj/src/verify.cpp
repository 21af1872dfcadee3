#include "seifnet/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <thread>

namespace seifnet::verify {

namespace {

using boost::multiprecision::abs;

// Result of checking one sweep point: skipped (with a reason), or checked
// with zero or more (expected, actual) mismatches.
struct Outcome {
  std::optional<std::string> skip;
  std::vector<std::pair<std::string, std::string>> fails;

  void fail(std::string expected, std::string actual) {
    fails.emplace_back(std::move(expected), std::move(actual));
  }
};

using CheckFn = std::function<Outcome(const ParamPoint&)>;

// At m*p != 0 (possible only with enforce_mp_zero off) the point is checked
// through the p != 0 closed forms, which do not involve m.
FamilyParams project(const ParamPoint& pt) {
  if (pt.m != 0 && pt.p != 0) return FamilyParams(pt.l, 0, pt.n, pt.p);
  return FamilyParams(pt.l, pt.m, pt.n, pt.p);
}

std::vector<ParamPoint> family_points(const SweepBox& box) {
  std::vector<ParamPoint> pts;
  for (long long l = box.l.lo; l <= box.l.hi; ++l)
    for (long long m = box.m.lo; m <= box.m.hi; ++m)
      for (long long n = box.n.lo; n <= box.n.hi; ++n)
        for (long long p = box.p.lo; p <= box.p.hi; ++p) {
          if (box.enforce_mp_zero && m != 0 && p != 0) continue;
          pts.push_back({l, m, n, p});
        }
  return pts;
}

void run_points(const std::vector<ParamPoint>& pts, unsigned jobs,
                const CheckFn& check, VerificationReport& report) {
  struct Shard {
    std::uint64_t checked = 0;
    std::vector<SkipRecord> skipped;
    std::vector<FailureRecord> failures;
  };

  auto process = [&check](const ParamPoint* first, const ParamPoint* last, Shard& shard) {
    for (const ParamPoint* pt = first; pt != last; ++pt) {
      Outcome out;
      try {
        out = check(*pt);
      } catch (const std::exception& e) {
        out.fail("no unexpected error", e.what());
      }
      if (out.skip) {
        shard.skipped.push_back({*pt, std::move(*out.skip)});
        continue;
      }
      ++shard.checked;
      for (auto& [expected, actual] : out.fails)
        shard.failures.push_back({*pt, std::move(expected), std::move(actual)});
    }
  };

  jobs = std::max(1u, jobs);
  std::vector<Shard> shards(jobs);
  if (jobs == 1 || pts.size() < 2 * jobs) {
    process(pts.data(), pts.data() + pts.size(), shards[0]);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (pts.size() + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      std::size_t lo = std::min(pts.size(), j * chunk);
      std::size_t hi = std::min(pts.size(), lo + chunk);
      workers.emplace_back(process, pts.data() + lo, pts.data() + hi,
                           std::ref(shards[j]));
    }
    for (auto& w : workers) w.join();
  }

  for (auto& s : shards) {
    report.checked += s.checked;
    std::move(s.skipped.begin(), s.skipped.end(), std::back_inserter(report.skipped));
    std::move(s.failures.begin(), s.failures.end(), std::back_inserter(report.failures));
  }
}

// ---- per-suite point checks ----

Outcome check_h1_slope(const ParamPoint& pt, const SlopeFn& slope) {
  Outcome out;
  FamilyParams params = project(pt);
  std::array<ExtFrac, 3> fr;
  try {
    fr = montesinos_fractions(params);
  } catch (const vanishing_denominator& e) {
    out.skip = e.what();
    return out;
  }
  H1Order h1 = h1_order(SeifertSpace(BaseSurface::Sphere, {fr[0], fr[1], fr[2]}));
  Int gamma = slope(params);
  H1Order expect = gamma == 0 ? H1Order::infinite() : H1Order::finite(abs(gamma));
  if (!(h1 == expect))
    out.fail("h1 = " + expect.str() + " (= |gamma|)", "h1 = " + h1.str());
  return out;
}

Outcome check_cf_fractions(const ParamPoint& pt) {
  Outcome out;
  FamilyParams params = project(pt);
  std::array<ExtFrac, 3> fr;
  try {
    fr = montesinos_fractions(params);
  } catch (const vanishing_denominator& e) {
    out.skip = e.what();
    return out;
  }
  auto seqs = tangle_sequences(params);
  for (int i = 0; i < 3; ++i) {
    ExtFrac ev = cf_eval(seqs[i]);
    if (ev != fr[i])
      out.fail("slot " + std::to_string(i + 1) + " = " + fr[i].str(),
               "cf_eval = " + ev.str());
  }
  return out;
}

Outcome check_path(const ParamPoint& pt) {
  Outcome out;
  FamilyParams params = project(pt);
  Int gamma = surgery_slope(params);
  SurgeryVertex end =
      realize_path(SurgeryVertex::start(params.l), path_from_trefoil(params));
  if (end.slope != gamma)
    out.fail("path slope = " + gamma.str(), "path slope = " + end.slope.str());
  return out;
}

// pt = (l, 1, n-1, 0); the identity pairs it with (l, 0, n, 1).
Outcome check_isotopy(const ParamPoint& pt) {
  Outcome out;
  FamilyParams a(pt.l, 1, pt.n, 0);
  FamilyParams b(pt.l, 0, pt.n + 1, 1);

  Int ga = surgery_slope(a), gb = surgery_slope(b);
  if (ga != gb)
    out.fail("gamma(l,1,n-1,0) = gamma(l,0,n,1) = " + ga.str(),
             "gamma(l,0,n,1) = " + gb.str());

  std::optional<std::array<ExtFrac, 3>> fa, fb;
  std::string reason;
  try {
    fa = montesinos_fractions(a);
  } catch (const vanishing_denominator& e) {
    reason = e.what();
  }
  try {
    fb = montesinos_fractions(b);
  } catch (const vanishing_denominator& e) {
    reason = e.what();
  }
  if (!fa && !fb) {
    out.skip = reason;
    return out;
  }
  if (fa.has_value() != fb.has_value()) {
    out.fail("both sides defined or both degenerate",
             std::string(fa ? "only (l,1,n-1,0)" : "only (l,0,n,1)") + " defined");
    return out;
  }
  for (int i = 0; i < 3; ++i)
    if ((*fa)[i] != (*fb)[i])
      out.fail("slot " + std::to_string(i + 1) + " = " + (*fa)[i].str(),
               "slot " + std::to_string(i + 1) + " = " + (*fb)[i].str());
  return out;
}

// pt = (l, 0, n, 0).
Outcome check_annular(const ParamPoint& pt) {
  Outcome out;
  SurgeryVertex v = SurgeryVertex::start(pt.l);
  SurgeryVertex direct = annular_twist(v, pt.n);
  SurgeryVertex stepped = v;
  long long reps = pt.n >= 0 ? pt.n : -pt.n;
  for (long long i = 0; i < reps; ++i) {
    if (pt.n >= 0) {
      stepped = twist_seiferter(stepped, Seiferter::A, -1);
      stepped = twist_seiferter(stepped, Seiferter::B, 1);
    } else {
      stepped = twist_seiferter(stepped, Seiferter::B, -1);
      stepped = twist_seiferter(stepped, Seiferter::A, 1);
    }
  }
  if (direct.slope != stepped.slope)
    out.fail("annular slope = stepped slope = " + stepped.slope.str(),
             "annular slope = " + direct.slope.str());
  bool same = direct.lk_a == stepped.lk_a && direct.lk_b == stepped.lk_b;
  bool flipped = direct.lk_a == -stepped.lk_a && direct.lk_b == -stepped.lk_b;
  if (!same && !flipped)
    out.fail("(lk_a, lk_b) agree up to simultaneous sign flip",
             "(" + direct.lk_a.str() + "," + direct.lk_b.str() + ") vs (" +
                 stepped.lk_a.str() + "," + stepped.lk_b.str() + ")");

  auto composed = compose_two_twists(-1, 1, 2);
  auto annular = annular_surgery_coeffs(1, 2);
  if (composed != annular || composed != std::make_pair(ExtFrac(1), ExtFrac(3)))
    out.fail("compose(-1,1,2) = annular(1,2) = (1, 3)",
             "(" + composed.first.str() + ", " + composed.second.str() + ")");
  return out;
}

// pt = (+-2, m, n, 0) or (+-2, 0, n, p): the branched covers of the
// Moebius-fibration case and their expanded H1 polynomials.
Outcome check_homology(const ParamPoint& pt) {
  Outcome out;
  const Int m = pt.m, n = pt.n, p = pt.p;
  std::vector<std::pair<Int, Int>> raw;
  Int poly;
  if (pt.p == 0) {
    if (pt.l == 2) {
      raw = {{-6 * m * n - 5 * m + 3 * n + 1, 4 * m * n + 4 * m - 2 * n - 1},
             {-n - 1, 2 * n + 1}};
      poly = abs(16 * m * n * n + 24 * m * n - 8 * n * n + 9 * m - 8 * n - 2);
    } else {
      raw = {{-2 * m * n + m + n - 1, 4 * m * n - 2 * n + 1}, {n, 2 * n + 1}};
      poly = abs(m - 1);
    }
  } else {
    if (pt.l == 2) {
      raw = {{-(3 * n + 1), 2 * n + 1},
             {-(2 * n * p - n + p - 1), 4 * n * p - 2 * n - 1}};
      poly = abs(16 * n * n * p - 8 * n * n + 8 * n * p - 8 * n + p - 2);
    } else {
      raw = {{n - 1, -2 * n + 1}, {2 * n * p - n - p, 4 * n * p - 2 * n - 1}};
      poly = abs(p - 1);
    }
  }

  SeifertSpace space = SeifertSpace(BaseSurface::Sphere, {});
  try {
    space = SeifertSpace::from_raw(BaseSurface::Sphere, raw);
  } catch (const vanishing_denominator& e) {
    out.skip = e.what();
    return out;
  }
  H1Order h1 = h1_order(space);
  H1Order expect = poly == 0 ? H1Order::infinite() : H1Order::finite(poly);
  if (!(h1 == expect))
    out.fail("h1 = " + expect.str() + " (expanded polynomial)", "h1 = " + h1.str());

  Int c4 = case4_h1_orders(project(pt));
  if (c4 != poly)
    out.fail("case4 order = " + poly.str(), "case4 order = " + c4.str());

  // the S^3 characterizations forced by the quadratic inequality arguments
  if (pt.p == 0) {
    if (pt.l == 2 && poly == 1 && pt.n != -1)
      out.fail("order 1 only at n = -1", "order 1 at n = " + std::to_string(pt.n));
    if (pt.l == -2 && (poly == 1) != (pt.m == 0 || pt.m == 2))
      out.fail("order 1 iff m in {0, 2}",
               "order " + poly.str() + " at m = " + std::to_string(pt.m));
  } else {
    if (pt.l == 2 && poly == 1 && pt.n != 0)
      out.fail("order 1 only at n = 0", "order 1 at n = " + std::to_string(pt.n));
    if (pt.l == -2 && (poly == 1) != (pt.p == 0 || pt.p == 2))
      out.fail("order 1 iff p in {0, 2}",
               "order " + poly.str() + " at p = " + std::to_string(pt.p));
  }
  return out;
}

Outcome check_hypotheses(const ParamPoint& pt) {
  Outcome out;
  FamilyParams params = project(pt);
  bool toroidal = toroidal_hypotheses(params);
  bool nonps = nonps_hypotheses(params);

  if (nonps && !toroidal)
    out.fail("nonps implies toroidal", "nonps holds, toroidal fails");
  if (params.p == 0 && toroidal &&
      !claim_seifert_invariant1(params.l, params.m, params.n))
    out.fail("toroidal implies the Seifert-invariant bounds", "bounds fail");
  if (nonps && (params.l == 2 || params.l == -2) && case4_h1_orders(params) == 1)
    out.fail("case-4 H1 order != 1 under nonps", "order = 1");

  if (toroidal) {
    try {
      auto [m1, m2] = decomposition_pieces(params);
      if (!boundary_irreducible(m1))
        out.fail("M1 boundary-irreducible", m1.str());
      if (!boundary_irreducible(m2))
        out.fail("M2 boundary-irreducible", m2.str());
      bool odd_index = false;
      for (const ExtFrac& s : m1.slots())
        odd_index = odd_index || (s.den() >= 3 && s.den() % 2 == 1);
      if (!odd_index)
        out.fail("M1 has a slot of odd index >= 3", m1.str());
      if (fibration_census(m1) != FibrationCensus::Unique)
        out.fail("M1 fibers uniquely", m1.str());
      bool both_ways = fibration_census(m2) == FibrationCensus::DiskAndMoebius;
      if (both_ways != (params.l == 2 || params.l == -2))
        out.fail("M2 fibers over disk and Moebius band iff |l| = 2", m2.str());
    } catch (const domain_error& e) {
      out.fail("pieces defined and indexed under toroidal hypotheses", e.what());
    }
  }
  return out;
}

// ---- suite drivers ----

std::string param_str(const ParamPoint& pt) {
  return "(" + std::to_string(pt.l) + "," + std::to_string(pt.m) + "," +
         std::to_string(pt.n) + "," + std::to_string(pt.p) + ")";
}

void validate(const SweepBox& box) {
  for (const Range& r : {box.l, box.m, box.n, box.p})
    if (r.lo > r.hi) throw constraint_error("verify: empty range in sweep box");
  if (box_grid_size(box) > Int(box.cap))
    throw constraint_error("verify: sweep box exceeds the point cap");
}

void sort_records(VerificationReport& report) {
  std::sort(report.skipped.begin(), report.skipped.end(),
            [](const SkipRecord& a, const SkipRecord& b) {
              return std::tie(a.params, a.reason) < std::tie(b.params, b.reason);
            });
  std::sort(report.failures.begin(), report.failures.end(),
            [](const FailureRecord& a, const FailureRecord& b) {
              return std::tie(a.params, a.expected, a.actual) <
                     std::tie(b.params, b.expected, b.actual);
            });
}

VerificationReport run_over(std::string name, const SweepBox& box,
                            const std::vector<ParamPoint>& pts, unsigned jobs,
                            const CheckFn& check) {
  VerificationReport report;
  report.suite = std::move(name);
  report.box = box;
  auto t0 = std::chrono::steady_clock::now();
  run_points(pts, jobs, check, report);
  sort_records(report);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return report;
}

std::vector<ParamPoint> ln_grid(const SweepBox& box, long long m, long long p,
                                long long n_shift = 0) {
  std::vector<ParamPoint> pts;
  for (long long l = box.l.lo; l <= box.l.hi; ++l)
    for (long long n = box.n.lo; n <= box.n.hi; ++n)
      pts.push_back({l, m, n + n_shift, p});
  return pts;
}

std::vector<ParamPoint> homology_points(const SweepBox& box) {
  std::vector<ParamPoint> pts;
  for (long long l : {-2LL, 2LL})
    for (long long m = box.m.lo; m <= box.m.hi; ++m)
      for (long long n = box.n.lo; n <= box.n.hi; ++n)
        pts.push_back({l, m, n, 0});
  for (long long l : {-2LL, 2LL})
    for (long long n = box.n.lo; n <= box.n.hi; ++n)
      for (long long p = box.p.lo; p <= box.p.hi; ++p)
        pts.push_back({l, 0, n, p});
  return pts;
}

VerificationReport run_one(Suite suite, const SweepBox& box, unsigned jobs,
                           const SlopeFn& slope) {
  switch (suite) {
    case Suite::H1Slope:
      return run_over("h1-slope", box, family_points(box), jobs,
                      [&slope](const ParamPoint& pt) { return check_h1_slope(pt, slope); });
    case Suite::CfFractions:
      return run_over("cf-fractions", box, family_points(box), jobs, check_cf_fractions);
    case Suite::PathRealization:
      return run_over("path-realization", box, family_points(box), jobs, check_path);
    case Suite::IsotopyIdentity:
      // points (l, 1, n-1, 0) paired with (l, 0, n, 1)
      return run_over("isotopy-identity", box, ln_grid(box, 1, 0, -1), jobs, check_isotopy);
    case Suite::AnnularComposition:
      return run_over("annular-composition", box, ln_grid(box, 0, 0), jobs, check_annular);
    case Suite::HomologyClaims:
      return run_over("homology-claims", box, homology_points(box), jobs, check_homology);
    case Suite::HypothesisImplications:
      return run_over("hypothesis-implications", box, family_points(box), jobs,
                      check_hypotheses);
    case Suite::All:
      break;
  }
  throw constraint_error("verify: unknown suite");
}

}  // namespace

const std::vector<std::pair<Suite, std::string_view>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string_view>> names = {
      {Suite::H1Slope, "h1-slope"},
      {Suite::CfFractions, "cf-fractions"},
      {Suite::PathRealization, "path-realization"},
      {Suite::IsotopyIdentity, "isotopy-identity"},
      {Suite::AnnularComposition, "annular-composition"},
      {Suite::HomologyClaims, "homology-claims"},
      {Suite::HypothesisImplications, "hypothesis-implications"},
      {Suite::All, "all"},
  };
  return names;
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (const auto& [suite, n] : suite_names())
    if (n == name) return suite;
  return std::nullopt;
}

Int box_grid_size(const SweepBox& box) {
  Int size = 1;
  for (const Range& r : {box.l, box.m, box.n, box.p})
    size *= r.lo <= r.hi ? Int(r.hi - r.lo + 1) : Int(0);
  return size;
}

VerificationReport run_h1_slope(const SweepBox& box, unsigned jobs, const SlopeFn& slope) {
  validate(box);
  return run_one(Suite::H1Slope, box, jobs, slope);
}

VerificationReport run_suite(Suite suite, const SweepBox& box, unsigned jobs) {
  validate(box);
  SlopeFn slope = [](const FamilyParams& p) { return surgery_slope(p); };
  if (suite != Suite::All) return run_one(suite, box, jobs, slope);

  VerificationReport all;
  all.suite = "all";
  all.box = box;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& [sub, name] : suite_names()) {
    if (sub == Suite::All) continue;
    VerificationReport r = run_one(sub, box, jobs, slope);
    all.checked += r.checked;
    std::move(r.skipped.begin(), r.skipped.end(), std::back_inserter(all.skipped));
    std::move(r.failures.begin(), r.failures.end(), std::back_inserter(all.failures));
  }
  sort_records(all);
  all.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return all;
}

std::string to_json(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["suite"] = report.suite;
  doc["box"] = {{"l", {report.box.l.lo, report.box.l.hi}},
                {"m", {report.box.m.lo, report.box.m.hi}},
                {"n", {report.box.n.lo, report.box.n.hi}},
                {"p", {report.box.p.lo, report.box.p.hi}},
                {"enforce_mp_zero", report.box.enforce_mp_zero},
                {"cap", report.box.cap}};
  doc["checked"] = report.checked;
  json skipped = json::array();
  for (const SkipRecord& s : report.skipped)
    skipped.push_back({{"params",
                        {{"l", s.params.l}, {"m", s.params.m}, {"n", s.params.n}, {"p", s.params.p}}},
                       {"reason", s.reason}});
  doc["skipped"] = std::move(skipped);
  json failures = json::array();
  for (const FailureRecord& f : report.failures)
    failures.push_back({{"params",
                         {{"l", f.params.l}, {"m", f.params.m}, {"n", f.params.n}, {"p", f.params.p}}},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  doc["failures"] = std::move(failures);
  // kept at 0 so reports are byte-identical across runs and worker counts
  doc["elapsed_ms"] = 0;
  return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::string s;
  s += "suite: " + report.suite + "\n";
  s += "box: l=" + std::to_string(report.box.l.lo) + ".." + std::to_string(report.box.l.hi);
  s += " m=" + std::to_string(report.box.m.lo) + ".." + std::to_string(report.box.m.hi);
  s += " n=" + std::to_string(report.box.n.lo) + ".." + std::to_string(report.box.n.hi);
  s += " p=" + std::to_string(report.box.p.lo) + ".." + std::to_string(report.box.p.hi);
  s += report.box.enforce_mp_zero ? " (m*p = 0 enforced)\n" : " (m*p free)\n";
  s += "checked: " + std::to_string(report.checked) + "\n";
  s += "skipped: " + std::to_string(report.skipped.size()) + "\n";
  for (const SkipRecord& r : report.skipped)
    s += "  " + param_str(r.params) + ": " + r.reason + "\n";
  s += "failures: " + std::to_string(report.failures.size()) + "\n";
  for (const FailureRecord& f : report.failures)
    s += "  " + param_str(f.params) + ": expected " + f.expected + "; got " +
         f.actual + "\n";
  s += "elapsed: " + std::to_string(report.elapsed_ms) + " ms\n";
  s += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
  return s;
}

}  // namespace seifnet::verify
