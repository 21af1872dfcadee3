#pragma once

#include "seifnet/family.hpp"
#include "seifnet/network.hpp"
#include "seifnet/seifert.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seifnet::verify {

/// Inclusive integer interval.
struct Range {
  long long lo = -8;
  long long hi = 8;

  long long size() const { return hi - lo + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Parameter box for sweeps. With enforce_mp_zero the box enumerates the
/// grid points satisfying m*p = 0; without it the full product grid.
struct SweepBox {
  Range l, m, n, p;
  bool enforce_mp_zero = true;
  std::uint64_t cap = 10'000'000;
};

struct ParamPoint {
  long long l = 0, m = 0, n = 0, p = 0;
  friend auto operator<=>(const ParamPoint&, const ParamPoint&) = default;
};

struct SkipRecord {
  ParamPoint params;
  std::string reason;
};

struct FailureRecord {
  ParamPoint params;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  SweepBox box;
  std::uint64_t checked = 0;
  std::vector<SkipRecord> skipped;
  std::vector<FailureRecord> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

enum class Suite {
  H1Slope,
  CfFractions,
  PathRealization,
  IsotopyIdentity,
  AnnularComposition,
  HomologyClaims,
  HypothesisImplications,
  All,
};

/// Stable suite order, as run by `all`.
const std::vector<std::pair<Suite, std::string_view>>& suite_names();
std::optional<Suite> suite_from_name(std::string_view name);

/// Runs one property sweep over the box, partitioned across `jobs` workers.
/// Results are canonically sorted, so the report is identical for any job
/// count. Throws constraint_error on an empty range or a box over its cap.
VerificationReport run_suite(Suite suite, const SweepBox& box, unsigned jobs = 1);

/// The h1-slope sweep against an arbitrary slope function; run_suite uses
/// surgery_slope. Swapping in a corrupted formula must surface failures
/// (negative control for the whole reporting pipeline).
using SlopeFn = std::function<Int(const FamilyParams&)>;
VerificationReport run_h1_slope(const SweepBox& box, unsigned jobs, const SlopeFn& slope);

/// Raw product-grid size of the box (before any m*p = 0 filtering), used for
/// the cap check.
Int box_grid_size(const SweepBox& box);

/// Stable JSON document: {suite, box, checked, skipped, failures, elapsed_ms}.
/// Deterministic byte-for-byte across runs and worker counts; elapsed_ms is
/// carried as 0 here (measured time is a text-format concern).
std::string to_json(const VerificationReport& report);

/// Human-readable report with measured elapsed time.
std::string to_text(const VerificationReport& report);

}  // namespace seifnet::verify
