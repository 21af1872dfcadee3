#pragma once

#include "seifnet/extfrac.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace seifnet {

enum class BaseSurface { Sphere, Disk, Moebius };

/// |H_1| of a closed Seifert space: a natural number, or infinite when the
/// slot sum vanishes (b_1 > 0).
class H1Order {
public:
  static H1Order finite(Int v) { return H1Order(false, std::move(v)); }
  static H1Order infinite() { return H1Order(true, 0); }

  bool is_infinite() const { return infinite_; }
  const Int& value() const {
    if (infinite_) throw domain_error("H1Order: infinite order has no value");
    return value_;
  }

  std::string str() const { return infinite_ ? "infinite" : value_.str(); }

  friend bool operator==(const H1Order&, const H1Order&) = default;

private:
  H1Order(bool inf, Int v) : infinite_(inf), value_(std::move(v)) {}
  bool infinite_;
  Int value_;
};

/// Seifert fibered space over S^2, D^2, or the Moebius band, encoded by its
/// ordered slot fractions r_i = p_i/q_i (exceptional fiber of index |q_i|
/// when |q_i| >= 2). A slot equal to inf marks a degenerate fiber; such
/// spaces are representable but excluded from every invariant computation.
class SeifertSpace {
public:
  SeifertSpace(BaseSurface base, std::vector<ExtFrac> slots)
      : base_(base), slots_(std::move(slots)) {}

  /// Builds from raw (numerator, denominator) pairs as printed in a
  /// parametric family. A zero denominator raises vanishing_denominator
  /// instead of silently producing a degenerate slot; if a pair needed
  /// reduction that is recorded for diagnostics (the families of interest
  /// are coprime by construction).
  static SeifertSpace from_raw(BaseSurface base,
                               const std::vector<std::pair<Int, Int>>& raw);

  BaseSurface base() const { return base_; }
  const std::vector<ExtFrac>& slots() const { return slots_; }
  bool degenerate() const;
  bool reduction_occurred() const { return reduced_any_; }

  std::string str() const;

private:
  BaseSurface base_;
  std::vector<ExtFrac> slots_;
  bool reduced_any_ = false;
};

/// |sum_i p_i prod_{j!=i} q_j| over the slots, infinite when the sum is 0.
/// Sphere base, no degenerate slot.
H1Order h1_order(const SeifertSpace& x);

/// Canonical form: one leading integer slot accumulating sum_i floor(r_i),
/// then the fractional parts (each in (0,1)) sorted ascending. h1_order and
/// exceptional_fiber_count are invariant. No degenerate slot allowed.
SeifertSpace normalize(const SeifertSpace& x);

/// Number of slots with index |q_i| >= 2 after normalization.
std::size_t exceptional_fiber_count(const SeifertSpace& x);

enum class LensKind { S3, Lens, Neither };

struct LensClassification {
  LensKind kind;
  H1Order order;  // meaningful for Lens; infinite order tags S^1 x S^2

  friend bool operator==(const LensClassification&, const LensClassification&) = default;
};

/// Sphere base, no degenerate slot: Neither with >= 3 exceptional fibers,
/// otherwise a lens space of order |H_1| (S^3 when that order is 1).
LensClassification is_lens_or_s3(const SeifertSpace& x);

/// Disk base with exactly two slots: true iff both slots are non-integers.
bool boundary_irreducible(const SeifertSpace& x);

enum class FibrationCensus { Unique, DiskAndMoebius };

/// Disk base, two slots of index >= 2: the space fibers in exactly two ways
/// (disk and Moebius band) iff |q_1| = |q_2| = 2, else uniquely.
FibrationCensus fibration_census(const SeifertSpace& x);

/// Orientation reversal: negates every slot.
SeifertSpace mirror(const SeifertSpace& x);

/// Orientation-preserving equality, i.e. equality of normalize() output.
bool equivalent(const SeifertSpace& a, const SeifertSpace& b);

}  // namespace seifnet
