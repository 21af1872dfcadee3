#include "seifnet/seifert.hpp"

#include <algorithm>

namespace seifnet {

namespace {

const char* base_name(BaseSurface b) {
  switch (b) {
    case BaseSurface::Sphere: return "S2";
    case BaseSurface::Disk: return "D2";
    case BaseSurface::Moebius: return "Mb";
  }
  return "?";
}

void require_not_degenerate(const SeifertSpace& x, const char* op) {
  if (x.degenerate())
    throw domain_error(std::string(op) + ": degenerate slot (inf) excluded");
}

void require_base(const SeifertSpace& x, BaseSurface b, const char* op) {
  if (x.base() != b)
    throw domain_error(std::string(op) + ": wrong base surface");
}

}  // namespace

SeifertSpace SeifertSpace::from_raw(BaseSurface base,
                                    const std::vector<std::pair<Int, Int>>& raw) {
  std::vector<ExtFrac> slots;
  slots.reserve(raw.size());
  bool reduced = false;
  for (const auto& [p, q] : raw) {
    if (q == 0)
      throw vanishing_denominator("SeifertSpace: slot denominator vanishes");
    ExtFrac slot(p, q);
    reduced = reduced || slot.den() != boost::multiprecision::abs(q);
    slots.push_back(std::move(slot));
  }
  SeifertSpace x(base, std::move(slots));
  x.reduced_any_ = reduced;
  return x;
}

bool SeifertSpace::degenerate() const {
  return std::any_of(slots_.begin(), slots_.end(),
                     [](const ExtFrac& r) { return r.is_infinite(); });
}

std::string SeifertSpace::str() const {
  std::string s = base_name(base_);
  s += "(";
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) s += ", ";
    s += slots_[i].str();
  }
  s += ")";
  return s;
}

H1Order h1_order(const SeifertSpace& x) {
  require_base(x, BaseSurface::Sphere, "h1_order");
  require_not_degenerate(x, "h1_order");
  Int sum = 0;
  for (std::size_t i = 0; i < x.slots().size(); ++i) {
    Int term = x.slots()[i].num();
    for (std::size_t j = 0; j < x.slots().size(); ++j)
      if (j != i) term *= x.slots()[j].den();
    sum += term;
  }
  if (sum == 0) return H1Order::infinite();
  return H1Order::finite(boost::multiprecision::abs(sum));
}

SeifertSpace normalize(const SeifertSpace& x) {
  require_not_degenerate(x, "normalize");
  Int integer_part = 0;
  std::vector<ExtFrac> fractional;
  for (const ExtFrac& r : x.slots()) {
    Int fl = r.floor();
    integer_part += fl;
    ExtFrac frac = r - ExtFrac(fl);
    if (!frac.is_zero()) fractional.push_back(std::move(frac));
  }
  std::sort(fractional.begin(), fractional.end());
  std::vector<ExtFrac> slots;
  slots.reserve(fractional.size() + 1);
  slots.emplace_back(std::move(integer_part));
  for (auto& f : fractional) slots.push_back(std::move(f));
  return SeifertSpace(x.base(), std::move(slots));
}

std::size_t exceptional_fiber_count(const SeifertSpace& x) {
  SeifertSpace n = normalize(x);
  return static_cast<std::size_t>(
      std::count_if(n.slots().begin(), n.slots().end(),
                    [](const ExtFrac& r) { return r.den() >= 2; }));
}

LensClassification is_lens_or_s3(const SeifertSpace& x) {
  require_base(x, BaseSurface::Sphere, "is_lens_or_s3");
  require_not_degenerate(x, "is_lens_or_s3");
  if (exceptional_fiber_count(x) >= 3)
    return {LensKind::Neither, H1Order::infinite()};
  H1Order h1 = h1_order(x);
  if (!h1.is_infinite() && h1.value() == 1) return {LensKind::S3, h1};
  return {LensKind::Lens, h1};
}

bool boundary_irreducible(const SeifertSpace& x) {
  require_base(x, BaseSurface::Disk, "boundary_irreducible");
  require_not_degenerate(x, "boundary_irreducible");
  if (x.slots().size() != 2)
    throw domain_error("boundary_irreducible: exactly two slots required");
  return !x.slots()[0].is_integer() && !x.slots()[1].is_integer();
}

FibrationCensus fibration_census(const SeifertSpace& x) {
  require_base(x, BaseSurface::Disk, "fibration_census");
  require_not_degenerate(x, "fibration_census");
  if (x.slots().size() != 2)
    throw domain_error("fibration_census: exactly two slots required");
  const Int& q1 = x.slots()[0].den();
  const Int& q2 = x.slots()[1].den();
  if (q1 < 2 || q2 < 2)
    throw domain_error("fibration_census: both slot indices must be >= 2");
  return (q1 == 2 && q2 == 2) ? FibrationCensus::DiskAndMoebius
                              : FibrationCensus::Unique;
}

SeifertSpace mirror(const SeifertSpace& x) {
  std::vector<ExtFrac> slots;
  slots.reserve(x.slots().size());
  for (const ExtFrac& r : x.slots()) slots.push_back(-r);
  return SeifertSpace(x.base(), std::move(slots));
}

bool equivalent(const SeifertSpace& a, const SeifertSpace& b) {
  if (a.base() != b.base()) return false;
  return normalize(a).slots() == normalize(b).slots();
}

}  // namespace seifnet
