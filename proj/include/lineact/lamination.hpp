#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lineact/rep.hpp"

namespace lineact {

/// Open bounded nonempty interval (a, b).
struct LeafInterval {
  Rational a, b;

  LeafInterval(Rational lo, Rational hi) : a(std::move(lo)), b(std::move(hi)) {
    if (!(a < b)) throw std::invalid_argument("leaf interval must be nonempty");
  }
  friend bool operator==(const LeafInterval&, const LeafInterval&) = default;
};

/// Intervals overlap with neither containing the other.
bool crossed(const LeafInterval& i, const LeafInterval& j);

struct PrelaminationVerdict {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> first_crossing;  // lexicographically first
};

PrelaminationVerdict is_prelamination(std::span<const LeafInterval> leaves);

/// Depth-bounded wandering certificate: every word image of the interval
/// either equals it exactly or misses it. Never an unconditional claim; the
/// verdict records the depth it was checked at.
struct WanderingVerdict {
  bool pass = true;
  int depth = 0;
  std::optional<Word> violation;
};

WanderingVerdict wandering_certificate(const Representation& rep, const LeafInterval& leaf,
                                       int max_len);

enum class IrreducibleStatus {
  Pass,                 // stabilizers found, no common fixed point inside the leaf
  NoStabilizers,        // inconclusive: only the identity stabilizes at this depth
  CommonFixedPoint,     // stabilizers share fixed points inside the leaf
};

struct IrreducibleVerdict {
  IrreducibleStatus status;
  int depth = 0;
  std::vector<Word> stabilizers;
  std::vector<ClosedComponent> common_fixed;  // nonempty for CommonFixedPoint
};

/// Requires a passing wandering certificate at the same depth; examines the
/// stabilizing words found up to max_len and intersects their exact fixed
/// sets inside the leaf.
IrreducibleVerdict irreducible_wandering_check(const Representation& rep, const LeafInterval& leaf,
                                               int max_len);

/// Intersection of two sorted lists of disjoint closed components.
std::vector<ClosedComponent> intersect_components(std::span<const ClosedComponent> a,
                                                  std::span<const ClosedComponent> b);

}  // namespace lineact
