#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lineact/rational.hpp"

namespace lineact {

struct AffinePiece {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Piecewise-linear orientation-preserving homeomorphism of the line.
///
/// Stored as a strictly increasing breakpoint sequence b_1 < ... < b_k and
/// k+1 affine pieces; piece i covers [b_i, b_{i+1}] with the two end pieces
/// unbounded. Invariants enforced on construction: every slope > 0 and
/// adjacent pieces agree at their common breakpoint as an exact rational
/// identity. Maps are normalized (collinear adjacent pieces merged), so
/// structural equality coincides with functional equality.
class PLMap {
 public:
  PLMap() : pieces_{AffinePiece{Rational(1), Rational(0)}} {}
  PLMap(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces);

  static PLMap identity() { return PLMap(); }
  static PLMap affine(const Rational& slope, const Rational& intercept);
  static PLMap translation(const Rational& t) { return affine(Rational(1), t); }

  /// Interpolates the given strictly increasing nodes, with explicit
  /// unbounded end pieces that must match the first/last node.
  static PLMap through_points(std::span<const std::pair<Rational, Rational>> nodes,
                              const AffinePiece& left, const AffinePiece& right);

  /// Interpolation that is the identity outside [first node, last node];
  /// requires the first and last nodes to lie on the diagonal.
  static PLMap compactly_supported(std::span<const std::pair<Rational, Rational>> nodes);

  Rational operator()(const Rational& x) const;

  PLMap inverse() const;
  PLMap pow(long k) const;

  bool is_identity() const { return breakpoints_.empty() && pieces_[0] == AffinePiece{Rational(1), Rational(0)}; }

  std::span<const Rational> breakpoints() const { return breakpoints_; }
  std::size_t piece_count() const { return pieces_.size(); }
  const AffinePiece& piece(std::size_t i) const { return pieces_[i]; }
  const AffinePiece& piece_at(const Rational& x) const;

  /// Breakpoints and slopes dyadic, slopes powers of two (Thompson-type data).
  bool is_dyadic_map() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  void validate_and_normalize();

  std::vector<Rational> breakpoints_;
  std::vector<AffinePiece> pieces_;  // breakpoints_.size() + 1 entries
};

PLMap compose(const PLMap& f, const PLMap& g);  // x -> f(g(x))

/// T_t o f o T_{-t}: the translation-flow conjugate; breakpoints shift by +t.
PLMap translate_conjugate(const PLMap& f, const Rational& t);

struct Window {
  Rational left, right;

  Window(Rational l, Rational r) : left(std::move(l)), right(std::move(r)) {
    if (!(left < right)) throw std::invalid_argument("empty window");
  }
  Rational width() const { return right - left; }
};

/// Piecewise-linear function with slopes of arbitrary sign; the difference
/// of two PLMaps. Extrema over an interval are attained at breakpoints or
/// endpoints, which keeps sup-distances and fixed sets exactly computable.
class PLCurve {
 public:
  static PLCurve difference(const PLMap& f, const PLMap& g);

  Rational operator()(const Rational& x) const;

  /// Exact sup of |curve| over the closed window.
  Rational sup_abs_over(const Window& w) const;

  /// Exact min over the closed window.
  Rational min_over(const Window& w) const;

  bool is_zero_on(const Window& w) const { return sup_abs_over(w) == 0; }

  /// Zero on (-inf, a] and on [b, +inf).
  bool is_zero_outside(const Rational& a, const Rational& b) const;

  /// Strictly positive on the open interval (a, b).
  bool positive_on_open(const Rational& a, const Rational& b) const;

  std::span<const Rational> breakpoints() const { return breakpoints_; }
  const AffinePiece& piece_at(const Rational& x) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

Rational sup_distance(const PLMap& f, const PLMap& g, const Window& w);

inline bool equal_on_window(const PLMap& f, const PLMap& g, const Window& w) {
  return sup_distance(f, g, w) == 0;
}

/// f and g agree exactly outside the open interval (a, b).
bool agree_outside(const PLMap& f, const PLMap& g, const Rational& a, const Rational& b);

/// Closed component [lo, hi] (a single point when lo == hi).
struct ClosedComponent {
  Rational lo, hi;
  friend bool operator==(const ClosedComponent&, const ClosedComponent&) = default;
};

/// Open component of the complement of the fixed set, with the sign of
/// f - id there (+1 above the diagonal, -1 below).
struct SignComponent {
  Rational lo, hi;
  int sign;
};

struct FixedSet {
  std::vector<ClosedComponent> components;  // maximal, sorted
  std::vector<SignComponent> complement;    // open, sorted, partitions the rest of the window
};

/// Exact fixed set of f within the closed window, as maximal closed
/// components, together with the sign of f - id on the complement.
FixedSet fixed_set(const PLMap& f, const Window& w);

/// Exact endpoints of f((a, b)).
inline std::pair<Rational, Rational> image_of_interval(const PLMap& f, const Rational& a,
                                                       const Rational& b) {
  return {f(a), f(b)};
}

}  // namespace lineact
