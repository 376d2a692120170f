#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lineact/plmap.hpp"
#include "lineact/words.hpp"

namespace lineact {

struct ExcludedOrbit : std::runtime_error {
  explicit ExcludedOrbit(const std::string& what) : std::runtime_error(what) {}
};

/// Point of the binary odometer: an eventually periodic little-endian digit
/// sequence. Internally this is the 2-adic value, a rational with odd
/// denominator, which makes the odometer an exact rational addition and the
/// canonical (preword, period) form a by-product of digit expansion.
class CantorPoint {
 public:
  CantorPoint() : value_(0) {}  // 0^inf
  static CantorPoint zeros() { return CantorPoint(); }
  static CantorPoint from_digits(const std::string& preword, const std::string& period);
  static CantorPoint from_value(const Rational& value);  // denominator must be odd

  const Rational& value() const { return value_; }
  int digit(std::size_t i) const;
  /// Position of the first 1-digit; nullopt for 0^inf.
  std::optional<unsigned long> first_one() const;
  /// Canonical decomposition: minimal period, maximal absorption.
  std::pair<std::string, std::string> digits() const;

  /// Odometer iterate: binary addition of k with carry.
  CantorPoint step(const Integer& k) const { return from_value(value_ + k); }

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
  friend auto operator<=>(const CantorPoint&, const CantorPoint&) = default;

 private:
  Rational value_;
};

/// Point of the suspension Y = (X x R)/Z in the normal form with time in
/// [0, 1): the quotient identification n.(x, t) = (x + n, t - n).
struct SuspensionPoint {
  CantorPoint base;
  Rational time;

  friend bool operator==(const SuspensionPoint&, const SuspensionPoint&) = default;
};

SuspensionPoint suspension_point(const CantorPoint& x, const Rational& t);
SuspensionPoint flow(const SuspensionPoint& p, const Rational& t);

/// One generator of the acting group, described chart-wise. Diagonal
/// elements apply a fixed local map on every fiber of Y_{X,J}; the tower
/// element applies the n-th map of the pinned dyadic sequence on the
/// cylinder C_n = 0^{n-1}1{0,1}^inf over I = (-1/4, 1/4), with the limit map
/// at 0^inf evaluated lazily through the stabilization property.
class ChartElement {
 public:
  enum class Kind { Identity, Diagonal, Tower };

  static ChartElement identity();
  static ChartElement diagonal(PLMap local_on_unit);  // support inside (0,1)
  static ChartElement tower();

  Kind kind() const { return kind_; }
  const PLMap& local() const { return local_; }

  /// Chart interval of the element in normalized fiber coordinates.
  static Rational tower_radius() { return rat(1, 4); }

 private:
  Kind kind_ = Kind::Identity;
  PLMap local_;
};

/// The group G = <f, A, B> of the suspension construction: f is the tower
/// element, A and B the standard Thompson generators rescaled to
/// J = (1/16, 15/16) acting diagonally.
class SuspensionGroup {
 public:
  static SuspensionGroup standard();

  const std::vector<std::string>& names() const { return names_; }
  const ChartElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int element_count() const { return static_cast<int>(elements_.size()); }
  Word parse(const std::string& text) const { return Word::parse(text, names_); }

  /// Flow displacement of a single generator (or inverse) at p.
  Rational letter_tau(int gen, int sign, const SuspensionPoint& p) const;
  /// Cocycle accumulation over the word: g(p) = flow(p, tau(g, p)).
  Rational tau(const Word& w, const SuspensionPoint& p) const;
  SuspensionPoint act(const Word& w, const SuspensionPoint& p) const;

  /// Exact PL graph of rho_y(w): s -> s + tau_w(flow(y, s)), valid on the
  /// window (assembled with enough margin for every intermediate letter).
  PLMap rho(const SuspensionPoint& y, const Word& w, const Window& window) const;

 private:
  /// rho of a single letter, exact on [lo, hi].
  PLMap letter_rho(const SuspensionPoint& y, int gen, int sign, const Rational& lo,
                   const Rational& hi) const;

  std::vector<std::string> names_;
  std::vector<ChartElement> elements_;
};

/// Cylinder index n(x) with C_n = 0^{n-1}1...: 1 + position of the first
/// 1-digit. Throws ExcludedOrbit at x = 0^inf when a PL chart is required.
unsigned long cylinder_index(const CantorPoint& x);

/// The distinguished generators of the acting group.
ChartElement element_f();
std::pair<ChartElement, ChartElement> thompson_generators_on_j();

/// Chart trace along the flow line of y: which cylinder and which local map
/// the tower element uses at each integer chart in the window.
struct ChartTraceRow {
  long k;
  std::string cylinder;  // the prefix 0^{n-1}1
  int local_index;       // n, giving local map f_n
};
std::vector<ChartTraceRow> chart_trace(const SuspensionPoint& y, long k_lo, long k_hi);

struct RecurrenceRow {
  int n;
  Integer t;            // 2^n
  Rational distance;    // rep distance between rho_y and rho_{flow(y, t)}
};

struct RecurrenceReport {
  std::vector<RecurrenceRow> rows;
  std::optional<int> threshold;  // least n with distance exactly 0 from n on
};

/// Finite-scale recurrence witness: distances along the odometer return
/// times 2^n collapse to exactly zero while the conjugating translation
/// grows without bound.
RecurrenceReport recurrence_experiment(const SuspensionGroup& g, const SuspensionPoint& y,
                                       std::span<const Word> words, const Window& window,
                                       int max_n);

}  // namespace lineact
