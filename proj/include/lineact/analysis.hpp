#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lineact/rep.hpp"

namespace lineact {

struct MeasureNotInvariant : std::runtime_error {
  MeasureNotInvariant(std::string generator, Rational lo, Rational hi)
      : std::runtime_error("measure not invariant under generator '" + generator +
                           "' on [" + to_string(lo) + ", " + to_string(hi) + ")"),
        generator_name(std::move(generator)),
        interval_lo(std::move(lo)),
        interval_hi(std::move(hi)) {}
  std::string generator_name;
  Rational interval_lo, interval_hi;
};

/// Radon measure with piecewise-constant positive density: nu[a, b) is a
/// positive rational computed exactly, and pushforwards under PL maps stay
/// in the class.
class StepMeasure {
 public:
  StepMeasure(std::vector<Rational> breakpoints, std::vector<Rational> densities);
  static StepMeasure lebesgue() { return StepMeasure({}, {Rational(1)}); }

  /// nu[a, b) for a <= b.
  Rational mass(const Rational& a, const Rational& b) const;
  /// nu[x, wx) with the sign convention of the Conrad formula.
  Rational signed_mass(const Rational& x, const Rational& wx) const;

  std::span<const Rational> breakpoints() const { return breakpoints_; }
  const Rational& density_at(const Rational& x) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> densities_;  // breakpoints_.size() + 1
};

/// Exact generator-wise invariance check on the refined partition: the
/// density transport rho(g x) g'(x) = rho(x) piece by piece. Returns the
/// violating generator and a concrete interval when it fails.
std::optional<MeasureNotInvariant> measure_invariance_violation(const Representation& rep,
                                                                const StepMeasure& nu);

/// Conrad homomorphism value nu[x, phi(w) x) at x = 0, after verifying
/// invariance; independence of x is re-verified at three sample points.
Rational conrad_tau(const Representation& rep, const StepMeasure& nu, const Word& w);

/// Scaling cocycle of a projectively invariant measure: each generator must
/// scale nu by an exact constant; kappa of the word is computed directly
/// from phi(w) and agrees with the product over letters by construction.
Rational scaling_cocycle(const Representation& rep, const StepMeasure& nu, const Word& w);

/// Affine-model Conrad value nu[0, phi(w).0) (no full invariance needed,
/// only projective invariance), obeying tau(w1 w2) = tau(w1) + kappa(w1) tau(w2).
Rational affine_tau(const Representation& rep, const StepMeasure& nu, const Word& w);

struct PairingEntry {
  Rational x, y;
};

struct SemiconjugacyWitness {
  bool pass = false;
  int depth = 0;
  std::vector<PairingEntry> pairing;                 // monotone table on PASS
  std::optional<std::pair<Word, Word>> violation;    // order-incompatible pair
};

/// Builds the candidate pointed-semiconjugacy pairing
/// phi1(g).p1 -> phi2(g).p2 over words of length <= depth whose orbit points
/// stay inside the window, and checks order compatibility with ties matching
/// ties. A violation is a certified obstruction to pointed semiconjugacy at
/// these basepoints.
SemiconjugacyWitness semiconjugacy_search(const Representation& rep1, const Representation& rep2,
                                          int depth, const Window& window,
                                          const Rational& basepoint1 = Rational(0),
                                          const std::optional<Rational>& basepoint2 = std::nullopt);

enum class CentralizingVerdict {
  AllTrivial,            // d_k = 0 and e_k = 0 throughout
  ConsistentWithC,       // d_k reaches 0 while e_k decreases toward 0
  NonSmoothnessWitness,  // d_k exactly 0 from some index while e_k stays away from 0
  Inconclusive,
};

struct CentralizingRow {
  std::size_t k;
  Rational d;  // rep distance between f_k . rep and rep
  Rational e;  // sup distance between f_k and the identity
};

struct CentralizingReport {
  std::vector<CentralizingRow> rows;
  std::optional<std::size_t> d_zero_from;  // least index with d == 0 onward
  CentralizingVerdict verdict = CentralizingVerdict::Inconclusive;
};

/// Finite-scale reading of the almost-centralizing criterion: reports
/// d_k = dist(f_k . rep, rep) and e_k = dist(f_k, id) over the window and
/// classifies the tail pattern with explicit thresholds.
CentralizingReport almost_centralizing_test(const Representation& rep,
                                            std::span<const PLMap> f_seq,
                                            std::span<const Word> words, const Window& window);

}  // namespace lineact
