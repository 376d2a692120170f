#pragma once

#include <optional>
#include <vector>

#include "lineact/preorder.hpp"
#include "lineact/rep.hpp"

namespace lineact {

struct InsufficientData : std::runtime_error {
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

/// Order-preserving embedding of the first N numbered elements into the
/// dyadics, in insertion order. Values follow the inductive rule: a new
/// maximum lands at max+1, a new minimum at min-1, anything else at the
/// midpoint of its value-neighbors; elements equivalent to a tabled one
/// share its value. Extending N only appends.
class RealizationTable {
 public:
  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  const Dyadic& value(std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(const Word& w) const;
  const Enumeration& enumeration() const { return enumeration_; }

  friend RealizationTable iota(const Preorder& p, const Enumeration& e, std::size_t n);

 private:
  std::vector<Word> words_;
  std::vector<Dyadic> values_;
  Enumeration enumeration_ = Enumeration::free_ball(1, 1);
};

/// Builds the realization table for the first n elements of the numbering.
/// Detects oracle inconsistencies (totality/transitivity violations visible
/// through the neighbor search) and re-verifies order preservation over the
/// whole table before returning.
RealizationTable iota(const Preorder& p, const Enumeration& e, std::size_t n);

struct DichotomyViolation {
  std::size_t index;      // table entry whose neighbor was missing
  unsigned long k;        // grid height of the missing neighbor
  Rational neighbor;      // the missing value
};

struct DichotomyReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<DichotomyViolation> violations;
};

/// Replays the insertion order and verifies that every tabled value of
/// height n had both its height-k grid neighbors already tabled, for all
/// k < min(n, max_height).
DichotomyReport check_dyadic_dichotomy(const RealizationTable& table,
                                       unsigned long max_height = 64);

struct RealizedAction {
  Representation rep;   // free marked group on the generator names
  Window window;        // span of the tabled values
  bool extrapolated;    // slope-1 affine extension beyond the tabled range
};

/// Per generator, the PL interpolation through all pairs (iota(g), iota(sg))
/// available in the table, extended by slope-1 pieces beyond the tabled
/// range. Exact on tabled data; relators of the original group are not
/// imposed (they hold on tabled points only), so the result is a
/// representation of the free group on the given generator names.
RealizedAction realize_generators(const RealizationTable& table,
                                  const std::vector<std::string>& generator_names);

}  // namespace lineact
