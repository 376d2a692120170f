#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lineact/plmap.hpp"
#include "lineact/words.hpp"

namespace lineact {

struct RelatorViolation : std::runtime_error {
  explicit RelatorViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Assignment of the marked generators to PLMaps. Construction verifies
/// every relator exactly: globally by default, or on a stated window for
/// representations assembled from window-truncated data (periodic lifts
/// have infinitely many breakpoints, so their finite PL truncations can
/// only satisfy relators on the assembled range).
class Representation {
 public:
  Representation(MarkedGroup group, std::vector<PLMap> images);
  static Representation window_checked(MarkedGroup group, std::vector<PLMap> images, Window scope);

  const MarkedGroup& group() const { return group_; }
  int generator_count() const { return group_.generator_count(); }
  const PLMap& generator(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const PLMap& generator_inverse(int i) const { return inverses_[static_cast<std::size_t>(i)]; }
  const std::optional<Window>& relator_scope() const { return relator_scope_; }

  /// Homomorphic image of a word, as a normalized PLMap.
  PLMap evaluate(const Word& w) const;

  /// phi(w).x without building the composite map.
  Rational apply(const Word& w, const Rational& x) const;

  /// Image of x under a single letter (enumeration-order index).
  Rational apply_letter(int letter, const Rational& x) const;

 private:
  Representation(MarkedGroup group, std::vector<PLMap> images, std::optional<Window> scope);
  void check_relators() const;

  MarkedGroup group_;
  std::vector<PLMap> images_;
  std::vector<PLMap> inverses_;
  std::optional<Window> relator_scope_;
};

/// The conjugation action (f.phi)(g) = f o phi(g) o f^-1. A windowed relator
/// scope transports to f(scope).
Representation conjugate_rep(const Representation& rep, const PLMap& f);

/// { phi(w).x : |w| <= max_len }, sorted ascending.
std::vector<Rational> orbit(const Representation& rep, const Rational& x, int max_len);

/// Largest gap between consecutive orbit points inside the window, a
/// finite-scale epsilon-density certificate. Points outside the window still
/// bound the edge gaps; if no orbit point lies in the window the gap is the
/// window width.
Rational max_orbit_gap(std::span<const Rational> sorted_points, const Window& w);

/// Max over the word set of the sup distance between the two word images on
/// the window. Zero iff the representations agree there.
Rational rep_distance(const Representation& a, const Representation& b,
                      std::span<const Word> words, const Window& w);

/// Searches words g, h of length <= max_len with phi(g).0 beyond the right
/// window edge and phi(h).0 beyond the left one. Absence is inconclusive.
std::optional<std::pair<Word, Word>> witness_irreducible(const Representation& rep, const Window& w,
                                                         int max_len);

/// Searches a word g with phi(g).[source] strictly inside (target).
std::optional<Word> witness_proximal(const Representation& rep, const Window& source,
                                     const Window& target, int max_len);

}  // namespace lineact
