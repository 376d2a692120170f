#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "lineact/rational.hpp"

namespace lineact {

struct Syllable {
  int gen;
  long exp;  // nonzero
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word over numbered generators: adjacent syllables carry
/// distinct generator indices and no syllable has exponent zero.
class Word {
 public:
  Word() = default;
  static Word generator(int gen, long exp = 1);
  static Word from_syllables(std::vector<Syllable> syllables);  // reduces

  bool empty() const { return syllables_.empty(); }
  long length() const;  // number of letters, counting |exp|
  std::span<const Syllable> syllables() const { return syllables_; }

  Word inverse() const;
  Word pow(long k) const;
  friend Word operator*(const Word& a, const Word& b);  // concatenation, reduced

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  /// Renders as e.g. "a b^2 a^-1"; the empty word renders as "e".
  std::string str(std::span<const std::string> names) const;
  static Word parse(const std::string& text, std::span<const std::string> names);

 private:
  std::vector<Syllable> syllables_;
};

struct MarkedGroup {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  MarkedGroup(std::vector<std::string> names, std::vector<Word> rels = {});
  int generator_count() const { return static_cast<int>(generator_names.size()); }
  friend bool operator==(const MarkedGroup&, const MarkedGroup&) = default;
};

/// Letters in the deterministic enumeration order a < a^-1 < b < b^-1 < ...
/// Letter 2i is generator i, letter 2i+1 its inverse.
inline int letter_count(int num_gens) { return 2 * num_gens; }
inline int letter_gen(int letter) { return letter / 2; }
inline long letter_exp(int letter) { return letter % 2 == 0 ? 1 : -1; }
inline int letter_inverse(int letter) { return letter ^ 1; }

Word letters_to_word(std::span<const int> letters);

/// Word for a search trail that extends by applying new letters after the
/// old ones: the trail (l_1, ..., l_k) spells the word l_k ... l_1.
Word trail_to_word(std::span<const int> trail);

/// All freely reduced words of length 1..max_len in length-lexicographic
/// order (the empty word is not included).
std::vector<std::vector<int>> enumerate_letter_words(int num_gens, int max_len);

}  // namespace lineact
