#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lineact/rep.hpp"
#include "lineact/words.hpp"

namespace lineact {

enum class Cmp { Less, Equiv, Greater };

inline Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::Less: return Cmp::Greater;
    case Cmp::Greater: return Cmp::Less;
    default: return Cmp::Equiv;
  }
}

std::string cmp_symbol(Cmp c);

struct TrivialPreorder : std::runtime_error {
  explicit TrivialPreorder(const std::string& what) : std::runtime_error(what) {}
};
struct OracleInconsistency : std::runtime_error {
  explicit OracleInconsistency(const std::string& what) : std::runtime_error(what) {}
};
struct NoMinimalModel : std::runtime_error {
  explicit NoMinimalModel(const std::string& what) : std::runtime_error(what) {}
};

/// Numbering (g_i) of group elements as words, with g_0 the identity.
/// Multiplication works through a normalizer: plain free reduction by
/// default, or a relator-aware normal form for specific groups (e.g. the
/// abelian collector for Z^n).
class Enumeration {
 public:
  using Normalizer = std::function<Word(const Word&)>;

  static Normalizer free_normalizer();
  /// Sorts syllables by generator and collects exponents (valid for Z^n).
  static Normalizer abelian_normalizer();

  /// First `count` elements of the free group in length-lex order.
  static Enumeration free_ball(int num_gens, std::size_t count);
  /// Length-lex enumeration deduplicated through the normalizer (e.g. Z^n).
  static Enumeration normalized_ball(int num_gens, std::size_t count, Normalizer norm);
  /// Explicit numbering; words are normalized and must be distinct, with the
  /// identity first.
  static Enumeration explicit_words(std::vector<Word> words, Normalizer norm = free_normalizer());

  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_.at(i); }
  Word normalize(const Word& w) const { return norm_(w); }
  Word multiply(const Word& a, const Word& b) const { return norm_(a * b); }
  std::optional<std::size_t> index_of(const Word& w) const;

 private:
  std::vector<Word> words_;
  Normalizer norm_;
  std::map<Word, std::size_t> index_;

  void build_index();
};

/// Left-preorder given by a comparison oracle. Comparisons are memoized
/// against normalized words behind a mutex, so a Preorder can be shared by
/// concurrent readers.
class Preorder {
 public:
  using Oracle = std::function<Cmp(const Word&, const Word&)>;

  Preorder(Oracle oracle, Enumeration::Normalizer norm = Enumeration::free_normalizer());

  Cmp compare(const Word& a, const Word& b) const;
  bool positive(const Word& w) const { return compare(Word(), w) == Cmp::Less; }
  bool residue(const Word& w) const { return compare(Word(), w) == Cmp::Equiv; }

 private:
  Oracle oracle_;
  Enumeration::Normalizer norm_;
  struct Cache {
    std::mutex mu;
    std::map<std::pair<Word, Word>, Cmp> memo;
  };
  std::shared_ptr<Cache> cache_;
};

/// g <= h iff phi(g).0 <= phi(h).0. Rejects representations whose induced
/// preorder is trivial (every generator fixes 0, hence every word does).
Preorder induced_preorder(const Representation& rep);

struct AxiomCheck {
  bool ok = true;
  std::string detail;  // first violation, empty when ok
};

/// Spot-checks reflexivity, antisymmetry of the verdicts, transitivity and
/// left-invariance on the first N elements of the numbering.
AxiomCheck check_preorder_axioms(const Preorder& p, const Enumeration& e, std::size_t n,
                                 std::size_t sample_stride = 7);

struct ConvexityVerdict {
  bool pass = false;
  std::size_t checked = 0;
  std::optional<std::pair<Word, Word>> violation;  // (g, h): e <= g <= h, h in H, g not
};

ConvexityVerdict is_convex(const std::function<bool(const Word&)>& in_subgroup, const Preorder& p,
                           const Enumeration& e, std::size_t n);

/// Collapses the supplied maximal convex subgroup: the positive cone loses
/// H_max and the residue becomes H_max. Throws NoMinimalModel when H_max
/// swallows the whole tested prefix, and OracleInconsistency when the result
/// fails its left-invariance re-check on the prefix.
Preorder minimal_model(const Preorder& p, const std::function<bool(const Word&)>& in_h_max,
                       const Enumeration& e, std::size_t check_prefix);

/// Replayable transcript of verdicts over the numbering.
struct TranscriptEntry {
  std::size_t i, j;
  Cmp verdict;
};

std::vector<TranscriptEntry> make_transcript(const Preorder& p, const Enumeration& e,
                                             std::size_t n);

/// Preorder answering from a transcript, without the original oracle.
/// Queries outside the transcript throw OracleInconsistency.
Preorder replay_preorder(std::vector<TranscriptEntry> transcript, const Enumeration& e);

}  // namespace lineact
