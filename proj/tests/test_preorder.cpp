#include <doctest.h>

#include <set>
#include <thread>

#include "lineact/preorder.hpp"
#include "testutil.hpp"

using namespace lineact;
using testutil::kSeed;

namespace {

Representation translation_rep_z() {
  return Representation(MarkedGroup({"a"}), {PLMap::translation(rat(1))});
}

Representation bs23() {
  Word relator = Word::generator(0) * Word::generator(1, 2) * Word::generator(0, -1) *
                 Word::generator(1, -3);
  return Representation(MarkedGroup({"a", "b"}, {relator}),
                        {PLMap::affine(rat(3, 2), rat(0)), PLMap::translation(rat(1))});
}

// Z^2 with the lexicographic left-order on exponent vectors.
Preorder z2_lex() {
  auto norm = Enumeration::abelian_normalizer();
  return Preorder(
      [norm](const Word& a, const Word& b) {
        for (int g = 0; g < 2; ++g) {
          long ea = 0, eb = 0;
          for (const auto& s : a.syllables())
            if (s.gen == g) ea = s.exp;
          for (const auto& s : b.syllables())
            if (s.gen == g) eb = s.exp;
          if (ea < eb) return Cmp::Less;
          if (ea > eb) return Cmp::Greater;
        }
        return Cmp::Equiv;
      },
      norm);
}

long exponent_of(const Word& w, int gen) {
  for (const auto& s : w.syllables())
    if (s.gen == gen) return s.exp;
  return 0;
}

}  // namespace

TEST_CASE("enumerations") {
  Enumeration z = Enumeration::free_ball(1, 5);
  CHECK(z.word(0).empty());
  CHECK(z.word(1) == Word::generator(0));
  CHECK(z.word(2) == Word::generator(0, -1));
  CHECK(z.word(3) == Word::generator(0, 2));
  CHECK(z.word(4) == Word::generator(0, -2));
  CHECK(z.index_of(Word::generator(0, 2)) == 3);
  CHECK(!z.index_of(Word::generator(0, 7)).has_value());

  Enumeration z2 = Enumeration::normalized_ball(2, 20, Enumeration::abelian_normalizer());
  // a b and b a normalize to the same element; no duplicates.
  std::set<Word> seen;
  for (std::size_t i = 0; i < z2.size(); ++i) CHECK(seen.insert(z2.word(i)).second);
  CHECK(z2.multiply(Word::generator(1), Word::generator(0)) ==
        z2.normalize(Word::generator(0) * Word::generator(1)));
}

TEST_CASE("degenerate numberings are rejected") {
  CHECK_THROWS_AS(Enumeration::explicit_words({Word(), Word::generator(0), Word::generator(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Enumeration::explicit_words({Word::generator(0)}), std::invalid_argument);
}

TEST_CASE("induced preorder of the translation action is the natural order") {
  Preorder p = induced_preorder(translation_rep_z());
  CHECK(p.compare(Word(), Word::generator(0)) == Cmp::Less);
  CHECK(p.compare(Word::generator(0, 3), Word::generator(0, 2)) == Cmp::Greater);
  CHECK(p.compare(Word::generator(0, -1), Word::generator(0)) == Cmp::Less);
  CHECK(p.compare(Word::generator(0, 2) * Word::generator(0, -2), Word()) == Cmp::Equiv);
}

TEST_CASE("trivial representations are rejected") {
  Representation trivial(MarkedGroup({"a"}), {PLMap::identity()});
  CHECK_THROWS_AS(induced_preorder(trivial), TrivialPreorder);
  // Every word of <x -> 2x> fixes the basepoint, so the induced preorder is
  // trivial even though the action is not.
  Representation scaling(MarkedGroup({"a"}), {PLMap::affine(rat(2), rat(0))});
  CHECK_THROWS_AS(induced_preorder(scaling), TrivialPreorder);
}

TEST_CASE("BS(2,3) induced preorder resolves comparisons exactly") {
  Preorder p = induced_preorder(bs23());
  // The affine generator a fixes the basepoint, so it sits in the residue;
  // b translates and is positive.
  CHECK(p.compare(Word(), Word::generator(0)) == Cmp::Equiv);
  CHECK(p.compare(Word(), Word::generator(1)) == Cmp::Less);
  CHECK(p.compare(Word(), Word::generator(1) * Word::generator(0, -1)) == Cmp::Less);
  // b a^-1 . 0 = 1 and a b . 0 = 3/2: resolved exactly.
  CHECK(p.compare(Word::generator(1) * Word::generator(0, -1),
                  Word::generator(0) * Word::generator(1)) == Cmp::Less);
}

TEST_CASE("preorder axioms hold on the lexicographic order") {
  Enumeration e = Enumeration::normalized_ball(2, 60, Enumeration::abelian_normalizer());
  AxiomCheck check = check_preorder_axioms(z2_lex(), e, 60, 5);
  CHECK(check.ok);

  // A deliberately broken "preorder" (not left-invariant) is caught.
  Preorder broken([](const Word& a, const Word& b) {
    long la = a.length(), lb = b.length();
    if (la < lb) return Cmp::Less;
    if (la > lb) return Cmp::Greater;
    return Cmp::Equiv;
  });
  AxiomCheck bad = check_preorder_axioms(broken, e, 40, 3);
  CHECK(!bad.ok);
}

TEST_CASE("basepoint-preserving conjugation leaves the induced preorder unchanged") {
  std::mt19937_64 rng(kSeed + 20);
  Representation rep = bs23();
  Enumeration e = Enumeration::free_ball(2, 40);
  for (int trial = 0; trial < 5; ++trial) {
    // Random PL map fixing 0.
    PLMap f = testutil::random_plmap(rng);
    f = compose(PLMap::translation(-f(rat(0))), f);
    REQUIRE(f(rat(0)) == 0);
    Preorder p1 = induced_preorder(rep);
    Preorder p2 = induced_preorder(conjugate_rep(rep, f));
    for (std::size_t i = 0; i < 25; ++i)
      for (std::size_t j = 0; j < 25; ++j)
        CHECK(p1.compare(e.word(i), e.word(j)) == p2.compare(e.word(i), e.word(j)));
  }
}

TEST_CASE("convexity verdicts") {
  Enumeration e2 = Enumeration::normalized_ball(2, 200, Enumeration::abelian_normalizer());
  Preorder lex = z2_lex();

  auto whole = [](const Word&) { return true; };
  CHECK(is_convex(whole, lex, e2, 200).pass);

  // Second factor <b> is convex for the lexicographic order on (a, b).
  auto second_factor = [](const Word& w) {
    for (const auto& s : w.syllables())
      if (s.gen == 0 && s.exp != 0) return false;
    return true;
  };
  CHECK(is_convex(second_factor, lex, e2, 200).pass);

  // 2Z inside Z with the natural order fails with witness (1, 2).
  Enumeration ez = Enumeration::free_ball(1, 50);
  Preorder nat = induced_preorder(translation_rep_z());
  auto evens = [](const Word& w) {
    long e = 0;
    for (const auto& s : w.syllables()) e += s.exp;
    return e % 2 == 0;
  };
  ConvexityVerdict v = is_convex(evens, nat, ez, 50);
  REQUIRE(!v.pass);
  CHECK(v.violation->first == Word::generator(0));
  CHECK(v.violation->second == Word::generator(0, 2));
}

TEST_CASE("minimal model collapses the supplied convex subgroup") {
  Enumeration e2 = Enumeration::normalized_ball(2, 120, Enumeration::abelian_normalizer());
  Preorder lex = z2_lex();
  auto second_factor = [](const Word& w) {
    for (const auto& s : w.syllables())
      if (s.gen == 0 && s.exp != 0) return false;
    return true;
  };
  Preorder collapsed = minimal_model(lex, second_factor, e2, 120);

  // Direct construction: compare only the first coordinate.
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 60; ++j) {
      long a_i = exponent_of(e2.word(i), 0), a_j = exponent_of(e2.word(j), 0);
      Cmp expected = a_i < a_j ? Cmp::Less : a_i > a_j ? Cmp::Greater : Cmp::Equiv;
      CHECK(collapsed.compare(e2.word(i), e2.word(j)) == expected);
    }

  // Idempotence with the same subgroup oracle.
  Preorder twice = minimal_model(collapsed, second_factor, e2, 120);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j)
      CHECK(twice.compare(e2.word(i), e2.word(j)) == collapsed.compare(e2.word(i), e2.word(j)));

  // Trivial residue, trivial convex subgroup: unchanged.
  Enumeration ez = Enumeration::free_ball(1, 40);
  Preorder nat = induced_preorder(translation_rep_z());
  auto only_identity = [&ez](const Word& w) { return ez.normalize(w).empty(); };
  Preorder same = minimal_model(nat, only_identity, ez, 40);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j)
      CHECK(same.compare(ez.word(i), ez.word(j)) == nat.compare(ez.word(i), ez.word(j)));

  // H_max = whole group signals the degenerate case.
  auto everything = [](const Word&) { return true; };
  CHECK_THROWS_AS(minimal_model(nat, everything, ez, 40), NoMinimalModel);
}

TEST_CASE("concurrent readers see consistent verdicts") {
  Enumeration e = Enumeration::free_ball(2, 60);
  Representation bs = bs23();
  Preorder p = induced_preorder(bs);
  std::vector<Cmp> serial;
  for (std::size_t i = 0; i < 60; ++i)
    for (std::size_t j = 0; j < 60; ++j) serial.push_back(p.compare(e.word(i), e.word(j)));

  Preorder fresh = induced_preorder(bs);
  std::vector<std::vector<Cmp>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < 60; ++i)
        for (std::size_t j = 0; j < 60; ++j)
          results[static_cast<std::size_t>(t)].push_back(fresh.compare(e.word(i), e.word(j)));
    });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == serial);
}

TEST_CASE("transcripts replay without the oracle") {
  Enumeration e = Enumeration::free_ball(1, 20);
  Preorder nat = induced_preorder(translation_rep_z());
  auto transcript = make_transcript(nat, e, 20);
  Preorder replay = replay_preorder(transcript, e);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j)
      CHECK(replay.compare(e.word(i), e.word(j)) == nat.compare(e.word(i), e.word(j)));
  CHECK_THROWS_AS(replay.compare(Word::generator(0, 100), Word()), OracleInconsistency);
}
