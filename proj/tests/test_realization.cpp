#include <doctest.h>

#include "lineact/realization.hpp"
#include "testutil.hpp"

using namespace lineact;
using testutil::kSeed;

namespace {

Representation translation_rep_z() {
  return Representation(MarkedGroup({"a"}), {PLMap::translation(rat(1))});
}

// Random two-generator PL action whose induced preorder is nontrivial.
Representation random_f2_action(std::mt19937_64& rng) {
  while (true) {
    PLMap g1 = testutil::random_plmap(rng, 3);
    PLMap g2 = testutil::random_plmap(rng, 3);
    if (g1(rat(0)) == 0 && g2(rat(0)) == 0) continue;
    return Representation(MarkedGroup({"a", "b"}), {std::move(g1), std::move(g2)});
  }
}

}  // namespace

TEST_CASE("iota hand-run fixtures") {
  // Natural order of Z with the ball numbering 0, 1, -1, 2, -2: every new
  // element is a new max or min.
  Enumeration e = Enumeration::free_ball(1, 5);
  Preorder nat = induced_preorder(translation_rep_z());
  RealizationTable t = iota(nat, e, 5);
  std::vector<Rational> expected{rat(0), rat(1), rat(-1), rat(2), rat(-2)};
  REQUIRE(t.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(t.value(i).to_rational() == expected[i]);

  // Numbering 0, 2, 1: 2 becomes the new max at value 1, then 1 lands at the
  // midpoint 1/2.
  Enumeration custom = Enumeration::explicit_words(
      {Word(), Word::generator(0, 2), Word::generator(0)});
  RealizationTable t2 = iota(nat, custom, 3);
  CHECK(t2.value(0).to_rational() == rat(0));
  CHECK(t2.value(1).to_rational() == rat(1));
  CHECK(t2.value(2).to_rational() == rat(1, 2));

  // Base case.
  RealizationTable t1 = iota(nat, e, 1);
  REQUIRE(t1.size() == 1);
  CHECK(t1.value(0).to_rational() == rat(0));
}

TEST_CASE("ties map to equal values") {
  // BS(2,3) affine: the scaling generator is equivalent to the identity.
  Word relator = Word::generator(0) * Word::generator(1, 2) * Word::generator(0, -1) *
                 Word::generator(1, -3);
  Representation bs(MarkedGroup({"a", "b"}, {relator}),
                    {PLMap::affine(rat(3, 2), rat(0)), PLMap::translation(rat(1))});
  Enumeration e = Enumeration::free_ball(2, 30);
  RealizationTable t = iota(induced_preorder(bs), e, 30);
  auto idx_a = t.index_of(Word::generator(0));
  REQUIRE(idx_a.has_value());
  CHECK(t.value(*idx_a).to_rational() == rat(0));
}

TEST_CASE("prefix stability") {
  std::mt19937_64 rng(kSeed + 30);
  Representation rep = random_f2_action(rng);
  Enumeration e = Enumeration::free_ball(2, 80);
  Preorder p = induced_preorder(rep);
  RealizationTable small = iota(p, e, 60);
  RealizationTable big = iota(p, e, 80);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small.value(i) == big.value(i));
}

TEST_CASE("oracle inconsistency is detected") {
  Enumeration e = Enumeration::explicit_words(
      {Word(), Word::generator(0), Word::generator(0, 2), Word::generator(0, 3)});
  // Cyclic "order" a < a^2 < a^3 < a, identity below everything.
  Preorder bad([](const Word& a, const Word& b) {
    auto rank = [](const Word& w) { return w.empty() ? 0 : w.syllables()[0].exp; };
    long ra = rank(a), rb = rank(b);
    if (ra == rb) return Cmp::Equiv;
    if (ra == 0) return Cmp::Less;
    if (rb == 0) return Cmp::Greater;
    if ((ra == 1 && rb == 2) || (ra == 2 && rb == 3) || (ra == 3 && rb == 1)) return Cmp::Less;
    return Cmp::Greater;
  });
  CHECK_THROWS_AS(iota(bad, e, 4), OracleInconsistency);
}

TEST_CASE("dyadic dichotomy replay") {
  Enumeration e = Enumeration::free_ball(1, 5);
  Preorder nat = induced_preorder(translation_rep_z());
  DichotomyReport vacuous = check_dyadic_dichotomy(iota(nat, e, 5));
  CHECK(vacuous.pass);  // all heights 0

  Enumeration custom = Enumeration::explicit_words(
      {Word(), Word::generator(0, 2), Word::generator(0)});
  DichotomyReport mid = check_dyadic_dichotomy(iota(nat, custom, 3));
  CHECK(mid.pass);  // 1/2 has height 1; 0 and 1 are tabled before it

  std::mt19937_64 rng(kSeed + 31);
  for (int trial = 0; trial < 6; ++trial) {
    Representation rep = random_f2_action(rng);
    Enumeration ball = Enumeration::free_ball(2, 150);
    RealizationTable t = iota(induced_preorder(rep), ball, 150);
    CHECK(check_dyadic_dichotomy(t).pass);
  }

  // One deeper replay.
  Representation rep = random_f2_action(rng);
  Enumeration ball = Enumeration::free_ball(2, 500);
  CHECK(check_dyadic_dichotomy(iota(induced_preorder(rep), ball, 500)).pass);
}

TEST_CASE("realize_generators on the Z fixture gives the exact translation") {
  Enumeration e = Enumeration::free_ball(1, 5);
  Preorder nat = induced_preorder(translation_rep_z());
  RealizationTable t = iota(nat, e, 5);
  RealizedAction action = realize_generators(t, {"a"});
  CHECK(action.extrapolated);
  CHECK(action.window.left == rat(-2));
  CHECK(action.window.right == rat(2));
  // Tabled pairs (k, k+1) interpolate to the global translation by 1.
  CHECK(action.rep.generator(0) == PLMap::translation(rat(1)));
}

TEST_CASE("N=2 gives a single affine piece through two points") {
  Enumeration e = Enumeration::free_ball(1, 3);
  Preorder nat = induced_preorder(translation_rep_z());
  RealizationTable t = iota(nat, e, 3);  // values 0, 1, -1
  RealizedAction action = realize_generators(t, {"a"});
  // Pairs: (0 -> 1), (-1 -> 0): slope-1 interpolation equals T_1.
  CHECK(action.rep.generator(0) == PLMap::translation(rat(1)));
}

TEST_CASE("equivariance on tabled data and the round trip") {
  std::mt19937_64 rng(kSeed + 32);
  for (int trial = 0; trial < 5; ++trial) {
    Representation rep = random_f2_action(rng);
    Enumeration e = Enumeration::free_ball(2, 120);
    Preorder p = induced_preorder(rep);
    RealizationTable t = iota(p, e, 120);
    RealizedAction action = realize_generators(t, {"a", "b"});

    // value(s g) = realized(s)(value(g)) whenever both sides are tabled.
    for (int gen = 0; gen < 2; ++gen) {
      Word s = Word::generator(gen);
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto j = t.index_of(e.multiply(s, t.word(i)));
        if (!j) continue;
        CHECK(action.rep.generator(gen)(t.value(i).to_rational()) ==
              t.value(*j).to_rational());
      }
    }

    // Round trip: the realized action induces the same preorder on tabled
    // elements.
    Preorder induced = induced_preorder(action.rep);
    for (std::size_t i = 0; i < t.size(); i += 3)
      for (std::size_t j = 0; j < t.size(); j += 5)
        CHECK(induced.compare(t.word(i), t.word(j)) == p.compare(t.word(i), t.word(j)));
  }
}

TEST_CASE("insufficient data is reported") {
  Enumeration e = Enumeration::free_ball(1, 2);  // identity and a only
  Preorder nat = induced_preorder(translation_rep_z());
  RealizationTable t = iota(nat, e, 2);
  // Pairs for the generator: (0 -> 1) only, since a^2 is not tabled.
  CHECK_THROWS_AS(realize_generators(t, {"a"}), InsufficientData);
}
