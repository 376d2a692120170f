#include <doctest.h>

#include <sstream>

#include "lineact/families.hpp"
#include "lineact/io.hpp"
#include "testutil.hpp"

using namespace lineact;
using testutil::kSeed;

TEST_CASE("plmap records round-trip bit-exactly") {
  std::mt19937_64 rng(kSeed + 80);
  for (int i = 0; i < 25; ++i) {
    PLMap f = testutil::random_plmap(rng);
    std::string text = plmap_to_string(f);
    PLMap back = plmap_from_string(text);
    CHECK(back == f);
    CHECK(plmap_to_string(back) == text);
  }
}

TEST_CASE("plmap parse errors") {
  CHECK_THROWS_AS(plmap_from_string("plmap v2\n"), ParseError);
  CHECK_THROWS_AS(plmap_from_string("plmap v1\nbreakpoints 1 1/0\npiece 1 0\npiece 1 0\n"),
                  ParseError);
  // Discontinuous record is rejected by the PLMap validator.
  CHECK_THROWS_AS(plmap_from_string("plmap v1\nbreakpoints 1 0\npiece 1 0\npiece 1 5\n"),
                  ParseError);
  CHECK_THROWS_AS(plmap_from_string("plmap v1\nbreakpoints 0\npiece -1 0\n"), ParseError);
}

TEST_CASE("representation records round-trip, including windowed scopes") {
  Representation bs = bs_affine(2, 3);
  std::ostringstream out;
  write_representation(out, bs);
  std::istringstream in(out.str());
  Representation back = read_representation(in);
  CHECK(back.group().generator_names == bs.group().generator_names);
  CHECK(back.group().relators == bs.group().relators);
  for (int i = 0; i < bs.generator_count(); ++i) CHECK(back.generator(i) == bs.generator(i));
  CHECK(!back.relator_scope().has_value());

  Representation path = bs_path(2, 3, rat(1, 2), bs_default_endpoint(2, 3),
                                PLMap::affine(rat(3, 2), rat(0)));
  std::ostringstream out2;
  write_representation(out2, path);
  std::istringstream in2(out2.str());
  Representation back2 = read_representation(in2);
  REQUIRE(back2.relator_scope().has_value());
  CHECK(back2.relator_scope()->left == path.relator_scope()->left);
  std::ostringstream out3;
  write_representation(out3, back2);
  CHECK(out3.str() == out2.str());
}

TEST_CASE("tampered representation records fail the relator check on load") {
  Representation bs = bs_affine(2, 3);
  std::ostringstream out;
  write_representation(out, bs);
  std::string text = out.str();
  // Change the scaling slope: a b^2 a^-1 = b^3 no longer holds.
  auto pos = text.find("piece 3/2 0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 11, "piece 2/1 0");
  std::istringstream in(text);
  CHECK_THROWS_AS(read_representation(in), RelatorViolation);
}

TEST_CASE("realization table export and import") {
  Representation z(MarkedGroup({"a"}), {PLMap::translation(rat(1))});
  Enumeration e = Enumeration::free_ball(1, 5);
  RealizationTable t = iota(induced_preorder(z), e, 5);
  std::ostringstream out;
  write_table(out, t, {"a"});
  std::istringstream in(out.str());
  auto rows = read_table(in);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].word == "e");
  CHECK(rows[3].word == "a^2");
  CHECK(rows[3].value == rat(2));
  CHECK(rows[4].value == rat(-2));
}

TEST_CASE("transcripts round-trip") {
  Representation z(MarkedGroup({"a"}), {PLMap::translation(rat(1))});
  Enumeration e = Enumeration::free_ball(1, 8);
  auto transcript = make_transcript(induced_preorder(z), e, 8);
  std::ostringstream out;
  write_transcript(out, transcript);
  std::istringstream in(out.str());
  auto back = read_transcript(in);
  REQUIRE(back.size() == transcript.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].i == transcript[i].i);
    CHECK(back[i].j == transcript[i].j);
    CHECK(back[i].verdict == transcript[i].verdict);
  }
}
