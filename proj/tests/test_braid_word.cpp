#include "anyons/braid_word.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace anyons;

TEST_CASE("word text round-trip") {
  FramedBraidWord w = FramedBraidWord::parse("s1 s2^-1 t1", 3);
  REQUIRE(w.gens.size() == 3);
  CHECK(w.gens[0] == BraidGen{BraidGen::Kind::Sigma, 0, 1});
  CHECK(w.gens[1] == BraidGen{BraidGen::Kind::Sigma, 1, -1});
  CHECK(w.gens[2] == BraidGen{BraidGen::Kind::Twist, 0, 1});
  CHECK(w.to_string() == "s1 s2^-1 t1");

  CHECK(FramedBraidWord::parse("e", 4).gens.empty());
  CHECK(FramedBraidWord::parse("", 4).gens.empty());
  CHECK(FramedBraidWord::parse("e", 4).to_string() == "e");
  CHECK(FramedBraidWord::parse("s1^3", 3).to_string() == "s1^3");
  CHECK(FramedBraidWord::parse("t2^-2", 2).to_string() == "t2^-2");

  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FramedBraidWord r = oracle::random_word(4, 10, rng);
    CHECK(FramedBraidWord::parse(r.to_string(), 4) == r);
  }
}

TEST_CASE("word parse errors") {
  CHECK_THROWS_AS(FramedBraidWord::parse("s0", 3), InputError);
  CHECK_THROWS_AS(FramedBraidWord::parse("s3", 3), InputError);  // needs 4
  CHECK_THROWS_AS(FramedBraidWord::parse("t4", 3), InputError);
  CHECK_THROWS_AS(FramedBraidWord::parse("x1", 3), InputError);
  CHECK_THROWS_AS(FramedBraidWord::parse("s1^", 3), InputError);
  CHECK_THROWS_AS(FramedBraidWord::parse("s", 3), InputError);
  CHECK_THROWS_AS(FramedBraidWord::parse("s1x", 3), InputError);
  // Degenerate but harmless inputs.
  CHECK(FramedBraidWord::parse("s1^0", 3).gens.empty());
  CHECK(FramedBraidWord::parse("s1 e s2", 3).gens.size() == 2);
}

TEST_CASE("free reduction on append") {
  FramedBraidWord w = FramedBraidWord::parse("s1 s1", 3);
  REQUIRE(w.gens.size() == 1);
  CHECK(w.gens[0].power == 2);
  CHECK(FramedBraidWord::parse("s1 s1^-1", 3).gens.empty());
  CHECK(FramedBraidWord::parse("s1 s2 s2^-1 s1^-1 t1 t1^-1", 3).gens.empty());
  CHECK(FramedBraidWord::parse("s1^2 s1^-1", 3).to_string() == "s1");
  CHECK(FramedBraidWord::parse("t1 t1 t1^-3", 2).to_string() == "t1^-1");
  // Adjacent different generators never merge.
  CHECK(FramedBraidWord::parse("s1 t1 s1^-1", 2).gens.size() == 3);
}

TEST_CASE("inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FramedBraidWord w = oracle::random_word(5, 8, rng);
    FramedBraidWord winv = w.inverse();
    FramedBraidWord prod = w;
    prod.append(winv);
    CHECK(prod.gens.empty());
    FramedBraidWord prod2 = winv;
    prod2.append(w);
    CHECK(prod2.gens.empty());
  }
  CHECK(FramedBraidWord::parse("s1 s2", 3).inverse().to_string() ==
        "s2^-1 s1^-1");
}

TEST_CASE("strand permutation") {
  // result[j] = where the strand now at position j started.
  FramedBraidWord w = FramedBraidWord::parse("s1", 3);
  CHECK(w.strand_permutation() == std::vector<int>{1, 0, 2});
  FramedBraidWord w2 = FramedBraidWord::parse("s1 s2", 3);
  // Strand 0 crosses to position 1, then to position 2.
  CHECK(w2.strand_permutation() == std::vector<int>{1, 2, 0});
  // Twists never permute.
  FramedBraidWord w3 = FramedBraidWord::parse("t1 t3^5", 3);
  CHECK(w3.strand_permutation() == std::vector<int>{0, 1, 2});
  // Even powers cancel.
  FramedBraidWord w4 = FramedBraidWord::parse("s2^2", 3);
  CHECK(w4.strand_permutation() == std::vector<int>{0, 1, 2});
}
