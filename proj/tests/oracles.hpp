#pragma once

// Independent cross-checks for the unit and acceptance tests. Everything in
// this file is implemented directly against raw model data or plain word
// lists, on purpose duplicating none of the library's code paths, so that
// the two sides can disagree when one of them is wrong.

#include <random>
#include <string>
#include <vector>

#include "anyons/braid_word.hpp"
#include "anyons/model.hpp"

namespace oracle {

// Number of admissible charge assignments of a linear fusion chain over the
// interior labels, with total charge dual(exterior). Pure enumeration: walks
// every label assignment and counts, using only the raw fusion triple list.
long long count_trees(const anyons::ModelData& d,
                      const std::vector<anyons::Label>& interior,
                      anyons::Label exterior);

// Worst-case residuals of the coherence equations, evaluated straight from
// the raw symbol tables (vacuum entries synthesized, inadmissible = 0).
double pentagon_residual(const anyons::ModelData& d);
double hexagon_residual(const anyons::ModelData& d);
double ribbon_residual(const anyons::ModelData& d);

// Independent framed-braid invariant: strand origins per final slot, twist
// exponents per final slot, and the free-group images of the generators
// under the crossing part (computed right-to-left, unlike the library).
struct WordInvariant {
  std::vector<int> origin;
  std::vector<int> framing;
  std::vector<std::vector<int>> images;
  bool operator==(const WordInvariant&) const = default;
};

WordInvariant word_invariant(const anyons::FramedBraidWord& w);

bool words_equal(const anyons::FramedBraidWord& a,
                 const anyons::FramedBraidWord& b);

// A different word representing the same framed braid, produced by `steps`
// random applications of the defining relations (each rewrite preserves the
// group element by construction).
anyons::FramedBraidWord rewrite_equivalent(const anyons::FramedBraidWord& w,
                                           std::mt19937& rng, int steps);

// A uniformly random word with `len` single-power generators.
anyons::FramedBraidWord random_word(int num_strands, int len,
                                    std::mt19937& rng, bool with_twists = true);

}  // namespace oracle
