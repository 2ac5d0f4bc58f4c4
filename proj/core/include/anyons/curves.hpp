#pragma once

#include <vector>

#include "anyons/moves.hpp"

namespace anyons {

// A system of curves on the punctured sphere, encoded as the image of the
// standard round-curve diagram under a framed braid.  `surface` holds the
// labels in the current hole order (after the word's exchanges);
// `exterior_choice` counts applied rotations modulo n+1.
struct CurveDiagram {
  StandardSurface surface;
  FramedBraidWord word;
  int exterior_choice = 0;

  bool operator==(const CurveDiagram&) const = default;

  // Labels in pinned-hole order, with the word's permutation undone.
  std::vector<Label> base_labels() const;
};

// Complete invariant of the framed braid: the strand permutation, the framing
// exponents once all twists are pushed to the end, and the images of the free
// generators x_1..x_n under the crossing part (letters +-(k+1), reduced).
struct NormalForm {
  std::vector<int> slot_origin;
  std::vector<int> framings;
  std::vector<std::vector<int>> images;

  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const FramedBraidWord& word);

// True when the diagrams are isotopic: same labeled surface, same rotation
// state, and words equal in the framed braid group.
bool equal(const CurveDiagram& a, const CurveDiagram& b);

// Applies an exchange, twist, or rotation move to the diagram.  Rotations
// renumber the word's strands; a word that braids the hole being rotated out
// cannot be renumbered and raises InputError.
CurveDiagram apply_move(const AnyonModel& model, const CurveDiagram& d,
                        const Move& move);
CurveDiagram apply_moves(const AnyonModel& model, const CurveDiagram& d,
                         const std::vector<Move>& moves);

// A move sequence taking `from` to a diagram equal to `to`.  Requires both
// to describe the same labeled punctured sphere in the same rotation state.
std::vector<Move> refactor(const AnyonModel& model, const CurveDiagram& from,
                           const CurveDiagram& to);

// Executes a move sequence on the fusion space attached to `at`'s surface
// (left-comb decomposition).
Unitary induced_unitary(const AnyonModel& model, const CurveDiagram& at,
                        const std::vector<Move>& moves);

}  // namespace anyons
