#pragma once

#include <string>
#include <vector>

#include "anyons/braid_word.hpp"
#include "anyons/unitary.hpp"

namespace anyons {

// One elementary step of the move calculus.  Placement gives the meaning of
// `index`: a tree node id (0-based), the left hole of an adjacent hole pair,
// or a single hole.  Z moves take no index.
struct Move {
  enum class Kind { F, FInv, R, RInv, Z, ZInv, T, TInv };
  enum class Where { Node, HolePair, Hole, Global };

  Kind kind = Kind::F;
  Where where = Where::Node;
  int index = 0;

  static Move f(int node, bool forward = true) {
    return {forward ? Kind::F : Kind::FInv, Where::Node, node};
  }
  static Move r_at_node(int node, bool inverse = false) {
    return {inverse ? Kind::RInv : Kind::R, Where::Node, node};
  }
  static Move r_at_pair(int hole, bool inverse = false) {
    return {inverse ? Kind::RInv : Kind::R, Where::HolePair, hole};
  }
  static Move z(bool inverse = false) {
    return {inverse ? Kind::ZInv : Kind::Z, Where::Global, 0};
  }
  static Move twist(int hole, bool inverse = false) {
    return {inverse ? Kind::TInv : Kind::T, Where::Hole, hole};
  }

  bool inverse_kind() const {
    return kind == Kind::FInv || kind == Kind::RInv || kind == Kind::ZInv ||
           kind == Kind::TInv;
  }
  Move inverted() const;

  // Compact text form, 1-based: "F@node3", "F-@node3", "R@holes2,3",
  // "R-@node1", "Z", "Z-", "T@hole1", "T-@hole2".
  std::string to_string() const;
  static Move parse(const std::string& text);

  bool operator==(const Move&) const = default;
};

// The change-of-basis matrix between the two bracketings of three charges
// fusing to total charge d: rows are indexed by the right-associated interior
// charge y, columns by the left-associated interior charge x, both ascending.
Eigen::MatrixXcd f_matrix(const AnyonModel& model, Label a, Label b, Label c,
                          Label d);

// Re-associates the decomposition at `node` (forward: ((A B) C) -> (A (B C)))
// and returns the unitary from the old basis to the new one.
Unitary apply_f_move(const AnyonModel& model, const BasisRef& basis, int node,
                     bool forward);

// Applies one move starting from `basis`; the result's codomain records the
// surface and decomposition after the move.
Unitary apply_move(const AnyonModel& model, const BasisRef& basis,
                   const Move& move);

// Applies the moves in order (moves[0] first) from `start`, composing the
// step unitaries.  An empty list yields the identity on `start`.
Unitary compose_moves(const AnyonModel& model, const BasisRef& start,
                      const std::vector<Move>& moves);

// F-move path (each move phrased relative to the shape current at its point
// in the sequence) taking `from` to `to` through the left comb.
std::vector<Move> route(const TreeShape& from, const TreeShape& to);

// Counterclockwise exchange of holes i and i+1 (0-based) in the left-comb
// basis of `surface`.  Domain: `surface`; codomain: labels i, i+1 swapped.
Unitary braid_generator(const AnyonModel& model, const StandardSurface& surface,
                        int i);

// Dehn twist about the curve enclosing the leaves under `node`: diagonal with
// the twist phase of the charge observed there.
Unitary dehn_twist(const AnyonModel& model, const BasisRef& basis, int node);

// Compiles a framed braid word to the unitary it induces on the left-comb
// basis of `surface`.  Generators act in word order (first generator first).
Unitary compile(const AnyonModel& model, const StandardSurface& surface,
                const FramedBraidWord& word);

}  // namespace anyons
