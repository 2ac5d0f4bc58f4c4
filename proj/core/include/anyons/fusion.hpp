#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "anyons/model.hpp"

namespace anyons {

struct ShapeEdit;

// A disc with n interior holes in standard position: interior labels listed
// left to right, plus the exterior label. Hole indices are 0-based in the
// C++ API; all text formats (shape strings, braid words, the CLI) are 1-based.
struct StandardSurface {
  std::vector<Label> interior;
  Label exterior = 0;
  int num_holes() const { return static_cast<int>(interior.size()); }
  bool operator==(const StandardSurface&) const = default;
};

// Full binary tree over n ordered leaves (a pair-of-pants decomposition of a
// standard surface). Nodes are stored in post-order; ids index `nodes`.
// Every node spans a contiguous leaf interval [first, first + count).
class TreeShape {
 public:
  struct Node {
    int left = -1, right = -1;  // child ids; -1 marks a leaf
    int first = 0, count = 0;
    bool operator==(const Node&) const = default;
  };

  TreeShape() = default;  // the empty shape (zero leaves)

  // (((1 2) 3) ... n), the canonical default decomposition.
  static TreeShape left_comb(int n);
  // Parses "((1 2) (3 4))" style text with 1-based leaves. Throws InputError
  // on malformed text or out-of-order leaves. "()" denotes the empty shape.
  static TreeShape parse(const std::string& text);
  // All full binary trees over n leaves, deterministically ordered.
  static std::vector<TreeShape> all_shapes(int n);

  int leaf_count() const { return root_ < 0 ? 0 : nodes_[root_].count; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const Node& node(int id) const;
  bool is_leaf(int id) const { return node(id).left < 0; }
  // Node id of the leaf at hole position `hole` (0-based).
  int leaf_node(int hole) const;
  // Node id spanning exactly [first, first + count), or -1.
  int node_spanning(int first, int count) const;
  std::vector<int> post_order() const;           // all nodes, children first
  std::vector<int> internal_post_order() const;  // internal nodes only
  std::string to_string() const;
  bool operator==(const TreeShape&) const = default;

  // Used by the structural-edit helpers below.
  struct Builder {
    int leaf();                  // next leaf position
    int join(int left, int right);
    TreeShape finish(int root);
    std::vector<Node> nodes;
  };

  // Relabels an arbitrarily-ordered node pool (reached from `root`) into
  // canonical post-order storage, recomputing leaf spans. `origin`, parallel
  // to `raw` when non-empty, is carried into the edit's old_of_new.
  static ShapeEdit normalize(const std::vector<Node>& raw, int root,
                             const std::vector<int>& origin);

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Result of a structural edit: the new shape plus, for every new node id,
// the old node id it carries over from (-1 for a freshly created node).
struct ShapeEdit {
  TreeShape shape;
  std::vector<int> old_of_new;
};

// Re-association at internal node v. forward: ((A B) C) -> (A (B C)),
// requires v's left child internal; backward: the inverse, requires v's
// right child internal. The fresh node is the new inner pair.
ShapeEdit reassociate(const TreeShape& shape, int v, bool forward);

// Swaps the two child subtrees of internal node v (leaf positions permute).
ShapeEdit swap_children(const TreeShape& shape, int v);

// An admissibly labeled pair-of-pants decomposition: one basis vector of the
// fusion space of `surface`. charges[id] is the charge flowing toward the
// root out of node id; leaves carry the interior labels and the root carries
// dual(exterior).
struct FusionTree {
  StandardSurface surface;
  TreeShape shape;
  std::vector<Label> charges;
  bool operator==(const FusionTree&) const = default;
  std::string to_string(const AnyonModel& model) const;
};

// Fusion-space dimension of a standard surface (decomposition-independent).
long long dim(const AnyonModel& model, const StandardSurface& surface);

// All admissible labelings of `shape`, ordered lexicographically by the
// charges of internal nodes taken in post-order.
std::vector<FusionTree> enumerate_basis(const AnyonModel& model,
                                        const StandardSurface& surface,
                                        const TreeShape& shape);

// Splices `inner` into hole `hole` (0-based) of `outer`. Requires the seam
// labels to match: inner.exterior == dual(outer.interior[hole]).
StandardSurface glue(const AnyonModel& model, const StandardSurface& outer,
                     int hole, const StandardSurface& inner);

// A simple closed curve of a decomposition: the boundary of the leaf
// interval spanned by `node` (a leaf node encloses a single hole).
struct Observable {
  TreeShape shape;
  int node = -1;
};

Observable observable_at(const TreeShape& shape, int node);

// Diagonal 0/1 projector onto the trees whose charge at the observable's
// node equals `a`, in enumerate_basis order. Sums to the identity over a.
Eigen::MatrixXcd charge_projector(const AnyonModel& model,
                                  const StandardSurface& surface,
                                  const TreeShape& shape, const Observable& obs,
                                  Label a);

// Dimension of the closed torus block: the annulus dimensions summed over
// the seam charge.
long long torus_dim(const AnyonModel& model);

}  // namespace anyons
