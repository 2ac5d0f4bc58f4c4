#include "anyons/moves.hpp"

#include <algorithm>
#include <functional>

namespace anyons {

namespace {

StandardSurface surface_after_edit(const StandardSurface& s,
                                   const TreeShape& old_shape,
                                   const ShapeEdit& edit) {
  StandardSurface out = s;
  for (int id = 0; id < edit.shape.num_nodes(); ++id) {
    if (!edit.shape.is_leaf(id)) continue;
    int old_id = edit.old_of_new[id];
    out.interior[edit.shape.node(id).first] =
        s.interior[old_shape.node(old_id).first];
  }
  return out;
}

// Builds the matrix of a move whose shape change is `edit`: entries vanish
// unless the codomain tree agrees with the domain tree on every transported
// node; `coeff(dom_tree, cod_tree)` supplies the surviving amplitude.
template <typename CoeffFn>
Unitary transport(const AnyonModel& model, const BasisRef& basis,
                  const ShapeEdit& edit, const StandardSurface& new_surface,
                  CoeffFn&& coeff) {
  std::vector<FusionTree> dom = enumerate_basis(model, basis.surface, basis.shape);
  BasisRef cod_basis{new_surface, edit.shape};
  std::vector<FusionTree> cod =
      enumerate_basis(model, cod_basis.surface, cod_basis.shape);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cod.size(), dom.size());
  for (size_t j = 0; j < dom.size(); ++j) {
    for (size_t i = 0; i < cod.size(); ++i) {
      bool agree = true;
      for (int id = 0; id < edit.shape.num_nodes() && agree; ++id) {
        int old_id = edit.old_of_new[id];
        if (old_id >= 0 && cod[i].charges[id] != dom[j].charges[old_id])
          agree = false;
      }
      if (agree) m(i, j) = coeff(dom[j], cod[i]);
    }
  }
  return Unitary{std::move(m), basis, cod_basis};
}

int fresh_node(const ShapeEdit& edit) {
  for (int id = 0; id < edit.shape.num_nodes(); ++id)
    if (edit.old_of_new[id] < 0) return id;
  throw Error("shape edit has no fresh node");
}

Unitary r_move_at_node(const AnyonModel& model, const BasisRef& basis, int node,
                       bool inverse) {
  const TreeShape::Node& nv = basis.shape.node(node);
  if (basis.shape.is_leaf(node))
    throw InputError("exchange move at a leaf node");
  ShapeEdit edit = swap_children(basis.shape, node);
  StandardSurface new_surface = surface_after_edit(basis.surface, basis.shape, edit);
  int left = nv.left, right = nv.right;
  return transport(model, basis, edit, new_surface,
                   [&](const FusionTree& t, const FusionTree&) {
                     Label x = t.charges[left];
                     Label y = t.charges[right];
                     Label z = t.charges[node];
                     return inverse ? std::conj(model.r_symbol(y, x, z))
                                    : model.r_symbol(x, y, z);
                   });
}

TreeShape pair_comb(int n, int hole) {
  TreeShape::Builder b;
  std::vector<int> leaves(n);
  for (int i = 0; i < n; ++i) leaves[i] = b.leaf();
  int acc, p;
  if (hole == 0) {
    acc = b.join(leaves[0], leaves[1]);
    p = 2;
  } else {
    acc = leaves[0];
    p = 1;
  }
  while (p < n) {
    if (p == hole) {
      acc = b.join(acc, b.join(leaves[p], leaves[p + 1]));
      p += 2;
    } else {
      acc = b.join(acc, leaves[p]);
      p += 1;
    }
  }
  return b.finish(acc);
}

Unitary r_move_at_pair(const AnyonModel& model, const BasisRef& basis, int hole,
                       bool inverse) {
  int n = basis.surface.num_holes();
  if (hole < 0 || hole + 1 >= n)
    throw InputError("exchange asks for holes " + std::to_string(hole + 1) +
                     "," + std::to_string(hole + 2) + " but the surface has " +
                     std::to_string(n) + " holes");
  TreeShape target = pair_comb(n, hole);
  std::vector<Move> in_moves = route(basis.shape, target);
  Unitary u_in = compose_moves(model, basis, in_moves);
  int v = target.node_spanning(hole, 2);
  Unitary u_r = r_move_at_node(model, u_in.codomain, v, inverse);
  BasisRef back_start{u_r.codomain.surface, basis.shape};
  Unitary u_out = compose_moves(model, back_start, in_moves).adjoint();
  return compose(u_out, compose(u_r, u_in));
}

Unitary z_rotation(const AnyonModel& model, const BasisRef& basis,
                   bool inverse) {
  const StandardSurface& s = basis.surface;
  int n = s.num_holes();
  if (n == 0) return identity_on(model, basis);
  StandardSurface rot;
  if (!inverse) {
    rot.interior.assign(s.interior.begin() + 1, s.interior.end());
    rot.interior.push_back(model.dual(s.exterior));
    rot.exterior = model.dual(s.interior.front());
  } else {
    rot.interior.assign(s.interior.begin(), s.interior.end() - 1);
    rot.interior.insert(rot.interior.begin(), model.dual(s.exterior));
    rot.exterior = model.dual(s.interior.back());
  }
  BasisRef cod{rot, basis.shape};
  long long d_dom = dim(model, s), d_cod = dim(model, rot);
  if (d_dom != d_cod)
    throw Error("rotation changes the fusion-space dimension (" +
                std::to_string(d_dom) + " vs " + std::to_string(d_cod) +
                "); the model's duality data is inconsistent");
  return Unitary{Eigen::MatrixXcd::Identity(d_dom, d_dom), basis, cod};
}

Unitary twist_at_hole(const AnyonModel& model, const BasisRef& basis, int hole,
                      bool inverse) {
  int n = basis.surface.num_holes();
  if (hole < 0 || hole >= n) throw InputError("twist hole index out of range");
  cx th = model.twist(basis.surface.interior[hole]);
  if (inverse) th = std::conj(th);
  Unitary u = identity_on(model, basis);
  u.matrix *= th;
  return u;
}

}  // namespace

Move Move::inverted() const {
  if (where == Where::Node)
    throw InputError(
        "inverting a node-addressed move requires the shape it acts on");
  Move m = *this;
  switch (kind) {
    case Kind::F: m.kind = Kind::FInv; break;
    case Kind::FInv: m.kind = Kind::F; break;
    case Kind::R: m.kind = Kind::RInv; break;
    case Kind::RInv: m.kind = Kind::R; break;
    case Kind::Z: m.kind = Kind::ZInv; break;
    case Kind::ZInv: m.kind = Kind::Z; break;
    case Kind::T: m.kind = Kind::TInv; break;
    case Kind::TInv: m.kind = Kind::T; break;
  }
  return m;
}

std::string Move::to_string() const {
  auto base = [&](const char* letter) {
    return std::string(letter) + (inverse_kind() ? "-" : "");
  };
  switch (where) {
    case Where::Global:
      return base("Z");
    case Where::Hole:
      return base("T") + "@hole" + std::to_string(index + 1);
    case Where::HolePair:
      return base("R") + "@holes" + std::to_string(index + 1) + "," +
             std::to_string(index + 2);
    case Where::Node:
      return base(kind == Kind::F || kind == Kind::FInv ? "F" : "R") +
             "@node" + std::to_string(index + 1);
  }
  throw Error("unreachable");
}

Move Move::parse(const std::string& text) {
  auto fail = [&] {
    throw InputError("bad move \"" + text +
                     "\": expected F[-]@node<k>, R[-]@node<k>, "
                     "R[-]@holes<k>,<k+1>, T[-]@hole<k>, or Z[-]");
  };
  size_t pos = 0;
  if (pos >= text.size()) fail();
  char letter = text[pos++];
  bool inv = pos < text.size() && text[pos] == '-';
  if (inv) ++pos;
  if (letter == 'Z') {
    if (pos != text.size()) fail();
    return z(inv);
  }
  if (pos >= text.size() || text[pos] != '@') fail();
  ++pos;
  auto read_num = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail();
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](const std::string& word) {
    if (text.compare(pos, word.size(), word) != 0) fail();
    pos += word.size();
  };
  if (letter == 'F') {
    expect("node");
    int k = read_num();
    if (pos != text.size()) fail();
    return f(k - 1, !inv);
  }
  if (letter == 'T') {
    expect("hole");
    int k = read_num();
    if (pos != text.size()) fail();
    return twist(k - 1, inv);
  }
  if (letter == 'R') {
    if (text.compare(pos, 5, "holes") == 0) {
      pos += 5;
      int k = read_num();
      if (pos >= text.size() || text[pos] != ',') fail();
      ++pos;
      int k2 = read_num();
      if (pos != text.size() || k2 != k + 1) fail();
      return r_at_pair(k - 1, inv);
    }
    expect("node");
    int k = read_num();
    if (pos != text.size()) fail();
    return r_at_node(k - 1, inv);
  }
  fail();
  return {};
}

Eigen::MatrixXcd f_matrix(const AnyonModel& model, Label a, Label b, Label c,
                          Label d) {
  for (Label l : {a, b, c, d})
    if (l < 0 || l >= model.num_labels())
      throw InputError("label out of range");
  StandardSurface s{{a, b, c}, model.dual(d)};
  TreeShape comb = TreeShape::left_comb(3);
  BasisRef basis{s, comb};
  return apply_f_move(model, basis, comb.root(), true).matrix;
}

Unitary apply_f_move(const AnyonModel& model, const BasisRef& basis, int node,
                     bool forward) {
  const TreeShape& shape = basis.shape;
  const TreeShape::Node& nv = shape.node(node);
  if (shape.is_leaf(node))
    throw InputError("re-association at a leaf node");
  ShapeEdit edit = reassociate(shape, node, forward);
  StandardSurface new_surface = surface_after_edit(basis.surface, shape, edit);
  int fresh = fresh_node(edit);
  if (forward) {
    int p = nv.left;
    int na = shape.node(p).left, nb = shape.node(p).right, nc = nv.right;
    return transport(model, basis, edit, new_surface,
                     [&](const FusionTree& t, const FusionTree& tc) {
                       return model.f_entry(t.charges[na], t.charges[nb],
                                            t.charges[nc], t.charges[node],
                                            t.charges[p], tc.charges[fresh]);
                     });
  }
  int p = nv.right;
  int na = nv.left, nb = shape.node(p).left, nc = shape.node(p).right;
  return transport(model, basis, edit, new_surface,
                   [&](const FusionTree& t, const FusionTree& tc) {
                     return std::conj(model.f_entry(
                         t.charges[na], t.charges[nb], t.charges[nc],
                         t.charges[node], tc.charges[fresh], t.charges[p]));
                   });
}

Unitary apply_move(const AnyonModel& model, const BasisRef& basis,
                   const Move& move) {
  switch (move.kind) {
    case Move::Kind::F:
    case Move::Kind::FInv:
      if (move.where != Move::Where::Node) break;
      return apply_f_move(model, basis, move.index,
                          move.kind == Move::Kind::F);
    case Move::Kind::R:
    case Move::Kind::RInv: {
      bool inv = move.kind == Move::Kind::RInv;
      if (move.where == Move::Where::Node)
        return r_move_at_node(model, basis, move.index, inv);
      if (move.where == Move::Where::HolePair)
        return r_move_at_pair(model, basis, move.index, inv);
      break;
    }
    case Move::Kind::Z:
    case Move::Kind::ZInv:
      if (move.where != Move::Where::Global) break;
      return z_rotation(model, basis, move.kind == Move::Kind::ZInv);
    case Move::Kind::T:
    case Move::Kind::TInv:
      if (move.where != Move::Where::Hole) break;
      return twist_at_hole(model, basis, move.index,
                           move.kind == Move::Kind::TInv);
  }
  throw InputError("move kind and placement do not match in \"" +
                   move.to_string() + "\"");
}

Unitary compose_moves(const AnyonModel& model, const BasisRef& start,
                      const std::vector<Move>& moves) {
  Unitary u = identity_on(model, start);
  for (const Move& m : moves) u = compose(apply_move(model, u.codomain, m), u);
  return u;
}

std::vector<Move> route(const TreeShape& from, const TreeShape& to) {
  if (from.leaf_count() != to.leaf_count())
    throw InputError("cannot route between shapes with different leaf counts");
  auto comb_path = [](TreeShape s, std::vector<Move>* fwd,
                      std::vector<Move>* back_reversed) {
    for (;;) {
      int v = -1;
      for (int id : s.internal_post_order()) {
        if (!s.is_leaf(s.node(id).right)) {
          v = id;
          break;
        }
      }
      if (v < 0) break;
      if (fwd) fwd->push_back(Move::f(v, false));
      ShapeEdit e = reassociate(s, v, false);
      if (back_reversed) {
        int w = -1;
        for (int id = 0; id < e.shape.num_nodes(); ++id)
          if (e.old_of_new[id] == v) w = id;
        back_reversed->push_back(Move::f(w, true));
      }
      s = e.shape;
    }
  };
  std::vector<Move> out, back;
  comb_path(from, &out, nullptr);
  comb_path(to, nullptr, &back);
  std::reverse(back.begin(), back.end());
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

Unitary braid_generator(const AnyonModel& model, const StandardSurface& surface,
                        int i) {
  BasisRef basis{surface, TreeShape::left_comb(surface.num_holes())};
  return apply_move(model, basis, Move::r_at_pair(i, false));
}

Unitary dehn_twist(const AnyonModel& model, const BasisRef& basis, int node) {
  basis.shape.node(node);  // range check
  std::vector<FusionTree> trees = enumerate_basis(model, basis.surface, basis.shape);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(trees.size(), trees.size());
  for (size_t i = 0; i < trees.size(); ++i)
    m(i, i) = model.twist(trees[i].charges[node]);
  return Unitary{std::move(m), basis, basis};
}

Unitary compile(const AnyonModel& model, const StandardSurface& surface,
                const FramedBraidWord& word) {
  if (word.num_strands != surface.num_holes())
    throw InputError("braid word is on " + std::to_string(word.num_strands) +
                     " strands but the surface has " +
                     std::to_string(surface.num_holes()) + " holes");
  BasisRef start{surface, TreeShape::left_comb(surface.num_holes())};
  Unitary u = identity_on(model, start);
  for (const BraidGen& g : word.gens) {
    int reps = std::abs(g.power);
    bool inv = g.power < 0;
    for (int k = 0; k < reps; ++k) {
      Unitary step;
      if (g.kind == BraidGen::Kind::Sigma) {
        step = apply_move(model, u.codomain, Move::r_at_pair(g.index, inv));
      } else {
        step = twist_at_hole(model, u.codomain, g.index, inv);
      }
      u = compose(step, u);
    }
  }
  return u;
}

}  // namespace anyons
