#include "anyons/curves.hpp"

#include <algorithm>
#include <cassert>

namespace anyons {

namespace {

using Word = std::vector<int>;  // letters +-(k+1) for x_k^{+-1}, 1-based text

void push_letter(Word& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

Word substitute(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (int letter : w) {
    const Word& img = images[std::abs(letter) - 1];
    if (letter > 0)
      for (int l : img) push_letter(out, l);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        push_letter(out, -*it);
  }
  return out;
}

// The crossing s_{i+1} sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i
// (inverse crossing: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}).
std::vector<Word> crossing_images(int n, int i, bool inverse) {
  std::vector<Word> images(n);
  for (int k = 0; k < n; ++k) images[k] = {k + 1};
  if (!inverse) {
    images[i] = {i + 1, i + 2, -(i + 1)};
    images[i + 1] = {i + 1};
  } else {
    images[i] = {i + 2};
    images[i + 1] = {-(i + 2), i + 1, i + 2};
  }
  return images;
}

}  // namespace

std::vector<Label> CurveDiagram::base_labels() const {
  std::vector<int> at = word.strand_permutation();
  std::vector<Label> base(surface.num_holes());
  for (int slot = 0; slot < surface.num_holes(); ++slot)
    base[at[slot]] = surface.interior[slot];
  return base;
}

NormalForm normal_form(const FramedBraidWord& word) {
  int n = word.num_strands;
  NormalForm nf;
  nf.slot_origin.resize(n);
  nf.framings.assign(n, 0);
  nf.images.resize(n);
  for (int k = 0; k < n; ++k) {
    nf.slot_origin[k] = k;
    nf.images[k] = {k + 1};
  }
  for (const BraidGen& g : word.gens) {
    if (g.kind == BraidGen::Kind::Twist) {
      nf.framings[g.index] += g.power;
      continue;
    }
    int reps = std::abs(g.power);
    bool inv = g.power < 0;
    for (int r = 0; r < reps; ++r) {
      std::vector<Word> cr = crossing_images(n, g.index, inv);
      std::vector<Word> next(n);
      for (int k = 0; k < n; ++k) next[k] = substitute(nf.images, cr[k]);
      nf.images = std::move(next);
      std::swap(nf.slot_origin[g.index], nf.slot_origin[g.index + 1]);
      std::swap(nf.framings[g.index], nf.framings[g.index + 1]);
    }
  }
  return nf;
}

bool equal(const CurveDiagram& a, const CurveDiagram& b) {
  if (!(a.surface == b.surface)) return false;
  if (a.word.num_strands != b.word.num_strands) return false;
  if (a.exterior_choice != b.exterior_choice) return false;
  return normal_form(a.word) == normal_form(b.word);
}

CurveDiagram apply_move(const AnyonModel& model, const CurveDiagram& d,
                        const Move& move) {
  int n = d.surface.num_holes();
  CurveDiagram out = d;
  bool inv = move.inverse_kind();
  switch (move.kind) {
    case Move::Kind::R:
    case Move::Kind::RInv: {
      if (move.where != Move::Where::HolePair)
        throw InputError("only hole-pair exchanges act on curve diagrams");
      int i = move.index;
      if (i < 0 || i + 1 >= n)
        throw InputError("exchange hole index out of range");
      out.word.append(BraidGen{BraidGen::Kind::Sigma, i, inv ? -1 : 1});
      std::swap(out.surface.interior[i], out.surface.interior[i + 1]);
      return out;
    }
    case Move::Kind::T:
    case Move::Kind::TInv: {
      if (move.where != Move::Where::Hole)
        throw InputError("twists on curve diagrams act at a single hole");
      if (move.index < 0 || move.index >= n)
        throw InputError("twist hole index out of range");
      out.word.append(BraidGen{BraidGen::Kind::Twist, move.index, inv ? -1 : 1});
      return out;
    }
    case Move::Kind::Z:
    case Move::Kind::ZInv: {
      if (n == 0) return out;
      // hole leaving to the exterior: first hole for Z, last for Z-
      int leaving = inv ? n - 1 : 0;
      int shift = inv ? 1 : -1;
      FramedBraidWord shifted;
      shifted.num_strands = n;
      for (const BraidGen& g : out.word.gens) {
        int lo = g.index;
        int hi = (g.kind == BraidGen::Kind::Sigma) ? g.index + 1 : g.index;
        if (lo <= leaving && leaving <= hi)
          throw InputError(
              "rotation would move a hole engaged by the word out to the "
              "exterior; this placement is unsupported");
        shifted.append(BraidGen{g.kind, g.index + shift, g.power});
      }
      out.word = shifted;
      StandardSurface rot;
      if (!inv) {
        rot.interior.assign(d.surface.interior.begin() + 1,
                            d.surface.interior.end());
        rot.interior.push_back(model.dual(d.surface.exterior));
        rot.exterior = model.dual(d.surface.interior.front());
      } else {
        rot.interior.assign(d.surface.interior.begin(),
                            d.surface.interior.end() - 1);
        rot.interior.insert(rot.interior.begin(),
                            model.dual(d.surface.exterior));
        rot.exterior = model.dual(d.surface.interior.back());
      }
      out.surface = rot;
      out.exterior_choice =
          ((d.exterior_choice + (inv ? -1 : 1)) % (n + 1) + (n + 1)) % (n + 1);
      return out;
    }
    case Move::Kind::F:
    case Move::Kind::FInv:
      throw InputError("re-association moves do not act on curve diagrams");
  }
  throw InputError("unsupported move on a curve diagram");
}

CurveDiagram apply_moves(const AnyonModel& model, const CurveDiagram& d,
                         const std::vector<Move>& moves) {
  CurveDiagram out = d;
  for (const Move& m : moves) out = apply_move(model, out, m);
  return out;
}

std::vector<Move> refactor(const AnyonModel& model, const CurveDiagram& from,
                           const CurveDiagram& to) {
  if (from.surface.num_holes() != to.surface.num_holes() ||
      from.surface.exterior != to.surface.exterior ||
      from.exterior_choice != to.exterior_choice ||
      from.base_labels() != to.base_labels())
    throw InputError("diagrams describe different labeled surfaces");
  FramedBraidWord rel = from.word.inverse();
  rel.append(to.word);
  std::vector<Move> moves;
  for (const BraidGen& g : rel.gens) {
    int reps = std::abs(g.power);
    bool inv = g.power < 0;
    for (int r = 0; r < reps; ++r) {
      if (g.kind == BraidGen::Kind::Sigma)
        moves.push_back(Move::r_at_pair(g.index, inv));
      else
        moves.push_back(Move::twist(g.index, inv));
    }
  }
#ifndef NDEBUG
  assert(equal(apply_moves(model, from, moves), to));
#else
  (void)model;
#endif
  return moves;
}

Unitary induced_unitary(const AnyonModel& model, const CurveDiagram& at,
                        const std::vector<Move>& moves) {
  BasisRef start{at.surface, TreeShape::left_comb(at.surface.num_holes())};
  return compose_moves(model, start, moves);
}

}  // namespace anyons
