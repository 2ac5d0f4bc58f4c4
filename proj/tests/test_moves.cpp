#include "anyons/moves.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace anyons;
using std::numbers::pi;

namespace {

cx polar(double angle) { return std::polar(1.0, angle); }

std::vector<Label> random_labels(const AnyonModel& m, int n,
                                 std::mt19937& rng) {
  std::vector<Label> out(n);
  for (Label& l : out)
    l = static_cast<Label>(rng() % static_cast<unsigned>(m.num_labels()));
  return out;
}

BasisRef comb_basis(const StandardSurface& s) {
  return {s, TreeShape::left_comb(s.num_holes())};
}

double identity_deviation(const Unitary& u) {
  if (u.matrix.size() == 0) return 0.0;
  return (u.matrix -
          Eigen::MatrixXcd::Identity(u.matrix.rows(), u.matrix.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace

TEST_CASE("move text round-trip") {
  std::vector<Move> moves = {
      Move::f(2),
      Move::f(2, false),
      Move::r_at_node(0),
      Move::r_at_node(4, true),
      Move::r_at_pair(1),
      Move::r_at_pair(0, true),
      Move::z(),
      Move::z(true),
      Move::twist(3),
      Move::twist(0, true),
  };
  std::vector<std::string> texts = {
      "F@node3", "F-@node3", "R@node1",  "R-@node5", "R@holes2,3",
      "R-@holes1,2", "Z",    "Z-",       "T@hole4",  "T-@hole1",
  };
  for (size_t i = 0; i < moves.size(); ++i) {
    CHECK(moves[i].to_string() == texts[i]);
    CHECK(Move::parse(texts[i]) == moves[i]);
  }
  for (const std::string& bad :
       {"", "F", "F@", "F@node", "F@hole1", "Q@node1", "R@holes2",
        "R@holes2,4", "Z@node1", "T@holes1,2", "F@node1x"}) {
    CHECK_THROWS_AS(Move::parse(bad), InputError);
  }
}

TEST_CASE("move inversion") {
  CHECK(Move::z().inverted() == Move::z(true));
  CHECK(Move::twist(1, true).inverted() == Move::twist(1));
  CHECK(Move::r_at_pair(2).inverted() == Move::r_at_pair(2, true));
  // Node-placed exchanges need the shape to find their inverse node, so the
  // shape-free inversion refuses them.
  CHECK_THROWS_AS(Move::f(0).inverted(), InputError);
  CHECK_THROWS_AS(Move::r_at_node(0).inverted(), InputError);
}

TEST_CASE("f_matrix frozen values and unitarity") {
  const AnyonModel& fib = AnyonModel::builtin("fibonacci");
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Eigen::MatrixXcd f = f_matrix(fib, 1, 1, 1, 1);
  REQUIRE(f.rows() == 2);
  REQUIRE(f.cols() == 2);
  CHECK(std::abs(f(0, 0) - cx(1 / phi)) < 1e-14);
  CHECK(std::abs(f(0, 1) - cx(1 / std::sqrt(phi))) < 1e-14);
  CHECK(std::abs(f(1, 0) - cx(1 / std::sqrt(phi))) < 1e-14);
  CHECK(std::abs(f(1, 1) - cx(-1 / phi)) < 1e-14);

  const AnyonModel& ising = AnyonModel::builtin("ising");
  Eigen::MatrixXcd h = f_matrix(ising, 1, 1, 1, 1);
  REQUIRE(h.rows() == 2);
  CHECK(std::abs(h(0, 0) - cx(1 / std::sqrt(2.0))) < 1e-14);
  CHECK(std::abs(h(1, 1) + cx(1 / std::sqrt(2.0))) < 1e-14);

  for (const std::string& name : AnyonModel::builtin_names()) {
    const AnyonModel& m = AnyonModel::builtin(name);
    for (Label a = 0; a < m.num_labels(); ++a)
      for (Label b = 0; b < m.num_labels(); ++b)
        for (Label c = 0; c < m.num_labels(); ++c)
          for (Label d = 0; d < m.num_labels(); ++d) {
            Eigen::MatrixXcd u = f_matrix(m, a, b, c, d);
            REQUIRE(u.rows() == u.cols());
            if (u.rows() == 0) continue;
            double err = (u.adjoint() * u -
                          Eigen::MatrixXcd::Identity(u.rows(), u.cols()))
                             .cwiseAbs()
                             .maxCoeff();
            CAPTURE(name);
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(c);
            CAPTURE(d);
            CHECK(err < 1e-12);
          }
  }
}

TEST_CASE("f move followed by its inverse is the identity") {
  std::mt19937 rng(31);
  for (const std::string& name : {"fibonacci", "ising"}) {
    const AnyonModel& m = AnyonModel::builtin(name);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 3 + static_cast<int>(rng() % 3);
      StandardSurface s{random_labels(m, n, rng),
                        static_cast<Label>(rng() % m.num_labels())};
      std::vector<TreeShape> shapes = TreeShape::all_shapes(n);
      const TreeShape& shape = shapes[rng() % shapes.size()];
      // Pick any node where a forward move applies.
      for (int v : shape.internal_post_order()) {
        if (shape.is_leaf(shape.node(v).left)) continue;
        BasisRef basis{s, shape};
        Unitary fwd = apply_f_move(m, basis, v, true);
        CHECK(fwd.unitarity_error() < 1e-13);
        // The inverse acts at the node that kept the edited node's identity.
        ShapeEdit edit = reassociate(shape, v, true);
        int w = -1;
        for (int id = 0; id < fwd.codomain.shape.num_nodes(); ++id)
          if (edit.old_of_new[id] == v) w = id;
        REQUIRE(w >= 0);
        Unitary back = apply_f_move(m, fwd.codomain, w, false);
        Unitary round = compose(back, fwd);
        CHECK(round.domain == basis);
        CHECK(round.codomain == basis);
        CHECK(identity_deviation(round) < 1e-13);
        break;
      }
    }
  }
}

TEST_CASE("route reaches the requested shape") {
  std::mt19937 rng(47);
  const AnyonModel& m = AnyonModel::builtin("ising");
  for (int n = 2; n <= 5; ++n) {
    std::vector<TreeShape> shapes = TreeShape::all_shapes(n);
    for (int trial = 0; trial < 6; ++trial) {
      const TreeShape& from = shapes[rng() % shapes.size()];
      const TreeShape& to = shapes[rng() % shapes.size()];
      StandardSurface s{random_labels(m, n, rng),
                        static_cast<Label>(rng() % m.num_labels())};
      std::vector<Move> path = route(from, to);
      Unitary u = compose_moves(m, {s, from}, path);
      CHECK(u.codomain.shape == to);
      CHECK(u.codomain.surface == s);
      CHECK(u.unitarity_error() < 1e-12);
      // Routing back undoes the change of basis.
      Unitary back = compose_moves(m, u.codomain, route(to, from));
      CHECK(identity_deviation(compose(back, u)) < 1e-12);
    }
  }
  CHECK(route(TreeShape::left_comb(4), TreeShape::left_comb(4)).empty());
  CHECK_THROWS_AS(route(TreeShape::left_comb(2), TreeShape::left_comb(3)),
                  InputError);
}

TEST_CASE("exchange at a node, twice, returns with a full twist phase") {
  // Exchanging the same two subtrees twice is not the identity; on each
  // charge sector of the pair it is the monodromy R^{ba}_c R^{ab}_c, which
  // the ribbon identity ties to twist phases. Verify against those phases.
  const AnyonModel& m = AnyonModel::builtin("ising");
  StandardSurface s{{1, 1, 1}, 1};  // three sigmas, total charge sigma
  BasisRef basis = comb_basis(s);
  int v = basis.shape.node_spanning(0, 2);
  Unitary once = apply_move(m, basis, Move::r_at_node(v));
  CHECK(once.codomain.surface == s);  // sigma exchanged with sigma
  Unitary twice = compose(apply_move(m, once.codomain, Move::r_at_node(v)),
                          once);
  // Pair-charge sectors in enumeration order: I, psi.
  cx expect0 = m.twist(0) / (m.twist(1) * m.twist(1));
  cx expect1 = m.twist(2) / (m.twist(1) * m.twist(1));
  REQUIRE(twice.matrix.rows() == 2);
  CHECK(std::abs(twice.matrix(0, 0) - expect0) < 1e-13);
  CHECK(std::abs(twice.matrix(1, 1) - expect1) < 1e-13);
  CHECK(std::abs(twice.matrix(0, 1)) < 1e-15);
  CHECK(std::abs(twice.matrix(1, 0)) < 1e-15);
}

TEST_CASE("exchange move and its inverse cancel") {
  std::mt19937 rng(53);
  for (const std::string& name : {"fibonacci", "ising"}) {
    const AnyonModel& m = AnyonModel::builtin(name);
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      StandardSurface s{random_labels(m, n, rng),
                        static_cast<Label>(rng() % m.num_labels())};
      int hole = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      BasisRef basis = comb_basis(s);
      Unitary fwd = apply_move(m, basis, Move::r_at_pair(hole));
      CHECK(fwd.unitarity_error() < 1e-12);
      CHECK(fwd.codomain.surface.interior[hole] == s.interior[hole + 1]);
      CHECK(fwd.codomain.surface.interior[hole + 1] == s.interior[hole]);
      Unitary back =
          apply_move(m, fwd.codomain, Move::r_at_pair(hole, true));
      Unitary round = compose(back, fwd);
      CHECK(round.codomain == basis);
      CHECK(identity_deviation(round) < 1e-12);
    }
  }
}

TEST_CASE("rotation moves") {
  const AnyonModel& m = AnyonModel::builtin("ising");
  Label S = 1, P = 2;
  StandardSurface s{{S, P, S}, S};
  BasisRef basis = comb_basis(s);

  Unitary z = apply_move(m, basis, Move::z());
  CHECK(z.codomain.surface.interior == std::vector<Label>{P, S, m.dual(S)});
  CHECK(z.codomain.surface.exterior == m.dual(S));
  CHECK(z.codomain.shape == basis.shape);
  CHECK(identity_deviation(z) == 0.0);

  Unitary zi = apply_move(m, z.codomain, Move::z(true));
  CHECK(zi.codomain == basis);

  // A full cycle of n+1 rotations is the identity on the original basis.
  BasisRef cur = basis;
  Unitary total = identity_on(m, basis);
  for (int k = 0; k < s.num_holes() + 1; ++k) {
    Unitary step = apply_move(m, cur, Move::z());
    total = compose(step, total);
    cur = step.codomain;
  }
  CHECK(total.codomain == basis);
  CHECK(identity_deviation(total) == 0.0);
}

TEST_CASE("twist moves") {
  const AnyonModel& fib = AnyonModel::builtin("fibonacci");
  StandardSurface s{{1, 1, 1}, 1};
  BasisRef basis = comb_basis(s);
  Unitary t = apply_move(fib, basis, Move::twist(1));
  CHECK(t.codomain == basis);
  // Scalar theta_tau on every tree.
  long long d = t.matrix.rows();
  CHECK((t.matrix - fib.twist(1) * Eigen::MatrixXcd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  Unitary ti = apply_move(fib, basis, Move::twist(1, true));
  CHECK(identity_deviation(compose(ti, t)) < 1e-15);
}

TEST_CASE("mismatched move kind and placement") {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  BasisRef basis = comb_basis({{1, 1}, 0});
  CHECK_THROWS_AS(apply_move(m, basis, Move{Move::Kind::F, Move::Where::Hole, 0}),
                  InputError);
  CHECK_THROWS_AS(
      apply_move(m, basis, Move{Move::Kind::T, Move::Where::Node, 0}),
      InputError);
  CHECK_THROWS_AS(
      apply_move(m, basis, Move{Move::Kind::Z, Move::Where::Hole, 0}),
      InputError);
  CHECK_THROWS_AS(apply_move(m, basis, Move::twist(5)), InputError);
  CHECK_THROWS_AS(apply_move(m, basis, Move::r_at_pair(1)), InputError);
}

TEST_CASE("composition requires matching bases") {
  const AnyonModel& m = AnyonModel::builtin("fibonacci");
  BasisRef b1 = comb_basis({{1, 1}, 0});
  BasisRef b2 = comb_basis({{1, 1, 1}, 1});
  Unitary u1 = identity_on(m, b1);
  Unitary u2 = identity_on(m, b2);
  CHECK_THROWS_AS(compose(u2, u1), Error);
}

TEST_CASE("pentagon loop closes") {
  // ((12)3)4 -> (1(23))4 -> 1((23)4) -> 1(2(34)) -> (12)(34) -> ((12)3)4
  // via three forward and two backward re-associations.
  for (const std::string& name : {"fibonacci", "ising"}) {
    const AnyonModel& m = AnyonModel::builtin(name);
    int nl = m.num_labels();
    for (int code = 0; code < nl * nl * nl * nl * nl; ++code) {
      int c = code;
      std::vector<Label> in(4);
      for (int i = 0; i < 4; ++i) {
        in[i] = c % nl;
        c /= nl;
      }
      StandardSurface s{in, static_cast<Label>(c % nl)};
      if (dim(m, s) == 0) continue;
      BasisRef start = comb_basis(s);
      Unitary u = identity_on(m, start);
      auto step = [&](int first, int count, bool forward) {
        int v = u.codomain.shape.node_spanning(first, count);
        REQUIRE(v >= 0);
        u = compose(apply_f_move(m, u.codomain, v, forward), u);
      };
      step(0, 3, true);
      step(0, 4, true);
      step(1, 3, true);
      step(0, 4, false);
      step(0, 4, false);
      CHECK(u.codomain == start);
      CAPTURE(name);
      CAPTURE(code);
      CHECK(identity_deviation(u) < 1e-10);
    }
  }
}

TEST_CASE("hexagon loops close in both orientations") {
  for (const std::string& name : {"fibonacci", "ising"}) {
    const AnyonModel& m = AnyonModel::builtin(name);
    int nl = m.num_labels();
    for (bool inverse : {false, true}) {
      for (int code = 0; code < nl * nl * nl * nl; ++code) {
        int c = code;
        std::vector<Label> in(3);
        for (int i = 0; i < 3; ++i) {
          in[i] = c % nl;
          c /= nl;
        }
        StandardSurface s{in, static_cast<Label>(c % nl)};
        if (dim(m, s) == 0) continue;
        BasisRef start = comb_basis(s);
        Unitary u = identity_on(m, start);
        auto exch = [&](int first, int count) {
          int v = u.codomain.shape.node_spanning(first, count);
          REQUIRE(v >= 0);
          u = compose(apply_move(m, u.codomain, Move::r_at_node(v, inverse)),
                      u);
        };
        auto assoc = [&](bool forward) {
          u = compose(
              apply_f_move(m, u.codomain, u.codomain.shape.root(), forward),
              u);
        };
        exch(0, 2);     // swap the first pair
        assoc(true);    // ((..).) -> (.(..))
        exch(1, 2);     // swap the second pair
        assoc(false);   // back to the left comb
        // Undo the block exchange at the root and return to the start.
        u = compose(apply_move(m, u.codomain,
                               Move::r_at_node(u.codomain.shape.root(),
                                               !inverse)),
                    u);
        assoc(false);
        CHECK(u.codomain == start);
        CAPTURE(name);
        CAPTURE(code);
        CAPTURE(inverse);
        CHECK(identity_deviation(u) < 1e-10);
      }
    }
  }
}

TEST_CASE("compile basics") {
  const AnyonModel& fib = AnyonModel::builtin("fibonacci");
  StandardSurface s{{1, 1, 1}, 1};

  Unitary empty = compile(fib, s, FramedBraidWord::parse("e", 3));
  CHECK(identity_deviation(empty) == 0.0);

  Unitary cancel = compile(fib, s, FramedBraidWord::parse("s2 s2^-1", 3));
  CHECK(identity_deviation(cancel) == 0.0);

  // Exchanging the first two tau holes acts diagonally on the charge of the
  // (1 2) pair: R phases e^{4 pi i/5} (vacuum channel) and e^{-3 pi i/5}.
  Unitary b1 = compile(fib, s, FramedBraidWord::parse("s1", 3));
  REQUIRE(b1.matrix.rows() == 2);
  CHECK(std::abs(b1.matrix(0, 0) - polar(4 * pi / 5)) < 1e-13);
  CHECK(std::abs(b1.matrix(1, 1) - polar(-3 * pi / 5)) < 1e-13);
  CHECK(std::abs(b1.matrix(0, 1)) < 1e-14);
  CHECK(std::abs(b1.matrix(1, 0)) < 1e-14);

  // Framing generators act as the twist scalar.
  Unitary t2 = compile(fib, s, FramedBraidWord::parse("t2", 3));
  long long d = t2.matrix.rows();
  CHECK((t2.matrix - fib.twist(1) * Eigen::MatrixXcd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  CHECK_THROWS_AS(compile(fib, s, FramedBraidWord::parse("s1", 4)),
                  InputError);
}

TEST_CASE("compile matches the step-by-step generators") {
  std::mt19937 rng(61);
  const AnyonModel& m = AnyonModel::builtin("ising");
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    StandardSurface s{random_labels(m, n, rng),
                      static_cast<Label>(rng() % m.num_labels())};
    FramedBraidWord w = oracle::random_word(n, 6, rng);
    Unitary direct = compile(m, s, w);
    CHECK(direct.unitarity_error() < 1e-11);
    // Same thing, one generator at a time.
    Unitary acc = identity_on(m, comb_basis(s));
    for (const BraidGen& g : w.gens) {
      for (int r = 0; r < std::abs(g.power); ++r) {
        Move mv = g.kind == BraidGen::Kind::Sigma
                      ? Move::r_at_pair(g.index, g.power < 0)
                      : Move::twist(g.index, g.power < 0);
        acc = compose(apply_move(m, acc.codomain, mv), acc);
      }
    }
    CHECK(acc.codomain == direct.codomain);
    CHECK(max_deviation(direct.matrix, acc.matrix, false) < 1e-11);
  }
}

TEST_CASE("braid relations hold on the fusion space") {
  std::mt19937 rng(67);
  for (const std::string& name : {"fibonacci", "ising"}) {
    const AnyonModel& m = AnyonModel::builtin(name);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 3 + static_cast<int>(rng() % 3);
      StandardSurface s{random_labels(m, n, rng),
                        static_cast<Label>(rng() % m.num_labels())};
      int i = static_cast<int>(rng() % static_cast<unsigned>(n - 2));
      std::string a = "s" + std::to_string(i + 1);
      std::string b = "s" + std::to_string(i + 2);
      Unitary lhs =
          compile(m, s, FramedBraidWord::parse(a + " " + b + " " + a, n));
      Unitary rhs =
          compile(m, s, FramedBraidWord::parse(b + " " + a + " " + b, n));
      CHECK(lhs.codomain == rhs.codomain);
      CAPTURE(name);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(max_deviation(lhs.matrix, rhs.matrix, false) < 1e-9);

      if (n >= 4) {
        std::string cgen = "s" + std::to_string(n - 1);  // far from s1
        Unitary l2 = compile(m, s, FramedBraidWord::parse("s1 " + cgen, n));
        Unitary r2 = compile(m, s, FramedBraidWord::parse(cgen + " s1", n));
        CHECK(max_deviation(l2.matrix, r2.matrix, false) < 1e-12);
      }
    }
  }
}

TEST_CASE("dehn twists") {
  const AnyonModel& fib = AnyonModel::builtin("fibonacci");

  // Around a single hole the twist is the hole label's phase.
  for (const std::string& name : AnyonModel::builtin_names()) {
    const AnyonModel& m = AnyonModel::builtin(name);
    if (!m.has_twists()) continue;
    for (Label a = 0; a < m.num_labels(); ++a) {
      StandardSurface s{{a}, m.dual(a)};
      BasisRef basis = comb_basis(s);
      Unitary u = dehn_twist(m, basis, basis.shape.leaf_node(0));
      REQUIRE(u.matrix.rows() == 1);
      CHECK(u.matrix(0, 0) == m.twist(a));
    }
  }

  // Around a pair of holes the twist is diagonal in the pair's charge.
  StandardSurface s{{1, 1, 1}, 1};
  BasisRef basis = comb_basis(s);
  int v = basis.shape.node_spanning(0, 2);
  Unitary u = dehn_twist(fib, basis, v);
  REQUIRE(u.matrix.rows() == 2);
  CHECK(u.matrix(0, 0) == fib.twist(0));
  CHECK(u.matrix(1, 1) == fib.twist(1));
  CHECK(u.matrix(0, 1) == cx(0.0));

  // The same curve, expressed through exchanges and hole twists: a double
  // exchange of the pair followed by both single-hole twists.
  Unitary braids = compile(fib, s, FramedBraidWord::parse("s1 s1 t1 t2", 3));
  CHECK(max_deviation(u.matrix, braids.matrix, true) < 1e-9);

  // At the root the twist reads the total charge.
  Unitary root = dehn_twist(fib, basis, basis.shape.root());
  CHECK(root.matrix(0, 0) == fib.twist(fib.dual(s.exterior)));
}
