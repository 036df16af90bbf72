#include <gtest/gtest.h>

#include "clusteraut/geom.hpp"

using namespace clusteraut;

namespace {

NgonType T(std::vector<std::int64_t> v) { return NgonType(std::move(v)); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Models, BarXAndPentagon) {
  EXPECT_EQ(build_compactification(Params(2, 3), Model::BarX).self_intersections(),
            (std::vector<std::int64_t>{1, -2, -1}));
  const BoundaryCycle z = build_compactification(Params(2, 3), Model::Pentagon);
  EXPECT_EQ(z.self_intersections(), (std::vector<std::int64_t>{-1, -3, -2, -1, -1}));
  EXPECT_EQ(z.curves[0].name, "E1");
  EXPECT_EQ(z.curves[4].name, "E5");
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      const BoundaryCycle c = build_compactification(Params(a, b), Model::Pentagon);
      EXPECT_EQ(c.type().ints(), (std::vector<std::int64_t>{-1, -b, -a, -1, -1}));
      EXPECT_TRUE(c.ngon_condition());
      EXPECT_TRUE(is_anticanonical(c));
      EXPECT_EQ(canonical_degree(c.lattice), 7 - a - b);
    }
  }
}

TEST(Models, TriangleAndSquare) {
  for (int a = 1; a <= 6; ++a) {
    const Params p(a, 1);
    for (auto o : {LatticeOrigin::Plane, LatticeOrigin::Quadric}) {
      const BoundaryCycle t = build_compactification(p, Model::TriangleT, o);
      EXPECT_EQ(t.type(), T({0, -(a - 2), 0}));
      EXPECT_TRUE(is_anticanonical(t));
      EXPECT_TRUE(t.ngon_condition());
    }
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const BoundaryCycle s = build_compactification(Params(a, b), Model::SquareS);
      const BoundaryCycle q = build_compactification(Params(a, b), Model::SquareS, LatticeOrigin::Quadric);
      EXPECT_EQ(s.self_intersections(), (std::vector<std::int64_t>{0, -b, -a, 0}));
      EXPECT_EQ(s.type(), q.type());
      EXPECT_TRUE(is_standard(s.type()));
      EXPECT_TRUE(is_anticanonical(q));
    }
  }
  EXPECT_EQ(code_of([] { build_compactification(Params(2, 2), Model::TriangleT); }), Errc::ModelUnavailable);
  EXPECT_EQ(code_of([] { build_compactification(Params(1, 3), Model::SquareS); }), Errc::ModelUnavailable);
}

TEST(Models, YModels) {
  const BoundaryCycle y1 = build_compactification(Params(1, 1), Model::Y);
  const BoundaryCycle y2 = build_compactification(Params(2, 1), Model::Y);
  const BoundaryCycle y3 = build_compactification(Params(3, 1), Model::Y);
  EXPECT_EQ(y1.type(), T({-1, -1, -1, -1, -1}));
  EXPECT_EQ(y2.type(), T({0, 0, 0}));
  EXPECT_EQ(y3.type(), T({-1, -1, -1, -1}));
  EXPECT_EQ(canonical_degree(y1.lattice), 5);
  EXPECT_EQ(canonical_degree(y2.lattice), 6);
  EXPECT_EQ(canonical_degree(y3.lattice), 4);
  EXPECT_EQ(code_of([] { build_compactification(Params(4, 1), Model::Y); }), Errc::ModelUnavailable);
}

TEST(Lattice, ContractAndBlowUp) {
  const BoundaryCycle z = build_compactification(Params(3, 1), Model::Pentagon);
  EXPECT_EQ(code_of([&] { contract(z, z.index_of("E3")); }), Errc::NotMinusOne);
  const BoundaryCycle t = build_compactification(Params(3, 1), Model::TriangleT);
  EXPECT_EQ(code_of([&] { contract(t, 0); }), Errc::NotMinusOne);
  // corner blow-up then contraction of the new curve is the identity
  for (std::size_t i = 0; i < z.curves.size(); ++i) {
    const BoundaryCycle up = corner_blowup(z, i, "N");
    EXPECT_EQ(canonical_degree(up.lattice), canonical_degree(z.lattice) - 1);
    EXPECT_TRUE(is_anticanonical(up));
    const BoundaryCycle back = contract(up, up.index_of("N"));
    EXPECT_EQ(back.self_intersections(), z.self_intersections());
    EXPECT_EQ(canonical_degree(back.lattice), canonical_degree(z.lattice));
  }
  const BoundaryCycle twice = corner_blowup(corner_blowup(z, 0, "N1"), 0, "N2");
  EXPECT_EQ(twice.self_intersections()[0], z.self_intersections()[0] - 2);
  EXPECT_EQ(code_of([&] { blowup_on_curve(z, 0, 0); }), Errc::PreconditionViolated);

  BoundaryCycle missing = z;
  missing.curves.pop_back();
  EXPECT_FALSE(is_anticanonical(missing));
  EXPECT_EQ(code_of([&] { is_weak_del_pezzo(missing); }), Errc::NotAnticanonical);
}

TEST(Lattice, WeakDelPezzo) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      EXPECT_EQ(is_weak_del_pezzo(build_compactification(Params(a, b), Model::Pentagon)), a <= 2 && b <= 2);
    }
  }
}

TEST(Types, ElementaryMoves) {
  EXPECT_EQ(elementary_move(T({0, 0, -5, -2}), 1).ints(), (std::vector<std::int64_t>{-1, 0, -4, -2}));
  EXPECT_EQ(elementary_move(T({-1, 0, -4, -2}), 1).ints(), (std::vector<std::int64_t>{-2, 0, -3, -2}));
  EXPECT_EQ(code_of([] { elementary_move(T({0, -1, 0}), 1); }), Errc::PivotNotZero);
  const auto fm = fibered_modification_type(T({0, 0, -4, -3}));
  EXPECT_EQ(fm.result.ints(), (std::vector<std::int64_t>{-4, 0, 0, -3}));
  EXPECT_EQ(fm.moves, 4);
  EXPECT_EQ(fibered_modification_type(T({0, 0, -1})).moves, 1);
  EXPECT_EQ(fibered_modification_type(T({0, 0, -3, -5})).result, T({0, 0, -5, -3}));
  EXPECT_EQ(code_of([] { fibered_modification_type(T({0, -1, -3})); }), Errc::PreconditionViolated);
}

TEST(Types, Standardness) {
  EXPECT_TRUE(is_standard(T({0, 0, -2, -2})));
  EXPECT_FALSE(is_standard(T({0, -1, 0})));
  EXPECT_TRUE(is_standard(T({0, -2, 0})));
  EXPECT_TRUE(is_standard(T({-4, 0, 0})));
  EXPECT_EQ(T({0, 0, -2, -3}), T({-3, -2, 0, 0}));
  EXPECT_EQ(T({1, 2, 3}).normalized().ints(), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(T({3, 1, 2}).normalized().ints(), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(Types, SquareInvariant) {
  EXPECT_EQ(square_invariant(T({0, 0, -4, -2})), (SquareInvariant{2, 4}));
  EXPECT_EQ(code_of([] { square_invariant(T({0, -1, -4, -2})); }), Errc::NotStandardSquare);
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const NgonType t = T({0, 0, -a, -b});
      const auto reach = reachable_standard_squares(t, 12);
      ASSERT_FALSE(reach.empty());
      for (const auto& s : reach) EXPECT_EQ(square_invariant(s), square_invariant(t)) << to_string(s);
    }
  }
}

TEST(Classify, SquareInvariantDecides) {
  EXPECT_TRUE(classify(Params(2, 3), Params(3, 2)).isomorphic);
  EXPECT_FALSE(classify(Params(2, 3), Params(2, 4)).isomorphic);
  EXPECT_FALSE(classify(Params(4, 4), Params(2, 8)).isomorphic);
  EXPECT_TRUE(classify(Params(4, 2), Params(2, 4)).isomorphic);
  EXPECT_FALSE(classify(Params(4, 2), Params(3, 3)).isomorphic);
  EXPECT_FALSE(classify(Params(5, 1), Params(2, 2)).isomorphic);
  EXPECT_TRUE(classify(Params(1, 5), Params(5, 1)).isomorphic);
  EXPECT_FALSE(classify(Params(2, 1), Params(3, 1)).isomorphic);
}

TEST(Json, CycleFields) {
  const std::string js = cycle_to_json(build_compactification(Params(1, 1), Model::Pentagon));
  EXPECT_EQ(js, R"({"K2":5,"anticanonical":true,"origin":"plane","types":[-1,-1,-1,-1,-1]})");
}
