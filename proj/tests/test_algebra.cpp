#include "doctest.h"

#include "cellua/builtins.hpp"

using namespace cellua;

TEST_CASE("poset construction and validation") {
  const Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.greater(0, 2));  // transitive closure
  CHECK(!p.greater(2, 0));
  CHECK(p.topo_desc() == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(Poset({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Poset({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("matrix algebra is cellular") {
  const Field q = Field::rationals();
  for (std::size_t n = 1; n <= 5; ++n) {
    const BuiltinAlgebra b = build_matrix_algebra(q, n, std::nullopt);
    CHECK(b.alg.dim() == n * n);
    CHECK(b.alg.verify_cellular().ok());
  }
  CHECK_THROWS_AS(build_matrix_algebra(q, 4, 1), Error);
  CHECK_THROWS_AS(build_matrix_algebra(q, 4, 5), Error);
}

TEST_CASE("matrix algebra unit expansion") {
  const Field q = Field::rationals();
  const BuiltinAlgebra b = build_matrix_algebra(q, 3, std::nullopt);
  const SparseVec expected = {{b.alg.datum.position(0, 0, 0), Scalar::one(q)},
                              {b.alg.datum.position(0, 1, 1), Scalar::one(q)},
                              {b.alg.datum.position(0, 2, 2), Scalar::one(q)}};
  CHECK(sparse_equal(b.alg.A.unit, sparse_normalize(expected)));
}

TEST_CASE("matrix algebra split table") {
  const BuiltinAlgebra b = build_matrix_algebra(Field::rationals(), 4, 2);
  REQUIRE(b.alpha.has_value());
  CHECK(b.alpha->alpha.at("1") == "s");
  CHECK(b.alpha->alpha.at("2") == "l");
  CHECK(b.alpha->alpha.at("3") == "l");
  CHECK(b.alpha->alpha.at("4") == "l");
}

TEST_CASE("path example map values") {
  const BuiltinAlgebra b = build_path_example(Field::rationals());
  REQUIRE(b.alpha.has_value());
  CHECK(b.alpha->alpha.at("l0") == "t0");
  CHECK(b.alpha->alpha.at("l4") == "t45");
  CHECK(b.alpha->alpha.at("3") == "t123");
}

TEST_CASE("path example products") {
  const Field q = Field::rationals();
  const BuiltinAlgebra b = build_path_example(q);
  const CellularAlgebra& a = b.alg;
  REQUIRE(a.dim() == 18);

  auto pos = [&](const std::string& name) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.A.basis_names[i] == name) return i;
    FAIL("missing basis element ", name);
    return std::size_t(0);
  };
  auto unit = [&](const std::string& name) {
    return SparseVec{{pos(name), Scalar::one(q)}};
  };

  // a12 * a23 dies, a23 * a32 folds back to the loop at 2.
  CHECK(a.A.multiply(unit("a12"), unit("a23")).empty());
  CHECK(sparse_equal(a.A.multiply(unit("a23"), unit("a32")), unit("a21a12")));
  CHECK(sparse_equal(a.A.multiply(unit("e1"), unit("e1")), unit("e1")));
  // Length-three products vanish.
  CHECK(a.A.multiply(a.A.multiply(unit("a12"), unit("a21")), unit("a12")).empty());

  // The involution mirrors arrows.
  CHECK(sparse_equal(a.apply_star(unit("a12")), unit("a21")));
  // Involution is an anti-automorphism on all pairs, and squares to one.
  for (std::size_t i = 0; i < a.dim(); ++i) {
    CHECK(a.star[a.star[i]] == i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVec lhs = a.apply_star(a.A.basis_product(i, j));
      const SparseVec rhs =
          a.A.multiply({{a.star[j], Scalar::one(q)}}, {{a.star[i], Scalar::one(q)}});
      CHECK(sparse_equal(lhs, rhs));
    }
  }
}

TEST_CASE("path example cell structure") {
  const Field q = Field::rationals();
  const BuiltinAlgebra b = build_path_example(q);
  const CellularAlgebra& a = b.alg;

  // c^{l0}_{11} is the loop at vertex 1.
  CHECK(a.A.basis_names[a.datum.position(0, 0, 0)] == "a12a21");
  CHECK(a.verify_cellular().ok());

  // Ideal above the top cell is empty; above the bottom cell is everything
  // else.
  CHECK(a.ideal_above(0).empty());
  CHECK(a.ideal_above(1) ==
        std::vector<std::size_t>{a.datum.position(0, 0, 0)});
  CHECK(a.ideal_above(5).size() == 17);

  // Column coefficients: the vertex idempotent fixes its own column.
  const SparseVec e1 = {{a.datum.position(1, 0, 0), Scalar::one(q)}};
  const Vec r = a.cell_coefficients(1, 0, e1);
  CHECK(r[0] == Scalar::one(q));
  CHECK(r[1].is_zero());
  // Right multiplication by a12 shifts column 1 to column 2.
  const SparseVec a12 = {{a.datum.position(1, 0, 1), Scalar::one(q)}};
  const Vec r2 = a.cell_coefficients(1, 0, a12);
  CHECK(r2[0].is_zero());
  CHECK(r2[1] == Scalar::one(q));
  // The unit acts as the identity on every cell.
  for (std::size_t l = 0; l < a.lambda_count(); ++l)
    for (std::size_t t = 0; t < a.datum.t_size(l); ++t) {
      const Vec u = a.cell_coefficients(l, t, a.A.unit);
      for (std::size_t v = 0; v < a.datum.t_size(l); ++v)
        CHECK(u[v] == (v == t ? Scalar::one(q) : Scalar::zero(q)));
    }
}

TEST_CASE("associativity and unit hold exhaustively") {
  const Field q = Field::rationals();
  const BuiltinAlgebra b = build_path_example(q);
  CHECK(!b.alg.A.associativity_witness().has_value());
  CHECK(!b.alg.A.unit_witness().has_value());
}

TEST_CASE("a flipped structure constant is reported") {
  const Field q = Field::rationals();
  BuiltinAlgebra b = build_path_example(q);
  // Redirect e5 * e5.
  const std::size_t e5 = b.alg.datum.position(5, 0, 0);
  const std::size_t top = b.alg.datum.position(0, 0, 0);
  b.alg.A.basis_product(e5, e5) = {{e5, Scalar::one(q)}, {top, Scalar::one(q)}};
  const CheckReport rep = b.alg.verify_cellular();
  CHECK(!rep.ok());
}
