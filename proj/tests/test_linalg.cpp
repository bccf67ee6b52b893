#include "doctest.h"

#include <random>

#include "cellua/matrix.hpp"
#include "cellua/subspace.hpp"

using namespace cellua;

namespace {

ExactMatrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                      std::initializer_list<long long> vals) {
  ExactMatrix m(f, rows, cols);
  auto it = vals.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(f, *it++);
  return m;
}

ExactMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(-3, 3);
  ExactMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(f, dist(rng));
  return m;
}

} // namespace

TEST_CASE("scalar arithmetic over the rationals") {
  const Field q = Field::rationals();
  const Scalar half = Scalar::parse(q, "1/2");
  const Scalar third = Scalar::parse(q, "1/3");
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(half.inverse().str() == "2");
  CHECK(Scalar::parse(q, "-4/6").str() == "-2/3");
  CHECK(Scalar::parse(q, "3/-6").str() == "-1/2");
}

TEST_CASE("scalar arithmetic mod p") {
  const Field f5 = Field::fp(5);
  const Scalar a(f5, 3), b(f5, 4);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK((a - b).str() == "4");
  CHECK(a.inverse().str() == "2");
  CHECK(Scalar(f5, -7).str() == "3");
  CHECK(Scalar::parse(f5, "1/2").str() == "3");
  CHECK_THROWS_AS(Field::fp(6), Error);
  CHECK_THROWS_AS((void)(a + Scalar(Field::rationals(), 1)), Error);
}

TEST_CASE("rank basics") {
  const Field q = Field::rationals();
  CHECK(rank(ExactMatrix::identity(q, 4)) == 4);
  CHECK(rank(ExactMatrix(q, 3, 5)) == 0);
  CHECK(rank(from_ints(q, 2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("nullspace basics") {
  const Field q = Field::rationals();
  CHECK(kernel_rows(ExactMatrix::identity(q, 3)).empty());
  CHECK(kernel_rows(ExactMatrix(q, 2, 2)).size() == 2);
  const auto ker = kernel_rows(from_ints(q, 1, 2, {1, 1}));
  REQUIRE(ker.size() == 1);
  // Proportional to (1, -1).
  CHECK(ker[0][0] == -ker[0][1]);
  CHECK(!ker[0][0].is_zero());
}

TEST_CASE("solve basics") {
  const Field q = Field::rationals();
  const Vec b = {Scalar(q, 3), Scalar(q, -1)};
  const auto x = solve(ExactMatrix::identity(q, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
  CHECK(!solve(ExactMatrix(q, 2, 2), b).has_value());
  const auto y = solve(from_ints(q, 1, 1, {2}), {Scalar(q, 1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0].str() == "1/2");
}

TEST_CASE("rank transpose and rank-nullity on random matrices") {
  std::mt19937_64 rng(20240811);
  for (const Field& f : {Field::rationals(), Field::fp(7)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::uniform_int_distribution<std::size_t> d(1, 6);
      const std::size_t r = d(rng), c = d(rng);
      const ExactMatrix m = random_matrix(f, r, c, rng);
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(rank(m) + kernel_rows(m).size() == c);
      for (const Vec& v : kernel_rows(m))
        CHECK(vec_is_zero(mul_vec(m, v)));
    }
  }
}

TEST_CASE("solve round trip on random consistent systems") {
  std::mt19937_64 rng(7);
  const Field q = Field::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> d(1, 6);
    const std::size_t r = d(rng), c = d(rng);
    const ExactMatrix m = random_matrix(q, r, c, rng);
    const ExactMatrix x0 = random_matrix(q, c, 1, rng);
    Vec b(r, Scalar::zero(q));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += m.at(i, j) * x0.at(j, 0);
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(mul_vec(m, *x) == b);
  }
}

TEST_CASE("row spaces") {
  const Field q = Field::rationals();
  const ExactMatrix m = from_ints(q, 3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
  const RowSpace s = RowSpace::span(m);
  CHECK(s.dim() == 2);
  CHECK(s.contains({Scalar(q, 1), Scalar(q, 3), Scalar(q, 4)}));
  CHECK(!s.contains({Scalar(q, 0), Scalar(q, 0), Scalar(q, 1)}));

  const RowSpace a = RowSpace::span(from_ints(q, 1, 3, {1, 0, 0}));
  const RowSpace b = RowSpace::span(from_ints(q, 2, 3, {1, 1, 0, 0, 0, 1}));
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersect(b).dim() == 0);
  const RowSpace cspace = RowSpace::span(from_ints(q, 2, 3, {1, 0, 0, 0, 1, 0}));
  CHECK(b.intersect(cspace).dim() == 1);
  CHECK(b.intersect(cspace).contains({Scalar(q, 1), Scalar(q, 1), Scalar(q, 0)}));

  const auto comp = s.complement_coords();
  REQUIRE(comp.size() == 1);
  CHECK(s.dim() + comp.size() == 3);
}
