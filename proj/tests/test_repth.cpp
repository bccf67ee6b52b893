#include "doctest.h"

#include "cellua/builtins.hpp"
#include "cellua/repth.hpp"
#include "oracle.hpp"

using namespace cellua;

namespace {

const BuiltinAlgebra& path_q() {
  static const BuiltinAlgebra b = build_path_example(Field::rationals());
  return b;
}

DecompositionMatrix expected_path_matrix() {
  DecompositionMatrix d;
  d.row_labels = {"l0", "l1", "l2", "l3", "l4", "l5"};
  d.col_labels = {"l1", "l2", "l3", "l4", "l5"};
  d.entries = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0},
               {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  return d;
}

} // namespace

TEST_CASE("matrix algebra has zero radical") {
  const BuiltinAlgebra b =
      build_matrix_algebra(Field::rationals(), 3, std::nullopt);
  const Radical j = jacobson_radical(b.alg.A);
  CHECK(j.space.dim() == 0);
  CHECK(j.nilpotency == 1);
}

TEST_CASE("path example radical has dimension 13") {
  const Radical j = jacobson_radical(path_q().alg.A);
  CHECK(j.space.dim() == 13);
}

TEST_CASE("small characteristic is rejected") {
  const BuiltinAlgebra b = build_path_example(Field::fp(2));
  CHECK_THROWS_AS(jacobson_radical(b.alg.A), Error);
  try {
    jacobson_radical(b.alg.A);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedCharacteristic);
    CHECK(std::string(e.what()).find("p > dim") != std::string::npos);
  }
}

TEST_CASE("radical filtration of a standard module") {
  const CellularAlgebra& a = path_q().alg;
  const Radical j = jacobson_radical(a.A);
  // W(l1) has two one-dimensional layers.
  const auto layers1 =
      radical_filtration(a.A, standard_module(a, 1, Side::Right), j);
  REQUIRE(layers1.size() == 2);
  CHECK(layers1[0].dim == 1);
  CHECK(layers1[1].dim == 1);
  // A simple module has a single layer.
  const auto layer_simple =
      radical_filtration(a.A, simple_module(a, 5, Side::Right), j);
  CHECK(layer_simple.size() == 1);
  // A zero module has none.
  CellModule zero;
  zero.side = Side::Right;
  zero.dim = 0;
  zero.act.assign(a.dim(), ExactMatrix(a.field(), 0, 0));
  CHECK(radical_filtration(a.A, zero, j).empty());
}

TEST_CASE("hom dimensions between simples and standards") {
  const CellularAlgebra& a = path_q().alg;
  const CellModule l1 = simple_module(a, 1, Side::Right);
  const CellModule l2 = simple_module(a, 2, Side::Right);
  CHECK(hom_dimension(a.A, l1, l1) == 1);
  CHECK(hom_dimension(a.A, l1, l2) == 0);
  const CellModule w1 = standard_module(a, 1, Side::Right);
  CHECK(hom_dimension(a.A, w1, l2) == 0);  // head is L(l1)
  CHECK(hom_dimension(a.A, w1, l1) == 1);
  const CellModule l1_left = simple_module(a, 1, Side::Left);
  CHECK_THROWS_AS((void)hom_dimension(a.A, l1, l1_left), Error);
}

TEST_CASE("composition multiplicities per standard module") {
  const CellularAlgebra& a = path_q().alg;
  const Radical j = jacobson_radical(a.A);
  std::vector<CellModule> simples;
  for (std::size_t l = 1; l <= 5; ++l)
    simples.push_back(simple_module(a, l, Side::Right));
  const auto m3 = composition_multiplicities(
      a.A, standard_module(a, 3, Side::Right), simples, j);
  CHECK(m3 == std::vector<long long>{0, 0, 1, 1, 0});
}

TEST_CASE("path decomposition matrix over the rationals and mod 23") {
  for (const Field& f : {Field::rationals(), Field::fp(23)}) {
    const BuiltinAlgebra b = build_path_example(f);
    const DecompositionMatrix d = decomposition_matrix(b.alg, Side::Right);
    CHECK(d == expected_path_matrix());
    CHECK(decomposition_matrix(b.alg, Side::Left) == d);
  }
}

TEST_CASE("matrix algebra decomposition matrix is the identity") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const BuiltinAlgebra b =
        build_matrix_algebra(Field::rationals(), n, std::nullopt);
    const DecompositionMatrix d = decomposition_matrix(b.alg, Side::Right);
    REQUIRE(d.row_labels.size() == 1);
    CHECK(d.entries[0][0] == 1);
    CHECK(linkage_partition(d).blocks.size() == 1);
  }
}

TEST_CASE("unitriangularity on the built-ins") {
  const CellularAlgebra& a = path_q().alg;
  const DecompositionMatrix d = decomposition_matrix(a, Side::Right);
  for (std::size_t r = 0; r < d.row_labels.size(); ++r)
    for (std::size_t c = 0; c < d.col_labels.size(); ++c) {
      if (d.row_labels[r] == d.col_labels[c]) CHECK(d.entries[r][c] == 1);
      if (d.entries[r][c] != 0) {
        const std::size_t li = a.datum.lambda_plus.index_or_fail(d.row_labels[r]);
        const std::size_t mi = a.datum.lambda_plus.index_or_fail(d.col_labels[c]);
        CHECK(a.datum.lambda_plus.geq(li, mi));
      }
    }
}

TEST_CASE("linkage partitions") {
  CHECK(linkage_partition(decomposition_matrix(path_q().alg, Side::Right))
            .blocks.size() == 1);
  DecompositionMatrix diag;
  diag.row_labels = {"a", "b"};
  diag.col_labels = {"a", "b"};
  diag.entries = {{1, 0}, {0, 1}};
  CHECK(linkage_partition(diag).blocks.size() == 2);
}

TEST_CASE("cartan formula basics") {
  DecompositionMatrix id2;
  id2.row_labels = {"a", "b"};
  id2.col_labels = {"a", "b"};
  id2.entries = {{1, 0}, {0, 1}};
  const DecompositionMatrix c = cartan_via_formula(id2, id2);
  CHECK(c.entries == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
  DecompositionMatrix zero = id2;
  zero.entries = {{0, 0}, {0, 0}};
  CHECK(cartan_via_formula(zero, id2).entries ==
        std::vector<std::vector<long long>>{{0, 0}, {0, 0}});
}

TEST_CASE("multiplicities agree with the composition-series oracle") {
  const CellularAlgebra& a = path_q().alg;
  const Radical j = jacobson_radical(a.A);
  std::vector<CellModule> simples;
  for (std::size_t l = 1; l <= 5; ++l)
    simples.push_back(simple_module(a, l, Side::Right));
  for (std::size_t l = 0; l < a.lambda_count(); ++l) {
    const CellModule w = standard_module(a, l, Side::Right);
    CHECK(composition_multiplicities(a.A, w, simples, j) ==
          testing::oracle_multiplicities(a.A, w, simples));
  }
}
