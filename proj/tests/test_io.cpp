#include "doctest.h"

#include "cellua/io.hpp"

using namespace cellua;

namespace {

bool algebras_equal(const CellularAlgebra& a, const CellularAlgebra& b) {
  if (a.dim() != b.dim() || a.field() != b.field()) return false;
  if (a.datum.lambda_plus.elements() != b.datum.lambda_plus.elements())
    return false;
  if (a.datum.t_sets != b.datum.t_sets) return false;
  if (a.A.basis_names != b.A.basis_names) return false;
  if (!sparse_equal(a.A.unit, b.A.unit)) return false;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i)
    if (!sparse_equal(a.A.mult[i], b.A.mult[i])) return false;
  return true;
}

} // namespace

TEST_CASE("cell files round trip") {
  const Field q = Field::rationals();
  for (const std::string spec : {"matrix:n=2", "path-example"}) {
    const BuiltinAlgebra b = build_builtin(spec, q);
    const std::string text = serialize_cell_json(b.alg, b.alpha, spec);
    const BuiltinAlgebra back = parse_cell_json(text);
    CHECK(algebras_equal(b.alg, back.alg));
    CHECK(b.alpha.has_value() == back.alpha.has_value());
    if (b.alpha) {
      CHECK(back.alpha->lambda == b.alpha->lambda);
      CHECK(back.alpha->alpha == b.alpha->alpha);
      CHECK(back.alpha->x.elements() == b.alpha->x.elements());
      for (std::size_t m = 0; m < b.alpha->lambda.size(); ++m)
        CHECK(sparse_equal(back.alpha->idempotents[m], b.alpha->idempotents[m]));
    }
    // Canonical form is stable byte for byte.
    CHECK(serialize_cell_json(back.alg, back.alpha, spec) == text);
  }
}

TEST_CASE("fp files round trip bit-exactly") {
  const BuiltinAlgebra b = build_path_example(Field::fp(23));
  const std::string text = serialize_cell_json(b.alg, b.alpha, "p23");
  const BuiltinAlgebra back = parse_cell_json(text);
  CHECK(back.alg.field() == Field::fp(23));
  CHECK(algebras_equal(b.alg, back.alg));
}

TEST_CASE("schema violations carry a field path") {
  CHECK_THROWS_AS(parse_cell_json("not json"), Error);
  CHECK_THROWS_AS(parse_cell_json("{}"), Error);
  CHECK_THROWS_AS(parse_cell_json(R"({"schema": 2})"), Error);
  // Empty label list.
  const std::string empty_plus = R"({
    "schema": 1, "field": "rational",
    "lambda_tilde": [], "order": [], "lambda_plus": [],
    "t_sets": {}, "unit": [], "mult": []
  })";
  try {
    parse_cell_json(empty_plus);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
    CHECK(std::string(e.what()).find("lambda_plus") != std::string::npos);
  }
  // Empty index sets are rejected.
  const std::string empty_t = R"({
    "schema": 1, "field": "rational",
    "lambda_tilde": ["a"], "order": [], "lambda_plus": ["a"],
    "t_sets": {"a": []}, "unit": [], "mult": []
  })";
  try {
    parse_cell_json(empty_t);
    FAIL("expected a schema error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
  }
  // An order violating antisymmetry is a poset error.
  const std::string bad_order = R"({
    "schema": 1, "field": "rational",
    "lambda_tilde": ["a", "b"], "order": [["a","b"],["b","a"]],
    "lambda_plus": ["a"], "t_sets": {"a": ["1"]},
    "unit": [[0, "1"]], "mult": [[0, 0, [[0, "1"]]]]
  })";
  try {
    parse_cell_json(bad_order);
    FAIL("expected a poset error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Poset);
  }
  // A wrong unit expansion is rejected.
  const std::string bad_unit = R"({
    "schema": 1, "field": "rational",
    "lambda_tilde": ["a"], "order": [],
    "lambda_plus": ["a"], "t_sets": {"a": ["1"]},
    "unit": [[0, "2"]], "mult": [[0, 0, [[0, "1"]]]]
  })";
  CHECK_THROWS_AS(parse_cell_json(bad_unit), Error);
}

TEST_CASE("field override reinterprets coefficients") {
  const BuiltinAlgebra b = build_path_example(Field::rationals());
  const std::string text = serialize_cell_json(b.alg, b.alpha, "path");
  const BuiltinAlgebra back = parse_cell_json(text, Field::fp(23));
  CHECK(back.alg.field() == Field::fp(23));
  CHECK(back.alg.verify_cellular().ok());
}

TEST_CASE("shipped data files stay in sync with the builtins") {
  const Field q = Field::rationals();
  const std::string dir = CELLUA_DATA_DIR;
  {
    const BuiltinAlgebra b = build_path_example(q);
    CHECK(read_file(dir + "/path-example.cell.json") ==
          serialize_cell_json(b.alg, b.alpha, "path-example"));
  }
  {
    const BuiltinAlgebra b = build_matrix_algebra(q, 4, 2);
    CHECK(read_file(dir + "/matrix-n4-b2.cell.json") ==
          serialize_cell_json(b.alg, b.alpha, "matrix:n=4,b=2"));
  }
  const QuiverPresentation p =
      parse_quiver_json(read_file(dir + "/two-vertex.quiver.json"), q);
  CHECK(build_path_algebra(p, q, 4).alg.dim == 4);
}

TEST_CASE("quiver files parse and build") {
  const Field q = Field::rationals();
  const std::string text = R"({
    "schema": 1,
    "vertices": ["1", "2"],
    "arrows": [
      {"name": "x", "from": "1", "to": "2"},
      {"name": "y", "from": "2", "to": "1"}
    ],
    "relations": [
      [[["x", "y"], "1"]],
      [[["y", "x"], "1"]]
    ]
  })";
  const QuiverPresentation p = parse_quiver_json(text, q);
  const PathAlgebraResult r = build_path_algebra(p, q, 4);
  CHECK(r.alg.dim == 4);  // e1, e2, x, y
  CHECK_THROWS_AS(parse_quiver_json("{}", q), Error);
}
