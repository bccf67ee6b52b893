// Acceptance suite: one line per criterion, exact comparisons throughout.

#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cellua/builtins.hpp"
#include "cellua/io.hpp"
#include "oracle.hpp"

using namespace cellua;

namespace {

int failures = 0;

void criterion(const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS " : "FAIL ") << name;
  if (!pass && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
  if (!pass) ++failures;
}

DecompositionMatrix path_matrix_expected() {
  DecompositionMatrix d;
  d.row_labels = {"l0", "l1", "l2", "l3", "l4", "l5"};
  d.col_labels = {"l1", "l2", "l3", "l4", "l5"};
  d.entries = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0},
               {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
  return d;
}

bool matrix_matches(const DecompositionMatrix& got,
                    const std::vector<std::string>& rows,
                    const std::vector<std::string>& cols,
                    const std::vector<std::vector<long long>>& entries) {
  if (std::set<std::string>(got.row_labels.begin(), got.row_labels.end()) !=
      std::set<std::string>(rows.begin(), rows.end()))
    return false;
  if (std::set<std::string>(got.col_labels.begin(), got.col_labels.end()) !=
      std::set<std::string>(cols.begin(), cols.end()))
    return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (got.get(rows[r], cols[c]) != entries[r][c]) return false;
  return true;
}

std::set<std::string> to_set(const std::vector<std::string>& v) {
  return std::set<std::string>(v.begin(), v.end());
}

// 1. Path-example decomposition matrix over the rationals and mod 23.
void criterion1() {
  bool pass = true;
  std::string detail;
  for (const Field& f : {Field::rationals(), Field::fp(23)}) {
    const BuiltinAlgebra b = build_path_example(f);
    const DecompositionMatrix d = decomposition_matrix(b.alg, Side::Right);
    if (!(d == path_matrix_expected())) {
      pass = false;
      detail = "mismatch over " + f.name();
    }
  }
  criterion("criterion-1 path decomposition matrix (rational, fp:23)", pass,
            detail);
}

// 2. Levi and quotient decomposition matrices of the path example.
void criterion2() {
  BuiltinAlgebra b = build_path_example(Field::rationals());
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  compute_decomposition_data(w);
  const bool levi_ok = matrix_matches(
      w.d_levi,
      {"(l0,1)", "(l1,0)", "(l2,0)", "(l3,0)", "(l3,1)", "(l4,0)", "(l5,0)"},
      {"(l1,0)", "(l2,0)", "(l3,0)", "(l4,0)", "(l5,0)"},
      {{1, 0, 0, 0, 0},
       {1, 1, 0, 0, 0},
       {0, 1, 1, 0, 0},
       {0, 0, 1, 0, 0},
       {0, 0, 0, 1, 0},
       {0, 0, 0, 1, 1},
       {0, 0, 0, 0, 1}});
  const bool quot_ok = matrix_matches(w.d_quot, {"l1", "l2", "l3", "l4", "l5"},
                                      {"l1", "l2", "l3", "l4", "l5"},
                                      {{1, 1, 0, 0, 0},
                                       {0, 1, 1, 0, 0},
                                       {0, 0, 1, 0, 0},
                                       {0, 0, 0, 1, 1},
                                       {0, 0, 0, 0, 1}});
  criterion("criterion-2 levi and quotient decomposition matrices",
            levi_ok && quot_ok, levi_ok ? "quotient mismatch" : "levi mismatch");
}

// 3. Label sets of the path example.
void criterion3() {
  BuiltinAlgebra b = build_path_example(Field::rationals());
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  compute_decomposition_data(w);
  std::vector<std::string> omega_labels;
  for (const auto& e : w.om.entries) omega_labels.push_back(e.label);
  const bool pass =
      to_set(w.lambda_plus_zero) ==
          std::set<std::string>{"l1", "l2", "l3", "l4", "l5"} &&
      to_set(omega_labels) == std::set<std::string>{"(l0,1)", "(l1,0)", "(l2,0)",
                                                    "(l3,0)", "(l3,1)", "(l4,0)",
                                                    "(l5,0)"} &&
      to_set(w.omega_zero) == std::set<std::string>{"(l1,0)", "(l2,0)", "(l3,0)",
                                                    "(l4,0)", "(l5,0)"} &&
      to_set(w.om.lambda_bar) == std::set<std::string>{"l1", "l2", "l3", "l4",
                                                       "l5"};
  criterion("criterion-3 label sets (simples, omega, survivors)", pass);
}

// 4. Dimensions of the four algebras.
void criterion4() {
  bool pass = true;
  std::string detail;
  {
    BuiltinAlgebra b = build_path_example(Field::rationals());
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    if (b.alg.dim() != 18 || w.levi.sub.alg.dim != 16 ||
        w.para.sub.alg.dim != 17 || w.quot.alg.dim() != 14) {
      pass = false;
      detail = "path example dimensions";
    }
  }
  for (std::size_t n = 3; n <= 5 && pass; ++n)
    for (std::size_t bb = 2; bb <= n && pass; ++bb) {
      const BuiltinAlgebra b = build_matrix_algebra(Field::rationals(), n, bb);
      AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
      const std::size_t small = bb - 1, large = n - bb + 1;
      if (w.levi.sub.alg.dim != small * small + large * large ||
          w.para.sub.alg.dim != small * n + large * large ||
          w.quot.alg.dim() != large * large) {
        pass = false;
        detail = "matrix n=" + std::to_string(n) + " b=" + std::to_string(bb);
      }
    }
  criterion("criterion-4 construction dimensions", pass, detail);
}

// 5. Semisimplicity of the matrix algebras.
void criterion5() {
  bool pass = true;
  std::string detail;
  for (std::size_t n = 1; n <= 5; ++n) {
    const BuiltinAlgebra b =
        build_matrix_algebra(Field::rationals(), n, std::nullopt);
    const DecompositionMatrix d = decomposition_matrix(b.alg, Side::Right);
    const Radical j = jacobson_radical(b.alg.A);
    if (d.row_labels.size() != 1 || d.col_labels.size() != 1 ||
        d.entries[0][0] != 1 || j.space.dim() != 0 ||
        linkage_partition(d).blocks.size() != 1) {
      pass = false;
      detail = "n=" + std::to_string(n);
    }
  }
  criterion("criterion-5 matrix algebras are semisimple", pass, detail);
}

// 6. The relation suite on both built-ins.
void criterion6() {
  bool pass = true;
  std::string detail;
  for (const std::string& spec : {std::string("path-example"),
                                 std::string("matrix:n=4,b=2")}) {
    BuiltinAlgebra b = build_builtin(spec, Field::rationals());
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    CheckReport rep;
    rep.merge(w.construction_report);
    rep.merge(check_form_relations(w));
    rep.merge(check_module_relations(w));
    rep.merge(check_decomposition_relations(w));
    if (!rep.ok()) {
      pass = false;
      std::ostringstream os;
      rep.print(os, true);
      detail = spec + ": " + os.str();
    }
  }
  criterion("criterion-6 module and decomposition relation suite", pass, detail);
}

// 7. Block relations on the path example.
void criterion7() {
  BuiltinAlgebra b = build_path_example(Field::rationals());
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  compute_decomposition_data(w);
  const BlockData bd = compute_block_data(w);
  const CheckReport rep = check_block_relations(w, bd);
  bool pass = rep.ok();
  std::string detail;
  if (bd.quot.blocks.size() != 2 ||
      to_set(bd.quot.blocks[0]) != std::set<std::string>{"l1", "l2", "l3"} ||
      to_set(bd.quot.blocks[1]) != std::set<std::string>{"l4", "l5"}) {
    pass = false;
    detail = "quotient partition";
  }
  if (bd.ambient.blocks.size() != 1) {
    pass = false;
    detail = "ambient partition";
  }
  if (!rep.ok()) {
    std::ostringstream os;
    rep.print(os, true);
    detail = os.str();
  }
  criterion("criterion-7 block relations", pass, detail);
}

// 8. Property batteries: mutations, left-right symmetry, block-diagonal
// forms, and the composition-series oracle.
void criterion8() {
  const Field q = Field::rationals();
  bool pass = true;
  std::string detail;

  // Fifty random single-entry mutations must all be flagged.
  std::mt19937_64 rng(0xce11a);
  const BuiltinAlgebra reference = build_path_example(q);
  const std::size_t dim = reference.alg.dim();
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  for (int trial = 0; trial < 50 && pass; ++trial) {
    BuiltinAlgebra b = build_path_example(q);
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    b.alg.A.basis_product(i, j) = sparse_add(
        b.alg.A.basis_product(i, j), {{k, Scalar::one(q)}});
    bool flagged = !b.alg.verify_cellular().ok();
    if (!flagged) flagged = !verify_assumptions(b.alg, *b.alpha).ok();
    if (!flagged) {
      pass = false;
      detail = "mutation (" + std::to_string(i) + "," + std::to_string(j) +
               ")+=" + std::to_string(k) + " went unnoticed";
    }
  }

  // Left and right decomposition matrices coincide on the built-ins.
  if (pass) {
    for (const std::string& spec :
         {std::string("path-example"), std::string("matrix:n=3"),
          std::string("matrix:n=4"), std::string("matrix:n=5")}) {
      const BuiltinAlgebra b = build_builtin(spec, q);
      if (!(decomposition_matrix(b.alg, Side::Right) ==
            decomposition_matrix(b.alg, Side::Left))) {
        pass = false;
        detail = "left/right mismatch on " + spec;
      }
    }
  }

  // The ambient Gram matrices are block diagonal across the split.
  if (pass) {
    for (const std::string& spec : {std::string("path-example"),
                                   std::string("matrix:n=4,b=2")}) {
      BuiltinAlgebra b = build_builtin(spec, q);
      AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
      for (std::size_t l = 0; l < b.alg.lambda_count(); ++l) {
        const ExactMatrix g = gram(b.alg, l).matrix;
        for (const std::size_t s : w.tp.t_plus[l])
          for (const std::size_t t : w.tp.t_minus[l])
            if (!g.at(s, t).is_zero() || !g.at(t, s).is_zero()) {
              pass = false;
              detail = "gram not block diagonal on " + spec;
            }
      }
    }
  }

  // Radical-filtration multiplicities match the randomized series search.
  if (pass) {
    const CellularAlgebra& a = reference.alg;
    const Radical j = jacobson_radical(a.A);
    std::vector<CellModule> simples;
    for (std::size_t l = 0; l < a.lambda_count(); ++l)
      if (simple_dimension(a, l) > 0)
        simples.push_back(simple_module(a, l, Side::Right));
    for (std::size_t l = 0; l < a.lambda_count(); ++l) {
      const CellModule wmod = standard_module(a, l, Side::Right);
      if (composition_multiplicities(a.A, wmod, simples, j) !=
          testing::oracle_multiplicities(a.A, wmod, simples)) {
        pass = false;
        detail = "oracle disagrees at " + a.lambda_label(l);
      }
    }
  }

  criterion("criterion-8 property batteries", pass, detail);
}

// 9. The inclusion condition holds on matrix:n=4,b=2 and fails on the path
// example.
void criterion9() {
  bool pass = true;
  std::string detail;
  {
    const BuiltinAlgebra b = build_matrix_algebra(Field::rationals(), 4, 2);
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    const ConditionC cc = check_condition_c(w);
    if (!cc.holds || !cc.consequences.ok() || cc.consequences.size() == 0) {
      pass = false;
      detail = "condition fails on matrix n=4 b=2";
    }
  }
  {
    BuiltinAlgebra b = build_path_example(Field::rationals());
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    const ConditionC cc = check_condition_c(w);
    if (cc.holds) {
      pass = false;
      detail = "condition unexpectedly holds on the path example";
    }
  }
  criterion("criterion-9 inclusion condition", pass, detail);
}

} // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::cout << "FAIL (exception: " << e.what() << ")\n";
    return 1;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED") << " ("
            << 9 - failures << "/9)\n";
  return failures == 0 ? 0 : 1;
}
