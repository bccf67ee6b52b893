#include "doctest.h"

#include <set>

#include "cellua/builtins.hpp"

using namespace cellua;

namespace {

AlphaWorkspace path_workspace(const Field& f) {
  static std::map<std::string, std::pair<BuiltinAlgebra, AlphaWorkspace>> cache;
  const std::string key = f.name();
  auto it = cache.find(key);
  if (it == cache.end()) {
    BuiltinAlgebra b = build_path_example(f);
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    it = cache.emplace(key, std::make_pair(std::move(b), std::move(w))).first;
    it->second.second.ca = &it->second.first.alg;
  }
  return it->second.second;
}

std::set<std::string> to_set(const std::vector<std::string>& v) {
  return std::set<std::string>(v.begin(), v.end());
}

} // namespace

TEST_CASE("assumptions hold on the built-ins") {
  const Field q = Field::rationals();
  const BuiltinAlgebra path = build_path_example(q);
  CHECK(verify_assumptions(path.alg, *path.alpha).ok());
  const BuiltinAlgebra mat = build_matrix_algebra(q, 4, 2);
  CHECK(verify_assumptions(mat.alg, *mat.alpha).ok());
}

TEST_CASE("a broken idempotent family is reported") {
  const Field q = Field::rationals();
  BuiltinAlgebra path = build_path_example(q);
  AlphaDatum ad = *path.alpha;
  // Drop vertex 5: the sum no longer hits the unit.
  ad.lambda.pop_back();
  ad.idempotents.pop_back();
  const CheckReport rep = verify_assumptions(path.alg, ad);
  CHECK(!rep.ok());
  bool sum_failed = false;
  for (const auto& e : rep.entries())
    if (e.id == "idempotent-sum" && !e.pass) sum_failed = true;
  CHECK(sum_failed);
}

TEST_CASE("index partition of the path example") {
  const AlphaWorkspace w = path_workspace(Field::rationals());
  // T(l3, 3) = {3}, T(l3, 4) = {4}; plus part {3}, minus part {4}.
  CHECK(w.tp.t_plus[3] == std::vector<std::size_t>{0});
  CHECK(w.tp.t_minus[3] == std::vector<std::size_t>{1});
  // The square owner of each index of T(l3) is the matching vertex.
  CHECK(w.ad.lambda[w.tp.mu_of[3][0]] == "3");
  CHECK(w.ad.lambda[w.tp.mu_of[3][1]] == "4");
  // l0 is entirely minus, the others entirely plus.
  CHECK(w.tp.t_plus[0].empty());
  CHECK(w.tp.t_minus[0].size() == 1);
  for (const std::size_t l : {1, 2, 4}) {
    CHECK(w.tp.t_plus[l].size() == 2);
    CHECK(w.tp.t_minus[l].empty());
  }
  CHECK(w.tp.t_plus[5].size() == 1);
}

TEST_CASE("index partition of the matrix algebra") {
  const Field q = Field::rationals();
  const BuiltinAlgebra b = build_matrix_algebra(q, 4, 2);
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  CHECK(w.tp.t_plus[0] == std::vector<std::size_t>{1, 2, 3});
  CHECK(w.tp.t_minus[0] == std::vector<std::size_t>{0});
  CHECK(w.om.entries.size() == 2);
  // With the split at the top index both halves stay nonempty.
  const BuiltinAlgebra top = build_matrix_algebra(q, 3, 3);
  AlphaWorkspace wt = build_alpha_workspace(top.alg, *top.alpha);
  REQUIRE(wt.om.entries.size() == 2);
  CHECK(wt.om.entries[0].label == "(3,0)");
  CHECK(wt.om.entries[1].label == "(3,1)");
  CHECK(wt.tp.t_plus[0] == std::vector<std::size_t>{2});
  CHECK(wt.tp.t_minus[0] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("omega of the path example") {
  const AlphaWorkspace w = path_workspace(Field::rationals());
  std::vector<std::string> labels;
  for (const auto& e : w.om.entries) labels.push_back(e.label);
  CHECK(to_set(labels) == std::set<std::string>{"(l0,1)", "(l1,0)", "(l2,0)",
                                                "(l3,0)", "(l3,1)", "(l4,0)",
                                                "(l5,0)"});
  CHECK(w.om.lambda_bar == std::vector<std::string>{"l1", "l2", "l3", "l4", "l5"});
  // The doubled order puts every lower entry above every surviving one.
  const std::size_t top = w.om.poset.index_or_fail("(l0,1)");
  const std::size_t bottom = w.om.poset.index_or_fail("(l5,0)");
  CHECK(w.om.poset.greater(top, bottom));
  const std::size_t l31 = w.om.poset.index_or_fail("(l3,1)");
  const std::size_t l10 = w.om.poset.index_or_fail("(l1,0)");
  CHECK(w.om.poset.greater(l31, l10));
}

TEST_CASE("construction dimensions of the path example") {
  const AlphaWorkspace w = path_workspace(Field::rationals());
  CHECK(w.levi.sub.alg.dim == 16);
  CHECK(w.para.sub.alg.dim == 17);
  CHECK(w.para_star.sub.alg.dim == 17);
  CHECK(w.quot.alg.dim() == 14);
  CHECK(w.construction_report.ok());
  // The parabolic picks up a43, its star picks up a34.
  const auto& names = w.para.sub.alg.basis_names;
  CHECK(std::count(names.begin(), names.end(), "a43") == 1);
  CHECK(std::count(names.begin(), names.end(), "a34") == 0);
  const auto& snames = w.para_star.sub.alg.basis_names;
  CHECK(std::count(snames.begin(), snames.end(), "a34") == 1);
  CHECK(std::count(snames.begin(), snames.end(), "a43") == 0);
}

TEST_CASE("construction dimensions of the matrix algebras") {
  const Field q = Field::rationals();
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t b = 2; b <= n; ++b) {
      const BuiltinAlgebra bt = build_matrix_algebra(q, n, b);
      AlphaWorkspace w = build_alpha_workspace(bt.alg, *bt.alpha);
      const std::size_t small = b - 1, large = n - b + 1;
      CHECK(w.levi.sub.alg.dim == small * small + large * large);
      CHECK(w.para.sub.alg.dim == small * n + large * large);
      CHECK(w.quot.alg.dim() == large * large);
      CHECK(w.construction_report.ok());
    }
}

TEST_CASE("a constant map keeps everything") {
  const Field q = Field::rationals();
  BuiltinAlgebra b = build_path_example(q);
  AlphaDatum ad = *b.alpha;
  ad.x = Poset({"t"}, {});
  for (auto& [key, value] : ad.alpha) value = "t";
  AlphaWorkspace w = build_alpha_workspace(b.alg, ad);
  CHECK(w.levi.sub.alg.dim == 18);
  CHECK(w.para.sub.alg.dim == 18);
  CHECK(w.quot.alg.dim() == 18);
  CHECK(w.om.hat.empty());
  CHECK(w.construction_report.ok());
  CheckReport rep = run_full_report(w);
  CHECK(rep.ok());
  CHECK(w.d_quot == w.d_ambient);
}

TEST_CASE("a coarser idempotent family gives the same constructions") {
  // Merge the first two vertex idempotents into one.
  const Field q = Field::rationals();
  BuiltinAlgebra b = build_path_example(q);
  AlphaDatum ad;
  std::vector<std::string> tilde = {"l0", "l1", "l2", "12", "l3",
                                    "3",  "l4", "4",  "l5", "5"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < tilde.size(); ++i)
    pairs.emplace_back(tilde[i], tilde[i + 1]);
  ad.lambda_tilde = Poset(tilde, pairs);
  ad.lambda = {"12", "3", "4", "5"};
  const SparseVec e12 =
      sparse_add(b.alpha->idempotents[0], b.alpha->idempotents[1]);
  ad.idempotents = {e12, b.alpha->idempotents[2], b.alpha->idempotents[3],
                    b.alpha->idempotents[4]};
  ad.x = Poset({"t0", "t123", "t45"}, {{"t0", "t123"}, {"t123", "t45"}});
  for (const std::string v : {"l1", "l2", "l3", "12", "3"})
    ad.alpha[v] = "t123";
  for (const std::string v : {"l4", "l5", "4", "5"}) ad.alpha[v] = "t45";
  ad.alpha["l0"] = "t0";

  CHECK(verify_assumptions(b.alg, ad).ok());
  AlphaWorkspace w = build_alpha_workspace(b.alg, ad);
  // Same split, hence the same spans as with the fine family.
  CHECK(w.levi.sub.alg.dim == 16);
  CHECK(w.para.sub.alg.dim == 17);
  CHECK(w.quot.alg.dim() == 14);
  CHECK(run_full_report(w).ok());
}

TEST_CASE("the relation checker notices corrupted matrices") {
  AlphaWorkspace w = path_workspace(Field::rationals());
  compute_decomposition_data(w);
  REQUIRE(check_decomposition_relations(w).ok());
  AlphaWorkspace broken = w;
  broken.d_para_right.entries[0][0] += 1;
  CHECK(!check_decomposition_relations(broken).ok());
  AlphaWorkspace broken2 = w;
  for (auto& row : broken2.d_quot.entries)
    for (auto& v : row) v = 0;
  CHECK(!check_decomposition_relations(broken2).ok());
}

TEST_CASE("decomposition matrices of the path example") {
  AlphaWorkspace w = path_workspace(Field::rationals());
  compute_decomposition_data(w);

  DecompositionMatrix levi_expected;
  levi_expected.row_labels = {"(l0,1)", "(l3,1)", "(l1,0)", "(l2,0)",
                              "(l3,0)", "(l4,0)", "(l5,0)"};
  levi_expected.col_labels = {"(l1,0)", "(l2,0)", "(l3,0)", "(l4,0)", "(l5,0)"};
  const std::map<std::string, std::vector<long long>> levi_rows = {
      {"(l0,1)", {1, 0, 0, 0, 0}}, {"(l1,0)", {1, 1, 0, 0, 0}},
      {"(l2,0)", {0, 1, 1, 0, 0}}, {"(l3,0)", {0, 0, 1, 0, 0}},
      {"(l3,1)", {0, 0, 0, 1, 0}}, {"(l4,0)", {0, 0, 0, 1, 1}},
      {"(l5,0)", {0, 0, 0, 0, 1}}};
  CHECK(to_set(w.d_levi.row_labels) == to_set(levi_expected.row_labels));
  CHECK(to_set(w.d_levi.col_labels) == to_set(levi_expected.col_labels));
  for (const auto& [row, vals] : levi_rows)
    for (std::size_t c = 0; c < levi_expected.col_labels.size(); ++c)
      CHECK(w.d_levi.get(row, levi_expected.col_labels[c]) ==
            vals[c]);

  const std::map<std::string, std::vector<long long>> quot_rows = {
      {"l1", {1, 1, 0, 0, 0}},
      {"l2", {0, 1, 1, 0, 0}},
      {"l3", {0, 0, 1, 0, 0}},
      {"l4", {0, 0, 0, 1, 1}},
      {"l5", {0, 0, 0, 0, 1}}};
  const std::vector<std::string> bar_cols = {"l1", "l2", "l3", "l4", "l5"};
  CHECK(to_set(w.d_quot.row_labels) == to_set(bar_cols));
  for (const auto& [row, vals] : quot_rows)
    for (std::size_t c = 0; c < bar_cols.size(); ++c)
      CHECK(w.d_quot.get(row, bar_cols[c]) == vals[c]);

  // Right parabolic matrix rows, including the widened (l3,1) row.
  const std::map<std::string, std::vector<long long>> para_rows = {
      {"(l0,1)", {1, 0, 0, 0, 0}}, {"(l1,0)", {1, 1, 0, 0, 0}},
      {"(l2,0)", {0, 1, 1, 0, 0}}, {"(l3,0)", {0, 0, 1, 0, 0}},
      {"(l3,1)", {0, 0, 1, 1, 0}}, {"(l4,0)", {0, 0, 0, 1, 1}},
      {"(l5,0)", {0, 0, 0, 0, 1}}};
  const std::vector<std::string> para_cols = {"(l1,0)", "(l2,0)", "(l3,0)",
                                              "(l4,0)", "(l5,0)"};
  CHECK(to_set(w.d_para_right.col_labels) == to_set(para_cols));
  for (const auto& [row, vals] : para_rows)
    for (std::size_t c = 0; c < para_cols.size(); ++c)
      CHECK(w.d_para_right.get(row, para_cols[c]) == vals[c]);

  // The left parabolic matrix differs exactly in the lower rows.
  const std::map<std::string, std::vector<long long>> para_left_rows = {
      {"(l0,1)", {1, 0, 0, 0, 0}}, {"(l1,0)", {1, 1, 0, 0, 0}},
      {"(l2,0)", {0, 1, 1, 0, 0}}, {"(l3,0)", {0, 0, 1, 0, 0}},
      {"(l3,1)", {0, 0, 0, 1, 0}}, {"(l4,0)", {0, 0, 0, 1, 1}},
      {"(l5,0)", {0, 0, 0, 0, 1}}};
  for (const auto& [row, vals] : para_left_rows)
    for (std::size_t c = 0; c < para_cols.size(); ++c)
      CHECK(w.d_para_left.get(row, para_cols[c]) == vals[c]);

  CHECK(to_set(w.omega_zero) ==
        std::set<std::string>{"(l1,0)", "(l2,0)", "(l3,0)", "(l4,0)", "(l5,0)"});
  CHECK(to_set(w.omega_zero_tilde) == to_set(w.omega_zero));

  // Spot values linking the four matrices: a surviving pair with equal map
  // values, a crossing pair, and the top label.
  CHECK(w.d_ambient.get("l2", "l3") == 1);
  CHECK(w.d_quot.get("l2", "l3") == 1);
  CHECK(w.d_ambient.get("l3", "l4") == 1);
  CHECK(w.d_levi.get("(l3,1)", "(l4,0)") == 1);
  CHECK(w.d_ambient.get("l0", "l1") == 1);
  CHECK(w.d_levi.get("(l0,1)", "(l1,0)") == 1);
}

TEST_CASE("full relation report passes on the path example") {
  for (const Field& f : {Field::rationals(), Field::fp(23)}) {
    AlphaWorkspace w = path_workspace(f);
    const CheckReport rep = run_full_report(w);
    if (!rep.ok()) {
      std::ostringstream os;
      rep.print(os, true);
      FAIL_CHECK(os.str());
    }
    CHECK(rep.ok());
  }
}

TEST_CASE("full relation report passes on matrix n=4 b=2") {
  const BuiltinAlgebra b = build_matrix_algebra(Field::rationals(), 4, 2);
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  const CheckReport rep = run_full_report(w);
  if (!rep.ok()) {
    std::ostringstream os;
    rep.print(os, true);
    FAIL_CHECK(os.str());
  }
  CHECK(rep.ok());
}

TEST_CASE("full relation report passes on matrix edge splits") {
  // Split at the top index and at the bottom, over a small prime too.
  for (const auto& [n, b, field] :
       {std::tuple<std::size_t, std::size_t, Field>{3, 3, Field::rationals()},
        {5, 2, Field::rationals()},
        {3, 2, Field::fp(11)}}) {
    const BuiltinAlgebra bt = build_matrix_algebra(field, n, b);
    AlphaWorkspace w = build_alpha_workspace(bt.alg, *bt.alpha);
    const CheckReport rep = run_full_report(w);
    if (!rep.ok()) {
      std::ostringstream os;
      rep.print(os, true);
      FAIL_CHECK(os.str());
    }
    CHECK(rep.ok());
  }
}

TEST_CASE("condition check on both built-ins") {
  {
    const BuiltinAlgebra b = build_matrix_algebra(Field::rationals(), 4, 2);
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    const ConditionC cc = check_condition_c(w);
    CHECK(cc.holds);
    CHECK(cc.consequences.ok());
    CHECK(cc.consequences.size() > 0);
  }
  {
    AlphaWorkspace w = path_workspace(Field::rationals());
    compute_decomposition_data(w);
    const ConditionC cc = check_condition_c(w);
    CHECK(!cc.holds);
    CHECK(cc.witness.find("l1") != std::string::npos);
  }
}

TEST_CASE("standard modules embed on the derived algebras too") {
  const AlphaWorkspace w = path_workspace(Field::rationals());
  for (std::size_t l = 0; l < w.levi.cell.lambda_count(); ++l)
    CHECK(embed_standard(w.levi.cell, l).ok());
  for (std::size_t l = 0; l < w.quot.alg.lambda_count(); ++l)
    CHECK(embed_standard(w.quot.alg, l).ok());
}

TEST_CASE("block data of the path example") {
  AlphaWorkspace w = path_workspace(Field::rationals());
  compute_decomposition_data(w);
  const BlockData bd = compute_block_data(w);
  CHECK(bd.ambient.blocks.size() == 1);
  CHECK(bd.para_on_lambda.blocks.size() == 1);
  REQUIRE(bd.quot.blocks.size() == 2);
  CHECK(to_set(bd.quot.blocks[0]) == std::set<std::string>{"l1", "l2", "l3"});
  CHECK(to_set(bd.quot.blocks[1]) == std::set<std::string>{"l4", "l5"});
  // The levi splits into two blocks, matching its two-component shape.
  CHECK(bd.levi.blocks.size() == 2);
  CHECK(check_block_relations(w, bd).ok());
}
