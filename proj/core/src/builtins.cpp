#include "cellua/builtins.hpp"

#include <algorithm>
#include <map>

namespace cellua {

BuiltinAlgebra build_matrix_algebra(const Field& f, std::size_t n,
                                    std::optional<std::size_t> b) {
  if (n < 1) fail(ErrorKind::Input, "matrix algebra needs n >= 1");
  if (b && (*b <= 1 || *b > n))
    fail(ErrorKind::Input, "matrix algebra split needs 1 < b <= n");

  std::vector<std::string> tilde_labels;
  std::vector<std::pair<std::string, std::string>> tilde_pairs;
  for (std::size_t i = 1; i <= n; ++i)
    tilde_labels.push_back(std::to_string(i));
  for (std::size_t i = 2; i <= n; ++i)
    tilde_pairs.emplace_back(std::to_string(i), std::to_string(i - 1));
  Poset tilde(tilde_labels, tilde_pairs);

  const std::string top = std::to_string(n);
  Poset cell_poset({top}, {});
  std::vector<std::string> t_set = tilde_labels;
  CellularDatum datum = CellularDatum::build(cell_poset, {t_set});

  AssocAlgebra a;
  a.field = f;
  a.dim = n * n;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      a.basis_names.push_back("E" + std::to_string(i) + std::to_string(j));
  a.mult.assign(a.dim * a.dim, {});
  auto pos = [&](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k)
            a.basis_product(pos(i, j), pos(k, l)) = {{pos(i, l), Scalar::one(f)}};
  for (std::size_t i = 0; i < n; ++i)
    a.unit.emplace_back(pos(i, i), Scalar::one(f));
  a.unit = sparse_normalize(std::move(a.unit));

  BuiltinAlgebra out;
  out.alg = CellularAlgebra::assemble(std::move(a), std::move(datum));
  if (b) {
    AlphaDatum ad;
    ad.lambda_tilde = tilde;
    ad.lambda = tilde_labels;
    for (std::size_t k = 0; k < n; ++k)
      ad.idempotents.push_back({{pos(k, k), Scalar::one(f)}});
    ad.x = Poset({"l", "s"}, {{"l", "s"}});
    for (std::size_t k = 1; k <= n; ++k)
      ad.alpha[std::to_string(k)] = k >= *b ? "l" : "s";
    out.alpha = std::move(ad);
  }
  return out;
}

QuiverPresentation path_example_quiver(const Field& f) {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3", "4", "5"};
  auto arrow = [&](std::size_t from, std::size_t to) {
    q.arrows.push_back({"a" + std::to_string(from + 1) + std::to_string(to + 1),
                        from, to});
  };
  arrow(0, 1);  // a12
  arrow(1, 0);  // a21
  arrow(1, 2);  // a23
  arrow(2, 1);  // a32
  arrow(2, 3);  // a34
  arrow(3, 2);  // a43
  arrow(3, 4);  // a45
  arrow(4, 3);  // a54
  auto word = [&](std::initializer_list<std::size_t> arrows) {
    QuiverPresentation::Word w;
    w.arrows = arrows;
    w.source = q.arrows[*arrows.begin()].from;
    return w;
  };
  const Scalar one = Scalar::one(f);
  auto zero_rel = [&](std::initializer_list<std::size_t> arrows) {
    q.relations.push_back({{{word(arrows), one}}});
  };
  auto eq_rel = [&](std::initializer_list<std::size_t> lhs,
                    std::initializer_list<std::size_t> rhs) {
    q.relations.push_back({{{word(lhs), one}, {word(rhs), -one}}});
  };
  zero_rel({0, 2});  // a12 a23
  zero_rel({2, 4});  // a23 a34
  zero_rel({4, 6});  // a34 a45
  zero_rel({7, 5});  // a54 a43
  zero_rel({5, 3});  // a43 a32
  zero_rel({3, 1});  // a32 a21
  eq_rel({1, 0}, {2, 3});  // a21 a12 = a23 a32
  eq_rel({3, 2}, {4, 5});  // a32 a23 = a34 a43
  eq_rel({5, 4}, {6, 7});  // a43 a34 = a45 a54
  return q;
}

BuiltinAlgebra build_path_example(const Field& f) {
  const QuiverPresentation q = path_example_quiver(f);
  const PathAlgebraResult pa = build_path_algebra(q, f, 2 * q.vertices.size());
  if (pa.alg.dim != 18)
    fail(ErrorKind::Internal, "path example closure has dimension " +
                                  std::to_string(pa.alg.dim));

  // Cellular structure: one top cell for the loop at vertex 1, one square
  // cell per inner vertex pair, and the last vertex idempotent.
  std::vector<std::string> cell_labels = {"l0", "l1", "l2", "l3", "l4", "l5"};
  std::vector<std::pair<std::string, std::string>> cell_pairs;
  for (std::size_t i = 0; i + 1 < cell_labels.size(); ++i)
    cell_pairs.emplace_back(cell_labels[i], cell_labels[i + 1]);
  Poset cell_poset(cell_labels, cell_pairs);
  std::vector<std::vector<std::string>> t_sets = {
      {"1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5"}};
  CellularDatum datum = CellularDatum::build(cell_poset, t_sets);

  // Locate the quotient basis words by name.
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < pa.alg.dim; ++i)
    by_name[pa.alg.basis_names[i]] = i;
  auto named = [&](const std::string& name) {
    const auto it = by_name.find(name);
    if (it == by_name.end())
      fail(ErrorKind::Internal, "path example misses basis word " + name);
    return it->second;
  };
  auto loop = [&](std::size_t at, std::size_t via) {
    return "a" + std::to_string(at) + std::to_string(via) + "a" +
           std::to_string(via) + std::to_string(at);
  };

  // Cell position -> quotient basis word, in the datum layout.
  std::vector<std::size_t> source(datum.dim);
  source[datum.position(0, 0, 0)] = named(loop(1, 2));
  for (std::size_t i = 1; i <= 4; ++i) {
    const std::string si = std::to_string(i), sj = std::to_string(i + 1);
    source[datum.position(i, 0, 0)] = named("e" + si);
    source[datum.position(i, 0, 1)] = named("a" + si + sj);
    source[datum.position(i, 1, 0)] = named("a" + sj + si);
    source[datum.position(i, 1, 1)] = named(loop(i + 1, i));
  }
  source[datum.position(5, 0, 0)] = named("e5");

  std::vector<std::size_t> image(pa.alg.dim);
  for (std::size_t p = 0; p < datum.dim; ++p) image[source[p]] = p;

  AssocAlgebra a;
  a.field = f;
  a.dim = datum.dim;
  for (std::size_t p = 0; p < datum.dim; ++p)
    a.basis_names.push_back(pa.alg.basis_names[source[p]]);
  a.mult.assign(a.dim * a.dim, {});
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      SparseVec prod;
      for (const auto& [k, c] : pa.alg.basis_product(source[i], source[j]))
        prod.emplace_back(image[k], c);
      a.basis_product(i, j) = sparse_normalize(std::move(prod));
    }
  for (const auto& [k, c] : pa.alg.unit) a.unit.emplace_back(image[k], c);
  a.unit = sparse_normalize(std::move(a.unit));

  BuiltinAlgebra out;
  out.alg = CellularAlgebra::assemble(std::move(a), std::move(datum));

  AlphaDatum ad;
  std::vector<std::string> tilde_labels = {"l0", "l1", "1", "l2", "2",
                                           "l3", "3",  "l4", "4", "l5", "5"};
  std::vector<std::pair<std::string, std::string>> tilde_pairs;
  for (std::size_t i = 0; i + 1 < tilde_labels.size(); ++i)
    tilde_pairs.emplace_back(tilde_labels[i], tilde_labels[i + 1]);
  ad.lambda_tilde = Poset(tilde_labels, tilde_pairs);
  ad.lambda = {"1", "2", "3", "4", "5"};
  for (std::size_t v = 1; v <= 5; ++v) {
    const std::size_t idx = v <= 4 ? out.alg.datum.position(v, 0, 0)
                                   : out.alg.datum.position(5, 0, 0);
    ad.idempotents.push_back({{idx, Scalar::one(f)}});
  }
  ad.x = Poset({"t0", "t123", "t45"}, {{"t0", "t123"}, {"t123", "t45"}});
  ad.alpha["l0"] = "t0";
  for (const std::string v : {"l1", "l2", "l3", "1", "2", "3"})
    ad.alpha[v] = "t123";
  for (const std::string v : {"l4", "l5", "4", "5"}) ad.alpha[v] = "t45";
  out.alpha = std::move(ad);
  return out;
}

BuiltinAlgebra build_builtin(const std::string& spec, const Field& f) {
  if (spec == "path-example") return build_path_example(f);
  if (spec.rfind("matrix:", 0) == 0) {
    std::optional<std::size_t> n, b;
    std::string rest = spec.substr(7);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string part = rest.substr(0, comma);
      rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      const auto eq = part.find('=');
      if (eq == std::string::npos)
        fail(ErrorKind::Input, "bad builtin parameter: " + part);
      const std::string key = part.substr(0, eq);
      std::size_t value = 0;
      try {
        value = std::stoul(part.substr(eq + 1));
      } catch (const std::exception&) {
        fail(ErrorKind::Input, "bad builtin parameter: " + part);
      }
      if (key == "n")
        n = value;
      else if (key == "b")
        b = value;
      else
        fail(ErrorKind::Input, "unknown builtin parameter: " + key);
    }
    if (!n) fail(ErrorKind::Input, "matrix builtin needs n=<n>");
    return build_matrix_algebra(f, *n, b);
  }
  fail(ErrorKind::Input, "unknown builtin: " + spec +
                             " (expected path-example or matrix:n=<n>,b=<b>)");
}

} // namespace cellua
