#include "cellua/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cellua {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  fail(ErrorKind::Schema, "schema error at " + where + ": " + what);
}

const Json& expect(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    schema_error(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema_error(where, "expected a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(
    const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected a list of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      schema_error(where, "expected [a, b] string pairs");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

SparseVec sparse_from_json(const Json& j, const Field& f, std::size_t dim,
                           const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected a list of [index, coeff]");
  SparseVec out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_string())
      schema_error(where, "expected [index, \"coeff\"] entries");
    const std::size_t pos = e[0].get<std::size_t>();
    if (pos >= dim) schema_error(where, "basis index out of range");
    out.emplace_back(pos, Scalar::parse(f, e[1].get<std::string>()));
  }
  return sparse_normalize(std::move(out));
}

Json sparse_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [pos, coeff] : v) out.push_back({pos, coeff.str()});
  return out;
}

} // namespace

BuiltinAlgebra parse_cell_json(const std::string& text,
                               std::optional<Field> field_override) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("$", "top level must be an object");
  const auto& schema = expect(j, "schema", "$");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    schema_error("$.schema", "unsupported schema version");

  const auto& field_j = expect(j, "field", "$");
  if (!field_j.is_string()) schema_error("$.field", "expected a string");
  const Field f =
      field_override ? *field_override : Field::parse(field_j.get<std::string>());

  const auto tilde_labels =
      string_list(expect(j, "lambda_tilde", "$"), "$.lambda_tilde");
  const auto order = pair_list(expect(j, "order", "$"), "$.order");
  Poset tilde(tilde_labels, order);

  const auto plus_labels =
      string_list(expect(j, "lambda_plus", "$"), "$.lambda_plus");
  if (plus_labels.empty()) schema_error("$.lambda_plus", "must be nonempty");
  Poset cell_poset = tilde.restrict(plus_labels);

  const auto& tsets_j = expect(j, "t_sets", "$");
  if (!tsets_j.is_object()) schema_error("$.t_sets", "expected an object");
  std::vector<std::vector<std::string>> t_sets;
  for (const auto& lab : plus_labels) {
    if (!tsets_j.contains(lab))
      schema_error("$.t_sets", "missing index set for " + lab);
    t_sets.push_back(string_list(tsets_j.at(lab), "$.t_sets." + lab));
    if (t_sets.back().empty())
      schema_error("$.t_sets." + lab, "index sets must be nonempty");
  }
  CellularDatum datum = CellularDatum::build(cell_poset, t_sets);

  AssocAlgebra a;
  a.field = f;
  a.dim = datum.dim;
  if (j.contains("basis_names")) {
    a.basis_names = string_list(j.at("basis_names"), "$.basis_names");
    if (a.basis_names.size() != datum.dim)
      schema_error("$.basis_names", "length must match the basis size");
  }
  a.mult.assign(datum.dim * datum.dim, {});
  const auto& mult_j = expect(j, "mult", "$");
  if (!mult_j.is_array()) schema_error("$.mult", "expected a list");
  for (const auto& e : mult_j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      schema_error("$.mult", "expected [i, j, terms] entries");
    const std::size_t i = e[0].get<std::size_t>();
    const std::size_t jj = e[1].get<std::size_t>();
    if (i >= datum.dim || jj >= datum.dim)
      schema_error("$.mult", "basis index out of range");
    a.basis_product(i, jj) = sparse_from_json(e[2], f, datum.dim, "$.mult");
  }
  a.unit = sparse_from_json(expect(j, "unit", "$"), f, datum.dim, "$.unit");

  BuiltinAlgebra out;
  out.alg = CellularAlgebra::assemble(std::move(a), std::move(datum));
  if (const auto witness = out.alg.A.unit_witness())
    fail(ErrorKind::Schema,
         "declared unit fails on basis element " +
             out.alg.A.basis_names[*witness]);

  if (j.contains("alpha")) {
    const Json& aj = j.at("alpha");
    AlphaDatum ad;
    ad.lambda_tilde = tilde;
    ad.lambda = string_list(expect(aj, "lambda", "$.alpha"), "$.alpha.lambda");
    const auto& idem_j = expect(aj, "idempotents", "$.alpha");
    if (!idem_j.is_object())
      schema_error("$.alpha.idempotents", "expected an object");
    for (const auto& mu : ad.lambda) {
      if (!idem_j.contains(mu))
        schema_error("$.alpha.idempotents", "missing idempotent for " + mu);
      ad.idempotents.push_back(sparse_from_json(idem_j.at(mu), f, out.alg.dim(),
                                                "$.alpha.idempotents." + mu));
    }
    ad.x = Poset(string_list(expect(aj, "x_elements", "$.alpha"),
                             "$.alpha.x_elements"),
                 pair_list(expect(aj, "x_order", "$.alpha"), "$.alpha.x_order"));
    const auto& map_j = expect(aj, "map", "$.alpha");
    if (!map_j.is_object()) schema_error("$.alpha.map", "expected an object");
    for (const auto& [key, value] : map_j.items()) {
      if (!value.is_string()) schema_error("$.alpha.map", "values must be strings");
      ad.alpha[key] = value.get<std::string>();
    }
    out.alpha = std::move(ad);
  }
  return out;
}

std::string serialize_cell_json(const CellularAlgebra& alg,
                                const std::optional<AlphaDatum>& alpha,
                                const std::string& name) {
  Json j;
  j["schema"] = 1;
  if (!name.empty()) j["name"] = name;
  j["field"] = alg.field().name();
  if (alpha) {
    j["lambda_tilde"] = alpha->lambda_tilde.elements();
    Json order = Json::array();
    for (const auto& [a, b] : alpha->lambda_tilde.covering_pairs())
      order.push_back({a, b});
    j["order"] = std::move(order);
  } else {
    j["lambda_tilde"] = alg.datum.lambda_plus.elements();
    Json order = Json::array();
    for (const auto& [a, b] : alg.datum.lambda_plus.covering_pairs())
      order.push_back({a, b});
    j["order"] = std::move(order);
  }
  j["lambda_plus"] = alg.datum.lambda_plus.elements();
  Json tsets = Json::object();
  for (std::size_t l = 0; l < alg.lambda_count(); ++l)
    tsets[alg.lambda_label(l)] = alg.datum.t_sets[l];
  j["t_sets"] = std::move(tsets);
  j["basis_names"] = alg.A.basis_names;
  j["unit"] = sparse_to_json(alg.A.unit);
  Json mult = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = 0; k < alg.dim(); ++k)
      if (!alg.A.basis_product(i, k).empty())
        mult.push_back({i, k, sparse_to_json(alg.A.basis_product(i, k))});
  j["mult"] = std::move(mult);

  if (alpha) {
    Json aj;
    aj["lambda"] = alpha->lambda;
    Json idem = Json::object();
    for (std::size_t m = 0; m < alpha->lambda.size(); ++m)
      idem[alpha->lambda[m]] = sparse_to_json(alpha->idempotents[m]);
    aj["idempotents"] = std::move(idem);
    aj["x_elements"] = alpha->x.elements();
    Json xorder = Json::array();
    for (const auto& [a, b] : alpha->x.covering_pairs()) xorder.push_back({a, b});
    aj["x_order"] = std::move(xorder);
    Json map = Json::object();
    for (const auto& lab : alpha->lambda_tilde.elements())
      map[lab] = alpha->alpha.at(lab);
    aj["map"] = std::move(map);
    j["alpha"] = std::move(aj);
  }
  return j.dump(2) + "\n";
}

QuiverPresentation parse_quiver_json(const std::string& text, const Field& f) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("$", "top level must be an object");
  const auto& schema = expect(j, "schema", "$");
  if (!schema.is_number_integer() || schema.get<int>() != 1)
    schema_error("$.schema", "unsupported schema version");
  QuiverPresentation q;
  q.vertices = string_list(expect(j, "vertices", "$"), "$.vertices");
  std::map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    if (vertex_index.count(q.vertices[i]))
      schema_error("$.vertices", "duplicate vertex " + q.vertices[i]);
    vertex_index[q.vertices[i]] = i;
  }
  const auto& arrows_j = expect(j, "arrows", "$");
  if (!arrows_j.is_array()) schema_error("$.arrows", "expected a list");
  std::map<std::string, std::size_t> arrow_index;
  for (const auto& e : arrows_j) {
    if (!e.is_object() || !e.contains("name") || !e.contains("from") ||
        !e.contains("to"))
      schema_error("$.arrows", "expected {name, from, to} objects");
    const std::string name = e.at("name").get<std::string>();
    const std::string from = e.at("from").get<std::string>();
    const std::string to = e.at("to").get<std::string>();
    if (!vertex_index.count(from) || !vertex_index.count(to))
      schema_error("$.arrows", "arrow " + name + " uses an unknown vertex");
    if (arrow_index.count(name))
      schema_error("$.arrows", "duplicate arrow " + name);
    arrow_index[name] = q.arrows.size();
    q.arrows.push_back({name, vertex_index[from], vertex_index[to]});
  }
  const auto& rels_j = expect(j, "relations", "$");
  if (!rels_j.is_array()) schema_error("$.relations", "expected a list");
  for (const auto& rel_j : rels_j) {
    if (!rel_j.is_array() || rel_j.empty())
      schema_error("$.relations", "expected nonempty term lists");
    QuiverPresentation::Relation rel;
    for (const auto& term : rel_j) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_array() ||
          !term[1].is_string())
        schema_error("$.relations", "expected [[arrow...], \"coeff\"] terms");
      QuiverPresentation::Word w;
      for (const auto& an : term[0]) {
        if (!an.is_string() || !arrow_index.count(an.get<std::string>()))
          schema_error("$.relations", "unknown arrow in relation");
        w.arrows.push_back(arrow_index[an.get<std::string>()]);
      }
      if (w.arrows.empty())
        schema_error("$.relations", "relation paths must have length >= 1");
      w.source = q.arrows[w.arrows.front()].from;
      if (!q.word_composable(w))
        fail(ErrorKind::Input, "relation path is not composable");
      rel.terms.emplace_back(w, Scalar::parse(f, term[1].get<std::string>()));
    }
    q.relations.push_back(std::move(rel));
  }
  return q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Input, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Input, "cannot write file: " + path);
  out << text;
}

} // namespace cellua
