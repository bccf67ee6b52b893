// Command-line workbench for cellular algebras: verification, standard and
// simple modules, decomposition matrices, block partitions, and the
// subalgebra constructions driven by an idempotent decomposition.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cellua/alpha.hpp"
#include "cellua/io.hpp"

using namespace cellua;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  std::string input;
  std::string builtin;
  std::string field = "rational";
  std::string format = "text";
  std::string out;
};

std::optional<Field> field_override(const CommonOpts& c) {
  if (c.field == "rational") return std::nullopt;
  return Field::parse(c.field);
}

BuiltinAlgebra load(const CommonOpts& c) {
  if (!c.builtin.empty() && !c.input.empty())
    fail(ErrorKind::Input, "give either an input file or --builtin, not both");
  const Field f = Field::parse(c.field);
  if (!c.builtin.empty()) return build_builtin(c.builtin, f);
  if (c.input.empty())
    fail(ErrorKind::Input, "no input: give a .cell.json file or --builtin");
  return parse_cell_json(read_file(c.input), field_override(c));
}

void emit(const CommonOpts& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_file(c.out, text);
  }
}

std::string matrix_text(const DecompositionMatrix& d) {
  std::ostringstream os;
  std::size_t width = 3;
  for (const auto& l : d.row_labels) width = std::max(width, l.size());
  for (const auto& l : d.col_labels) width = std::max(width, l.size());
  os << std::string(width, ' ');
  for (const auto& l : d.col_labels)
    os << ' ' << std::string(width - l.size(), ' ') << l;
  os << '\n';
  for (std::size_t r = 0; r < d.row_labels.size(); ++r) {
    os << d.row_labels[r]
       << std::string(width - d.row_labels[r].size(), ' ');
    for (std::size_t cidx = 0; cidx < d.col_labels.size(); ++cidx) {
      const std::string v = std::to_string(d.entries[r][cidx]);
      os << ' ' << std::string(width - v.size(), ' ') << v;
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_csv(const DecompositionMatrix& d) {
  std::ostringstream os;
  d.to_csv(os);
  return os.str();
}

std::string matrix_json(const DecompositionMatrix& d) {
  std::ostringstream os;
  os << "{\n  \"rows\": [";
  for (std::size_t i = 0; i < d.row_labels.size(); ++i)
    os << (i ? ", " : "") << '"' << d.row_labels[i] << '"';
  os << "],\n  \"cols\": [";
  for (std::size_t i = 0; i < d.col_labels.size(); ++i)
    os << (i ? ", " : "") << '"' << d.col_labels[i] << '"';
  os << "],\n  \"entries\": [";
  for (std::size_t r = 0; r < d.entries.size(); ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t cidx = 0; cidx < d.entries[r].size(); ++cidx)
      os << (cidx ? ", " : "") << d.entries[r][cidx];
    os << ']';
  }
  os << "]\n}\n";
  return os.str();
}

std::string render(const CommonOpts& c, const DecompositionMatrix& d) {
  if (c.format == "csv") return matrix_csv(d);
  if (c.format == "json") return matrix_json(d);
  return matrix_text(d);
}

std::string partition_text(const std::string& title, const LinkagePartition& p) {
  std::ostringstream os;
  os << title << ": " << p.blocks.size()
     << (p.blocks.size() == 1 ? " block\n" : " blocks\n");
  for (const auto& blk : p.blocks) {
    os << "  {";
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? ", " : "") << blk[i];
    os << "}\n";
  }
  return os.str();
}

std::string list_text(const std::vector<std::string>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << '}';
  return os.str();
}

int run_verify(const CommonOpts& c) {
  const BuiltinAlgebra b = load(c);
  std::ostringstream os;
  const CheckReport rep = b.alg.verify_cellular();
  rep.print(os);
  os << (rep.ok() ? "OK" : "FAILED") << ": " << rep.size() - rep.failures()
     << "/" << rep.size() << " checks passed\n";
  emit(c, os.str());
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_assumptions(const CommonOpts& c) {
  const BuiltinAlgebra b = load(c);
  if (!b.alpha)
    fail(ErrorKind::Input, "input carries no idempotent decomposition");
  std::ostringstream os;
  CheckReport rep = verify_assumptions(b.alg, *b.alpha);
  if (rep.ok()) {
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    const ConditionC cc = check_condition_c(w);
    os << "CONDITION inclusion " << (cc.holds ? "holds" : "fails");
    if (!cc.holds) os << " (" << cc.witness << ")";
    os << '\n';
    rep.merge(cc.consequences);
  }
  rep.print(os);
  os << (rep.ok() ? "OK" : "FAILED") << ": " << rep.size() - rep.failures()
     << "/" << rep.size() << " checks passed\n";
  emit(c, os.str());
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_decomp(const CommonOpts& c, const std::string& which,
               const std::string& side_name) {
  const BuiltinAlgebra b = load(c);
  const Side side = side_name == "left" ? Side::Left : Side::Right;
  DecompositionMatrix d;
  if (which == "ambient") {
    d = decomposition_matrix(b.alg, side);
  } else {
    if (!b.alpha)
      fail(ErrorKind::Input, "input carries no idempotent decomposition");
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    compute_decomposition_data(w);
    if (which == "levi")
      d = side == Side::Right ? w.d_levi : w.d_levi_left;
    else if (which == "parabolic")
      d = side == Side::Right ? w.d_para_right : w.d_para_left;
    else if (which == "quotient")
      d = side == Side::Right ? w.d_quot : w.d_quot_left;
    else
      fail(ErrorKind::Input, "unknown algebra: " + which);
  }
  emit(c, render(c, d));
  return kExitOk;
}

int run_blocks(const CommonOpts& c) {
  const BuiltinAlgebra b = load(c);
  std::ostringstream os;
  if (!b.alpha) {
    const auto d = decomposition_matrix(b.alg, Side::Right);
    os << partition_text("blocks", linkage_partition(d));
    emit(c, os.str());
    return kExitOk;
  }
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  compute_decomposition_data(w);
  const BlockData bd = compute_block_data(w);
  os << partition_text("ambient", bd.ambient);
  os << partition_text("levi", bd.levi);
  os << partition_text("parabolic (right standard modules)", bd.para);
  os << partition_text("parabolic (left standard modules)", bd.para_left);
  os << partition_text("quotient", bd.quot);
  emit(c, os.str());
  return kExitOk;
}

int run_alpha(const CommonOpts& c) {
  const BuiltinAlgebra b = load(c);
  if (!b.alpha)
    fail(ErrorKind::Input, "input carries no idempotent decomposition");
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  std::ostringstream os;
  os << "dim ambient = " << b.alg.dim() << '\n';
  os << "dim levi = " << w.levi.sub.alg.dim << '\n';
  os << "dim parabolic = " << w.para.sub.alg.dim << '\n';
  os << "dim quotient = " << w.quot.alg.dim() << '\n';
  std::vector<std::string> omega_labels;
  for (const auto& e : w.om.entries) omega_labels.push_back(e.label);
  os << "omega = " << list_text(omega_labels) << '\n';
  os << "surviving labels = " << list_text(w.om.lambda_bar) << '\n';
  os << "levi basis: ";
  for (std::size_t i = 0; i < w.levi.sub.alg.dim; ++i)
    os << (i ? ", " : "") << w.levi.sub.alg.basis_names[i];
  os << '\n' << "parabolic basis: ";
  for (std::size_t i = 0; i < w.para.sub.alg.dim; ++i)
    os << (i ? ", " : "") << w.para.sub.alg.basis_names[i];
  os << '\n' << "quotient basis: ";
  for (std::size_t i = 0; i < w.quot.alg.dim(); ++i)
    os << (i ? ", " : "") << w.quot.alg.A.basis_names[i];
  os << '\n';
  emit(c, os.str());
  return kExitOk;
}

int run_report(const CommonOpts& c, const std::string& matrices_dir) {
  const BuiltinAlgebra b = load(c);
  if (!b.alpha)
    fail(ErrorKind::Input, "input carries no idempotent decomposition");
  std::ostringstream os;
  const CheckReport cellrep = b.alg.verify_cellular();
  cellrep.print(os);
  AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
  CheckReport rep = run_full_report(w);
  const ConditionC cc = check_condition_c(w);
  os << "CONDITION inclusion " << (cc.holds ? "holds" : "fails");
  if (!cc.holds) os << " (" << cc.witness << ")";
  os << '\n';
  rep.print(os);
  const bool ok = cellrep.ok() && rep.ok();
  os << (ok ? "OK" : "FAILED") << ": "
     << cellrep.size() + rep.size() - cellrep.failures() - rep.failures() << "/"
     << cellrep.size() + rep.size() << " checks passed\n";
  if (!matrices_dir.empty()) {
    auto dump = [&](const std::string& name, const DecompositionMatrix& d) {
      std::ostringstream csv;
      d.to_csv(csv);
      write_file(matrices_dir + "/" + name + ".csv", csv.str());
    };
    dump("decomp_ambient", w.d_ambient);
    dump("decomp_ambient_left", w.d_ambient_left);
    dump("decomp_levi", w.d_levi);
    dump("decomp_levi_left", w.d_levi_left);
    dump("decomp_parabolic_right", w.d_para_right);
    dump("decomp_parabolic_left", w.d_para_left);
    dump("decomp_quotient", w.d_quot);
    dump("decomp_quotient_left", w.d_quot_left);
    const BlockData bd = compute_block_data(w);
    dump("cartan_parabolic", bd.cartan);
  }
  emit(c, os.str());
  return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellua: exact workbench for cellular algebras"};
  app.require_subcommand(1);

  CommonOpts c;
  std::string decomp_algebra = "ambient";
  std::string decomp_side = "right";
  std::string matrices_dir;

  auto add_common = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input)
      sub->add_option("input", c.input, "input .cell.json (or .quiver.json)");
    sub->add_option("--builtin", c.builtin,
                    "built-in algebra: path-example | matrix:n=<n>,b=<b>");
    sub->add_option("--field", c.field, "rational | fp:<p> (default rational)");
    sub->add_option("--format", c.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", c.out, "write output to a file");
  };

  CLI::App* verify = app.add_subcommand("verify", "check the cellular axioms");
  add_common(verify);
  CLI::App* assumptions = app.add_subcommand(
      "assumptions", "check the idempotent-decomposition axioms");
  add_common(assumptions);
  CLI::App* decomp =
      app.add_subcommand("decomp", "print a decomposition matrix");
  add_common(decomp);
  decomp->add_option("--algebra", decomp_algebra,
                     "ambient | levi | parabolic | quotient")
      ->check(CLI::IsMember({"ambient", "levi", "parabolic", "quotient"}));
  decomp->add_option("--side", decomp_side, "right | left")
      ->check(CLI::IsMember({"right", "left"}));
  CLI::App* blocks = app.add_subcommand("blocks", "print linkage partitions");
  add_common(blocks);
  CLI::App* alpha = app.add_subcommand(
      "alpha", "build the subalgebras and print dimensions and bases");
  add_common(alpha);
  CLI::App* report = app.add_subcommand(
      "report", "run the full relation-check suite");
  add_common(report);
  report->add_option("--matrices", matrices_dir,
                     "also write all matrices as CSV files into a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    // A quiver presentation is accepted by verify: build it and report the
    // closure; everything else needs cellular data.
    if (verify->parsed() && !c.input.empty() &&
        c.input.size() > 12 &&
        c.input.substr(c.input.size() - 12) == ".quiver.json") {
      const Field f = Field::parse(c.field);
      const QuiverPresentation q = parse_quiver_json(read_file(c.input), f);
      const PathAlgebraResult pa = build_path_algebra(q, f, 2 * q.vertices.size());
      std::ostringstream os;
      os << "closure reached: dim = " << pa.alg.dim << '\n' << "basis: ";
      for (std::size_t i = 0; i < pa.alg.dim; ++i)
        os << (i ? ", " : "") << pa.alg.basis_names[i];
      os << '\n';
      emit(c, os.str());
      return kExitOk;
    }
    if (verify->parsed()) return run_verify(c);
    if (assumptions->parsed()) return run_assumptions(c);
    if (decomp->parsed()) return run_decomp(c, decomp_algebra, decomp_side);
    if (blocks->parsed()) return run_blocks(c);
    if (alpha->parsed()) return run_alpha(c);
    if (report->parsed()) return run_report(c, matrices_dir);
  } catch (const Error& e) {
    const bool math_failure = e.kind() == ErrorKind::NotCellular ||
                              e.kind() == ErrorKind::Assumption ||
                              e.kind() == ErrorKind::NotSaturated;
    std::cerr << "error: " << e.what() << '\n';
    return math_failure ? kExitCheckFailed : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
