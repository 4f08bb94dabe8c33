#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uext/algebra.hpp"
#include "uext/caps.hpp"
#include "uext/cohomology.hpp"
#include "uext/errors.hpp"
#include "uext/io.hpp"
#include "uext/lie.hpp"
#include "uext/monoid.hpp"
#include "uext/tensor.hpp"

namespace {

using namespace uext;
namespace fs = std::filesystem;

// Set by command handlers that detect an invalid object (exit 1) without
// an exception path.
int g_exit = 0;

void emit(bool json, const Json& payload, const std::string& text) {
  if (json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

ExtensionTensor load_valid(const std::string& path) {
  ExtensionTensor w = load_tensor(path);
  ValidationReport report = validate(w);
  if (!report.valid())
    throw DomainError(path + ": not a valid extension tensor (" +
                      std::to_string(report.violations.size()) + " violations)");
  return w;
}

Rational parse_rational_arg(const std::string& s, const std::string& name) {
  try {
    return Rational::parse(s);
  } catch (const Error&) {
    throw UsageError(name + ": not a rational number: " + s);
  }
}

std::string violation_line(const Violation& v) {
  if (v.kind == Violation::Kind::symmetry)
    return "symmetry: W^{" + std::to_string(v.idx[0]) + " " + std::to_string(v.idx[1]) +
           "}_" + std::to_string(v.idx[2]) + " = " + v.lhs.str() +
           " but mirror = " + v.rhs.str();
  return "commutation: slices " + std::to_string(v.idx[1]) + "," +
         std::to_string(v.idx[2]) + " disagree at (" + std::to_string(v.idx[0]) +
         "," + std::to_string(v.idx[3]) + "): " + v.lhs.str() + " vs " + v.rhs.str();
}

void cmd_validate(const std::string& path, bool json) {
  RawTensor raw = load_raw_tensor(path);
  ValidationReport report = validate(raw);
  Json j = validation_json(report);
  std::string text;
  if (report.valid()) {
    text = "valid: symmetric, commuting slices";
  } else {
    text = "invalid:";
    for (const auto& v : report.violations) text += "\n  " + violation_line(v);
  }
  emit(json, j, text);
  if (!report.valid()) g_exit = 1;
}

void cmd_jacobi(const std::string& path, const std::string& algebra, int max_dim,
                bool json) {
  ExtensionTensor w = load_valid(path);
  bool preset = algebra == "sl2" || algebra == "so3" || algebra == "heis3" ||
                algebra == "gl2" || algebra.rfind("abelian-", 0) == 0;
  LieAlgebra g = preset ? LieAlgebra::preset(algebra) : load_lie(algebra);
  JacobiReport report = jacobi_check(w, g, max_dim);

  Json j;
  j["holds"] = report.holds;
  if (report.holds) {
    j["failure"] = nullptr;
    j["witness"] = nullptr;
    emit(json, j, "jacobi: holds on all basis triples (dim " +
                      std::to_string(w.n() * g.dim()) + ")");
    return;
  }
  std::string kind =
      report.failure == JacobiReport::Failure::antisymmetry ? "antisymmetry" : "jacobi";
  j["failure"] = kind;
  Json wit = Json::array();
  int used = report.failure == JacobiReport::Failure::antisymmetry ? 2 : 3;
  for (int t = 0; t < used; ++t)
    wit.push_back({{"slot", report.witness[t].first},
                   {"carrier", report.witness[t].second}});
  j["witness"] = std::move(wit);
  std::string text = kind + " fails at";
  for (int t = 0; t < used; ++t)
    text += " (" + std::to_string(report.witness[t].first) + "," +
            std::to_string(report.witness[t].second) + ")";
  emit(json, j, text);
  g_exit = 1;
}

void cmd_classify(const std::string& path, bool json) {
  CommAlgebra a(load_tensor(path));
  auto filtration = power_filtration(a);
  auto [nil, index] = is_nilpotent(a);
  auto unit = find_unit(a);
  bool canonical = is_canonical_solvable(a.tensor());

  Json j;
  j["n"] = a.n();
  j["nilpotent"] = nil;
  j["nilpotency_index"] = nil ? Json(*index) : Json(nullptr);
  j["has_unit"] = unit.has_value();
  if (unit) {
    Json u = Json::array();
    for (const auto& x : *unit) u.push_back(x.str());
    j["unit"] = std::move(u);
  } else {
    j["unit"] = nullptr;
  }
  Json dims = Json::array();
  for (const auto& layer : filtration) dims.push_back(layer.size());
  j["filtration_dims"] = std::move(dims);
  j["canonical_solvable"] = canonical;
  j["abelian_tail_depth"] =
      canonical ? Json(abelian_tail_depth(a.tensor())) : Json(nullptr);

  std::string text = "n = " + std::to_string(a.n());
  text += nil ? "\nnilpotent: yes, index " + std::to_string(*index)
              : "\nnilpotent: no";
  if (unit) {
    text += "\nunit: [";
    for (size_t t = 0; t < unit->size(); ++t)
      text += (t ? " " : "") + (*unit)[t].str();
    text += "]";
  } else {
    text += "\nunit: none";
  }
  text += "\npower filtration dims:";
  for (const auto& layer : filtration) text += " " + std::to_string(layer.size());
  text += canonical ? "\ncanonical solvable: yes, abelian tail depth " +
                          std::to_string(abelian_tail_depth(a.tensor()))
                    : "\ncanonical solvable: no";
  emit(json, j, text);
}

void cmd_canonicalize(const std::string& path, const std::string& out, bool json) {
  CommAlgebra a(load_tensor(path));
  CanonicalForm form = canonicalize(a);
  save_tensor(form.tensor, out);
  Json j;
  j["output"] = out;
  j["change"] = matrix_json(form.change.mat());
  emit(json, j, "canonical form written to " + out);
}

void cmd_split(const std::string& path, const std::string& outdir, bool json) {
  CommAlgebra a(load_tensor(path));
  SplitReport report = split(a);
  fs::create_directories(outdir);
  std::vector<std::string> files;
  for (size_t t = 0; t < report.blocks.size(); ++t) {
    std::string file =
        (fs::path(outdir) / ("block_" + std::to_string(t + 1) + ".uext.json")).string();
    save_tensor(report.blocks[t].tensor, file);
    files.push_back(file);
  }
  Json j = split_json(report);
  j["files"] = files;
  std::string text = report.complete ? "split: complete, dims" : "split: partial, dims";
  for (const auto& b : report.blocks) text += " " + std::to_string(b.dim);
  for (const auto& f : files) text += "\n  " + f;
  emit(json, j, text);
}

void cmd_h2(const std::string& path, bool json) {
  ExtensionTensor w = load_valid(path);
  H2Report report = h2(w);
  std::string text = "dim Z2 = " + std::to_string(report.dim_Z2) +
                     ", dim B2 = " + std::to_string(report.dim_B2) +
                     ", dim H2 = " + std::to_string(report.dim_H2);
  emit(json, h2_json(report), text);
}

void cmd_extend(const std::string& path, const std::string& cocycle_file, bool all,
                const std::string& outdir, bool json) {
  ExtensionTensor w = load_valid(path);
  fs::create_directories(outdir);
  std::vector<std::string> files;
  if (!cocycle_file.empty()) {
    Cocycle2 r(w, load_matrix(cocycle_file));
    std::string file = (fs::path(outdir) / "extension.uext.json").string();
    save_tensor(extend_with_cocycle(w, r), file);
    files.push_back(file);
  } else {
    (void)all; // enumeration is the default
    std::vector<ExtensionTensor> exts = enumerate_extensions(w);
    for (size_t t = 0; t < exts.size(); ++t) {
      std::string file =
          (fs::path(outdir) / ("extension_" + std::to_string(t + 1) + ".uext.json"))
              .string();
      save_tensor(exts[t], file);
      files.push_back(file);
    }
  }
  Json j;
  j["count"] = files.size();
  j["files"] = files;
  std::string text = std::to_string(files.size()) + " extension(s) written";
  for (const auto& f : files) text += "\n  " + f;
  emit(json, j, text);
}

void cmd_rewrite(const ExtensionTensor& result, const std::string& out, bool json,
                 const std::string& what) {
  save_tensor(result, out);
  Json j;
  j["output"] = out;
  j["n"] = result.n();
  emit(json, j, what + " written to " + out);
}

void cmd_gen(const std::string& family, int p, int n, const std::string& l1,
             const std::string& l2, const std::string& beta, const std::string& out,
             bool json) {
  ExtensionTensor w(1);
  if (family == "zp-add") {
    if (p < 2) throw UsageError("zp-add needs --p at least 2");
    w = monoid_to_tensor(zp_additive(p));
  } else if (family == "zp-mul") {
    if (p < 2) throw UsageError("zp-mul needs --p at least 2");
    w = monoid_to_tensor(zp_multiplicative(p));
  } else if (family == "leibnitz") {
    if (n < 1) throw UsageError("leibnitz needs --n at least 1");
    w = leibnitz(n, parse_rational_arg(l1, "--l1"));
  } else if (family == "lambda") {
    if (n < 2) throw UsageError("lambda needs --n at least 2");
    w = lambda_family(n, parse_rational_arg(l1, "--l1"),
                      parse_rational_arg(l2, "--l2"));
  } else if (family == "crmhd") {
    w = crmhd(parse_rational_arg(beta, "--beta"));
  } else {
    throw UnknownPreset("unknown family: " + family);
  }
  int cap = dimension_cap(64);
  if (w.n() > cap)
    throw CapExceeded("generated tensor exceeds the dimension cap " +
                      std::to_string(cap));
  cmd_rewrite(w, out, json, family + " tensor");
}

void cmd_monoid_validate(const std::string& path, bool json) {
  MonoidTable t = load_monoid(path);
  bool valid = t.kind == MonoidTable::Kind::E ? validate_efunction(t)
                                              : validate_sefunction(t);
  Json j;
  j["kind"] = t.kind == MonoidTable::Kind::E ? "E" : "SE";
  j["n"] = t.n;
  j["valid"] = valid;
  emit(json, j,
       valid ? "valid " + std::string(t.kind == MonoidTable::Kind::E ? "E" : "SE") +
                   "-function"
             : "invalid table");
  if (!valid) g_exit = 1;
}

void cmd_monoid_to_tensor(const std::string& path, const std::string& out, bool json) {
  MonoidTable t = load_monoid(path);
  cmd_rewrite(monoid_to_tensor(t), out, json, "tensor");
}

void cmd_monoid_restrict(const std::string& path, const std::string& out, bool json) {
  MonoidTable t = load_monoid(path);
  MonoidTable restricted = restrict_se(t);
  save_monoid(restricted, out);
  Json j;
  j["output"] = out;
  j["n"] = restricted.n;
  emit(json, j, "restricted table written to " + out);
}

void cmd_se_enum(int n, bool iso, const std::string& out, bool json) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  SECensus census = enumerate_se(n, dimension_cap(6));
  size_t raw_count = census.tables.size();
  if (iso) census = iso_reduce(census);

  std::string text;
  for (const auto& t : census.tables) text += monoid_json(t).dump() + "\n";
  std::ofstream f(out, std::ios::binary);
  if (!f) throw FileFormatError("cannot write " + out);
  f << text;

  Json j;
  j["n"] = n;
  j["count"] = census.tables.size();
  j["enumerated"] = raw_count;
  j["iso_reduced"] = iso;
  j["output"] = out;
  emit(json, j,
       std::to_string(census.tables.size()) + " table(s) written to " + out +
           (iso ? " (iso-reduced from " + std::to_string(raw_count) + ")" : ""));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"universal extension tensor toolkit"};
  app.require_subcommand(1);

  std::string in, out, algebra, cocycle_file, family;
  std::string l1 = "1", l2 = "1", beta = "1";
  int max_dim = 24, k = 1, p = 0, n = 0;
  bool json = false, all = false, iso = false;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "JSON output"); };

  auto* c_validate = app.add_subcommand("validate", "check symmetry and commuting slices");
  c_validate->add_option("tensor", in)->required();
  add_json(c_validate);

  auto* c_jacobi = app.add_subcommand("jacobi", "check the Jacobi identity of the extended bracket");
  c_jacobi->add_option("tensor", in)->required();
  c_jacobi->add_option("--algebra", algebra, "carrier preset name or file")->required();
  c_jacobi->add_option("--max-dim", max_dim, "cap on n * dim");
  add_json(c_jacobi);

  auto* c_classify = app.add_subcommand("classify", "nilpotency, unit, filtration, tail");
  c_classify->add_option("tensor", in)->required();
  add_json(c_classify);

  auto* c_canon = app.add_subcommand("canonicalize", "filtration-adapted canonical form");
  c_canon->add_option("tensor", in)->required();
  c_canon->add_option("-o,--output", out)->required();
  add_json(c_canon);

  auto* c_split = app.add_subcommand("split", "refine into ideal blocks");
  c_split->add_option("tensor", in)->required();
  c_split->add_option("-o,--output", out, "output directory")->required();
  add_json(c_split);

  auto* c_h2 = app.add_subcommand("h2", "second cohomology of the attached algebra");
  c_h2->add_option("tensor", in)->required();
  add_json(c_h2);

  auto* c_extend = app.add_subcommand("extend", "one-dimensional extensions");
  c_extend->add_option("tensor", in)->required();
  auto* opt_cocycle = c_extend->add_option("--cocycle", cocycle_file, "cocycle matrix file");
  c_extend->add_flag("--all", all, "one extension per cohomology class")
      ->excludes(opt_cocycle);
  c_extend->add_option("-o,--output", out, "output directory")->required();
  add_json(c_extend);

  auto* c_unitize = app.add_subcommand("unitize", "adjoin a unit");
  c_unitize->add_option("tensor", in)->required();
  c_unitize->add_option("-o,--output", out)->required();
  add_json(c_unitize);

  auto* c_deunitize = app.add_subcommand("deunitize", "remove the unit slot");
  c_deunitize->add_option("tensor", in)->required();
  c_deunitize->add_option("-o,--output", out)->required();
  add_json(c_deunitize);

  auto* c_reduce = app.add_subcommand("reduce", "quotient by the abelian tail");
  c_reduce->add_option("tensor", in)->required();
  c_reduce->add_option("--k", k, "tail depth to remove")->required();
  c_reduce->add_option("-o,--output", out)->required();
  add_json(c_reduce);

  auto* c_gen = app.add_subcommand("gen", "generate a named tensor family");
  c_gen->add_option("--family", family, "zp-add|zp-mul|leibnitz|lambda|crmhd")->required();
  c_gen->add_option("--p", p, "modulus for zp families");
  c_gen->add_option("--n", n, "dimension parameter");
  c_gen->add_option("--l1", l1, "first coefficient (rational)");
  c_gen->add_option("--l2", l2, "second coefficient (rational)");
  c_gen->add_option("--beta", beta, "electron beta (rational)");
  c_gen->add_option("-o,--output", out)->required();
  add_json(c_gen);

  auto* c_monoid = app.add_subcommand("monoid", "monoid table operations");
  c_monoid->require_subcommand(1);
  auto* c_mval = c_monoid->add_subcommand("validate", "check the table for its kind");
  c_mval->add_option("monoid", in)->required();
  add_json(c_mval);
  auto* c_mtt = c_monoid->add_subcommand("to-tensor", "build the universal tensor");
  c_mtt->add_option("monoid", in)->required();
  c_mtt->add_option("-o,--output", out)->required();
  add_json(c_mtt);
  auto* c_mres = c_monoid->add_subcommand("restrict", "drop the top label");
  c_mres->add_option("monoid", in)->required();
  c_mres->add_option("-o,--output", out)->required();
  add_json(c_mres);

  auto* c_se = app.add_subcommand("se-enum", "enumerate SE tables");
  c_se->add_option("--n", n)->required();
  c_se->add_flag("--iso-reduce", iso, "keep one table per isomorphism class");
  c_se->add_option("-o,--output", out, "census file (JSON lines)")->required();
  add_json(c_se);

  try {
    app.parse(argc, argv);

    if (*c_validate) cmd_validate(in, json);
    else if (*c_jacobi) cmd_jacobi(in, algebra, max_dim, json);
    else if (*c_classify) cmd_classify(in, json);
    else if (*c_canon) cmd_canonicalize(in, out, json);
    else if (*c_split) cmd_split(in, out, json);
    else if (*c_h2) cmd_h2(in, json);
    else if (*c_extend) cmd_extend(in, cocycle_file, all, out, json);
    else if (*c_unitize) cmd_rewrite(unitize(load_valid(in)), out, json, "unitized tensor");
    else if (*c_deunitize) cmd_rewrite(deunitize(load_valid(in)), out, json, "deunitized tensor");
    else if (*c_reduce) cmd_rewrite(reduce(load_valid(in), k), out, json, "reduced tensor");
    else if (*c_gen) cmd_gen(family, p, n, l1, l2, beta, out, json);
    else if (*c_mval) cmd_monoid_validate(in, json);
    else if (*c_mtt) cmd_monoid_to_tensor(in, out, json);
    else if (*c_mres) cmd_monoid_restrict(in, out, json);
    else if (*c_se) cmd_se_enum(n, iso, out, json);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
