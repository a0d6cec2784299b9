#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidforge/abelianize.hpp"
#include "braidforge/catalog.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/presentation_io.hpp"
#include "braidforge/quotient.hpp"
#include "braidforge/rewriting.hpp"
#include "braidforge/tietze.hpp"
#include "braidforge/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool color_enabled() {
  const char* v = std::getenv("BRAIDFORGE_COLOR");
  if (!v) return false;
  std::string s(v);
  return s == "1" || s == "always" || s == "true";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw braidforge::Error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw braidforge::Error("cannot write file '" + path + "'");
  out << content;
}

struct CatalogArgs {
  std::string family;
  int strands = 3;
  std::string out;
  std::string format = "text";
};

int cmd_catalog(const CatalogArgs& a) {
  using namespace braidforge;
  Presentation p = catalog({family_from_token(a.family), a.strands});
  write_output(a.out, a.format == "structured" ? presentation_json(p)
                                               : serialize_presentation(p));
  return kExitOk;
}

struct DeriveArgs {
  std::string family;
  int strands = 3;
  std::int64_t window = -1;
  std::string out;
  std::string format = "text";
};

int cmd_derive(const DeriveArgs& a) {
  using namespace braidforge;
  Family f = family_from_token(a.family);
  DerivedPresentation dp = [&] {
    if (f == Family::WeldedBraid) {
      if (a.window < 0)
        throw Error("--window is required for the welded family");
      Presentation p = catalog({f, a.strands});
      QuotientMap q = welded_abelianization_quotient(p);
      return derived_presentation(q, graded_transversal(q, a.window));
    }
    if (f != Family::FlatVirtualBraid && f != Family::FlatWeldedBraid)
      throw Error("derive supports families wb, fvb, fwb");
    if (a.window >= 0)
      throw Error("--window only applies to the welded family");
    Presentation p = catalog({f, a.strands});
    QuotientMap q = flat_abelianization_quotient(p);
    auto [table, t] = coset_table(q);
    (void)table;
    return derived_presentation(q, t);
  }();
  if (a.format == "structured") {
    std::istringstream prov_lines(serialize_derived_presentation(dp));
    std::vector<std::string> prov;
    std::string line;
    bool in_prov = false;
    while (std::getline(prov_lines, line)) {
      if (line == "provenance:") {
        in_prov = true;
        continue;
      }
      if (in_prov && !line.empty()) prov.push_back(line.substr(2));
    }
    write_output(a.out, presentation_json(dp.base, prov));
  } else {
    write_output(a.out, serialize_derived_presentation(dp));
  }
  return kExitOk;
}

struct AbelianizeArgs {
  std::string file;
};

int cmd_abelianize(const AbelianizeArgs& a) {
  using namespace braidforge;
  Presentation p = parse_presentation(read_file(a.file));
  std::cout << abelian_invariants(p).str() << "\n";
  return kExitOk;
}

struct SimplifyArgs {
  std::string file;
  std::size_t budget = 500;
  std::string script;
  std::string out;
  std::string emit_script;
};

int cmd_simplify(const SimplifyArgs& a) {
  using namespace braidforge;
  Presentation p = parse_presentation(read_file(a.file));
  Presentation result;
  TietzeScript executed;
  std::vector<Symbol> boundary;
  if (!a.script.empty()) {
    std::string text;
    std::ifstream in(a.script, std::ios::binary);
    if (in) {
      std::ostringstream os;
      os << in.rdbuf();
      text = os.str();
    } else {
      // Fall back to the shipped scripts by base name.
      std::string base = a.script;
      auto slash = base.find_last_of('/');
      if (slash != std::string::npos) base = base.substr(slash + 1);
      auto it = builtin_scripts().find(base);
      if (it == builtin_scripts().end())
        throw Error("script '" + a.script + "' not found");
      text = it->second;
    }
    ReplayResult rr = replay_script(p, parse_script(text, a.script));
    result = rr.presentation;
    executed = rr.executed;
    boundary = rr.boundary;
  } else {
    SimplifyResult sr = simplify(p, a.budget);
    result = sr.presentation;
    executed = sr.script;
  }
  std::string script_text = serialize_script(executed);
  if (!a.emit_script.empty()) write_output(a.emit_script, script_text);
  std::string body = serialize_presentation(result);
  if (a.emit_script.empty() && a.out.empty())
    body += "script:\n" + script_text;
  write_output(a.out, body);
  if (!a.out.empty() && a.emit_script.empty())
    write_output(a.out + ".tz", script_text);
  if (!boundary.empty()) {
    std::cerr << "boundary generators kept (window artifacts):";
    for (Symbol g : boundary) std::cerr << ' ' << g.name();
    std::cerr << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string filter;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  using namespace braidforge;
  std::vector<Report> reports = run_all(a.filter);
  if (reports.empty())
    std::cerr << "warning: no scenario matches filter '" << a.filter << "'\n";
  std::string body;
  if (a.format == "structured") {
    body = reports_json(reports);
  } else {
    std::ostringstream os;
    bool color = color_enabled();
    std::size_t passed = 0;
    for (const Report& r : reports) {
      os << report_text(r, color);
      if (r.passed()) ++passed;
    }
    os << passed << "/" << reports.size() << " scenarios passed\n";
    body = os.str();
  }
  write_output(a.out, body);
  for (const Report& r : reports)
    if (!r.passed()) return kExitCheckFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "braidforge: presentations of braid-like groups, commutator-subgroup "
      "derivation, Tietze simplification, exact abelianization"};
  app.require_subcommand(1);

  CatalogArgs cat_args;
  CLI::App* cat = app.add_subcommand(
      "catalog", "Print a built-in group presentation");
  cat->add_option("--family", cat_args.family,
                  "wb, fvb, fwb, braid, sym, fvb3p, fwb3p")
      ->required();
  cat->add_option("--n", cat_args.strands, "strand count (default 3)");
  cat->add_option("--out", cat_args.out, "output file (default stdout)");
  cat->add_option("--format", cat_args.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  DeriveArgs der_args;
  CLI::App* der = app.add_subcommand(
      "derive",
      "Derive a presentation of the commutator subgroup by Schreier "
      "rewriting");
  der->add_option("--family", der_args.family, "wb, fvb, fwb")->required();
  der->add_option("--n", der_args.strands, "strand count (default 3)");
  der->add_option("--window", der_args.window,
                  "conjugator window for the graded wb case");
  der->add_option("--out", der_args.out, "output file (default stdout)");
  der->add_option("--format", der_args.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  AbelianizeArgs ab_args;
  CLI::App* ab = app.add_subcommand(
      "abelianize", "Print the abelian invariants of a presentation file");
  ab->add_option("file", ab_args.file, "presentation file")->required();

  SimplifyArgs simp_args;
  CLI::App* simp = app.add_subcommand(
      "simplify", "Simplify a presentation by Tietze transformations");
  simp->add_option("file", simp_args.file, "presentation file")->required();
  simp->add_option("--budget", simp_args.budget,
                   "move budget for the automatic pass (default 500)");
  simp->add_option("--script", simp_args.script,
                   "replay a named elimination script instead");
  simp->add_option("--out", simp_args.out, "output file (default stdout)");
  simp->add_option("--emit-script", simp_args.emit_script,
                   "write the executed script here");

  VerifyArgs ver_args;
  CLI::App* ver = app.add_subcommand(
      "verify", "Run the machine-checked reproduction scenarios");
  ver->add_option("--filter", ver_args.filter, "scenario id prefix");
  ver->add_option("--format", ver_args.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  ver->add_option("--out", ver_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cat->parsed()) return cmd_catalog(cat_args);
    if (der->parsed()) return cmd_derive(der_args);
    if (ab->parsed()) return cmd_abelianize(ab_args);
    if (simp->parsed()) return cmd_simplify(simp_args);
    if (ver->parsed()) return cmd_verify(ver_args);
  } catch (const braidforge::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
