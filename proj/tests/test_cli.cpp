// Drives the command-line binary end to end. Invoked by ctest with the
// binary path as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "braidforge/catalog.hpp"
#include "braidforge/rewriting.hpp"
#include "braidforge/presentation_io.hpp"

namespace {

int g_failures = 0;

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::cout << "ok   " << what << "\n";
  } else {
    std::cout << "FAIL " << what << "\n";
    ++g_failures;
  }
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& cmd) {
  static int counter = 0;
  std::string out = "/tmp/braidforge_cli_out_" + std::to_string(counter) +
                    "_" + std::to_string(getpid());
  std::string err = "/tmp/braidforge_cli_err_" + std::to_string(counter) +
                    "_" + std::to_string(getpid());
  ++counter;
  std::string full = cmd + " >" + out + " 2>" + err;
  int status = std::system(full.c_str());
  RunResult r;
  r.code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

std::size_t count_gens(const std::string& presentation_text) {
  std::istringstream in(presentation_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("gens:", 0) == 0) {
      std::istringstream gl(line.substr(5));
      std::string tok;
      std::size_t n = 0;
      while (gl >> tok) ++n;
      return n;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <braidforge-binary>\n";
    return 2;
  }
  std::string cli = argv[1];

  {
    RunResult r = run(cli + " catalog --family wb --n 3");
    expect(r.code == 0, "catalog wb3 exits 0");
    expect(r.out == braidforge::serialize_presentation(
                        braidforge::catalog({braidforge::Family::WeldedBraid,
                                             3})),
           "catalog wb3 prints the library serialization");
  }
  {
    RunResult r = run(cli + " catalog --family wb --n 1");
    expect(r.code == 2, "catalog with one strand is a usage error");
    expect(!r.err.empty(), "usage error message goes to stderr");
  }
  {
    RunResult a = run(cli + " catalog --family fwb3p --format structured");
    RunResult b = run(cli + " catalog --family fwb3p --format structured");
    expect(a.code == 0 && a.out == b.out,
           "structured catalog output is deterministic");
    expect(a.out.find("braidforge-presentation/1") != std::string::npos,
           "structured output is schema-versioned");
    // Golden pin of the structured schema.
    RunResult g = run(cli + " catalog --family sym --n 3 --format structured");
    expect(g.out ==
               "{\n"
               "  \"schema\": \"braidforge-presentation/1\",\n"
               "  \"name\": \"sym3\",\n"
               "  \"generators\": [\n"
               "    {\n"
               "      \"name\": \"r1\",\n"
               "      \"strand\": 1\n"
               "    },\n"
               "    {\n"
               "      \"name\": \"r2\",\n"
               "      \"strand\": 2\n"
               "    }\n"
               "  ],\n"
               "  \"relators\": [\n"
               "    \"r1^2\",\n"
               "    \"r2^2\",\n"
               "    \"r1 r2 r1 r2 r1 r2\"\n"
               "  ],\n"
               "  \"labels\": [\n"
               "    \"rho-invol\",\n"
               "    \"rho-invol\",\n"
               "    \"rho-braid\"\n"
               "  ]\n"
               "}\n",
           "structured catalog output matches the golden file");
  }
  {
    RunResult r = run(cli + " derive --family fvb --n 3 --out /tmp/fvb3d.pres");
    expect(r.code == 0, "derive fvb3 exits 0");
    std::string text = slurp("/tmp/fvb3d.pres");
    expect(count_gens(text) == 13, "derived fvb3 has 13 generators");
    expect(text.find("provenance:") != std::string::npos,
           "derived file has a provenance section");
    RunResult ab = run(cli + " abelianize /tmp/fvb3d.pres");
    expect(ab.code == 0 && ab.out == "Z^1 x Z/3 x Z/3\n",
           "abelianize of derived fvb3 prints Z^1 x Z/3 x Z/3");
  }
  {
    RunResult r = run(cli + " derive --family wb --n 4");
    expect(r.code == 2, "derive wb without --window is a usage error");
    RunResult rw = run(cli + " derive --family fvb --n 3 --window 2");
    expect(rw.code == 2, "derive fvb with --window is a usage error");
    RunResult ok = run(cli + " derive --family wb --n 4 --window 2");
    expect(ok.code == 0 && ok.out.find("alpha[0,1,1]") != std::string::npos,
           "windowed welded derivation emits graded labels");
  }
  {
    run(cli + " catalog --family wb --n 4 --out /tmp/wb4.pres");
    RunResult ab = run(cli + " abelianize /tmp/wb4.pres");
    expect(ab.code == 0 && ab.out == "Z^1 x Z/2\n",
           "abelianize wb4 prints Z^1 x Z/2");
    RunResult missing = run(cli + " abelianize /tmp/definitely_missing.pres");
    expect(missing.code == 2, "abelianize on a missing file exits 2");
  }
  {
    RunResult r = run(cli +
                      " simplify /tmp/fvb3d.pres --budget 200 --out "
                      "/tmp/fvb3s.pres --emit-script /tmp/fvb3s.tz");
    expect(r.code == 0, "simplify with a budget exits 0");
    expect(count_gens(slurp("/tmp/fvb3s.pres")) <= 8,
           "auto-simplified fvb3 has at most 8 generators");
    expect(!slurp("/tmp/fvb3s.tz").empty(), "executed script is emitted");
    RunResult bad = run(cli + " simplify /tmp/fvb3d.pres --script missing.tz");
    expect(bad.code == 2, "missing script is a usage error");
    RunResult script = run(
        cli + " simplify /tmp/fvb3d.pres --script lemma-3.4-fvb.tz --out "
              "/tmp/fvb3L.pres");
    expect(script.code == 0 && count_gens(slurp("/tmp/fvb3L.pres")) == 5,
           "builtin lemma script reduces fvb3 to five generators");
  }
  {
    // The wide-presentation pipeline: derive at seven strands, replay the
    // alternative elimination, and count interior generators.
    RunResult d = run(cli +
                      " derive --family wb --n 7 --window 3 --out "
                      "/tmp/wb7K3.pres");
    expect(d.code == 0, "derive wb7 at window 3 exits 0");
    RunResult s = run(cli +
                      " simplify /tmp/wb7K3.pres --script lemma-2.4.tz --out "
                      "/tmp/wb7small.pres");
    expect(s.code == 0, "lemma-2.4.tz replays on the wb7 derivation");
    std::size_t interior = 0;
    {
      std::istringstream in(slurp("/tmp/wb7small.pres"));
      std::string line;
      while (std::getline(in, line)) {
        if (line.rfind("gens:", 0) != 0) continue;
        std::istringstream gl(line.substr(5));
        std::string tok;
        while (gl >> tok) {
          auto l = braidforge::parse_graded_label(tok);
          if (l && l->k >= -1 && l->k <= 1) ++interior;
        }
      }
    }
    expect(interior == 9, "wb7 interior generator count is 2(n-3)+1 = 9");
  }
  {
    RunResult r = run(cli + " verify --filter cor-3.2");
    expect(r.code == 0, "verify --filter cor-3.2 passes");
    expect(r.out.find("PASS") != std::string::npos, "text report says PASS");
    RunResult warn = run(cli + " verify --filter nonexistent");
    expect(warn.code == 0 && warn.err.find("warning") != std::string::npos,
           "empty filter match warns and exits 0");
    RunResult json = run(
        cli + " verify --filter sec-2.2-abelianization --format structured");
    expect(json.code == 0 &&
               json.out.find("\"all_pass\": true") != std::string::npos,
           "structured verify reports all_pass");
    RunResult color = run("BRAIDFORGE_COLOR=1 " + cli +
                          " verify --filter sec-2.2-abelianization-wb2");
    expect(color.code == 0 && color.out.find("\033[32m") != std::string::npos,
           "BRAIDFORGE_COLOR=1 colorizes the report");
  }
  {
    RunResult r = run(cli + " frobnicate");
    expect(r.code == 2, "unknown subcommand is a usage error");
    RunResult help = run(cli + " --help");
    expect(help.code == 0, "--help exits 0");
  }

  if (g_failures) {
    std::cout << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
