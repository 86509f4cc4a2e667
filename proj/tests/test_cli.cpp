// CLI end-to-end checks: exit codes, output schema, byte determinism.
// Usage: gradalg_cli_tests <path-to-gradalg-binary>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "[FAIL] cannot spawn: " << cmd << "\n";
    std::exit(1);
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, out};
}

void check(bool cond, const std::string& what) {
  if (!cond) {
    ++g_failures;
    std::cerr << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok] " << what << "\n";
  }
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

void check_deterministic(const std::string& args) {
  RunResult a = run(args);
  RunResult b = run(args);
  check(a.out == b.out && a.exit_code == b.exit_code, "byte-determinism: " + args);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gradalg_cli_tests <gradalg binary>\n";
    return 1;
  }
  g_binary = argv[1];

  // validate
  auto v1 = run("validate " + fixture("poset_triangular.json"));
  check(v1.exit_code == 0, "validate poset fixture exits 0");
  check(nlohmann::json::parse(v1.out).at("ok").get<bool>(), "validate reports ok");

  auto v2 = run("validate " + fixture("planted_assoc_break.json"));
  check(v2.exit_code == 1, "planted associativity break exits 1");
  {
    auto rep = nlohmann::json::parse(v2.out);
    bool named = false;
    for (const auto& v : rep.at("algebra"))
      named = named || v.at("message").get<std::string>().find("(1, 1, 1)") != std::string::npos ||
              v.at("message").get<std::string>().find("arrows (1") != std::string::npos;
    check(named, "validation names the offending triple");
  }

  auto v3 = run("validate " + fixture("malformed.json"));
  check(v3.exit_code == 2, "malformed JSON exits 2");

  // computing commands refuse invalid scenes
  check(run("radical " + fixture("planted_assoc_break.json") + " --target algebra").exit_code == 1,
        "computing on an invalid scene exits 1");

  // radical
  auto r1 = run("radical " + fixture("nonsplit_q.json") + " --target algebra");
  check(r1.exit_code == 0, "radical --target algebra exits 0");
  check(nlohmann::json::parse(r1.out).at("radical_dimension") == 0,
        "Q[x]/(x^2+1) has zero radical");

  auto r2 = run("radical " + fixture("nat_poly_rel3.json") + " --target module:A[1]");
  check(r2.exit_code == 0, "radical --target module:A[1] exits 0");
  {
    auto rep = nlohmann::json::parse(r2.out);
    check(rep.at("total_dimension") == 2, "rad(A[1]) is the positively-shifted part");
  }

  auto r3 = run("radical " + fixture("nat_poly_rel3.json") + " --target hom:A[0],A[0]");
  check(r3.exit_code == 0, "radical --target hom exits 0");
  check(nlohmann::json::parse(r3.out).at("dimension") == 0, "J(A[0], A[0]) is zero here");

  // hom
  auto h1 = run("hom " + fixture("nat_poly_rel3.json") + " --source A[1] --target A[0]");
  check(h1.exit_code == 0, "hom exits 0");
  check(nlohmann::json::parse(h1.out).at("dimension") == 1, "dim Hom(A[1], A[0]) = 1");

  // resolve: the golden Betti pattern
  auto res = run("resolve " + fixture("nat_poly_rel3.json") + " --module K0 --length 6");
  check(res.exit_code == 0, "resolve exits 0");
  {
    auto rep = nlohmann::json::parse(res.out);
    check(rep.at("terminated").get<bool>(), "resolution terminates at the window edge");
    auto betti = rep.at("betti");
    std::vector<std::string> shifts = {"0", "1", "3", "4", "6", "7", "9"};
    bool pattern = betti.size() == 7;
    for (std::size_t k = 0; pattern && k < 7; ++k) {
      pattern = betti[k].size() == 1 && betti[k].contains(shifts[k] + ":0") &&
                betti[k].at(shifts[k] + ":0") == 1;
    }
    check(pattern, "Betti shifts are 0,1,3,4,6,7,9 with rank 1");
    check(rep.at("certificate").at("pass").get<bool>(), "resolution certificate passes");
  }

  auto res2 = run("resolve " + fixture("nonsplit_q.json") + " --module M --length 1");
  check(res2.exit_code == 1, "non-split input exits 1 from resolve");

  // projective module: length-0 resolution
  auto res3 = run("resolve " + fixture("poset_triangular.json") + " --module 'A[2|2]' --length 4");
  check(res3.exit_code == 0, "resolve projective exits 0");
  {
    auto rep = nlohmann::json::parse(res3.out);
    check(rep.at("terminated").get<bool>() && rep.at("betti").size() == 1,
          "projective has a length-0 resolution");
  }

  // check-perfect exit codes
  check(run("check-perfect " + fixture("z2_group_graded.json")).exit_code == 0,
        "Z/2-graded group algebra is perfect (exit 0)");
  check(run("check-perfect " + fixture("poset_triangular.json")).exit_code == 0,
        "poset-graded triangular algebra is perfect (exit 0)");
  check(run("check-perfect " + fixture("int_window.json")).exit_code == 4,
        "Int window verdict is hypotheses-not-verifiable (exit 4)");
  check(run("check-perfect " + fixture("nonsplit_q.json")).exit_code == 4,
        "non-split divisor ring: hypotheses-not-verifiable (exit 4)");

  // counterexample
  auto c1 = run("counterexample --d 1 --field 2");
  check(c1.exit_code == 0, "counterexample d=1 exits 0");
  {
    auto rep = nlohmann::json::parse(c1.out);
    check(rep.at("admissible_count") == 8, "d=1 over F_2 has 8 admissible candidates");
    check(rep.at("interior_minimal_found") == 0, "no interior-minimal elements");
  }
  check(run("counterexample --d 4 --field 2").exit_code == 1,
        "d beyond the bound exits 1 (SearchSpaceTooLarge)");

  // byte determinism across reruns
  const std::vector<std::string> determinism_cases = {
      "validate " + fixture("poset_triangular.json"),
      "radical " + fixture("nat_poly_rel3.json") + " --target module:A[1]",
      "resolve " + fixture("nat_poly_rel3.json") + " --module K0 --length 6",
      "check-perfect " + fixture("z2_group_graded.json"),
      "check-perfect " + fixture("int_window.json"),
      std::string("counterexample --d 2 --field 2"),
      "hom " + fixture("nat_poly_rel3.json") + " --source A[1] --target A[0]",
  };
  for (const std::string& args : determinism_cases) check_deterministic(args);

  // GRADALG_THREADS caps parallelism without changing output bytes
  {
    RunResult seq = run("counterexample --d 2 --field 2");
    std::string with_threads = "GRADALG_THREADS=3 " + g_binary +
                               " counterexample --d 2 --field 2 2>/dev/null";
    FILE* pipe = popen(with_threads.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    check(out == seq.out, "GRADALG_THREADS does not change the report bytes");
  }
  {
    std::string bad_env = "GRADALG_THREADS=zero " + g_binary +
                          " counterexample --d 1 --field 2 2>/dev/null";
    FILE* pipe = popen(bad_env.c_str(), "r");
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    int status = pclose(pipe);
    check(WIFEXITED(status) && WEXITSTATUS(status) == 2, "invalid GRADALG_THREADS exits 2");
  }

  // --pretty variants render text, not JSON
  auto p1 = run("resolve " + fixture("nat_poly_rel3.json") + " --module K0 --length 6 --pretty");
  check(p1.exit_code == 0 && p1.out.find("stage") != std::string::npos,
        "--pretty renders the Betti table");

  if (g_failures) {
    std::cerr << g_failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
