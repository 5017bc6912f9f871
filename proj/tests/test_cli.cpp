#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hypervis/constructions.hpp"
#include "hypervis/cube.hpp"
#include "json.hpp"

using namespace hypervis;
namespace fs = std::filesystem;

namespace {

const std::string kCli = HYPERVIS_CLI_PATH;
const fs::path kGolden = HYPERVIS_GOLDEN_DIR;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless merged.
Run cli(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("hypervis-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  [[nodiscard]] std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_set(const std::string& path, std::initializer_list<std::string_view> vertices) {
  write_vertex_set_file(path, VertexSet::parse_list(vertices));
}

}  // namespace

TEST_CASE("tables match the golden files") {
  const Run all = cli("tables --which all");
  CHECK(all.code == 0);
  CHECK(all.out == slurp(kGolden / "tables_all.txt"));
  const Run total = cli("tables --which total");
  CHECK(total.code == 0);
  CHECK(total.out == slurp(kGolden / "tables_total.txt"));
  CHECK(cli("tables").out == all.out);

  // Every tabulated value appears on its own row.
  const std::size_t rows = static_cast<std::size_t>(std::count(total.out.begin(), total.out.end(), '\n')) - 2;
  CHECK(rows == 14);
  for (const char* which : {"mutual", "outer", "dual", "total"}) {
    const std::string text = cli(std::string("tables --which ") + which).out;
    for (const KnownEntry& e : KnownValues::embedded().entries_for(*parse_variant_kind(which))) {
      std::ostringstream prefix;
      prefix << '\n' << e.h << std::string(4 - std::to_string(e.h).size(), ' ') << e.value_text();
      CHECK(text.find(prefix.str()) != std::string::npos);
    }
  }
}

TEST_CASE("verify") {
  TempDir tmp;
  const std::string fig1 = tmp / "fig1.txt", fig2 = tmp / "fig2.txt";
  write_set(fig1, {"0000", "0001", "0110", "0111", "1010", "1011"});
  write_set(fig2, {"0000", "0001", "0010", "0101", "1010", "1101", "1110", "1111"});
  CHECK(cli("verify --variant dual --set " + fig2 + " --h 4").code == 0);
  CHECK(cli("verify --variant outer --set " + fig1).code == 0);

  const Run fail = cli("verify --variant total --set " + fig2);
  CHECK(fail.code == 1);
  CHECK(fail.out.rfind("fail: ", 0) == 0);

  const Run limited = cli("verify --variant mutual --set " + fig2 + " --max-distance 2");
  CHECK(limited.code == 0);
  CHECK(limited.out.find("not certified") != std::string::npos);

  const Run j = cli("verify --variant total --set " + fig2 + " --json");
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["status"] == "fail");
  CHECK(parsed["h"] == 4);
  CHECK(parsed["size"] == 8);
  CHECK(parsed["witness"].size() == 2);

  const std::string gap1 = tmp / "gap1.txt";
  REQUIRE(cli("construct --kind layer-pair --h 5 --i 1 --gap 1 --out " + gap1).code == 0);
  const Run all = cli("verify --variant mutual --set " + gap1 + " --all-witnesses");
  CHECK(all.code == 1);
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') > 1);

  CHECK(cli("verify --variant dual --set " + fig2 + " --h 5").code == 2);
  CHECK(cli("verify --variant dual --set " + tmp / "missing.txt").code == 2);
}

TEST_CASE("construct output parses back") {
  TempDir tmp;
  const std::string a = tmp / "a.txt", b = tmp / "b.txt", c = tmp / "c.txt";
  REQUIRE(cli("construct --kind layer-pair --h 8 --i 3 --gap 3 --out " + a).code == 0);
  CHECK(read_vertex_set_file(a) == layer_pair_set(8, 3, 3));
  REQUIRE(cli("construct --kind total --h 8 --out " + b).code == 0);
  const VertexSet total = read_vertex_set_file(b);
  CHECK(total.size() == 32);
  CHECK(verify(total, Variant(VariantKind::kTotal)).ok);
  REQUIRE(cli("construct --kind floor --h 9 --variant outer --out " + c).code == 0);
  CHECK(read_vertex_set_file(c) == constructive_floor(9, VariantKind::kOuter));
  CHECK(cli("construct --kind layer --h 6 --i 3").out == cli("construct --kind layer --h 6 --i 3").out);
  CHECK(read_vertex_set_file(c).size() == 126);

  CHECK(cli("construct --kind layer-pair --h 8").code == 2);
  CHECK(cli("construct --kind floor --h 8").code == 2);
  CHECK(cli("construct --kind layer-pair --h 4 --i 2 --gap 3").code == 2);
}

TEST_CASE("bounds") {
  const Run r = cli("bounds --h 8 --variant mutual");
  CHECK(r.code == 0);
  CHECK(r.out == "h=8 variant=mutual\nlower=116 (found-set)\nupper=118 (doubling)\nexact=no\n");
  const auto j = nlohmann::json::parse(cli("bounds --h 12 --variant outer --json").out);
  CHECK(j["lower"] == 924);
  CHECK(j["lower_source"] == "layer construction");
  CHECK(j["upper"] == 1280);
  CHECK(cli("bounds --h 4 --variant dual").out.find("exact=yes") != std::string::npos);
}

TEST_CASE("encode and solve") {
  TempDir tmp;
  const std::string unsat = tmp / "q3_6.cnf", sat = tmp / "q3_5.cnf", set = tmp / "set.txt";
  REQUIRE(cli("encode --h 3 --variant mutual --ell 6 --path-cap 3 --format dimacs --out " + unsat).code == 0);
  const Run no = cli("solve " + unsat);
  CHECK(no.code == 1);
  CHECK(no.out.find("s UNSATISFIABLE") != std::string::npos);
  CHECK(cli("solve --competition-exit-codes " + unsat).code == 20);

  REQUIRE(cli("encode --h 3 --variant mutual --ell 5 --out " + sat).code == 0);
  const Run yes = cli("solve " + sat + " --set-out " + set);
  CHECK(yes.code == 0);
  CHECK(yes.out.find("s SATISFIABLE") != std::string::npos);
  CHECK(yes.out.find("\nv ") != std::string::npos);
  const VertexSet m = read_vertex_set_file(set);
  CHECK(m.size() >= 5);
  CHECK(verify(m, Variant(VariantKind::kMutual)).ok);
  CHECK(cli("solve --competition-exit-codes --branching activity " + sat).code == 10);

  CHECK(cli("encode --h 4 --variant dual --ell 8 --forbid k12-star").out ==
        cli("encode --h 4 --variant dual --ell 8 --forbid k12-star").out);
  const Run lp = cli("encode --h 3 --variant outer --format lp");
  CHECK(lp.code == 0);
  CHECK(lp.out.find("Subject To") != std::string::npos);

  CHECK(cli("encode --h 3 --variant outer --format lp --ell 3").code == 2);
  CHECK(cli("encode --h 3 --variant mutual --path-cap 4").code == 2);
  CHECK(cli("encode --h 3 --variant mutual --ell 9").code == 2);
  CHECK(cli("encode --h 3 --variant mutual --format cnf").code == 2);
  CHECK(cli("solve " + tmp / "absent.cnf").code == 2);

  // A plain DIMACS file without a vertex map still solves.
  const std::string plain = tmp / "plain.cnf";
  std::ofstream(plain) << "p cnf 2 2\n1 2 0\n-1 0\n";
  CHECK(cli("solve " + plain).code == 0);
  CHECK(cli("solve " + plain + " --set-out " + set).code == 2);
  std::ofstream(plain) << "p cnf 2 3\n1 2 0\n-1 0\n";
  CHECK(cli("solve " + plain).code == 2);
}

TEST_CASE("search") {
  TempDir tmp;
  const std::string out = tmp / "best.txt";
  const Run r = cli("search --h 4 --variant outer --mode exact --out " + out);
  CHECK(r.code == 0);
  const VertexSet best = read_vertex_set_file(out);
  CHECK(best.size() == 6);
  CHECK(verify(best, Variant(VariantKind::kOuter)).ok);
  const std::string meta = slurp(out + ".meta");
  CHECK(meta.find("size=6\n") != std::string::npos);
  CHECK(meta.find("status=optimal\n") != std::string::npos);

  const Run j = cli("search --h 4 --variant mutual --mode two-phase --pattern k12-star --json");
  CHECK(j.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(j.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : parsed.items()) keys.push_back(k);
  REQUIRE(keys.size() >= 5);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 5) ==
        std::vector<std::string>{"h", "variant", "size", "status", "elapsed_ms"});
  CHECK(parsed["size"] == 9);
  CHECK(parsed["phase1_size"] == 8);

  const std::string presets = tmp / "presets.txt";
  write_set(presets, {"0000", "1111"});
  const Run p = cli("search --h 4 --variant mutual --preset-file " + presets + " --json");
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["size"] == 9);

  const Run h = cli("search --h 5 --variant mutual --mode heuristic --seeds antipode --budget-seconds 5 --json");
  CHECK(h.code == 0);
  const auto hj = nlohmann::json::parse(h.out);
  CHECK(hj["status"] == "lower-bound-only");
  CHECK(hj["size"] >= 10);

  CHECK(cli("search --h 4 --variant mutual --mode two-phase").code == 2);
  CHECK(cli("search --h 4 --variant mutual --pattern k12-star").code == 2);
  CHECK(cli("search --h 4 --variant mutual --mode two-phase --pattern k12-star --preset-file " + presets).code ==
        2);
  CHECK(cli("search --h 7 --variant mutual").code == 2);
  CHECK(cli("search --h 4 --variant mutual --mode fast").code == 2);
  CHECK(cli("search --h 4 --variant mutual --seeds antipode").code == 2);
}

TEST_CASE("external solver from the environment") {
  // The CLI's own solve subcommand speaks the competition protocol.
  const std::string env = "HYPERVIS_SOLVER=\"'" + kCli + "' solve --solver internal --competition-exit-codes\"";
  const Run r = cli("search --h 4 --variant dual --json", false, env);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 8);
  CHECK(j["certificate"] == "unsat-at-l+1");
  CHECK(j["solver_calls"] > 0);

  // --solver internal overrides the environment.
  const Run internal = cli("search --h 4 --variant dual --solver internal --json", false, env);
  CHECK(nlohmann::json::parse(internal.out)["certificate"] == "exhaustive");

  TempDir tmp;
  const std::string cnf = tmp / "f.cnf";
  REQUIRE(cli("encode --h 3 --variant dual --ell 4 --out " + cnf).code == 0);
  CHECK(cli("solve " + cnf, false, env).code == 0);
  CHECK(cli("solve " + cnf + " --solver 'false'").code == 3);
}

TEST_CASE("usage errors") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("verify --set x.txt").code == 2);
  const Run bad = cli("verify --variant sideways --set x.txt", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("--variant") != std::string::npos);
  CHECK(cli("tables --which triangles").code == 2);
  CHECK(cli("--help").code == 0);
}
