#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "trisym/errors.hpp"
#include "trisym/formats.hpp"

using namespace trisym;

namespace {

const std::string kCorpus = TRISYM_CORPUS_DIR;
const std::string kCli = TRISYM_CLI_PATH;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WEXITSTATUS(st);
  return r;
}

std::string roundtrip(const std::string& text) {
  switch (fmt::kind_of(text)) {
    case fmt::Kind::Braid: return fmt::emit(fmt::parse_braid(text));
    case fmt::Kind::Factorization: return fmt::emit(fmt::parse_factorization(text));
    case fmt::Kind::Pd: return fmt::emit(fmt::parse_pd(text));
    case fmt::Kind::Tangle: return fmt::emit(fmt::parse_tangle(text));
    case fmt::Kind::Monodromy: return fmt::emit(fmt::parse_monodromy(text));
    case fmt::Kind::TorusDiagram: return fmt::emit(fmt::parse_torusdiagram(text));
    case fmt::Kind::Trirec: return fmt::emit(fmt::parse_trirec(text));
    case fmt::Kind::Lattice: return fmt::emit(fmt::parse_lattice(text));
    case fmt::Kind::Grid: return fmt::emit(fmt::parse_grid(text));
    case fmt::Kind::FormField: return fmt::emit(fmt::parse_formfield(text));
  }
  return {};
}

}  // namespace

TEST_CASE("round trip is byte-identical on every corpus fixture") {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
    std::string text = fmt::read_file(entry.path().string());
    std::string once = roundtrip(text);
    CHECK_MESSAGE(once == text, "fixture not canonical: ", entry.path().string());
    CHECK(roundtrip(once) == once);
    checked++;
  }
  CHECK(checked >= 20);
}

TEST_CASE("parse errors carry positions") {
  try {
    fmt::parse_braid("braid\nstrands = 2\nword = 0\n");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("0") != std::string::npos);
  }
  CHECK_THROWS_AS(fmt::parse_braid("braid\nstrands = 2\nstrands = 2\nword =\n"), InputError);
  CHECK_THROWS_AS(fmt::parse_braid("braid\nstrands = 2\nword =\nbogus = 1\n"), InputError);
  CHECK_THROWS_AS(fmt::parse_pd("pd\ncrossing = 1 1 2 2 +2\n"), InputError);
}

TEST_CASE("braid example from the format docs") {
  braid::BraidWord w = fmt::parse_braid("braid\nstrands = 2\nword = 1 1 1\n");
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});
}

TEST_CASE("cli: adjunction on the K3 sphere data violates") {
  RunResult r = run_cli("adjunction --chi 2 --c1k 0 --k2 0");
  CHECK(r.code == 1);
}

TEST_CASE("cli: sl on the trefoil prints 1") {
  RunResult r = run_cli("sl --braid " + kCorpus + "/trefoil.braid");
  CHECK(r.code == 0);
  CHECK(r.out.find("1") != std::string::npos);
  CHECK(r.out.find("report.self_linking = 1") != std::string::npos);
}

TEST_CASE("cli: relations table verifies all rows") {
  RunResult r = run_cli("relations-table");
  CHECK(r.code == 0);
  CHECK(r.out.find("report.status = holds") != std::string::npos);
}

TEST_CASE("cli: verify-factorization accepts the degree-2 record") {
  RunResult r = run_cli("verify-factorization --input " + kCorpus + "/delta2.factorization");
  CHECK(r.code == 0);
}

TEST_CASE("cli: trisect-check and the line record") {
  RunResult r = run_cli("trisect-check --trirec " + kCorpus + "/line.trirec");
  CHECK(r.code == 0);
  CHECK(r.out.find("report.identity = holds") != std::string::npos);
  CHECK(r.out.find("report.c1_pairing = 3") != std::string::npos);
}

TEST_CASE("cli: s-invariant exit codes and budget errors") {
  RunResult r = run_cli("s-invariant --braid " + kCorpus + "/trefoil.braid");
  CHECK(r.code == 0);
  CHECK(r.out.find("report.s = 2") != std::string::npos);
  CHECK(r.out.find("report.gap = 0") != std::string::npos);

  RunResult budget = run_cli("s-invariant --braid " + kCorpus + "/t27.braid --budget 3");
  CHECK(budget.code == 3);

  RunResult multi = run_cli("s-invariant --braid " + kCorpus + "/hopf.braid");
  CHECK(multi.code == 2);

  RunResult missing = run_cli("s-invariant --braid /nonexistent.braid");
  CHECK(missing.code == 2);
}

TEST_CASE("cli: runs are reproducible byte for byte") {
  for (const std::string& args :
       {std::string("kh --braid ") + kCorpus + "/trefoil.braid",
        std::string("trisect-check --trirec ") + kCorpus + "/line.trirec",
        std::string("lattice --input ") + kCorpus + "/cp2x3.lattice"}) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: lattice runs") {
  RunResult cp2 = run_cli("lattice --input " + kCorpus + "/cp2x3.lattice");
  CHECK(cp2.code == 0);
  CHECK(cp2.out.find("report.candidates = 3") != std::string::npos);
  CHECK(cp2.out.find("report.class.0.sphere_ruled_out = 1") != std::string::npos);

  RunResult k3 = run_cli("lattice --input " + kCorpus + "/k3.lattice");
  CHECK(k3.code == 0);
  CHECK(k3.out.find("report.class.0.sphere_ruled_out = 1") != std::string::npos);

  RunResult vd = run_cli("vd --degree 5");
  CHECK(vd.code == 0);
  CHECK(vd.out.find("report.genus_min = 6") != std::string::npos);
}

TEST_CASE("cli: unlink certificate") {
  // crossingless 2-component diagram
  std::string tmp = std::filesystem::temp_directory_path() / "trisym_unlink2.pd";
  fmt::write_file(tmp, "pd\nfree_loops = 2\n");
  RunResult ok = run_cli("unlink-cert --pd " + tmp);
  CHECK(ok.code == 0);
}
