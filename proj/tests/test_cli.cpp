#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "helpers.hpp"
#include "ncdet/cli.hpp"

using namespace testing_helpers;
using ncdet::cli::JobSpec;
using ncdet::cli::run;
using nlohmann::json;

namespace {

JobSpec job(const std::string& command, const std::string& sample) {
  JobSpec s;
  s.command = command;
  if (!sample.empty())
    s.input = samples_dir() + "/" + sample;
  return s;
}

json doc_of(const ncdet::cli::RunResult& r) { return json::parse(r.document); }

} // namespace

TEST(Cli, DdetOfExamplePrintsZero) {
  auto r = run(job("ddet", "example.qmat"));
  EXPECT_EQ(r.exit_code, 0) << r.document;
  json d = doc_of(r);
  EXPECT_EQ(d["command"], "ddet");
  EXPECT_EQ(d["result"]["value"], "0");
  EXPECT_EQ(d["input"]["sha256"].get<std::string>().size(), 64u);
}

TEST(Cli, InputDigestIsSha256OfFileBytes) {
  auto r = run(job("ddet", "example.qmat"));
  std::string bytes = io::read_file(samples_dir() + "/example.qmat");
  EXPECT_EQ(doc_of(r)["input"]["sha256"], ncdet::cli::sha256_hex(bytes));
  EXPECT_EQ(ncdet::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, RdetOfIdentity) {
  JobSpec s = job("rdet", "identity3.qmat");
  s.i = 2;
  auto r = run(s);
  EXPECT_EQ(r.exit_code, 0) << r.document;
  EXPECT_EQ(doc_of(r)["result"]["value"], "1,0,0,0");
  EXPECT_EQ(doc_of(r)["result"]["index"], 2);
}

TEST(Cli, ExampleDeterminantsAndRank) {
  for (long k : {1, 2}) {
    JobSpec s = job("rdet", "example.qmat");
    s.i = k;
    EXPECT_EQ(doc_of(run(s))["result"]["value"], "2,0,0,0");
    JobSpec c = job("cdet", "example.qmat");
    c.j = k;
    EXPECT_EQ(doc_of(run(c))["result"]["value"], "2,0,0,0");
  }
  auto r = run(job("rank", "example.qmat"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(doc_of(r)["result"]["rank"], 1);
  EXPECT_EQ(doc_of(r)["result"]["principal_minor_rank"], 1);
}

TEST(Cli, IndexArgumentsRequiredExactly) {
  EXPECT_EQ(run(job("rdet", "identity3.qmat")).exit_code, 2);
  JobSpec extra = job("ddet", "identity3.qmat");
  extra.i = 1;
  EXPECT_EQ(run(extra).exit_code, 2);
  JobSpec wrong = job("cdet", "identity3.qmat");
  wrong.i = 1;
  EXPECT_EQ(run(wrong).exit_code, 2);
  JobSpec half = job("quasidet", "identity2.qmat");
  half.p = 1;
  EXPECT_EQ(run(half).exit_code, 2);
  JobSpec zero = job("rdet", "identity3.qmat");
  zero.i = 0;
  EXPECT_EQ(run(zero).exit_code, 2);
  JobSpec big = job("rdet", "identity3.qmat");
  big.i = 4;
  EXPECT_EQ(run(big).exit_code, 3);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run(job("ddet", "malformed.qmat")).exit_code, 2);
  EXPECT_EQ(run(job("ddet", "bad_algebra.qmat")).exit_code, 2);
  EXPECT_EQ(run(job("ddet", "does_not_exist.qmat")).exit_code, 2);
  EXPECT_EQ(run(job("solve", "mixed_algebras.qsys")).exit_code, 2);
  EXPECT_EQ(run(job("frobnicate", "example.qmat")).exit_code, 2);
  EXPECT_EQ(run(job("ddet", "")).exit_code, 2);
  JobSpec m = job("solve", "system_right.qsys");
  m.method = "magic";
  EXPECT_EQ(run(m).exit_code, 2);
  JobSpec side = job("solve", "system_right.qsys");
  side.side = "left";
  EXPECT_EQ(run(side).exit_code, 2);
  JobSpec side2 = job("ddet", "example.qmat");
  side2.side = "right";
  EXPECT_EQ(run(side2).exit_code, 2);
}

TEST(Cli, PreconditionViolationsExitThree) {
  auto inv = run(job("inverse", "example.qmat"));
  EXPECT_EQ(inv.exit_code, 3);
  EXPECT_EQ(doc_of(inv)["error"]["type"], "precondition");
  EXPECT_EQ(run(job("mdet", "example.qmat")).exit_code, 3);
  EXPECT_EQ(run(job("inverse", "rectangular3x4.qmat")).exit_code, 3);
  auto stall = run(job("rank", "split_stall.qmat"));
  EXPECT_EQ(stall.exit_code, 3);
  EXPECT_EQ(doc_of(stall)["error"]["type"], "elimination_stall");
  EXPECT_TRUE(doc_of(stall)["error"].contains("certificate"));
}

TEST(Cli, UndefinedQuasideterminantExitsFour) {
  for (auto [p, q] : {std::pair<long, long>{1, 2}, {2, 1}}) {
    JobSpec s = job("quasidet", "identity2.qmat");
    s.p = p;
    s.q = q;
    auto r = run(s);
    EXPECT_EQ(r.exit_code, 4);
    json d = doc_of(r);
    EXPECT_EQ(d["result"]["defined"], false);
    EXPECT_EQ(d["result"]["witness"]["kind"], "minor_singular");
    EXPECT_EQ(d["result"]["witness"]["rows"], json::array({p}));
    EXPECT_EQ(d["result"]["witness"]["cols"], json::array({q}));
  }
  for (long k : {1, 2}) {
    JobSpec s = job("quasidet", "identity2.qmat");
    s.p = k;
    s.q = k;
    auto r = run(s);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(doc_of(r)["result"]["value"], "1,0,0,0");
    EXPECT_EQ(doc_of(r)["result"]["forms"]["column"]["value"], "1,0,0,0");
  }
}

TEST(Cli, SolveMethodsGiveIdenticalDocuments) {
  for (const char* file : {"system_right.qsys", "system_left.qsys"}) {
    std::string first;
    for (const char* method : {"cramer", "inverse", "quasi"}) {
      JobSpec s = job("solve", file);
      s.method = method;
      auto r = run(s);
      ASSERT_EQ(r.exit_code, 0) << r.document;
      if (first.empty())
        first = r.document;
      else
        EXPECT_EQ(r.document, first) << method;
    }
    JobSpec qs = job("qsolve", file);
    json a = doc_of(run(qs))["result"], b = json::parse(first)["result"];
    EXPECT_EQ(a, b);
  }
}

TEST(Cli, SolveResidualIsZero) {
  auto r = run(job("solve", "system_right.qsys"));
  auto sys = io::parse_system<Rational>(io::parse_json(io::read_file(samples_dir() + "/system_right.qsys")));
  QM x = io::parse_entries(sys.a.algebra(), doc_of(r)["result"]["solution"]);
  EXPECT_EQ(sys.a * x, sys.y);
}

TEST(Cli, InverseAndMdet) {
  auto r = run(job("inverse", "invertible3.qmat"));
  ASSERT_EQ(r.exit_code, 0);
  QM a = io::parse_matrix<Rational>(io::parse_json(io::read_file(samples_dir() + "/invertible3.qmat")));
  QM inv = io::parse_entries(a.algebra(), doc_of(r)["result"]["matrix"]);
  EXPECT_EQ(a * inv, QM::identity(a.algebra(), 3));
  auto m = run(job("mdet", "hermitian3.qmat"));
  EXPECT_EQ(m.exit_code, 0) << m.document;
  QM hm = io::parse_matrix<Rational>(io::parse_json(io::read_file(samples_dir() + "/hermitian3.qmat")));
  EXPECT_EQ(doc_of(m)["result"]["value"], mdet(hm).to_string());
}

TEST(Cli, FloatBackend) {
  auto r = run(job("ddet", "example_float.qmat"));
  EXPECT_EQ(r.exit_code, 0) << r.document;
  EXPECT_EQ(doc_of(r)["scalar"], "float64");
  EXPECT_EQ(doc_of(r)["result"]["value"], "0");
  auto s = run(job("solve", "system_float.qsys"));
  EXPECT_EQ(s.exit_code, 0) << s.document;
}

TEST(Cli, ParallelDoesNotChangeOutput) {
  JobSpec a = job("rdet", "invertible3.qmat");
  a.i = 3;
  JobSpec b = a;
  b.parallel = 4;
  EXPECT_EQ(run(a).document, run(b).document);
}

TEST(Cli, VerifySmallPassesAndIsDeterministic) {
  unsetenv("NCDET_SEED");
  JobSpec s;
  s.command = "verify";
  s.repro_dir = std::filesystem::temp_directory_path().string();
  auto r1 = run(s);
  ASSERT_EQ(r1.exit_code, 0) << r1.document;
  json d = doc_of(r1);
  EXPECT_GE(d["suite_count"].get<int>(), 12);
  EXPECT_EQ(d["seed"], ncdet::verify::default_seed);
  for (const auto& e : d["suites"])
    EXPECT_TRUE(e["passed"].get<bool>()) << e.dump();
  s.parallel = 4;
  EXPECT_EQ(run(s).document, r1.document);
}

TEST(Cli, VerifySeedFromEnvironment) {
  setenv("NCDET_SEED", "12345", 1);
  JobSpec s;
  s.command = "verify";
  s.repro_dir = std::filesystem::temp_directory_path().string();
  auto r = run(s);
  unsetenv("NCDET_SEED");
  EXPECT_EQ(r.exit_code, 0) << r.document;
  EXPECT_EQ(doc_of(r)["seed"], 12345);
  setenv("NCDET_SEED", "banana", 1);
  EXPECT_EQ(run(s).exit_code, 2);
  unsetenv("NCDET_SEED");
}

TEST(Cli, VerifyRejectsInputAndBadScale) {
  JobSpec s;
  s.command = "verify";
  s.scale = "huge";
  EXPECT_EQ(run(s).exit_code, 2);
}
