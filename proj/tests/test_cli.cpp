#include "superheap/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using superheap::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SUPERHEAP_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const char* name) { return std::string(SUPERHEAP_SAMPLES) + "/" + name; }

}  // namespace

TEST(Cli, MultOfFirstWorkedExample) {
  auto r = run("mult --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "3\n");
  auto j = run("--json mult --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3");
  ASSERT_EQ(j.code, 0);
  auto doc = json::parse(j.out);
  EXPECT_EQ(doc["command"], "mult");
  EXPECT_EQ(doc["result"]["mult_recursion"], "3");
  EXPECT_EQ(doc["result"]["mult_closed_form"], "3");
  EXPECT_EQ(doc["result"]["agree"], true);
  EXPECT_EQ(doc["result"]["parity"], "odd");
  EXPECT_EQ(doc["result"]["linear_coeff"], "10/3");
}

TEST(Cli, LlnBasisOfSecondWorkedExample) {
  auto r = run("--json basis lln --graph " + sample("ex2.json") + " --weight 0,0,2,1,2,1 --base 3");
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  ASSERT_EQ(doc["result"]["dimension"], 2);
  EXPECT_EQ(doc["result"]["elements"][0]["monomial"], "[3,[[[[3,4],5],5],6]]");
  EXPECT_EQ(doc["result"]["elements"][1]["monomial"], "[3,[[[[3,4],5],6],5]]");
  EXPECT_EQ(doc["certificates"]["rank"]["rank"], 2);
  EXPECT_EQ(doc["certificates"]["rank"]["full_row_rank"], true);
}

TEST(Cli, VerifyAllSucceeds) {
  auto r = run("verify all --graph " + sample("ex1.json") + " --cap 1,1,3,1,1,3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, VerifyAllReportsDiscrepancyWithoutFailing) {
  auto r = run("--json verify all --graph " + sample("odd_vertex.json") + " --cap 3");
  ASSERT_EQ(r.code, 0);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["result"]["passed"], true);
  ASSERT_EQ(doc["result"]["method_discrepancies"].size(), 1u);
  EXPECT_EQ(doc["result"]["method_discrepancies"][0]["weight"], "2");
}

TEST(Cli, ValidateAcceptsAndRejects) {
  auto ok = run("--json validate " + sample("ex2.json"));
  ASSERT_EQ(ok.code, 0);
  auto doc = json::parse(ok.out);
  EXPECT_EQ(doc["result"]["ok"], true);
  EXPECT_EQ(doc["certificates"]["symmetrizer"], json::parse(R"(["2","2","1","1","1","1"])"));
  EXPECT_EQ(doc["result"]["graph"]["real_set"], json::parse(R"(["1","4"])"));
  auto bad = run("validate " + sample("bad_parity.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("condition (5)"), std::string::npos);
}

TEST(Cli, HeapsAndBases) {
  auto h = run("--json heaps enumerate --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3 --class super-lyndon");
  ASSERT_EQ(h.code, 0);
  auto doc = json::parse(h.out);
  EXPECT_EQ(doc["result"]["count"], 3);
  EXPECT_EQ(doc["result"]["heaps"][0]["word"], "333666");
  auto b = run("basis lyndon --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3");
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("333666  [3,[3,[[[3,6],6],6]]]"), std::string::npos);
  EXPECT_NE(b.out.find("rank 3 of 3"), std::string::npos);
}

TEST(Cli, ChromaticMethodsAgree) {
  std::string base = "--json chromatic --graph " + sample("ex1_graph.json") + " --weight 2,1,0,1,2,0 --method ";
  auto d = json::parse(run(base + "direct").out);
  auto j = json::parse(run(base + "join").out);
  auto b = json::parse(run(base + "bond").out);
  EXPECT_EQ(d["result"]["coefficients"], j["result"]["coefficients"]);
  EXPECT_EQ(d["result"]["coefficients"], b["result"]["coefficients"]);
  EXPECT_EQ(d["result"]["factored"], "1/4*q*(q-1)^3*(q-2)^2");
}

TEST(Cli, SeriesChecks) {
  EXPECT_EQ(run("verify pbw --graph " + sample("p4.json") + " --cap 2,2,2,2").code, 0);
  EXPECT_EQ(run("verify cartier-foata --graph " + sample("p4.json") + " --cap 2,2,2,2").code, 0);
  EXPECT_EQ(run("verify triangular --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3").code, 0);
  auto t = run("--json mult table --graph " + sample("p4.json") + " --cap 1,1,1,1");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(json::parse(t.out)["result"]["count"], 10);
}

TEST(Cli, DomainErrorsExitWithOne) {
  EXPECT_EQ(run("mult --graph " + sample("ex1.json") + " --weight 0,0,3").code, 1);
  EXPECT_EQ(run("mult --graph " + sample("ex1.json") + " --weight 2,1,0,1,2,0").code, 1);
  EXPECT_EQ(run("basis lln --graph " + sample("ex2.json") + " --weight 0,0,2,1,2,1 --base 1").code, 1);
  EXPECT_EQ(run("mult --graph /nonexistent.json --weight 1").code, 1);
  EXPECT_EQ(run("--seed 3 mult --graph " + sample("ex1.json") + " --weight 0,0,3,0,0,3").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  auto e = run("mult --graph " + sample("ex1.json") + " --weight 0,0,3", true);
  EXPECT_NE(e.out.find("error:"), std::string::npos);
}
