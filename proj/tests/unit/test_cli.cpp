#include <sstream>
#include <vector>

#include "doctest.h"

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pellsq");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = pellsq::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("table1") {
  auto r = run({"table1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5 33203125 64") != std::string::npos);
  CHECK(r.out.find("13 69337111285 432") != std::string::npos);
  CHECK(r.out.find("17 592939382485 738") != std::string::npos);
}

TEST_CASE("seq") {
  auto r = run({"seq", "--tuple", "1,1,5,1,1"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 13);
  CHECK(ls[0].rfind("# seq tuple=", 0) == 0);
  CHECK(ls[0].find("fingerprint=") != std::string::npos);
  CHECK(ls[7] == "0 2 2");
  auto again = run({"seq", "--tuple", "1,1,5,1,1"});
  CHECK(again.out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"seq"}).code == 64);
  CHECK(run({"seq", "--tuple", "1,1,4,4,2"}).code == 64);
  CHECK(run({"seq", "--tuple", "1,1,5"}).code == 64);
  CHECK(run({"search", "--b", "25"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("long searches need confirmation") {
  auto r = run({"search", "--b", "13"});
  CHECK(r.code == 64);
  CHECK(r.err.find("--confirm-long") != std::string::npos);
}

TEST_CASE("micro search") {
  auto r = run({"search", "--b", "5", "--only-u", "1", "--only-t", "1", "--only-sign", "-1", "--predicate", "all"});
  CHECK(r.out.find("c_b = 6,") != std::string::npos);
}

TEST_CASE("census and palindrome") {
  auto r = run({"census", "--tuple", "1,1,2,2,2", "--window", "-20..20"});
  CHECK(r.code == 0);
  auto p = run({"census", "--tuple", "42,4,7,16,6", "--palindrome", "50"});
  CHECK(p.code == 0);
  CHECK(p.out.find("true") != std::string::npos);
}

TEST_CASE("bounds and hypgeom") {
  auto b = run({"bounds", "--tuple", "8,2,5,1,1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("N_alpha") != std::string::npos);
  auto h = run({"hypgeom", "--u1", "8", "--u2", "4", "--tprime", "-1", "--r", "3"});
  CHECK(h.code == 0);
  CHECK(h.out.find("precision") != std::string::npos);
}
