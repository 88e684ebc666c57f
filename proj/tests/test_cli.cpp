#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <vtutte/enumeration.hpp>
#include <vtutte/poset.hpp>
#include <vtutte/rooted_tree.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "vtutte");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = vtutte::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(VTUTTE_DATA_DIR) + "/" + name; }

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

const char* const ten_element_poly =
    "y^9 + y^7 + x*y^6 + x*y^5 + x^2*y^4 + x*y^3 + 3*x^2*y^2 + 3*x^3*y + x^4\n";

} // namespace

using vtutte::cli::exit_mismatch;
using vtutte::cli::exit_not_vposet;
using vtutte::cli::exit_ok;
using vtutte::cli::exit_oracle_bound;
using vtutte::cli::exit_usage;

TEST_SUITE("cli") {

TEST_CASE("tree-poly") {
  auto r = run({"tree-poly", data("six_vertex.tree")});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "y^5 + y^3 + x*y^2 + x^2*y + x^3\n");
  CHECK(run({"tree-poly", "--dc", data("six_vertex.tree")}).out == r.out);
  auto e = run({"tree-poly", data("six_vertex.tree"), "--eval", "1", "2"});
  CHECK(e.out == r.out + "P(1,2) = 47\n");
  auto j = run({"tree-poly", "-", "--json", "--eval", "2", "1"}, "((()())(()))");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["eval"]["value"] == 16);
  CHECK(doc["polynomial"].size() == 5);
  CHECK(doc["polynomial"][0] == nlohmann::json::array({1, 0, 5}));
}

TEST_CASE("--dc output is identical for every tree up to 8 vertices") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : vtutte::enumerate_rooted_trees(n)) {
      auto a = run({"tree-poly", "-"}, t.encoding());
      auto b = run({"tree-poly", "--dc", "-"}, t.encoding());
      REQUIRE(a.code == exit_ok);
      REQUIRE(a.out == b.out);
    }
}

TEST_CASE("poset-poly") {
  auto r = run({"poset-poly", data("ten_element.poset")});
  CHECK(r.code == exit_ok);
  CHECK(r.out == ten_element_poly);
  CHECK(run({"poset-poly", "--expansion", data("ten_element.poset")}).out == ten_element_poly);
  auto n = run({"poset-poly", data("n_poset.poset")});
  CHECK(n.code == exit_not_vposet);
  CHECK(n.err.find("N ") != std::string::npos);
  auto big = vtutte::Poset(21).to_text();
  CHECK(run({"poset-poly", "-"}, big).code == exit_ok);
  CHECK(run({"poset-poly", "--expansion", "-"}, big).code == exit_oracle_bound);
}

TEST_CASE("--expansion output is identical on census posets up to 6 elements") {
  auto c = vtutte::build_census(6);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : c.all[n]) {
      auto a = run({"poset-poly", "-"}, p.to_text());
      auto b = run({"poset-poly", "--expansion", "-"}, p.to_text());
      REQUIRE(a.code == exit_ok);
      REQUIRE(a.out == b.out);
    }
}

TEST_CASE("check") {
  auto n = run({"check", data("n_poset.poset")});
  CHECK(n.code == exit_not_vposet);
  CHECK(n.out == "NOT-VPOSET N 1 2 3 4\n");
  auto b = run({"check", data("bowtie.poset")});
  CHECK(b.code == exit_not_vposet);
  CHECK(b.out.rfind("NOT-VPOSET BOWTIE ", 0) == 0);
  auto v = run({"check", "-"}, "2\n");
  CHECK(v.code == exit_ok);
  CHECK(v.out == "VPOSET (union (g empty) (g empty))\n");
  CHECK(run({"check", data("ten_element.poset")}).out.rfind("VPOSET (", 0) == 0);
}

TEST_CASE("counts") {
  auto r = run({"counts", data("ten_element.poset")});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("P(2,1)\t64\t64\t") != std::string::npos);
  CHECK(r.out.find("P(1,2)\t779\t779\t") != std::string::npos);
  CHECK(r.out.find("P(x,0)\tx^4\tx^4\t") != std::string::npos);
  auto t = run({"counts", data("six_vertex.tree")});
  CHECK(t.code == exit_ok);
  CHECK(t.out.find("P(1,2)\t47\t47\t") != std::string::npos);
  auto big = run({"counts", "-"}, vtutte::star_tree(30).encoding());
  CHECK(big.code == exit_ok);
  CHECK(big.out.find("P(2,1)\t536870913\t-\t") != std::string::npos);
  CHECK(run({"counts", data("bowtie.poset")}).code == exit_not_vposet);
}

TEST_CASE("census") {
  auto r = run({"census", "--max", "8"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("n\tv_n\tconstructive\n", 0) == 0);
  CHECK(last_line(r.out) == "8\t1184\t1184");
  auto far = run({"census", "--max", "10"});
  CHECK(last_line(far.out) == "10\t12554\t-");
}

TEST_CASE("asymptotics") {
  auto r = run({"asymptotics"});
  CHECK(r.code == exit_ok);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["rhoInv"].get<double>() - 3.79599) < 1e-4);
  CHECK(std::abs(doc["constant"].get<double>() - 0.726213) < 1e-4);
  CHECK(doc["truncationOrder"] == 100);
  CHECK(run({"asymptotics", "--order", "30"}).code == exit_usage);
}

TEST_CASE("collide") {
  auto r = run({"collide", "--max", "7"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("trees examined: 85") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"tree-poly"}).code == exit_usage);
  CHECK(run({"tree-poly", "/nonexistent/file"}).code == exit_usage);
  CHECK(run({"tree-poly", "-"}, "(()").code == exit_usage);
  CHECK(run({"poset-poly", "-"}, "2\n1 2\n2 1\n").code == exit_usage);
  CHECK(run({"tree-poly", "-", "--eval", "a", "1"}, "()").code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
  (void)exit_mismatch;
}

} // TEST_SUITE
