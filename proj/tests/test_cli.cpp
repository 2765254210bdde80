#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using edgeideal::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("edgeideal-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const char* kC4 = "x1 y1\ny1 x2\nx2 y2\ny2 x1\n";
const char* kSuspP7 =
    "x1 y1\nx2 y2\nx3 y3\nx4 y4\nx5 y5\nx6 y6\nx7 y7\n"
    "x1 x5\nx2 x5\nx2 x6\nx3 x6\nx3 x7\nx4 x7\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("betti on a monomial list") {
  TempDir dir;
  const std::string f = dir.write("i.txt", "#vars a b c\na b\nb c\n");
  const Run r = run({"betti", f});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "       0 1 2\n"
        "total: 1 2 1\n"
        "    0: 1 . .\n"
        "    1: . 2 1\n"
        "M: 2 3\nm: 2 3\nreg: 1\nprojdim: 2\n");
}

TEST_CASE("betti json") {
  TempDir dir;
  const std::string f = dir.write("g.txt", kC4);
  const Run r = run({"--json", "betti", f});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["projdim"] == 3);
  CHECK(j["reg"] == 1);
  CHECK(j["char"] == 0);
  const Run two = run({"--json", "--char", "2", "betti", f});
  CHECK(nlohmann::json::parse(two.out)["char"] == 2);
}

TEST_CASE("non square-free input is polarized") {
  TempDir dir;
  const std::string f = dir.write("sq.json", R"({"variables":["a","b"],"generators":[["a","a"],["a","b"]]})");
  const Run r = run({"betti", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("M: 2 3\nm: 2 3\nreg: 1\nprojdim: 2\n") != std::string::npos);
}

TEST_CASE("empty input and malformed files") {
  TempDir dir;
  const Run empty = run({"betti", dir.write("e.txt", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("total: 1") != std::string::npos);

  CHECK(run({"betti", dir.write("bad.txt", "#bipartite a | \na b c\n")}).code == 2);
  CHECK(run({"betti", dir.write("bad.json", "{\"edges\": [[\"a\"]]}")}).code == 2);
  CHECK(run({"betti", dir.path("missing.txt")}).code == 2);
  CHECK(run({"betti"}).code == 2);
  CHECK(run({"frobnicate", dir.write("x.txt", "a b\n")}).code == 2);
}

TEST_CASE("caps and characteristic") {
  TempDir dir;
  const std::string f = dir.write("g.txt", kSuspP7);
  const Run cap = run({"--cap-n", "8", "betti", f});
  CHECK(cap.code == 2);
  CHECK_FALSE(cap.err.empty());
  CHECK(run({"--char", "4", "betti", f}).code == 2);
  CHECK(run({"--char", "3", "betti", f}).code == 0);
}

TEST_CASE("mult") {
  TempDir dir;
  const Run r = run({"mult", dir.write("g.txt", kC4)});
  CHECK(r.code == 0);
  CHECK(r.out == "e: 2\nc: 2\nantichains after reduction: 2\nunmixed primes:\n  {x1,x2}\n  {y1,y2}\n");
  const Run s = run({"--json", "mult", dir.write("s.txt", kSuspP7)});
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["e"] == 34);
  CHECK(j["antichains"] == 34);
  CHECK(j["c"] == 7);
}

TEST_CASE("bounds") {
  TempDir dir;
  const Run ci = run({"bounds", dir.write("ci.txt", "a b\nc d\n")});
  CHECK(ci.code == 0);
  CHECK(ci.out.find("hhsu       PROVED       equality") != std::string::npos);
  CHECK(ci.out.find("cohen-macaulay: yes") != std::string::npos);

  const Run s = run({"bounds", dir.write("s.txt", kSuspP7)});
  CHECK(s.code == 0);
  CHECK(s.out.find("quasi-pure: no") != std::string::npos);
  CHECK(s.out.find("cohen-macaulay: yes") != std::string::npos);
  CHECK(s.out.find("fails") == std::string::npos);

  const Run c4 = run({"bounds", dir.write("c4.txt", kC4)});
  CHECK(c4.code == 0);
  CHECK(c4.out.find("hhsu       PROVED       holds     2 <= 3") != std::string::npos);
  CHECK(c4.out.find("cohen-macaulay: no") != std::string::npos);

  const Run j = run({"--json", "bounds", dir.path("c4.txt")});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::accept(j.out));
}

TEST_CASE("reduce") {
  TempDir dir;
  const Run c4 = run({"reduce", dir.write("c4.txt", kC4)});
  CHECK(c4.code == 0);
  CHECK(c4.out ==
        "initial: c 2, arcs 1->2 2->1, e 2, kappa 1, height 2\n"
        "collapse {1,2}: c 1, arcs none, e 2, kappa 1, height 1\n"
        "closure: c 1, arcs none, e 2, kappa 1, height 1\n"
        "result edges: x1-y1\n"
        "e 2 -> 2, kappa 1 -> 1, height 2 -> 1\n");

  const Run cm = run({"reduce", dir.write("st.txt", "x1 y1\nx2 y2\nx1 y2\n")});
  CHECK(cm.code == 0);
  CHECK(cm.out.find("collapse") == std::string::npos);
  CHECK(cm.out.find("e 3 -> 3") != std::string::npos);

  const Run star = run({"reduce", dir.write("k13.txt", "c l1\nc l2\nc l3\n")});
  CHECK(star.code == 2);
  CHECK(star.err.find("standing hypothesis fails") != std::string::npos);
}

TEST_CASE("check-cm") {
  TempDir dir;
  const Run yes = run({"check-cm", dir.write("s.txt", kSuspP7)});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("cohen-macaulay: yes") != std::string::npos);
  CHECK(yes.out.find("projdim = height: yes") != std::string::npos);
  const Run no = run({"check-cm", dir.write("c4.txt", kC4)});
  CHECK(no.code == 0);
  CHECK(no.out.find("cohen-macaulay: no") != std::string::npos);
  CHECK(run({"check-cm", dir.write("c5.txt", "a b\nb c\nc d\nd e\ne a\n")}).code == 2);
}

TEST_CASE("report") {
  TempDir dir;
  const std::string f = dir.write("c4.txt", kC4);
  const Run r = run({"--json", "report", f, "--checks", "hhsu,taylor"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["checks"].size() == 2);
  CHECK(run({"report", f, "--checks", "nope"}).code == 2);
  CHECK(run({"report", f}).code == 0);
}

TEST_CASE("verify") {
  const Run r = run({"verify", "--max-vertices", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graphs: ") == 0);
  CHECK(r.out.find("fatal failures: 0") != std::string::npos);
  CHECK(run({"verify", "--checks", "nope"}).code == 2);
  CHECK(run({"verify", "--max-vertices", "15"}).code == 2);
  CHECK(run({"verify", "--family", "odd"}).code == 2);
  const Run p = run({"--json", "verify", "--max-vertices", "6", "--family", "perfect", "--connected"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["graphs"].get<std::size_t>() > 0);
}

TEST_CASE("verify report stream and determinism") {
  TempDir dir;
  const std::string a = dir.path("a.jsonl"), b = dir.path("b.jsonl");
  CHECK(run({"--out", a, "verify", "--max-vertices", "6"}).code == 0);
  CHECK(run({"--out", b, "--jobs", "2", "verify", "--max-vertices", "6"}).code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  std::istringstream lines(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    CHECK(nlohmann::json::parse(line).contains("checks"));
    ++count;
  }
  CHECK(count > 10);
}

TEST_CASE("same input gives identical json") {
  TempDir dir;
  const std::string f = dir.write("s.txt", kSuspP7);
  const Run a = run({"--json", "report", f});
  const Run b = run({"--json", "--jobs", "3", "report", f});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config file and --out") {
  TempDir dir;
  const std::string f = dir.write("p.txt", "#vars a b c\na b\nb c\n");
  const std::string cfg = dir.write("cfg.json", R"({"json": true, "char": 2})");
  const Run r = run({"--config", cfg, "betti", f});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["char"] == 2);
  const Run flag = run({"--config", cfg, "--char", "3", "betti", f});
  CHECK(nlohmann::json::parse(flag.out)["char"] == 3);

  CHECK(run({"--config", dir.write("bad.json", R"({"colour": 1})"), "betti", f}).code == 2);
  CHECK(run({"--config", dir.write("broken.json", "{"), "betti", f}).code == 2);

  const std::string out = dir.path("o.txt");
  const Run written = run({"--out", out, "betti", f});
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  CHECK(slurp(out).find("projdim: 2") != std::string::npos);
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

}  // TEST_SUITE
