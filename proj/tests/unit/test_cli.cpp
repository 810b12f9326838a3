#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wafomlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("WAFOMLAB_TEST_TMP");
  const fs::path root = env ? fs::path(env) : fs::temp_directory_path() / "wafomlab_cli_tests";
  const fs::path dir = root / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("wafom on hand-sized nets via every method") {
    const fs::path dir = scratch("wafom");
    const auto net = write(dir / "p.net", "wafom-net v1\nn=2 S=1 d=1\n11\n");
    const Result r = run({"wafom", net});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "method,n,S,d,wafom,log2_wafom\n"
          "dual,2,1,1,0.125,-3\n"
          "inversion,2,1,1,0.125,-3\n"
          "sequential,2,1,1,0.125,-3\n"
          "# max_relative_deviation=0\n");

    const auto full = write(dir / "v.net", "wafom-net v1\nn=2 S=1 d=2\n10\n01\n");
    const Result v = run({"wafom", full, "--method", "inversion"});
    CHECK(v.code == 0);
    CHECK(v.out == "method,n,S,d,wafom,log2_wafom\ninversion,2,1,2,0,-inf\n");
  }

  TEST_CASE("wafom exit codes") {
    const fs::path dir = scratch("codes");
    CHECK(run({"wafom", write(dir / "bad.net", "wafom-net v1\nn=2 S=1 d=1\n1x\n")}).code == 2);
    CHECK(run({"wafom", write(dir / "rank.net", "wafom-net v1\nn=2 S=1 d=2\n11\n11\n")}).code == 3);
    const auto big = write(dir / "big.net", "wafom-net v1\nn=30 S=1 d=1\n" + std::string(30, '1') + "\n");
    CHECK(run({"wafom", big, "--method", "dual"}).code == 4);
    CHECK(run({"wafom", big, "--method", "bogus"}).code == 2);
    CHECK(run({"wafom", (dir / "missing.net").string()}).code == 2);
    CHECK(run({"wafom", write(dir / "s2.net", "wafom-net v1\nn=2 S=2 d=1\n11 01\n"), "--method", "sequential"})
              .code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("search writes reproducible outputs readable by wafom") {
    const fs::path dir = scratch("search");
    const std::vector<std::string> base{"search", "--d", "8", "--n", "12", "--s", "3", "--stage1", "20",
                                        "--stage2", "10", "--seed", "5"};
    auto a = base;
    a.insert(a.end(), {"--out", (dir / "a").string(), "--threads", "1"});
    auto b = base;
    b.insert(b.end(), {"--out", (dir / "b").string(), "--threads", "4"});
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    for (const char* ext : {".net", ".gen", ".trace.csv"}) {
      CHECK(slurp(dir / (std::string("a") + ext)) == slurp(dir / (std::string("b") + ext)));
    }
    CHECK(fs::exists(dir / "a.manifest.json"));

    const Result w = run({"wafom", (dir / "a.net").string(), "--gen", (dir / "a.gen").string()});
    CHECK(w.code == 0);
    const auto pos = w.out.find("# max_relative_deviation=");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(w.out.substr(pos + 25)) <= 1e-9);

    CHECK(run({"search", "--d", "8", "--n", "4", "--out", (dir / "c").string()}).code == 2);
    CHECK(run({"search", "--d", "8", "--stage1", "0", "--out", (dir / "c").string()}).code == 2);
    CHECK(run({"search", "--d", "4", "--poly", "101", "--out", (dir / "c").string()}).code == 2);
  }

  TEST_CASE("figure1 and figure2 pipeline") {
    const fs::path dir = scratch("figures");
    const Result f1 = run({"figure1", "--dmin", "4", "--dmax", "6", "--n", "10", "--s", "2", "--budget", "10/5",
                           "--out", (dir / "f1").string()});
    REQUIRE(f1.code == 0);
    const std::string csv = slurp(dir / "f1" / "figure1.csv");
    CHECK(csv.rfind("d,best_wafom,sobol_wafom\n4,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(fs::exists(dir / "f1" / "nets" / "d05.net"));

    const Result f2 = run({"figure2", "--nets", (dir / "f1" / "nets").string(), "--integrand", "constant",
                           "--params", "value=2", "--out", (dir / "f2").string()});
    REQUIRE(f2.code == 0);
    for (const char* family : {"searched", "sobol", "halton", "faure"}) {
      const std::string body = slurp(dir / "f2" / ("figure2_" + std::string(family) + ".csv"));
      CHECK(body.rfind("d,N,wafom,abs_error,integrand,seed\n", 0) == 0);
      CHECK(body.find(",0,constant,") != std::string::npos);
    }
    const Result again = run({"figure2", "--nets", (dir / "f1" / "nets").string(), "--integrand", "constant",
                              "--params", "value=2", "--out", (dir / "f2b").string()});
    CHECK(again.out == f2.out);
    CHECK(run({"figure2", "--integrand", "constant", "--params", "value", "--out", (dir / "f3").string()}).code ==
          2);
  }

  TEST_CASE("spectrum") {
    const Result c = run({"spectrum", "--n", "2", "--s", "2", "--integrand", "constant", "--params", "value=3"});
    REQUIRE(c.code == 0);
    std::istringstream lines(c.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "A,mu,abs_coeff");
    int rows = 0;
    while (std::getline(lines, line)) {
      ++rows;
      if (rows == 1) CHECK(line == "0,0,3");
      else CHECK(line.substr(line.rfind(',') + 1) == "0");
    }
    CHECK(rows == 16);

    const Result w = run({"spectrum", "--n", "2", "--s", "2", "--integrand", "walsh", "--params", "A=9"});
    REQUIRE(w.code == 0);
    CHECK(w.out.find("\n9,3,1\n") != std::string::npos);
    CHECK(run({"spectrum", "--n", "7", "--s", "3"}).code == 4);

    const fs::path dir = scratch("spectrum");
    const Result a = run({"spectrum", "--n", "5", "--s", "3", "--integrand", "asian", "--out",
                          (dir / "asian.csv").string()});
    REQUIRE(a.code == 0);
    const std::string body = slurp(dir / "asian.csv");
    CHECK(std::count(body.begin(), body.end(), '\n') == (1 << 15) + 1);
  }
}
