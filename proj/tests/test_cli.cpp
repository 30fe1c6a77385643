#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "skewbisub/instance_io.hpp"

using namespace skewbisub;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("skewbisub_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

const char* kSpike =
    R"({"format":"table","n":1,"alpha":"1/2","values":{"-":"0","0":"1","+":"0"}})";

}  // namespace

TEST_CASE("generate is reproducible and feeds the other commands") {
  const auto a = run({"generate", "--n", "3", "--alpha", "1/2", "--terms", "4", "--seed", "9"});
  const auto b = run({"generate", "--n", "3", "--alpha", "1/2", "--terms", "4", "--seed", "9"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const TempFile file(a.out);

  const auto check = run({"check", file.path()});
  CHECK(check.code == 0);
  CHECK(check.doc()["result"] == "alpha-bisubmodular");

  const auto mini = run({"minimize", file.path()});
  REQUIRE(mini.code == 0);
  const auto report = mini.doc();
  CHECK(report["iterations"] == 1800);
  CHECK(report.contains("oracle_calls"));
  CHECK(report["trace"].is_array());

  const auto all = run({"verify-all", file.path(), "--trials", "5"});
  CHECK(all.code == 0);
  CHECK(all.doc()["result"] == "pass");
  CHECK(all.doc()["minimize"]["value"] == all.doc()["brute_force"]["value"]);
  CHECK(all.doc()["minimize"]["value"] == report["value"]);

  CHECK(run({"verify-closure", file.path(), "--trials", "5"}).code == 0);
}

TEST_CASE("decompose and eval") {
  const TempFile file(
      R"({"format":"table","n":2,"alpha":"1/2","values":{"--":1,"-0":2,"-+":3,"0-":4,"00":5,"0+":6,"+-":7,"+0":8,"++":9}})");
  const auto d = run({"decompose", file.path(), "--point", "3/5,-1/5"});
  REQUIRE(d.code == 0);
  CHECK(d.doc() == json::parse(
                       R"({"atoms":[{"u":"+-","w":"2/5"},{"u":"+0","w":"1/5"},{"u":"00","w":"2/5"}]})"));
  const auto e = run({"eval", file.path(), "--point", "3/5,-1/5"});
  REQUIRE(e.code == 0);
  // 2/5 * 7 + 1/5 * 8 + 2/5 * 5
  CHECK(e.doc()["f_L"] == "32/5");
}

TEST_CASE("violations exit with status 1") {
  const TempFile file(kSpike);
  const auto check = run({"check", file.path()});
  CHECK(check.code == 1);
  CHECK(check.doc() == json{{"a", "-"}, {"b", "+"}, {"lhs", "3/2"}, {"rhs", "0"},
                            {"result", "violation"}});
  const auto closure = run({"verify-closure", file.path(), "--trials", "50"});
  CHECK(closure.code == 1);
  CHECK(closure.doc()["result"] == "fail");
  CHECK(run({"verify-all", file.path()}).code == 1);
}

TEST_CASE("usage and input errors exit with status 2") {
  const TempFile file(kSpike);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "/nonexistent/instance.json"}).code == 2);
  const auto box = run({"eval", file.path(), "--point", "-1"});
  CHECK(box.code == 2);
  CHECK_FALSE(box.err.empty());
  CHECK(run({"eval", file.path(), "--point", "1/2,0"}).code == 2);
  CHECK(run({"minimize", file.path(), "--step", "sideways"}).code == 2);
  CHECK(run({"minimize", file.path(), "--iters", "0"}).code == 2);
  CHECK(run({"generate", "--n", "3", "--alpha", "0", "--terms", "2"}).code == 2);
  CHECK(run({"generate", "--n", "3", "--alpha", "1/2", "--terms", "0"}).code == 2);
  const TempFile garbage("{not json");
  CHECK(run({"check", garbage.path()}).code == 2);
  const TempFile big(R"({"format":"sum","n":9,"alpha":"1","terms":[]})");
  CHECK(run({"check", big.path()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("minimize options") {
  const auto gen = run({"generate", "--n", "2", "--alpha", "1", "--terms", "3", "--seed", "4"});
  const TempFile file(gen.out);
  const auto a = run({"minimize", file.path(), "--iters", "10", "--step", "fixed:0.1"});
  REQUIRE(a.code == 0);
  CHECK(a.doc()["iterations"] == 10);
  const auto r1 = run({"minimize", file.path(), "--random-start", "--seed", "3"});
  const auto r2 = run({"minimize", file.path(), "--random-start", "--seed", "3"});
  CHECK(r1.out == r2.out);
  CHECK(run({"minimize", file.path(), "--step", "diminishing:0.2", "--tolerance", "1/2"}).code ==
        0);
}
