#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "glf/errors.hpp"
#include "glf/lfun.hpp"
#include "support.hpp"
#include "table.hpp"

using glf::Complex;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"glf"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = glf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct NoOutputDir {
  NoOutputDir() { unsetenv("LZ_OUTPUT_DIR"); }
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE_FIXTURE(NoOutputDir, "complex parsing and formatting") {
  using glf::cli::parse_complex;
  CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
  CHECK(parse_complex("1.5+0.3i") == Complex(1.5, 0.3));
  CHECK(parse_complex("1.5-0.3i") == Complex(1.5, -0.3));
  CHECK(parse_complex("-2i") == Complex(0.0, -2.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("1e-3+2e+1i") == Complex(1e-3, 20.0));
  CHECK(parse_complex(" 0.27,1.31 ") == Complex(0.27, 1.31));
  CHECK_THROWS_AS(parse_complex("1.5+x"), glf::ParameterError);
  CHECK_THROWS_AS(parse_complex(""), glf::ParameterError);

  CHECK(glf::cli::parse_real_list("16,32, 64") == std::vector<double>{16, 32, 64});
  CHECK(glf::cli::format_complex({0.1, -2.0}) == "0.10000000000000001-2i");
  CHECK(parse_complex(glf::cli::format_complex({0.1, 1.0 / 3.0})) == Complex(0.1, 1.0 / 3.0));
  CHECK(glf::cli::format_real(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE_FIXTURE(NoOutputDir, "table writers") {
  glf::cli::Table t;
  t.columns = {"a", "b"};
  t.add({std::string("x,\"y\""), 2.5});
  std::ostringstream csv;
  glf::cli::write_csv(csv, t);
  CHECK(csv.str() == "a,b\n\"x,\"\"y\"\"\",2.5\n");
  CHECK_THROWS_AS(t.add({1.0}), glf::ParameterError);
  const auto j = glf::cli::to_json(t);
  CHECK(j["rows"][0]["b"] == 2.5);
  CHECK(glf::cli::to_json(glf::cli::Cell(Complex(1, 2)))["im"] == 2.0);
  CHECK(glf::cli::to_json(glf::cli::Cell(std::nan("")))== "nan");
}

TEST_CASE_FIXTURE(NoOutputDir, "eval-le2") {
  const auto r = run({"--format", "csv", "eval-le2", "--s", "2.5"});
  REQUIRE(r.code == 0);
  std::stringstream ss(r.out);
  std::string header, row;
  std::getline(ss, header);
  std::getline(ss, row);
  CHECK(header == "s,t0,L_E2hat,err_est,closed_form,rel_diff");
  const auto cells = split(row, ',');
  REQUIRE(cells.size() == 6);
  const Complex v = glf::cli::parse_complex(cells[2]);
  CHECK_REL(v, glf::lfun::L_E2hat_closed_form(2.5), 1e-8);
  CHECK(std::stod(cells[5]) <= 1e-8);
}

TEST_CASE_FIXTURE(NoOutputDir, "JSON envelope") {
  const auto r = run({"--format", "json", "--seed", "5", "eval-lz", "--z", "0.27+1.31i", "--s", "1.4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "eval-lz");
  CHECK(j["status"] == "ok");
  CHECK(j["seed"] == 5);
  CHECK(j["budget"] == "default");
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["L_z"].contains("re"));
  CHECK(j["columns"][3] == "L_z");
}

TEST_CASE_FIXTURE(NoOutputDir, "limit") {
  const auto r = run({"--format", "csv", "limit", "--s", "1.5", "--x", "0.3", "--y", "16,32,64"});
  REQUIRE(r.code == 0);
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "y,L_z,R,A,target,rel_error");
  int rows = 0;
  double rel = 1.0;
  while (std::getline(ss, line)) {
    ++rows;
    rel = std::stod(split(line, ',').back());
  }
  CHECK(rows == 3);
  CHECK(rel <= 1e-2);
}

TEST_CASE_FIXTURE(NoOutputDir, "verify") {
  const auto r = run({"--format", "csv", "verify", "--suite", "functional-equation"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite,criterion,theorem,test,status,residual,tolerance,note", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto l = run({"verify", "--list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("limit") != std::string::npos);

  CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE_FIXTURE(NoOutputDir, "reruns are bit-identical") {
  const auto a = run({"--format", "csv", "--seed", "11", "sweep", "--s", "1.4+0.2i", "--count", "2"});
  const auto b = run({"--format", "csv", "--seed", "11", "sweep", "--s", "1.4+0.2i", "--count", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run({"--format", "csv", "--seed", "12", "sweep", "--s", "1.4+0.2i", "--count", "2"});
  CHECK(a.out != c.out);
}

TEST_CASE_FIXTURE(NoOutputDir, "error records") {
  const auto j = run({"--format", "json", "eval-lz", "--z", "2i", "--s", "1.4"});
  CHECK(j.code == 2);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["status"] == "error");
  CHECK(doc["error"]["kind"] == "SingularSetError");

  const auto c = run({"--format", "csv", "eval-le2", "--s", "1"});
  CHECK(c.code == 2);
  CHECK(c.err.find("error,PoleError,") != std::string::npos);

  CHECK(run({"eval-le2"}).code != 0);
}

TEST_CASE("LZ_OUTPUT_DIR") {
  const auto dir = std::filesystem::temp_directory_path() / "glf_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  setenv("LZ_OUTPUT_DIR", dir.c_str(), 1);

  const auto r = run({"--format", "csv", "eval-le2", "--s", "2.5"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(dir / "eval-le2.csv"));

  run({"--format", "json", "-o", "named.json", "eval-le2", "--s", "2.5"});
  std::ifstream in(dir / "named.json");
  CHECK(nlohmann::json::parse(in)["schema_version"] == 1);

  const auto s = run({"--format", "csv", "-o", "-", "eval-le2", "--s", "2.5"});
  CHECK(!s.out.empty());

  unsetenv("LZ_OUTPUT_DIR");
  std::filesystem::remove_all(dir);
}
