#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "uext/caps.hpp"
#include "uext/io.hpp"
#include "uext/monoid.hpp"

using namespace uext;
using namespace testutil;

namespace {

std::string write_text(const std::string& dir, const std::string& name,
                       const std::string& text) {
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

struct EnvCap {
  explicit EnvCap(const char* value) { ::setenv("UEXT_MAX_N", value, 1); }
  ~EnvCap() { ::unsetenv("UEXT_MAX_N"); }
};

} // namespace

TEST_CASE("tensor save and load round trip byte for byte") {
  std::string dir = temp_dir();
  ExtensionTensor w = z3_mult_fixture();
  std::string path = dir + "/z3.uext.json";
  save_tensor(w, path);

  ExtensionTensor back = load_tensor(path);
  CHECK(back == w);
  CHECK(back.labeling() == w.labeling());

  std::string again = dir + "/z3-again.uext.json";
  save_tensor(back, again);
  CHECK(slurp(path) == slurp(again));
}

TEST_CASE("semisimple files are written 0-based") {
  Json j = tensor_json(z3_mult_fixture());
  CHECK(j["labeling"] == "semisimple");
  CHECK(j["entries"][0]["i"] == 0);
  CHECK(j["entries"][0]["j"] == 0);
  CHECK(j["entries"][0]["k"] == 0);

  Json s = tensor_json(leibnitz(2, Rational(1)));
  CHECK(s["labeling"] == "solvable");
  CHECK(s["entries"][0]["i"] == 1);
  CHECK(s["entries"][0]["k"] == 2);
}

TEST_CASE("fractional values survive the round trip") {
  std::string dir = temp_dir();
  ExtensionTensor w = leibnitz(3, Rational(5, 3));
  std::string path = dir + "/band.uext.json";
  save_tensor(w, path);
  CHECK(load_tensor(path) == w);
  CHECK(slurp(path).find("\"5/3\"") != std::string::npos);
}

TEST_CASE("tensor file error catalog") {
  std::string dir = temp_dir();
  auto bad = [&](const std::string& name, const std::string& text) {
    return write_text(dir, name, text);
  };

  CHECK_THROWS_AS(load_tensor(dir + "/missing.json"), FileFormatError);
  CHECK_THROWS_AS(load_tensor(bad("garbage.json", "plop{")), FileFormatError);
  CHECK_THROWS_AS(load_tensor(bad("fmt.json", R"({"format":"nope","n":1})")),
                  FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("non.json",
                      R"({"format":"uext-tensor-v1","labeling":"solvable","entries":[]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("n0.json",
                      R"({"format":"uext-tensor-v1","n":0,"labeling":"solvable","entries":[]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("lab.json",
                      R"({"format":"uext-tensor-v1","n":1,"labeling":"spooky","entries":[]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("noent.json",
                      R"({"format":"uext-tensor-v1","n":1,"labeling":"solvable"})")),
      FileFormatError);

  // Solvable files are 1-based: index 0 is out of range.
  CHECK_THROWS_AS(
      load_tensor(bad("zero-based.json",
                      R"({"format":"uext-tensor-v1","n":2,"labeling":"solvable",
                          "entries":[{"i":0,"j":1,"k":1,"value":"1"}]})")),
      FileFormatError);
  // Semisimple files are 0-based: index n-1 is the top.
  CHECK_THROWS_AS(
      load_tensor(bad("over.json",
                      R"({"format":"uext-tensor-v1","n":2,"labeling":"semisimple",
                          "entries":[{"i":0,"j":0,"k":2,"value":"1"}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("decimal.json",
                      R"({"format":"uext-tensor-v1","n":1,"labeling":"solvable",
                          "entries":[{"i":1,"j":1,"k":1,"value":"1.5"}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("noval.json",
                      R"({"format":"uext-tensor-v1","n":1,"labeling":"solvable",
                          "entries":[{"i":1,"j":1,"k":1}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_tensor(bad("dup.json",
                      R"({"format":"uext-tensor-v1","n":2,"labeling":"solvable",
                          "entries":[{"i":1,"j":1,"k":2,"value":"1"},
                                     {"i":1,"j":1,"k":2,"value":"1"}]})")),
      FileFormatError);
}

TEST_CASE("mirror conflicts block strict loading but not validation loading") {
  std::string dir = temp_dir();
  std::string path = write_text(
      dir, "conflict.json",
      R"({"format":"uext-tensor-v1","n":2,"labeling":"solvable",
          "entries":[{"i":1,"j":2,"k":1,"value":"1"},
                     {"i":2,"j":1,"k":1,"value":"2"}]})");
  CHECK_THROWS_AS(load_tensor(path), FileFormatError);

  RawTensor raw = load_raw_tensor(path);
  CHECK(raw.entries.size() == 2);
  ValidationReport rep = validate(raw);
  CHECK_FALSE(rep.symmetric);
}

TEST_CASE("dimension cap reads the environment") {
  ::unsetenv("UEXT_MAX_N");
  CHECK(dimension_cap(64) == 64);
  {
    EnvCap cap("17");
    CHECK(dimension_cap(64) == 17);
  }
  {
    EnvCap cap("0");
    CHECK(dimension_cap(64) == 64);
  }
  {
    EnvCap cap("-3");
    CHECK(dimension_cap(5) == 5);
  }
  {
    EnvCap cap("2x");
    CHECK(dimension_cap(5) == 5);
  }
  CHECK(dimension_cap(6) == 6);
}

TEST_CASE("dimension cap applies to tensor loading") {
  std::string dir = temp_dir();
  std::string path = dir + "/band4.uext.json";
  save_tensor(leibnitz(4, Rational(1)), path);

  EnvCap cap("3");
  CHECK_THROWS_AS(load_tensor(path), CapExceeded);
}

TEST_CASE("monoid table round trip") {
  std::string dir = temp_dir();
  for (const MonoidTable& t :
       {leibnitz_table(3), zp_additive(3), MonoidTable::zero(2, MonoidTable::Kind::SE)}) {
    std::string path = dir + "/t.monoid.json";
    save_monoid(t, path);
    MonoidTable back = load_monoid(path);
    CHECK(back == t);
  }
}

TEST_CASE("monoid file error catalog") {
  std::string dir = temp_dir();
  auto bad = [&](const std::string& name, const std::string& text) {
    return write_text(dir, name, text);
  };

  CHECK_THROWS_AS(
      load_monoid(bad("kind.json",
                      R"({"format":"uext-monoid-v1","kind":"X","n":1,"table":[[0,0],[0,0]]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_monoid(bad("rows.json",
                      R"({"format":"uext-monoid-v1","kind":"E","n":1,"table":[[0,0]]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_monoid(bad("ragged.json",
                      R"({"format":"uext-monoid-v1","kind":"E","n":1,"table":[[0,0],[0]]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_monoid(bad("range.json",
                      R"({"format":"uext-monoid-v1","kind":"E","n":1,"table":[[0,2],[2,0]]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_monoid(bad("float.json",
                      R"({"format":"uext-monoid-v1","kind":"E","n":1,"table":[[0,0.5],[0,0]]})")),
      FileFormatError);
}

TEST_CASE("carrier files load with the jacobi check") {
  std::string dir = temp_dir();
  std::string path = write_text(dir, "sl2.lie.json",
                                R"({"format":"uext-lie-v1","dim":3,"c":[
                                    {"i":1,"j":2,"k":2,"value":"2"},
                                    {"i":1,"j":3,"k":3,"value":"-2"},
                                    {"i":2,"j":3,"k":1,"value":"1"}]})");
  LieAlgebra g = load_lie(path);
  CHECK(g.dim() == 3);
  LieAlgebra ref = LieAlgebra::preset("sl2");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) CHECK(g.c(i, j, k) == ref.c(i, j, k));
}

TEST_CASE("carrier file error catalog") {
  std::string dir = temp_dir();
  auto bad = [&](const std::string& name, const std::string& text) {
    return write_text(dir, name, text);
  };

  CHECK_THROWS_AS(
      load_lie(bad("orient.json", R"({"format":"uext-lie-v1","dim":2,"c":[
                                      {"i":2,"j":1,"k":1,"value":"1"}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_lie(bad("diag.json", R"({"format":"uext-lie-v1","dim":2,"c":[
                                    {"i":1,"j":1,"k":1,"value":"1"}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_lie(bad("range.json", R"({"format":"uext-lie-v1","dim":2,"c":[
                                     {"i":1,"j":3,"k":1,"value":"1"}]})")),
      FileFormatError);
  CHECK_THROWS_AS(
      load_lie(bad("dup.json", R"({"format":"uext-lie-v1","dim":3,"c":[
                                   {"i":1,"j":2,"k":3,"value":"1"},
                                   {"i":1,"j":2,"k":3,"value":"2"}]})")),
      FileFormatError);

  // Structurally fine but not a Lie algebra: the Jacobi identity fails.
  CHECK_THROWS_AS(
      load_lie(bad("notlie.json", R"({"format":"uext-lie-v1","dim":3,"c":[
                                      {"i":1,"j":2,"k":3,"value":"1"},
                                      {"i":2,"j":3,"k":2,"value":"1"}]})")),
      DomainError);
}

TEST_CASE("matrix files") {
  std::string dir = temp_dir();
  std::string path = write_text(dir, "m.json", R"([["1","1/2"],["0","-3"]])");
  Matrix m = load_matrix(path);
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == Rational(1, 2));
  CHECK(m(1, 1) == Rational(-3));

  // Plain integers are accepted too.
  Matrix mi = load_matrix(write_text(dir, "mi.json", R"([[1,2],[3,4]])"));
  CHECK(mi(1, 0) == Rational(3));

  CHECK_THROWS_AS(load_matrix(write_text(dir, "obj.json", R"({"a":1})")), FileFormatError);
  CHECK_THROWS_AS(load_matrix(write_text(dir, "rag.json", R"([[1,2],[3]])")), FileFormatError);
  CHECK_THROWS_AS(load_matrix(write_text(dir, "empty.json", R"([])")), FileFormatError);
  CHECK_THROWS_AS(load_matrix(write_text(dir, "hollow.json", R"([[]])")), FileFormatError);
  CHECK_THROWS_AS(load_matrix(write_text(dir, "word.json", R"([["x"]])")), FileFormatError);
}

TEST_CASE("report serialization shapes") {
  H2Report h = h2(leibnitz(2, Rational(1)));
  Json hj = h2_json(h);
  CHECK(hj["dim_Z2"] == 2);
  CHECK(hj["dim_B2"] == 1);
  CHECK(hj["dim_H2"] == 1);
  CHECK(hj["representatives"].size() == 1);
  CHECK(hj["representatives"][0][0][1] == "1");
  CHECK(hj["coboundary_basis"].size() == 1);

  RawTensor raw;
  raw.n = 2;
  raw.entries = {{1, 2, 1, Rational(1)}, {2, 1, 1, Rational(2)}};
  Json vj = validation_json(validate(raw));
  CHECK(vj["valid"] == false);
  CHECK(vj["symmetric"] == false);
  REQUIRE(vj["violations"].size() >= 1);
  CHECK(vj["violations"][0]["kind"] == "symmetry");

  Json sj = split_json(split(CommAlgebra(z3_mult_fixture())));
  CHECK(sj["complete"] == true);
  CHECK(sj["blocks"].size() == 3);
  CHECK(sj["blocks"][0]["dim"] == 1);
  CHECK(sj["change"].size() == 3);
}
