#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "plucker/sampling.hpp"
#include "plucker_cli/cli.hpp"
#include "plucker_cli/json_io.hpp"

using namespace plucker;
using plucker::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "plucker");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Writes `text` to a fresh file under the temp directory.
std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "plucker_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("dim") {
  CHECK(run({"dim", "--m", "2", "--n", "4", "--k", "2"}).out == "20\n");
  CHECK(run({"dim", "--m", "1", "--n", "5", "--k", "2"}).out == "10\n");
  const auto both = run({"dim", "--m", "3", "--n", "4", "--k", "2", "--method", "both"});
  CHECK(both.code == 0);
  CHECK(both.out == "50, 50\n");
  CHECK(run({"dim", "--m", "2", "--n", "5", "--k", "3", "--method", "oracle", "--seed", "4"}).out == "50\n");

  CHECK(run({"dim", "--m", "0", "--n", "4", "--k", "2"}).code == 2);
  CHECK(run({"dim", "--m", "2", "--n", "4"}).code == 2);
  CHECK(run({"dim", "--m", "2", "--n", "4", "--k", "2", "--method", "guess"}).code == 2);
  CHECK(run({"dim", "--m", "x", "--n", "4", "--k", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("basis") {
  CHECK(run({"basis", "--m", "2", "--n", "4", "--k", "2"}).json().size() == 20);
  CHECK(run({"basis", "--m", "1", "--n", "3", "--k", "2"}).json().size() == 3);

  const auto chain = run({"basis", "--m", "2", "--n", "4", "--k", "2", "--chain", "1,1,1,1"});
  CHECK(chain.code == 0);
  CHECK(chain.json() == Json::parse("[[[1,2],[3,4]],[[1,3],[2,4]]]"));

  const auto tensors = run({"basis", "--m", "2", "--n", "4", "--k", "2", "--format", "tensors"}).json();
  const auto expected = v0_basis(2, 4, 2);
  REQUIRE(tensors.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(cli::sym_from_json(tensors[i]) == expected[i]);

  for (const char* bad : {"3,1,0,0", "1,1,1", "a,b,c,d", "1,1,1,1,0", "2,2,0,x"})
    CHECK(run({"basis", "--m", "2", "--n", "4", "--k", "2", "--chain", bad}).code == 2);
}

TEST_CASE("check-decomposable") {
  const auto fail =
      run({"check-decomposable", "--file",
           temp_file("sum.json", R"({"n":4,"k":2,"terms":[{"index":[1,2],"coeff":"1"},{"index":[3,4],"coeff":"1"}]})")});
  CHECK(fail.code == 1);
  CHECK(fail.json()["decomposable"] == false);
  CHECK(fail.json()["witness"]["relation"] == "p12*p34 - p13*p24 + p14*p23");
  CHECK(fail.json()["witness"]["value"] == "1");

  const auto pass =
      run({"check-decomposable", "--file", temp_file("e12.json", R"({"n":4,"k":2,"terms":[{"index":[1,2],"coeff":"1"}]})")});
  CHECK(pass.code == 0);
  CHECK(pass.json()["decomposable"] == true);
  CHECK(pass.json()["factors"].size() == 2);

  for (const char* bad : {"{", R"({"n":4,"k":2,"terms":[{"index":[2,1],"coeff":"1"}]})",
                          R"({"n":4,"k":2,"terms":[{"index":[1,2],"coeff":"1.5"}]})",
                          R"({"n":4,"k":2,"terms":[{"index":[1,2],"coeff":1}]})", R"({"n":4,"terms":[]})",
                          R"({"n":4,"k":2,"terms":[{"index":[1,5],"coeff":"1"}]})",
                          R"({"n":4,"k":2,"terms":[{"index":[1,2,3],"coeff":"1"}]})", R"({"n":4,"k":2,"terms":[]})"})
    CHECK(run({"check-decomposable", "--file", temp_file("bad.json", bad)}).code == 2);
  CHECK(run({"check-decomposable", "--file", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("check-d0") {
  const std::string square =
      R"({"m":2,"n":4,"k":2,"terms":[{"indices":[[1,2],[1,2]],"coeff":"1"},{"indices":[[3,4],[3,4]],"coeff":"1"},)"
      R"({"indices":[[1,2],[3,4]],"coeff":"2"}]})";
  const auto fail = run({"check-d0", "--file", temp_file("square.json", square)});
  CHECK(fail.code == 1);
  const Json doc = fail.json();
  CHECK(doc["pass"] == false);
  REQUIRE(doc["violations"].size() == 1);
  CHECK(doc["violations"][0]["kind"] == "linear");
  CHECK(doc["violations"][0]["residual"] == "2");

  Rng rng(1);
  const ExtVector v = wedge(random_full_rank_point_matrix(rng, 2, 5));
  const std::string image = cli::emit(cli::to_json(veronese_phi(v).tensor()));
  const auto pass = run({"check-d0", "--file", temp_file("image.json", image)});
  CHECK(pass.code == 0);
  const Json recovered = pass.json()["recovered"];
  CHECK(recovered["exact"] == true);
  CHECK(recovered["scale"] == "1");
  CHECK(veronese_phi(cli::ext_from_json(recovered["vector"])) == veronese_phi(v));

  CHECK(run({"check-d0", "--file", temp_file("zero.json", R"({"m":2,"n":4,"k":2,"terms":[]})")}).code == 2);
  CHECK(run({"check-d0", "--file", temp_file("cube.json", R"({"m":3,"n":4,"k":2,"terms":[]})")}).code == 2);
  CHECK(run({"check-d0", "--file",
             temp_file("short.json", R"({"m":2,"n":4,"k":2,"terms":[{"indices":[[1,2]],"coeff":"1"}]})")})
            .code == 2);
}

TEST_CASE("straighten") {
  const auto a = run({"straighten", "--m", "2", "--n", "4", "--k", "2", "--tableau", "[[1,4],[2,3]]"});
  CHECK(a.code == 0);
  CHECK(a.json()["terms"] == Json::parse(R"j({"(13,24)":"1","(12,34)":"-1"})j"));
  CHECK(a.json()["certificate"]["points"] == 10);

  const auto b = run({"straighten", "--m", "2", "--n", "5", "--k", "2", "--tableau", "[[1,5],[2,4]]"});
  CHECK(b.json()["terms"] == Json::parse(R"j({"(14,25)":"1","(12,45)":"-1"})j"));

  const auto standard = run({"straighten", "--m", "2", "--n", "4", "--k", "2", "--tableau", "[[1,2],[3,4]]"});
  CHECK(standard.json()["terms"] == Json::parse(R"j({"(12,34)":"1"})j"));
  CHECK(standard.json()["certificate"]["rewrites"] == 0);

  // An unsorted column carries its sorting sign.
  const auto signed_input = run({"straighten", "--m", "2", "--n", "4", "--k", "2", "--tableau", "[[2,1],[3,4]]"});
  CHECK(signed_input.json()["terms"] == Json::parse(R"j({"(12,34)":"-1"})j"));

  for (const char* bad : {"[[1,1],[2,3]]", "[[1,5],[2,3]]", "[[1,2]]", "[[1,2,3],[1,2,4]]", "[[1,2],[3,0]]",
                          "not json", "[[1,2],[3,\"4\"]]"})
    CHECK(run({"straighten", "--m", "2", "--n", "4", "--k", "2", "--tableau", bad}).code == 2);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--max-m", "2", "--max-n", "4", "--max-k", "2"});
  CHECK(r.code == 0);
  const Json doc = r.json();
  CHECK(doc["all_agree"] == true);
  CHECK(doc["seed"] == 0);
  bool seen242 = false, seen142 = false;
  for (const auto& row : doc["rows"]) {
    CHECK(row["agree"] == true);
    const auto values = std::vector<Json>{row["formula"], row["oracle"], row["chain_rank_sum"], row["standard_tableaux"]};
    if (row["m"] == 2 && row["n"] == 4 && row["k"] == 2) {
      for (const auto& v : values) CHECK(v == 20);
      seen242 = true;
    }
    if (row["m"] == 1 && row["n"] == 4 && row["k"] == 2) {
      for (const auto& v : values) CHECK(v == 6);
      seen142 = true;
    }
  }
  CHECK(seen242);
  CHECK(seen142);
  CHECK(run({"verify", "--max-m", "6", "--max-n", "8", "--max-k", "4"}).code == 2);
  CHECK(run({"verify", "--max-m", "0", "--max-n", "4", "--max-k", "2"}).code == 2);
}

TEST_CASE("relations") {
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "rank3", "--count-only"}).out == "15\n");
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "linear", "--count-only"}).out == "1\n");
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "rank4", "--count-only"}).out == "90\n");
  // Four index choices, each giving the one essential relation.
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "plucker", "--count-only"}).out == "4\n");
  for (const auto& r : run({"relations", "--n", "4", "--k", "2", "--type", "plucker"}).json())
    CHECK(r["relation"] == "p12*p34 - p13*p24 + p14*p23");
  CHECK(run({"relations", "--n", "2", "--k", "1", "--type", "plucker"}).json() == Json::array());

  const Json linear = run({"relations", "--n", "4", "--k", "2", "--type", "linear"}).json();
  REQUIRE(linear.size() == 1);
  CHECK(linear[0]["relation"] == "q(12,34) - q(13,24) + q(14,23)");
  CHECK(linear[0]["chain"] == Json::parse("[1,1,1,1]"));

  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "rank3"}).json().size() == 15);
  // Distinct triples with the last two unordered: t * C(t-1, 2).
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "rank4"}).json().size() == 60);
  CHECK(run({"relations", "--n", "4", "--k", "2", "--type", "rank5"}).code == 2);
  CHECK(run({"relations", "--n", "2", "--k", "3", "--type", "rank3"}).code == 2);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::string> oracle{"dim", "--m", "2", "--n", "5", "--k", "2", "--method", "oracle", "--seed", "9"};
  CHECK(run(oracle).out == run(oracle).out);
  const std::vector<std::string> verify{"verify", "--max-m", "2", "--max-n", "3", "--max-k", "2", "--seed", "3"};
  CHECK(run(verify).out == run(verify).out);
}

TEST_CASE("documents survive emit, parse, emit byte for byte") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % 3);
    ExtVector v(n, k);
    for (const auto& alpha : basis_indices(n, k))
      if (rng() % 2) v.set(alpha, Rational(static_cast<long>(rng() % 21) - 10) / (1 + static_cast<long>(rng() % 6)));
    const std::string once = cli::emit(cli::to_json(v));
    CHECK(cli::emit(cli::to_json(cli::ext_from_json(cli::parse(once)))) == once);
    CHECK(cli::ext_from_json(cli::parse(once)) == v);

    const SymTensor u = sym_power(v.is_zero() ? ExtVector::basis(n, basis_indices(n, k)[0]) : v, 2);
    const std::string sym = cli::emit(cli::to_json(u));
    CHECK(cli::emit(cli::to_json(cli::sym_from_json(cli::parse(sym)))) == sym);
  }

  // Non-canonical input settles after one pass.
  const Json loose = Json::parse(
      R"({"m":2,"n":3,"k":2,"terms":[{"indices":[[2,3],[1,2]],"coeff":"2/4"},{"indices":[[1,2],[2,3]],"coeff":"+1/2"}]})");
  const std::string canonical = cli::emit(cli::to_json(cli::sym_from_json(loose)));
  CHECK(canonical == cli::emit(cli::to_json(cli::sym_from_json(cli::parse(canonical)))));
  CHECK(cli::sym_from_json(loose).terms().size() == 1);
  CHECK(cli::sym_from_json(loose).coeff(SymBasisVector{{1, 2}, {2, 3}}) == 1);
}
