#include "ade/cli.hpp"
#include "ade/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ade;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string data = ADE_DATA_DIR;

}  // namespace

TEST_CASE("surface and lines") {
  const Outcome s = call({"surface", "--kind", "p2", "--n", "6", "info"});
  REQUIRE(s.code == kExitOk);
  const Json j = Json::parse(s.out);
  CHECK(j["rank"] == 7);
  CHECK(j["K_squared"] == 3);

  const Outcome l = call({"lines", "--kind", "p2", "--n", "6"});
  REQUIRE(l.code == kExitOk);
  const Json lj = Json::parse(l.out);
  CHECK(lj["count"] == 27);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"lines", "--kind", "p2"}).code == kExitUsage);
  CHECK(call({"lines", "--kind", "p2", "--n", "6", "--bogus"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);

  const Outcome e = call({"lines", "--kind", "p2", "--n", "9"});
  CHECK(e.code == kExitDomainError);
  const Json ej = Json::parse(e.out);
  CHECK(ej["error"]["kind"] == "enumeration_bound_exceeded");

  const Outcome m = call({"transform", "run", "--surface", data + "/surface_h2.json", "--spectral",
                          data + "/missing.json"});
  CHECK(m.code == kExitDomainError);
}

TEST_CASE("identical inputs give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"roots", "--kind", "p2", "--n", "6"},
           {"spectral", "analyze", "--cover", data + "/cover_cubic.json"},
           {"transform", "run", "--surface", data + "/surface_h2.json", "--spectral",
            data + "/datum_collision.json", "--twist", "minus_l0"},
           {"localmodel", "verify", "--suite", "conifold", "--maxdeg", "4"}}) {
    const Outcome a = call(args), b = call(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    // Canonical form survives a parse/dump round trip.
    CHECK(dump(Json::parse(a.out)) == a.out);
  }
}

TEST_CASE("ext and transform reports") {
  const Outcome c = call({"ext", "--kind", "hirzebruch", "--n", "3", "--l1", "l1", "--l2", "l2",
                          "--collide", "1:2"});
  REQUIRE(c.code == kExitOk);
  const Json cj = Json::parse(c.out);
  CHECK(cj["ext0"] == 1);
  CHECK(cj["ext1"] == 1);

  const Outcome t = call({"transform", "run", "--surface", data + "/surface_h2.json", "--spectral",
                          data + "/datum_collision.json", "--twist", "full"});
  REQUIRE(t.code == kExitOk);
  const Json tj = Json::parse(t.out);
  CHECK(tj["restriction_compatible"] == true);

  const Outcome sa = call({"spectral", "analyze", "--cover", data + "/cover_double_point.json"});
  REQUIRE(sa.code == kExitOk);
  const Json sj = Json::parse(sa.out);
  REQUIRE(sj["branch_points"].size() == 1);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "adesurf_cli_test.json";
  std::filesystem::remove(path);
  const Outcome o = call({"--out", path.string(), "chi", "--kind", "p2", "--n", "6", "--class", "h"});
  REQUIRE(o.code == kExitOk);
  CHECK(o.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["chi"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("class expressions") {
  const Outcome a = call({"chi", "--kind", "p2", "--n", "6", "--class", "3h-l0-l1"});
  REQUIRE(a.code == kExitOk);
  CHECK(Json::parse(a.out)["chi"] == 8);
  const Outcome b = call({"chi", "--kind", "p2", "--n", "12", "--class", "2l10 + l1"});
  REQUIRE(b.code == kExitOk);
  CHECK(Json::parse(b.out)["self_intersection"] == -5);
  CHECK(call({"chi", "--kind", "p2", "--n", "6", "--class", "h*h"}).code == kExitDomainError);
  CHECK(call({"chi", "--kind", "p2", "--n", "6", "--class", "1,2"}).code == kExitDomainError);
}
