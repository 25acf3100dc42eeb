#include <cstdio>
#include <fstream>
#include <catch2/catch_amalgamated.hpp>

#include "nbcube/certificate_io.hpp"
#include "nbcube/construct.hpp"
#include "nbcube/cube.hpp"
#include "nbcube/survival.hpp"

using namespace nbcube;

namespace {

HealthyPathCertificate sample_cert() {
  CubeSpec s(3, 3);
  Graph g = build_cube(s);
  return kary_survival_paths(s, g, FaultSet(g, {0}), 13, 26);
}

bool same_cert(const HealthyPathCertificate& a, const HealthyPathCertificate& b) {
  return a.spec.n == b.spec.n && a.spec.k == b.spec.k && a.faults == b.faults &&
         a.x == b.x && a.y == b.y && a.bound == b.bound && a.paths == b.paths;
}

// One serialized certificate with a single field swapped out, to probe the
// parser's cross-checks.
std::string patched(const std::string& text, const std::string& from,
                    const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  std::string out = text;
  out.replace(at, from.size(), to);
  return out;
}

}  // namespace

TEST_CASE("serialization round-trips losslessly", "[certio]") {
  HealthyPathCertificate cert = sample_cert();
  std::string text = serialize_certificate(cert);
  CHECK(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(text == serialize_certificate(cert));  // byte-stable

  HealthyPathCertificate back = parse_certificate(text);
  CHECK(same_cert(cert, back));
  CHECK(validate_certificate(back).pass);
}

TEST_CASE("json layout carries both ids and digit strings", "[certio]") {
  HealthyPathCertificate cert = sample_cert();
  auto j = certificate_to_json(cert);
  CHECK(j["version"] == 1);
  CHECK(j["spec"]["n"] == 3);
  CHECK(j["spec"]["k"] == 3);
  CHECK(j["x"] == 13);
  CHECK(j["y"] == 26);
  CHECK(j["digits"]["x"] == "111");
  CHECK(j["digits"]["y"] == "222");
  CHECK(j["faults"] == nlohmann::ordered_json::array({0}));
  CHECK(j["digits"]["faults"][0] == "000");
  REQUIRE(j["paths"].is_array());
  CHECK(j["paths"].size() == cert.paths.size());
  CHECK(j["digits"]["paths"].size() == cert.paths.size());
}

TEST_CASE("file round-trip", "[certio]") {
  HealthyPathCertificate cert = sample_cert();
  const std::string path = "certio_roundtrip_tmp.json";
  write_certificate(path, cert);
  HealthyPathCertificate back = read_certificate(path);
  CHECK(same_cert(cert, back));
  std::remove(path.c_str());

  CHECK_THROWS_AS(read_certificate("certio_missing_tmp.json"), std::runtime_error);
  CHECK_THROWS_AS(write_certificate("no_such_dir_tmp/cert.json", cert),
                  std::runtime_error);
}

TEST_CASE("parser rejects malformed input", "[certio]") {
  const std::string text = serialize_certificate(sample_cert());

  CHECK_THROWS_AS(parse_certificate("not json at all"), MalformedCertificate);
  CHECK_THROWS_AS(parse_certificate("[1, 2, 3]"), MalformedCertificate);
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"version\": 1", "\"version\": 7")),
                  MalformedCertificate);
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"version\": 1", "\"v\": 1")),
                  MalformedCertificate);  // required field gone
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"x\": 13", "\"x\": \"13\"")),
                  MalformedCertificate);  // wrong type
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"x\": 13", "\"x\": 900")),
                  MalformedCertificate);  // endpoint off the cube
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"bound\": 4", "\"bound\": -1")),
                  MalformedCertificate);
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"k\": 3", "\"k\": 1")),
                  MalformedCertificate);  // spec fails its own checks

  // The digit mirror must agree with the ids.
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"x\": \"111\"", "\"x\": \"112\"")),
                  MalformedCertificate);
  CHECK_THROWS_AS(parse_certificate(patched(text, "\"faults\": [\n      \"000\"\n    ]",
                                            "\"faults\": []")),
                  MalformedCertificate);
}

TEST_CASE("parse failures carry a reason", "[certio]") {
  try {
    parse_certificate("{{{");
    FAIL("expected MalformedCertificate");
  } catch (const MalformedCertificate& e) {
    CHECK(std::string(e.what()).find("not valid JSON") != std::string::npos);
  }
  try {
    parse_certificate(patched(serialize_certificate(sample_cert()),
                              "\"version\": 1", "\"version\": 2"));
    FAIL("expected MalformedCertificate");
  } catch (const MalformedCertificate& e) {
    CHECK(std::string(e.what()).find("version") != std::string::npos);
  }
}
