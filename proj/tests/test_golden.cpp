#include <string>

#include "doctest.h"
#include "quigen/certificate.hpp"
#include "quigen/io.hpp"
#include "quigen/search.hpp"

using namespace quigen;

namespace {

AlgebraPtr load(const char* name) {
  return load_algebra_file(std::string(QUIGEN_SOURCE_DIR "/corpus/") + name);
}

std::string golden(const char* name) {
  return read_file(std::string(QUIGEN_SOURCE_DIR "/golden/") + name);
}

}  // namespace

TEST_CASE("golden certificates verify and regenerate byte-identically") {
  for (const char* stem : {"kx2", "nakayama", "rad2", "sec6"}) {
    auto A = load((std::string(stem) + ".alg").c_str());
    std::string frozen = golden((std::string(stem) + ".cert.json").c_str());
    // the checker accepts the stored file on its own merits
    Json cert = Json::parse(frozen);
    CHECK(check_certificate(A, cert).accepted);
    // and a fresh search reproduces it verbatim
    Verdict v = decide_generates(A);
    REQUIRE(v.generates);
    CHECK(v.certificate.dump(2) + "\n" == frozen);
  }
}

TEST_CASE("golden certificates are bound to their algebra") {
  auto cert = Json::parse(golden("kx2.cert.json"));
  auto other = load("kx3.alg");
  CheckResult r = check_certificate(other, cert);
  CHECK(!r.accepted);
  CHECK(r.reason.find("hash") != std::string::npos);
}

TEST_CASE("golden graph exports regenerate byte-identically") {
  {
    auto A = load("rad2.alg");
    Canon c = Canon::make(A);
    Registry reg(c);
    CosyzygyGraph g = cosyzygy_graph(c, reg, {regular_rep(A)}, GraphCaps{});
    CHECK(graph_to_text(g, A->hash_hex()) == golden("rad2-regular.graph.txt"));
  }
  {
    auto A = load("sec6.alg");
    Canon c = Canon::make(A);
    Registry reg(c);
    RepPtr Ma = load_module_file(
        std::string(QUIGEN_SOURCE_DIR "/corpus/sec6-Ma.mod"), A);
    CosyzygyGraph g = cosyzygy_graph(c, reg, {Ma}, GraphCaps{});
    CHECK(graph_to_text(g, A->hash_hex()) == golden("sec6-Ma.graph.txt"));
  }
}

TEST_CASE("the recorded unknown verdict has the expected shape") {
  // regenerating this one costs half a minute, so the byte comparison lives
  // in the acceptance suite; here we pin the structure of the record
  std::string v = golden("local-unknown.verdict.txt");
  CHECK(v.find("verdict: unknown") == 0);
  CHECK(v.find("missing goals: (1)") != std::string::npos);
  CHECK(v.find("exceeds the size guard") != std::string::npos);
  CHECK(v.find("exceeded the tracking bound") != std::string::npos);
}
