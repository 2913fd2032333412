#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "etale/instances.hpp"
#include "etale/workbench/checks.hpp"
#include "etale/workbench/cli.hpp"
#include "etale/workbench/corpus.hpp"
#include "etale/workbench/document.hpp"

using namespace etale;
using namespace etale::workbench;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<Document>& corpus() {
  static const auto docs = generate_corpus();
  return docs;
}

const Document& corpus_doc(const std::string& name) {
  for (const auto& d : corpus())
    if (d.name == name) return d;
  throw std::runtime_error("no corpus document " + name);
}

std::filesystem::path scratch() {
  static const auto dir = [] {
    auto p = std::filesystem::temp_directory_path() / ("workbench-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    write_corpus(corpus(), p);
    return p;
  }();
  return dir;
}

std::string file(const std::string& name) { return (scratch() / file_name(corpus_doc(name))).string(); }

}  // namespace

TEST_CASE("syntax errors report line and column") {
  try {
    parse_document("{\n  \"kind\": \"poset\",\n  \"size\": }");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("semantic errors carry a JSON pointer") {
  const std::string text =
      R"({"kind":"category","name":"x","arrows":2,"identities":[0,1],"d":[0,1],"r":[0,1],)"
      R"("comp":[[0,0,0],[1,1,7]]})";
  try {
    parse_document(text);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/comp/1/2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_document(R"({"kind":"poset","name":"p","size":1,"leq":[[true]],"colour":1})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"widget","name":"p"})"), ParseError);
}

TEST_CASE("documents round-trip byte for byte") {
  for (const auto& doc : corpus()) {
    const std::string text = serialize(doc);
    const Document again = parse_document(text);
    CHECK(again == doc);
    CHECK(serialize(again) == text);
  }
}

TEST_CASE("category documents") {
  const auto empty = to_category(corpus_doc("empty"));
  CHECK(empty.size() == 0);
  const auto pair2 = to_category(corpus_doc("pair2"));
  CHECK(pair2.size() == 4);
  CHECK(pair2.identities().count() == 2);
  CHECK(pair2 == pair_groupoid(2));
  CHECK(to_topcategory(corpus_doc("pair2-plain")).topology().is_discrete());
}

TEST_CASE("every corpus document behaves as it says") {
  for (const auto& doc : corpus()) {
    const auto r = expected_check(doc, Limits{});
    CHECK_MESSAGE(!r.failed(), format_text(r));
  }
}

TEST_CASE("exit codes") {
  const auto m3 = run({"validate", file("m3-lattice")});
  CHECK(m3.code == kExitCheckFailed);
  CHECK(m3.out.find("distributivity") != std::string::npos);
  CHECK(m3.out.find("witness=") != std::string::npos);

  CHECK(run({"roundtrip", file("pair2")}).code == kExitPass);
  CHECK(run({"roundtrip", file("pair2-coarse")}).code == kExitCheckFailed);
  CHECK(run({"validate", file("pair2")}).code == kExitPass);
  CHECK(run({"frobnicate"}).code == kExitUnknownCommand);
  CHECK(run({"validate", (scratch() / "absent.cat").string()}).code == kExitInputError);
  CHECK(run({"validate"}).code == kExitInputError);
  CHECK(run({"--max-arrows", "3", "omega", file("pair2")}).code == kExitBoundExceeded);
  CHECK(run({"omega", file("chain3")}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("adjoint of the empty category and the trivial quantal frame") {
  const auto r = run({"--format", "json", "adjoint", file("empty"), file("trivial")});
  CHECK(r.code == kExitPass);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "pass");
  bool seen = false;
  for (const auto& rep : j["reports"])
    if (rep["check"] == "adjunction-I") {
      seen = true;
      CHECK(rep["detail"].get<std::string>().find("functors=1 morphisms=1") != std::string::npos);
    }
  CHECK(seen);
}

TEST_CASE("omega output validates as an rqf") {
  const auto out = scratch() / "omega-out.rqf";
  CHECK(run({"omega", file("pair2"), "-o", out.string()}).code == kExitPass);
  const auto doc = load_document(out);
  CHECK(doc.kind == Kind::rqf);
  CHECK(doc == corpus_doc("omega-pair2"));
  CHECK(run({"validate", out.string()}).code == kExitPass);
}

TEST_CASE("failures always carry a witness") {
  for (const auto& doc : corpus()) {
    if (is_positive(doc)) continue;
    for (const auto& r : validate_checks(doc, Limits{}))
      if (r.failed()) CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("corpus run is deterministic across job counts") {
  std::vector<Document> subset;
  for (const auto& doc : corpus())
    if (doc.size() <= 16) subset.push_back(doc);
  REQUIRE(subset.size() > 20);
  const auto one = run_corpus(subset, Limits{}, 1);
  const auto four = run_corpus(subset, Limits{}, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(to_json(one[i]) == to_json(four[i]));
  for (const auto& r : one) CHECK_MESSAGE(!r.failed(), format_text(r));
}

TEST_CASE("limits only ever tighten") {
  Limits l;
  l.max_arrows = 100000;
  CHECK(l.omega_arrows() == Limits::kOmegaArrows);
  l.max_arrows = 5;
  CHECK(l.omega_arrows() == 5);
  CHECK(l.hom().max_arrows == 5);
}
