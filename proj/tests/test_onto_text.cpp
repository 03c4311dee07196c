#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crossdep/onto_text.hpp"
#include "util.hpp"

using namespace crossdep;

namespace {

const std::filesystem::path kRepo = CROSSDEP_REPO_DIR;

Ontology tiny() {
  Ontology onto("demo", "Demo Set");
  ConceptId dom = onto.add_concept(std::nullopt, "Alpha", ConceptKind::Domain);
  ConceptId cls = onto.add_concept(dom, "Beta Two", ConceptKind::Class);
  onto.add_concept(cls, "Gamma", ConceptKind::Feature);
  onto.add_concept(cls, "Delta", ConceptKind::SubClass);
  onto.add_concept(std::nullopt, "Omega", ConceptKind::Domain);
  return onto;
}

}  // namespace

TEST_CASE("serialize emits the canonical pre-order form") {
  CHECK(serialize_ontology(tiny()) ==
        "ontology demo \"Demo Set\"\n"
        "domain \"Alpha\"\n"
        "  class \"Beta Two\"\n"
        "    feature \"Gamma\"\n"
        "    subclass \"Delta\"\n"
        "domain \"Omega\"\n");
}

TEST_CASE("parse then serialize is the identity on canonical text") {
  std::string canonical = serialize_ontology(tiny());
  Ontology parsed = parse_ontology(canonical, "tiny.onto");
  CHECK(parsed == tiny());
  CHECK(serialize_ontology(parsed) == canonical);
}

TEST_CASE("parser tolerates comments, blank lines and CRLF") {
  std::string text =
      "# a header comment\r\n"
      "ontology demo \"Demo Set\"  # trailing\r\n"
      "\r\n"
      "domain \"Alpha\"\n"
      "  class \"Beta Two\" # \"quoted\" inside a comment\n"
      "    feature \"Gamma\"\n"
      "    subclass \"Delta\"\n"
      "\n"
      "domain \"Omega\"\n";
  CHECK(parse_ontology(text) == tiny());
}

TEST_CASE("labels may contain escaped quotes and backslashes") {
  Ontology onto("demo", "Say \"Hi\"");
  ConceptId dom = onto.add_concept(std::nullopt, "A and B", ConceptKind::Domain);
  onto.add_concept(dom, "Back\\slash c", ConceptKind::Class);

  std::string text = serialize_ontology(onto);
  CHECK(text.find("\"Say \\\"Hi\\\"\"") != std::string::npos);
  CHECK(text.find("\"Back\\\\slash c\"") != std::string::npos);
  Ontology parsed = parse_ontology(text);
  CHECK(parsed == onto);
  CHECK(parsed.title() == "Say \"Hi\"");
}

TEST_CASE("a hash inside a quoted label is not a comment") {
  std::string text =
      "ontology demo \"Demo\"\n"
      "domain \"Issue #42\"\n";
  Ontology onto = parse_ontology(text);
  CHECK(onto.at(ConceptId::parse("demo:issue_42")).label == "Issue #42");
}

TEST_CASE("every malformed ontology fixture fails where annotated") {
  auto fixtures =
      testutil::list_dir(kRepo / "tests/fixtures/malformed", ".onto");
  CHECK(fixtures.size() >= 10);
  for (const auto& path : fixtures) {
    CAPTURE(path.string());
    std::string text = testutil::read_file(path);
    testutil::ExpectedError expected = testutil::parse_annotation(text);
    try {
      parse_ontology(text, path.string());
      FAIL("expected ParseFailure for ", path.string());
    } catch (const ParseFailure& err) {
      CHECK(err.error().line == expected.line);
      CHECK(err.error().column == expected.column);
      CHECK(parse_code_name(err.error().code) == expected.code);
      CHECK(err.error().file == path.string());
    }
  }
}

TEST_CASE("malformed link fixtures fail where annotated") {
  Ontology a("ict", "ICT");
  ConceptId dev = a.add_concept(std::nullopt, "Devices", ConceptKind::Domain);
  a.add_concept(dev, "Sensors", ConceptKind::Class);
  a.add_concept(std::nullopt, "Big Data Management", ConceptKind::Domain);
  Ontology b("smart_home", "Home");
  b.add_concept(std::nullopt, "Services", ConceptKind::Domain);
  const Ontology* context[] = {&a, &b};

  auto fixtures =
      testutil::list_dir(kRepo / "tests/fixtures/malformed", ".links");
  CHECK(fixtures.size() >= 5);
  for (const auto& path : fixtures) {
    CAPTURE(path.string());
    std::string text = testutil::read_file(path);
    testutil::ExpectedError expected = testutil::parse_annotation(text);
    try {
      parse_links(text, context, path.string());
      FAIL("expected ParseFailure for ", path.string());
    } catch (const ParseFailure& err) {
      CHECK(err.error().line == expected.line);
      CHECK(err.error().column == expected.column);
      CHECK(parse_code_name(err.error().code) == expected.code);
    }
  }
}

TEST_CASE("links parse, reject bad input and serialize canonically") {
  Ontology a("ict", "ICT");
  ConceptId dev = a.add_concept(std::nullopt, "Devices", ConceptKind::Domain);
  ConceptId sensors = a.add_concept(dev, "Sensors", ConceptKind::Class);
  Ontology b("smart_home", "Home");
  ConceptId services =
      b.add_concept(std::nullopt, "Services", ConceptKind::Domain);
  const Ontology* context[] = {&a, &b};

  std::string text =
      "# wiring\n"
      "link ict:devices.sensors -> smart_home:services : monitors\n"
      "link smart_home:services -> ict:devices : feeds\n";
  std::vector<CrossLink> links = parse_links(text, context);
  REQUIRE(links.size() == 2);
  CHECK(links[0].source == sensors);
  CHECK(links[0].target == services);
  CHECK(links[0].relation == "monitors");
  CHECK(links[1].relation == "feeds");

  CHECK(serialize_links(links) ==
        "link ict:devices.sensors -> smart_home:services : monitors\n"
        "link smart_home:services -> ict:devices : feeds\n");
  CHECK(parse_links(serialize_links(links), context) == links);

  // Same pair twice with different relations is allowed.
  std::string twice =
      "link ict:devices -> smart_home:services : uses\n"
      "link ict:devices -> smart_home:services : feeds\n";
  CHECK(parse_links(twice, context).size() == 2);
}

TEST_CASE("parse failures carry the offending file name and format") {
  try {
    parse_ontology("ontology demo \"Demo\"\nwidget \"A\"\n", "x.onto");
    FAIL("expected ParseFailure");
  } catch (const ParseFailure& err) {
    CHECK(err.error().str() ==
          "x.onto:2:1 UnknownKeyword expected a concept kind, got 'widget'");
    CHECK(std::string(err.what()) == err.error().str());
  }
}

TEST_CASE("round-trip survives a randomized forest") {
  std::mt19937 rng(20260815);
  for (int iter = 0; iter < 20; ++iter) {
    Ontology onto("rand", "Randomized");
    std::vector<std::pair<ConceptId, int>> open;
    int nodes = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < nodes; ++i) {
      std::string label = "Node " + std::to_string(i);
      if (open.empty() || rng() % 8 == 0) {
        open.emplace_back(
            onto.add_concept(std::nullopt, label, ConceptKind::Domain), 0);
        continue;
      }
      auto [parent, depth] = open[rng() % open.size()];
      ConceptKind kind = depth == 0              ? ConceptKind::Class
                         : rng() % 4 == 0        ? ConceptKind::Feature
                                                 : ConceptKind::SubClass;
      ConceptId id = onto.add_concept(parent, label, kind);
      if (kind != ConceptKind::Feature) open.emplace_back(id, depth + 1);
    }
    Ontology reparsed = parse_ontology(serialize_ontology(onto));
    CHECK(reparsed == onto);
    CHECK(serialize_ontology(reparsed) == serialize_ontology(onto));
  }
}
