#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossdep/onto_text.hpp"
#include "crossdep/seeds.hpp"

using namespace crossdep;

namespace {

std::vector<Requirement> of(const std::vector<Requirement>& reqs,
                            Stakeholder s) {
  std::vector<Requirement> out;
  for (const Requirement& r : reqs)
    if (r.stakeholder == s) out.push_back(r);
  return out;
}

const std::string& text_of(const std::vector<Requirement>& reqs,
                           Stakeholder s, int index) {
  for (const Requirement& r : reqs)
    if (r.stakeholder == s && r.index == index) return r.text;
  throw std::runtime_error("missing requirement");
}

}  // namespace

TEST_CASE("stakeholder slugs round-trip") {
  for (Stakeholder s : {Stakeholder::Occupiers, Stakeholder::EnergyProviders,
                        Stakeholder::HousingAgencies, Stakeholder::Government})
    CHECK(stakeholder_from_slug(stakeholder_slug(s)) == s);
  CHECK_FALSE(stakeholder_from_slug("tenants").has_value());
  CHECK(stakeholder_slug(Stakeholder::EnergyProviders) == "energy_providers");
}

TEST_CASE("registry has the catalogued demand counts") {
  std::vector<Requirement> reqs = seeds::requirements();
  CHECK(reqs.size() == 29);
  CHECK(of(reqs, Stakeholder::Occupiers).size() == 8);
  CHECK(of(reqs, Stakeholder::EnergyProviders).size() == 7);
  CHECK(of(reqs, Stakeholder::HousingAgencies).size() == 8);
  CHECK(of(reqs, Stakeholder::Government).size() == 6);

  // Indices are 1..n in order within each stakeholder.
  for (Stakeholder s : {Stakeholder::Occupiers, Stakeholder::EnergyProviders,
                        Stakeholder::HousingAgencies, Stakeholder::Government}) {
    std::vector<Requirement> rows = of(reqs, s);
    for (std::size_t i = 0; i < rows.size(); ++i)
      CHECK(rows[i].index == static_cast<int>(i) + 1);
  }
}

TEST_CASE("demand texts keep their original casing and punctuation") {
  std::vector<Requirement> reqs = seeds::requirements();
  CHECK(text_of(reqs, Stakeholder::Occupiers, 6) == "Cost Effectiveness");
  CHECK(text_of(reqs, Stakeholder::HousingAgencies, 4) == "Cost effectiveness");
  CHECK(text_of(reqs, Stakeholder::Occupiers, 7) ==
        "Customer Behaviour- Impact analysis");
  CHECK(text_of(reqs, Stakeholder::HousingAgencies, 5) ==
        "Customer behaviour- Impact analysis");
  CHECK(text_of(reqs, Stakeholder::HousingAgencies, 8) ==
        "Environmental Impact- Eco Impact");
  CHECK(text_of(reqs, Stakeholder::Government, 5) ==
        "Environmental Impact-Eco Impact");
  CHECK(text_of(reqs, Stakeholder::HousingAgencies, 2) ==
        "Relative humidity rate- to avoid condensation, Dump or Mould");
  CHECK(text_of(reqs, Stakeholder::EnergyProviders, 6) ==
        "Environmental impact");
  CHECK(text_of(reqs, Stakeholder::Occupiers, 3) ==
        "Energy consumption patterns per day/month/year");
  CHECK(text_of(reqs, Stakeholder::Government, 2) == "Revenue protection");
}

TEST_CASE("every mapped concept resolves in the seed ontologies") {
  Ontology home = seeds::smart_home();
  Ontology ict = seeds::ict();
  for (const Requirement& r : seeds::requirements())
    for (const ConceptId& id : r.concepts) {
      const Ontology& onto = id.ontology == "ict" ? ict : home;
      CAPTURE(id.str());
      CHECK(onto.find(id) != nullptr);
    }
}

TEST_CASE("concepts_for_requirement") {
  std::vector<Requirement> reqs = seeds::requirements();
  const std::vector<ConceptId>& occ4 =
      concepts_for_requirement(reqs, Stakeholder::Occupiers, 4);
  REQUIRE(occ4.size() == 1);
  CHECK(occ4[0].str() ==
        "smart_home:building_information.building_resources.appliances."
        "application_mode");
  CHECK(concepts_for_requirement(reqs, Stakeholder::Government, 2).empty());
  CHECK_THROWS_AS(concepts_for_requirement(reqs, Stakeholder::Government, 9),
                  Error);
}

TEST_CASE("requirements_for_concept with and without descendants") {
  std::vector<Requirement> reqs = seeds::requirements();
  Ontology home = seeds::smart_home();

  ConceptId energy = ConceptId::parse("smart_home:services.energy");
  std::vector<const Requirement*> exact =
      requirements_for_concept(reqs, home, energy, false);
  CHECK(exact.size() == 13);
  // Ordered by (stakeholder, index).
  for (std::size_t i = 1; i < exact.size(); ++i) {
    auto key = [](const Requirement* r) {
      return std::pair(r->stakeholder, r->index);
    };
    CHECK(key(exact[i - 1]) < key(exact[i]));
  }

  std::vector<const Requirement*> wide =
      requirements_for_concept(reqs, home, energy, true);
  CHECK(wide.size() == 16);  // + electricity/gas/renewable mappings

  ConceptId behaviour =
      ConceptId::parse("smart_home:human_factors.behavioural_information");
  CHECK(requirements_for_concept(reqs, home, behaviour, false).size() == 2);
  CHECK(requirements_for_concept(reqs, home, behaviour, true).size() == 6);

  ConceptId unmapped = ConceptId::parse("smart_home:building_information.address");
  CHECK(requirements_for_concept(reqs, home, unmapped, false).empty());
  CHECK_THROWS_AS(
      requirements_for_concept(reqs, home, ConceptId::parse("smart_home:nope"),
                               false),
      Error);
}

TEST_CASE("registry text format round-trips") {
  Ontology home = seeds::smart_home();
  Ontology ict = seeds::ict();
  const Ontology* context[] = {&home, &ict};
  std::vector<Requirement> reqs = seeds::requirements();
  std::string text = serialize_requirements(reqs);
  CHECK(parse_requirements(text, context) == reqs);
  CHECK(serialize_requirements(parse_requirements(text, context)) == text);
}

TEST_CASE("registry parser reports malformed records") {
  Ontology home = seeds::smart_home();
  const Ontology* context[] = {&home};

  auto code_of = [&](std::string_view text) {
    try {
      parse_requirements(text, context);
    } catch (const ParseFailure& err) {
      return err.error().code;
    }
    FAIL("expected ParseFailure");
    return ParseCode::UnknownKeyword;
  };

  CHECK(code_of("occupiers\t1\tComfort\n") == ParseCode::UnknownKeyword);
  CHECK(code_of("tenants\t1\tComfort\t\n") == ParseCode::UnknownKeyword);
  CHECK(code_of("occupiers\tzero\tComfort\t\n") == ParseCode::UnknownKeyword);
  CHECK(code_of("occupiers\t0\tComfort\t\n") == ParseCode::UnknownKeyword);
  CHECK(code_of("occupiers\t1\t\t\n") == ParseCode::EmptyLabel);
  CHECK(code_of("occupiers\t1\tComfort\tsmart_home:nope\n") ==
        ParseCode::UnknownConcept);
  CHECK(code_of("occupiers\t1\tComfort\tbad id\n") == ParseCode::BadQualifiedId);
  CHECK(code_of("occupiers\t1\tA\tsmart_home:services,smart_home:services\n") ==
        ParseCode::DuplicateLink);
  CHECK(code_of("occupiers\t1\tA\t\noccupiers\t1\tB\t\n") ==
        ParseCode::DuplicateSibling);

  // Comments and blank lines are skipped.
  CHECK(parse_requirements("# note\n\noccupiers\t1\tComfort\t\n", context)
            .size() == 1);
}
