#pragma once

#include <span>

#include "crossdep/ontology.hpp"

namespace crossdep {

enum class Stakeholder { Occupiers, EnergyProviders, HousingAgencies, Government };

std::string_view stakeholder_slug(Stakeholder s);
std::optional<Stakeholder> stakeholder_from_slug(std::string_view slug);

/// One functional demand of a stakeholder group, mapped to the ontology
/// concepts whose data can satisfy it. An empty mapping marks a strategic
/// item with no direct data concept.
struct Requirement {
  Stakeholder stakeholder = Stakeholder::Occupiers;
  int index = 1;  // 1-based position within the stakeholder's list
  std::string text;
  std::vector<ConceptId> concepts;

  bool operator==(const Requirement&) const = default;
};

/// Registry format: one record per line, four tab-separated fields —
/// stakeholder slug, index, text, comma-joined qualified concept ids (the
/// last field may be empty). Blank lines and lines starting with `#` are
/// skipped. Every concept id must resolve in `ontologies`.
std::vector<Requirement> parse_requirements(
    std::string_view text, std::span<const Ontology* const> ontologies,
    std::string_view filename = "<input>");

std::string serialize_requirements(std::span<const Requirement> reqs);

/// Mapped concepts of one requirement. Throws Error{UnknownRequirement}.
const std::vector<ConceptId>& concepts_for_requirement(
    std::span<const Requirement> reqs, Stakeholder stakeholder, int index);

/// Requirements whose mapping touches `concept` — or any concept in its
/// subtree when `include_descendants` is set — ordered by (stakeholder,
/// index). Throws Error{UnknownConcept} if `concept` is not in `onto`.
std::vector<const Requirement*> requirements_for_concept(
    std::span<const Requirement> reqs, const Ontology& onto,
    const ConceptId& target, bool include_descendants);

}  // namespace crossdep
