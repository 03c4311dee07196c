#pragma once

#include "crossdep/ontology.hpp"
#include "crossdep/requirements.hpp"

namespace crossdep::seeds {

/// The smart-home data ontology: five domains covering building, neighbourhood,
/// environmental, human and service concepts.
Ontology smart_home();

/// The ICT ontology: four technology domains with the minimal subtree needed
/// to anchor the case-study cross-links.
Ontology ict();

/// Cross-links wiring the ICT concepts to the smart-home concepts they
/// monitor, record and control.
std::vector<CrossLink> case_study_links();

/// The stakeholder requirements registry with its default concept mapping.
std::vector<Requirement> requirements();

/// ICT concept ids that exist only as structural anchors for the cross-links;
/// everything else in the ICT seed is part of the curated catalogue. Shipped
/// as seeds/ict_provenance.txt, one id per line.
std::vector<ConceptId> ict_provenance();

}  // namespace crossdep::seeds
