#pragma once

#include <map>
#include <set>
#include <span>

#include "crossdep/ontology.hpp"

namespace crossdep {

enum class EdgeKind { Hierarchy, Cross };
enum class EdgeDirection { Forward, Reverse };

/// One traversed edge: parent→child hierarchy steps and cross-links, both
/// walkable in either direction with the direction recorded. Hierarchy
/// Forward means parent→child; Cross Forward follows the link as written.
struct DepEdge {
  EdgeKind kind = EdgeKind::Hierarchy;
  EdgeDirection direction = EdgeDirection::Forward;
  std::string relation;  // empty for hierarchy edges

  auto operator<=>(const DepEdge&) const = default;
};

struct DepPath {
  std::vector<ConceptId> nodes;  // nodes.size() == edges.size() + 1
  std::vector<DepEdge> edges;

  bool operator==(const DepPath&) const = default;
};

/// Union of one or more ontologies plus the cross-links between them,
/// queryable as a single undirected-ish dependency graph. Immutable after
/// construction; all queries are pure.
class DepGraph {
public:
  /// Throws Error{BadArgument} on duplicate ontology slugs,
  /// Error{UnknownConcept}/{IllegalLink}/{DuplicateLink} on bad links.
  DepGraph(std::vector<Ontology> ontologies, std::vector<CrossLink> links);

  const Ontology* ontology(std::string_view slug) const;
  const Concept* find(const ConceptId& id) const;
  const std::vector<CrossLink>& links() const { return links_; }

  /// All simple paths from `from` to `to` with at most `max_len` edges,
  /// ordered by (length, node-id string sequence, edge sequence). `from ==
  /// to` yields the single zero-length path. Throws Error{UnknownConcept} on
  /// unresolved endpoints, Error{BadArgument} when max_len < 1.
  std::vector<DepPath> find_paths(const ConceptId& from, const ConceptId& to,
                                  int max_len) const;

  /// Every concept reachable from `from` within `max_hops` edges, excluding
  /// `from` itself. Throws Error{UnknownConcept}, Error{BadArgument} when
  /// max_hops < 1.
  std::set<ConceptId> dependency_closure(const ConceptId& from,
                                         int max_hops) const;

private:
  struct OutEdge {
    ConceptId to;
    DepEdge edge;
  };

  std::map<std::string, Ontology> ontologies_;
  std::vector<CrossLink> links_;
  std::map<ConceptId, std::vector<OutEdge>> adjacency_;
};

}  // namespace crossdep
