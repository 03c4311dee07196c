#include "crossdep/depgraph.hpp"

#include <algorithm>
#include <deque>

namespace crossdep {

DepGraph::DepGraph(std::vector<Ontology> ontologies,
                   std::vector<CrossLink> links)
    : links_(std::move(links)) {
  for (Ontology& onto : ontologies) {
    std::string slug = onto.slug();
    if (!ontologies_.emplace(slug, std::move(onto)).second)
      throw Error(ErrCode::BadArgument, "duplicate ontology slug " + slug);
  }

  for (const auto& [slug, onto] : ontologies_) {
    for (const Concept* c : onto.preorder()) {
      auto& out = adjacency_[c->id];
      for (const ConceptId& child : c->children) {
        out.push_back({child, {EdgeKind::Hierarchy, EdgeDirection::Forward, ""}});
        adjacency_[child].push_back(
            {c->id, {EdgeKind::Hierarchy, EdgeDirection::Reverse, ""}});
      }
    }
  }

  std::set<std::tuple<ConceptId, ConceptId, std::string>> seen;
  for (const CrossLink& link : links_) {
    if (!find(link.source))
      throw Error(ErrCode::UnknownConcept,
                  "link source " + link.source.str() + " does not resolve");
    if (!find(link.target))
      throw Error(ErrCode::UnknownConcept,
                  "link target " + link.target.str() + " does not resolve");
    if (link.source.ontology == link.target.ontology)
      throw Error(ErrCode::IllegalLink,
                  "link " + link.source.str() + " -> " + link.target.str() +
                      " stays inside one ontology");
    if (!seen.insert({link.source, link.target, link.relation}).second)
      throw Error(ErrCode::DuplicateLink,
                  "duplicate link " + link.source.str() + " -> " +
                      link.target.str() + " : " + link.relation);
    adjacency_[link.source].push_back(
        {link.target, {EdgeKind::Cross, EdgeDirection::Forward, link.relation}});
    adjacency_[link.target].push_back(
        {link.source, {EdgeKind::Cross, EdgeDirection::Reverse, link.relation}});
  }

  // Canonical neighbour order keeps traversal deterministic regardless of
  // input order.
  for (auto& [id, out] : adjacency_) {
    std::sort(out.begin(), out.end(), [](const OutEdge& a, const OutEdge& b) {
      return std::tie(a.to, a.edge) < std::tie(b.to, b.edge);
    });
  }
}

const Ontology* DepGraph::ontology(std::string_view slug) const {
  auto it = ontologies_.find(std::string(slug));
  return it == ontologies_.end() ? nullptr : &it->second;
}

const Concept* DepGraph::find(const ConceptId& id) const {
  const Ontology* onto = ontology(id.ontology);
  return onto ? onto->find(id) : nullptr;
}

namespace {

bool path_less(const DepPath& a, const DepPath& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    std::string sa = a.nodes[i].str();
    std::string sb = b.nodes[i].str();
    if (sa != sb) return sa < sb;
  }
  return a.edges < b.edges;
}

}  // namespace

std::vector<DepPath> DepGraph::find_paths(const ConceptId& from,
                                          const ConceptId& to,
                                          int max_len) const {
  if (max_len < 1)
    throw Error(ErrCode::BadArgument, "max_len must be at least 1");
  if (!find(from))
    throw Error(ErrCode::UnknownConcept, "unknown concept " + from.str());
  if (!find(to))
    throw Error(ErrCode::UnknownConcept, "unknown concept " + to.str());

  std::vector<DepPath> out;
  DepPath current;
  current.nodes.push_back(from);
  std::set<ConceptId> on_path{from};

  auto dfs = [&](auto&& self, const ConceptId& node) -> void {
    if (node == to) out.push_back(current);
    if (static_cast<int>(current.edges.size()) >= max_len) return;
    auto it = adjacency_.find(node);
    if (it == adjacency_.end()) return;
    for (const OutEdge& oe : it->second) {
      if (on_path.contains(oe.to)) continue;
      current.nodes.push_back(oe.to);
      current.edges.push_back(oe.edge);
      on_path.insert(oe.to);
      self(self, oe.to);
      on_path.erase(oe.to);
      current.edges.pop_back();
      current.nodes.pop_back();
    }
  };
  dfs(dfs, from);

  std::sort(out.begin(), out.end(), path_less);
  return out;
}

std::set<ConceptId> DepGraph::dependency_closure(const ConceptId& from,
                                                 int max_hops) const {
  if (max_hops < 1)
    throw Error(ErrCode::BadArgument, "max_hops must be at least 1");
  if (!find(from))
    throw Error(ErrCode::UnknownConcept, "unknown concept " + from.str());

  std::set<ConceptId> reached;
  std::deque<std::pair<ConceptId, int>> frontier{{from, 0}};
  std::set<ConceptId> visited{from};
  while (!frontier.empty()) {
    auto [node, dist] = frontier.front();
    frontier.pop_front();
    if (dist == max_hops) continue;
    auto it = adjacency_.find(node);
    if (it == adjacency_.end()) continue;
    for (const OutEdge& oe : it->second) {
      if (!visited.insert(oe.to).second) continue;
      reached.insert(oe.to);
      frontier.emplace_back(oe.to, dist + 1);
    }
  }
  return reached;
}

}  // namespace crossdep
