#pragma once

// Independent brute-force reference implementations and randomized input
// generators. The oracles deliberately share no code with the library: the
// frequency counter walks minute by minute, and the path enumerator builds
// its own adjacency from scratch.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crossdep/depgraph.hpp"
#include "crossdep/occupancy.hpp"
#include "crossdep/sim.hpp"

namespace oracle {

/// Minute-by-minute occupancy frequency: mark every occupied minute per room
/// per day, then divide slot totals by slot_minutes × days.
inline std::map<std::pair<std::string, int>, double> brute_freq(
    const std::vector<crossdep::HistoryInterval>& history, int slot_minutes) {
  std::map<std::pair<std::string, int>, double> out;
  int days = 0;
  std::set<std::string> rooms;
  for (const crossdep::HistoryInterval& h : history) {
    days = std::max(days, h.day + 1);
    rooms.insert(h.room);
  }
  if (days == 0) return out;
  for (const std::string& room : rooms) {
    for (int day = 0; day < days; ++day) {
      std::vector<bool> occupied(1440, false);
      for (const crossdep::HistoryInterval& h : history)
        if (h.room == room && h.day == day)
          for (int m = h.start_min; m < h.end_min; ++m) occupied[m] = true;
      for (int m = 0; m < 1440; ++m)
        if (occupied[m]) out[{room, m / slot_minutes}] += 1.0;
    }
  }
  for (auto& [key, value] : out)
    value /= static_cast<double>(slot_minutes) * days;
  return out;
}

/// Exhaustive simple-path enumeration over an adjacency list built directly
/// from the ontologies and links, sorted by the documented order (length,
/// node-id strings, edge tuples).
inline std::vector<crossdep::DepPath> brute_paths(
    const std::vector<crossdep::Ontology>& ontologies,
    const std::vector<crossdep::CrossLink>& links,
    const crossdep::ConceptId& from, const crossdep::ConceptId& to,
    int max_len) {
  using namespace crossdep;
  struct Out {
    ConceptId to;
    DepEdge edge;
  };
  std::map<std::string, std::vector<Out>> adjacency;
  auto add = [&adjacency](const ConceptId& a, const ConceptId& b, DepEdge e) {
    adjacency[a.str()].push_back({b, std::move(e)});
  };
  for (const Ontology& onto : ontologies)
    for (const Concept* c : onto.preorder())
      for (const ConceptId& child : c->children) {
        add(c->id, child, {EdgeKind::Hierarchy, EdgeDirection::Forward, ""});
        add(child, c->id, {EdgeKind::Hierarchy, EdgeDirection::Reverse, ""});
      }
  for (const CrossLink& link : links) {
    add(link.source, link.target,
        {EdgeKind::Cross, EdgeDirection::Forward, link.relation});
    add(link.target, link.source,
        {EdgeKind::Cross, EdgeDirection::Reverse, link.relation});
  }

  std::vector<DepPath> out;
  DepPath current;
  current.nodes.push_back(from);
  std::set<std::string> on_path{from.str()};
  auto dfs = [&](auto&& self, const ConceptId& node) -> void {
    if (node == to) out.push_back(current);
    if (static_cast<int>(current.edges.size()) >= max_len) return;
    for (const Out& next : adjacency[node.str()]) {
      if (on_path.contains(next.to.str())) continue;
      current.nodes.push_back(next.to);
      current.edges.push_back(next.edge);
      on_path.insert(next.to.str());
      self(self, next.to);
      on_path.erase(next.to.str());
      current.nodes.pop_back();
      current.edges.pop_back();
    }
  };
  dfs(dfs, from);

  std::sort(out.begin(), out.end(), [](const DepPath& a, const DepPath& b) {
    if (a.edges.size() != b.edges.size())
      return a.edges.size() < b.edges.size();
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
      std::string as = a.nodes[i].str(), bs = b.nodes[i].str();
      if (as != bs) return as < bs;
    }
    return a.edges < b.edges;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Randomized input generators (seeded, reproducible).

inline int pick(std::mt19937& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<crossdep::HistoryInterval> random_history(
    std::mt19937& rng, int max_days = 7, int max_rooms = 3) {
  int days = pick(rng, 1, max_days);
  int rooms = pick(rng, 1, max_rooms);
  int count = pick(rng, 0, 40);
  std::vector<crossdep::HistoryInterval> history;
  history.reserve(count);
  for (int i = 0; i < count; ++i) {
    crossdep::HistoryInterval h;
    h.day = pick(rng, 0, days - 1);
    h.room = "room" + std::to_string(pick(rng, 0, rooms - 1));
    h.start_min = pick(rng, 0, 1439);
    h.end_min = std::min(1440, h.start_min + pick(rng, 1, 240));
    history.push_back(std::move(h));
  }
  return history;
}

struct RandomGraph {
  std::vector<crossdep::Ontology> ontologies;
  std::vector<crossdep::CrossLink> links;
  std::vector<crossdep::ConceptId> ids;  // every concept across the forest
};

inline RandomGraph random_graph(std::mt19937& rng) {
  using namespace crossdep;
  RandomGraph g;
  int n_ontologies = pick(rng, 2, 3);
  int total_nodes = pick(rng, n_ontologies * 2, 50);

  for (int o = 0; o < n_ontologies; ++o) {
    int budget = total_nodes / n_ontologies + (o == 0 ? total_nodes % n_ontologies : 0);
    Ontology onto("g" + std::to_string(o), "Graph " + std::to_string(o));
    // Track ids eligible to take children (non-feature nodes) with depth.
    std::vector<std::pair<ConceptId, int>> open;
    ConceptId root = onto.add_concept(std::nullopt, "n0", ConceptKind::Domain);
    open.emplace_back(root, 0);
    g.ids.push_back(root);
    for (int j = 1; j < budget; ++j) {
      std::string label = "n" + std::to_string(j);
      if (pick(rng, 0, 9) == 0) {  // occasional extra root
        ConceptId id = onto.add_concept(std::nullopt, label, ConceptKind::Domain);
        open.emplace_back(id, 0);
        g.ids.push_back(id);
        continue;
      }
      auto [parent, depth] = open[static_cast<std::size_t>(
          pick(rng, 0, static_cast<int>(open.size()) - 1))];
      ConceptKind kind;
      bool leaf = depth >= 1 && pick(rng, 0, 4) == 0;
      if (depth == 0) kind = ConceptKind::Class;
      else if (leaf) kind = ConceptKind::Feature;
      else kind = ConceptKind::SubClass;
      ConceptId id = onto.add_concept(parent, label, kind);
      if (kind != ConceptKind::Feature) open.emplace_back(id, depth + 1);
      g.ids.push_back(id);
    }
    g.ontologies.push_back(std::move(onto));
  }

  const char* relations[] = {"uses", "feeds", "controls", "monitors"};
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  int attempts = pick(rng, 0, 60);
  for (int i = 0; i < attempts; ++i) {
    int a = pick(rng, 0, n_ontologies - 1);
    int b = pick(rng, 0, n_ontologies - 1);
    if (a == b) continue;
    const Ontology& oa = g.ontologies[static_cast<std::size_t>(a)];
    const Ontology& ob = g.ontologies[static_cast<std::size_t>(b)];
    auto random_id = [&rng](const Ontology& onto) {
      std::vector<const Concept*> all = onto.preorder();
      return all[static_cast<std::size_t>(
                     pick(rng, 0, static_cast<int>(all.size()) - 1))]
          ->id;
    };
    CrossLink link{random_id(oa), random_id(ob),
                   relations[pick(rng, 0, 3)]};
    if (!seen.insert({link.source.str(), link.target.str(), link.relation})
             .second)
      continue;
    g.links.push_back(std::move(link));
  }
  return g;
}

inline crossdep::Scenario random_scenario(std::mt19937& rng) {
  using namespace crossdep;
  Scenario sc;
  sc.name = "random";
  sc.duration_min = pick(rng, 60, 600);
  int n_rooms = pick(rng, 1, 3);
  for (int i = 0; i < n_rooms; ++i)
    sc.rooms.push_back("room" + std::to_string(i));

  const DeviceMode modes[] = {DeviceMode::Off, DeviceMode::Standby,
                              DeviceMode::On};
  int n_devices = pick(rng, 1, 4);
  for (int i = 0; i < n_devices; ++i) {
    Device d;
    d.id = "dev" + std::to_string(i);
    d.room = sc.rooms[static_cast<std::size_t>(pick(rng, 0, n_rooms - 1))];
    d.power_off_w = pick(rng, 0, 20) / 10.0;
    d.power_standby_w = d.power_off_w + pick(rng, 0, 100) / 10.0;
    d.power_on_w = d.power_standby_w + pick(rng, 0, 800) / 10.0;
    d.initial_mode = modes[pick(rng, 0, 2)];
    int entries = pick(rng, 0, 3);
    std::set<int> cuts;
    while (static_cast<int>(cuts.size()) < 2 * entries)
      cuts.insert(pick(rng, 0, sc.duration_min));
    std::vector<int> points(cuts.begin(), cuts.end());
    for (int e = 0; e < entries; ++e) {
      int start = points[static_cast<std::size_t>(2 * e)];
      int end = points[static_cast<std::size_t>(2 * e + 1)];
      if (start == end) continue;
      d.schedule.push_back({start, end, modes[pick(rng, 0, 2)]});
    }
    sc.devices.push_back(std::move(d));
  }

  int traces = pick(rng, 0, 5);
  for (int i = 0; i < traces; ++i) {
    OccupancyInterval o;
    o.room = sc.rooms[static_cast<std::size_t>(pick(rng, 0, n_rooms - 1))];
    o.start_min = pick(rng, 0, sc.duration_min - 1);
    o.end_min = std::min(sc.duration_min, o.start_min + pick(rng, 1, 180));
    sc.occupancy_trace.push_back(std::move(o));
  }

  for (crossdep::HistoryInterval& h : random_history(rng, 5, n_rooms)) {
    h.room = sc.rooms[static_cast<std::size_t>(pick(rng, 0, n_rooms - 1))];
    sc.history.push_back(std::move(h));
  }
  return sc;
}

/// Rule sets whose every action is SetMode(off); savings must be
/// non-negative under these no matter the conditions.
inline std::vector<crossdep::Rule> random_shutdown_rules(std::mt19937& rng) {
  using namespace crossdep;
  const DeviceMode modes[] = {DeviceMode::Off, DeviceMode::Standby,
                              DeviceMode::On};
  int n = pick(rng, 1, 2);
  std::vector<Rule> rules;
  for (int i = 0; i < n; ++i) {
    Rule rule;
    rule.id = "r" + std::to_string(i);
    rule.trigger =
        pick(rng, 0, 1) ? RuleTrigger::Tick : RuleTrigger::OccupancyChange;
    int conds = pick(rng, 1, 3);
    for (int c = 0; c < conds; ++c) {
      Condition cond;
      switch (pick(rng, 0, 2)) {
        case 0:
          cond.predicate = PredicateKind::ModeIs;
          cond.mode = modes[pick(rng, 0, 2)];
          break;
        case 1:
          cond.predicate = PredicateKind::Occupied;
          cond.negated = pick(rng, 0, 1) == 1;
          break;
        default:
          cond.predicate = PredicateKind::PredictedOccupied;
          cond.negated = pick(rng, 0, 1) == 1;
          if (pick(rng, 0, 1)) cond.horizon_min = pick(rng, 15, 120);
          break;
      }
      rule.conditions.push_back(cond);
    }
    rule.actions.push_back({DeviceMode::Off});
    rules.push_back(std::move(rule));
  }
  return rules;
}

}  // namespace oracle
