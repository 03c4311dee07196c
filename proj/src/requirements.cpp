#include "crossdep/requirements.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "crossdep/onto_text.hpp"
#include "parse_util.hpp"

namespace crossdep {

std::string_view stakeholder_slug(Stakeholder s) {
  switch (s) {
    case Stakeholder::Occupiers: return "occupiers";
    case Stakeholder::EnergyProviders: return "energy_providers";
    case Stakeholder::HousingAgencies: return "housing_agencies";
    case Stakeholder::Government: return "government";
  }
  return "?";
}

std::optional<Stakeholder> stakeholder_from_slug(std::string_view slug) {
  if (slug == "occupiers") return Stakeholder::Occupiers;
  if (slug == "energy_providers") return Stakeholder::EnergyProviders;
  if (slug == "housing_agencies") return Stakeholder::HousingAgencies;
  if (slug == "government") return Stakeholder::Government;
  return std::nullopt;
}

namespace {

struct Field {
  std::string_view text;
  int column;  // 1-based start position in the line
};

std::vector<Field> split_tabs(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    std::string_view f = tab == std::string_view::npos
                             ? line.substr(start)
                             : line.substr(start, tab - start);
    out.push_back(Field{f, static_cast<int>(start) + 1});
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

const Concept* resolve(std::span<const Ontology* const> ontologies,
                       const ConceptId& id) {
  for (const Ontology* onto : ontologies)
    if (onto->slug() == id.ontology) return onto->find(id);
  return nullptr;
}

}  // namespace

std::vector<Requirement> parse_requirements(
    std::string_view text, std::span<const Ontology* const> ontologies,
    std::string_view filename) {
  std::vector<Requirement> out;
  std::set<std::pair<Stakeholder, int>> seen;

  for (const detail::Line& line : detail::split_lines(text)) {
    if (detail::is_blank(line.text) || line.text.front() == '#') continue;

    std::vector<Field> fields = split_tabs(line.text);
    if (fields.size() != 4)
      detail::fail(filename, line.number, 1, ParseCode::UnknownKeyword,
                   "expected 4 tab-separated fields, got " +
                       std::to_string(fields.size()));

    std::optional<Stakeholder> stakeholder =
        stakeholder_from_slug(fields[0].text);
    if (!stakeholder)
      detail::fail(filename, line.number, fields[0].column,
                   ParseCode::UnknownKeyword,
                   "unknown stakeholder '" + std::string(fields[0].text) + "'");

    int index = 0;
    auto [ptr, ec] = std::from_chars(
        fields[1].text.data(), fields[1].text.data() + fields[1].text.size(),
        index);
    if (ec != std::errc{} || ptr != fields[1].text.data() + fields[1].text.size() ||
        index < 1)
      detail::fail(filename, line.number, fields[1].column,
                   ParseCode::UnknownKeyword, "index must be a positive integer");

    if (fields[2].text.empty())
      detail::fail(filename, line.number, fields[2].column,
                   ParseCode::EmptyLabel, "requirement text is empty");

    Requirement req;
    req.stakeholder = *stakeholder;
    req.index = index;
    req.text = std::string(fields[2].text);

    if (!fields[3].text.empty()) {
      std::string_view rest = fields[3].text;
      int col = fields[3].column;
      while (true) {
        std::size_t comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        std::optional<ConceptId> id = ConceptId::try_parse(token);
        if (!id)
          detail::fail(filename, line.number, col, ParseCode::BadQualifiedId,
                       "malformed concept id '" + std::string(token) + "'");
        if (!resolve(ontologies, *id))
          detail::fail(filename, line.number, col, ParseCode::UnknownConcept,
                       "unknown concept '" + id->str() + "'");
        if (std::find(req.concepts.begin(), req.concepts.end(), *id) !=
            req.concepts.end())
          detail::fail(filename, line.number, col, ParseCode::DuplicateLink,
                       "concept '" + id->str() + "' mapped twice");
        req.concepts.push_back(std::move(*id));
        if (comma == std::string_view::npos) break;
        col += static_cast<int>(comma) + 1;
        rest = rest.substr(comma + 1);
      }
    }

    if (!seen.insert({req.stakeholder, req.index}).second)
      detail::fail(filename, line.number, 1, ParseCode::DuplicateSibling,
                   "duplicate requirement (" +
                       std::string(stakeholder_slug(req.stakeholder)) + ", " +
                       std::to_string(req.index) + ")");
    out.push_back(std::move(req));
  }
  return out;
}

std::string serialize_requirements(std::span<const Requirement> reqs) {
  std::string out;
  for (const Requirement& r : reqs) {
    out += stakeholder_slug(r.stakeholder);
    out.push_back('\t');
    out += std::to_string(r.index);
    out.push_back('\t');
    out += r.text;
    out.push_back('\t');
    for (std::size_t i = 0; i < r.concepts.size(); ++i) {
      if (i) out.push_back(',');
      out += r.concepts[i].str();
    }
    out.push_back('\n');
  }
  return out;
}

const std::vector<ConceptId>& concepts_for_requirement(
    std::span<const Requirement> reqs, Stakeholder stakeholder, int index) {
  for (const Requirement& r : reqs)
    if (r.stakeholder == stakeholder && r.index == index) return r.concepts;
  throw Error(ErrCode::UnknownRequirement,
              "no requirement (" + std::string(stakeholder_slug(stakeholder)) +
                  ", " + std::to_string(index) + ")");
}

std::vector<const Requirement*> requirements_for_concept(
    std::span<const Requirement> reqs, const Ontology& onto,
    const ConceptId& target, bool include_descendants) {
  std::set<ConceptId> targets;
  targets.insert(target);
  if (include_descendants) {
    auto walk = [&](auto&& self, const Concept& c) -> void {
      targets.insert(c.id);
      for (const ConceptId& cid : c.children) self(self, onto.at(cid));
    };
    walk(walk, onto.at(target));
  } else {
    onto.at(target);  // existence check only
  }

  std::vector<const Requirement*> out;
  for (const Requirement& r : reqs) {
    bool hits = std::any_of(r.concepts.begin(), r.concepts.end(),
                            [&](const ConceptId& id) {
                              return targets.contains(id);
                            });
    if (hits) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(),
            [](const Requirement* a, const Requirement* b) {
              return std::tie(a->stakeholder, a->index) <
                     std::tie(b->stakeholder, b->index);
            });
  return out;
}

}  // namespace crossdep
