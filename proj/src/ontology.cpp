#include "crossdep/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace crossdep {

std::string_view kind_name(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Domain: return "domain";
    case ConceptKind::Class: return "class";
    case ConceptKind::SubClass: return "subclass";
    case ConceptKind::Feature: return "feature";
  }
  return "?";
}

std::optional<ConceptKind> kind_from_name(std::string_view name) {
  if (name == "domain") return ConceptKind::Domain;
  if (name == "class") return ConceptKind::Class;
  if (name == "subclass") return ConceptKind::SubClass;
  if (name == "feature") return ConceptKind::Feature;
  return std::nullopt;
}

bool kind_legal_at_depth(ConceptKind kind, std::size_t depth) {
  switch (kind) {
    case ConceptKind::Domain: return depth == 0;
    case ConceptKind::Class: return depth == 1;
    case ConceptKind::SubClass:
    case ConceptKind::Feature: return depth >= 2;
  }
  return false;
}

namespace {

bool is_lower_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

}  // namespace

bool is_slug(std::string_view s) {
  if (s.empty() || s.front() == '_' || s.back() == '_') return false;
  bool prev_underscore = false;
  for (char c : s) {
    if (c == '_') {
      if (prev_underscore) return false;
      prev_underscore = true;
    } else if (is_lower_alnum(c)) {
      prev_underscore = false;
    } else {
      return false;
    }
  }
  return true;
}

std::string slugify(std::string_view label) {
  std::string out;
  bool pending_sep = false;
  for (char raw : label) {
    char c = static_cast<char>(
        std::tolower(static_cast<unsigned char>(raw)));
    if (is_lower_alnum(c)) {
      if (pending_sep && !out.empty()) out.push_back('_');
      pending_sep = false;
      out.push_back(c);
    } else {
      pending_sep = true;
    }
  }
  if (out.empty())
    throw Error(ErrCode::EmptyLabel,
                "label \"" + std::string(label) + "\" slugifies to nothing");
  return out;
}

std::string ConceptId::str() const {
  std::string out = ontology;
  out.push_back(':');
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out.push_back('.');
    out += path[i];
  }
  return out;
}

std::optional<ConceptId> ConceptId::try_parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  ConceptId id;
  id.ontology = std::string(text.substr(0, colon));
  if (!is_slug(id.ontology)) return std::nullopt;
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty()) return std::nullopt;
  while (true) {
    auto dot = rest.find('.');
    std::string_view seg = rest.substr(0, dot);
    if (!is_slug(seg)) return std::nullopt;
    id.path.emplace_back(seg);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
  }
  return id;
}

ConceptId ConceptId::parse(std::string_view text) {
  auto id = try_parse(text);
  if (!id)
    throw Error(ErrCode::BadArgument,
                "malformed concept id \"" + std::string(text) + "\"");
  return *id;
}

ConceptId ConceptId::parent() const {
  if (is_root())
    throw Error(ErrCode::BadArgument, "root concept " + str() + " has no parent");
  ConceptId p{ontology, {path.begin(), path.end() - 1}};
  return p;
}

ConceptId ConceptId::child(std::string_view slug) const {
  ConceptId c = *this;
  c.path.emplace_back(slug);
  return c;
}

std::string_view violation_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::IllegalKind: return "IllegalKind";
    case ViolationCode::DanglingChild: return "DanglingChild";
    case ViolationCode::Orphan: return "Orphan";
    case ViolationCode::BadSlug: return "BadSlug";
    case ViolationCode::BadChildPath: return "BadChildPath";
    case ViolationCode::DuplicateSibling: return "DuplicateSibling";
  }
  return "?";
}

Ontology::Ontology(std::string slug, std::string title)
    : slug_(std::move(slug)), title_(std::move(title)) {}

ConceptId Ontology::add_concept(const std::optional<ConceptId>& parent,
                                std::string_view label, ConceptKind kind) {
  std::string slug = slugify(label);

  ConceptId id;
  std::size_t depth = 0;
  if (parent) {
    const Concept* p = find(*parent);
    if (!p)
      throw Error(ErrCode::UnknownParent,
                  "unknown parent " + parent->str());
    if (p->kind == ConceptKind::Feature)
      throw Error(ErrCode::IllegalKind,
                  "feature " + parent->str() + " cannot have children");
    depth = parent->path.size();
    id = parent->child(slug);
  } else {
    id = ConceptId{slug_, {slug}};
  }

  if (!kind_legal_at_depth(kind, depth))
    throw Error(ErrCode::IllegalKind,
                std::string(kind_name(kind)) + " not allowed at depth " +
                    std::to_string(depth) + " (" + id.str() + ")");
  if (index_.contains(id))
    throw Error(ErrCode::DuplicateSibling,
                "duplicate sibling " + id.str());

  index_.emplace(id, Concept{id, std::string(label), kind, {}});
  if (parent) {
    index_.at(*parent).children.push_back(id);
  } else {
    roots_.push_back(id);
  }
  return id;
}

const Concept* Ontology::find(const ConceptId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &it->second;
}

const Concept& Ontology::at(const ConceptId& id) const {
  const Concept* c = find(id);
  if (!c) throw Error(ErrCode::UnknownConcept, "unknown concept " + id.str());
  return *c;
}

std::vector<const Concept*> Ontology::children_of(const ConceptId& id) const {
  const Concept& c = at(id);
  std::vector<const Concept*> out;
  out.reserve(c.children.size());
  for (const ConceptId& cid : c.children) out.push_back(&at(cid));
  return out;
}

std::size_t Ontology::subtree_count(const ConceptId& id) const {
  const Concept& c = at(id);
  std::size_t n = 1;
  for (const ConceptId& cid : c.children) n += subtree_count(cid);
  return n;
}

std::vector<const Concept*> Ontology::preorder() const {
  std::vector<const Concept*> out;
  out.reserve(index_.size());
  auto walk = [&](auto&& self, const ConceptId& id) -> void {
    const Concept* c = find(id);
    if (!c) return;
    out.push_back(c);
    for (const ConceptId& cid : c->children) self(self, cid);
  };
  for (const ConceptId& r : roots_) walk(walk, r);
  return out;
}

std::vector<Violation> Ontology::validate() const {
  std::vector<Violation> out;
  auto report = [&](const ConceptId& id, ViolationCode code, std::string msg) {
    out.push_back(Violation{id.str(), code, std::move(msg)});
  };

  std::set<ConceptId> visited;

  auto check_node = [&](auto&& self, const ConceptId& id,
                        std::size_t depth) -> void {
    auto it = index_.find(id);
    if (it == index_.end()) {
      report(id, ViolationCode::DanglingChild,
             "listed child missing from index");
      return;
    }
    if (!visited.insert(id).second) return;  // shared child, already reported
    const Concept& c = it->second;

    if (c.id != id)
      report(id, ViolationCode::BadChildPath, "index key and concept id differ");
    if (id.ontology != slug_)
      report(id, ViolationCode::BadChildPath,
             "concept belongs to ontology \"" + id.ontology + "\"");
    for (const std::string& seg : id.path)
      if (!is_slug(seg))
        report(id, ViolationCode::BadSlug, "path segment \"" + seg +
                                               "\" is not a valid slug");
    if (!id.path.empty()) {
      std::string expect;
      try {
        expect = slugify(c.label);
      } catch (const Error&) {
        report(id, ViolationCode::BadSlug, "label slugifies to nothing");
      }
      if (!expect.empty() && id.path.back() != expect)
        report(id, ViolationCode::BadSlug,
               "last path segment does not match slugify(\"" + c.label + "\")");
    }
    if (!kind_legal_at_depth(c.kind, depth))
      report(id, ViolationCode::IllegalKind,
             std::string(kind_name(c.kind)) + " at depth " +
                 std::to_string(depth));
    if (c.kind == ConceptKind::Feature && !c.children.empty())
      report(id, ViolationCode::IllegalKind, "feature has children");

    std::set<ConceptId> seen_children;
    for (const ConceptId& cid : c.children) {
      if (!seen_children.insert(cid).second)
        report(cid, ViolationCode::DuplicateSibling,
               "child listed more than once");
      bool extends = cid.ontology == id.ontology &&
                     cid.path.size() == id.path.size() + 1 &&
                     std::equal(id.path.begin(), id.path.end(),
                                cid.path.begin());
      if (!extends) {
        report(cid, ViolationCode::BadChildPath,
               "child path does not extend parent " + id.str());
        continue;  // do not descend through a malformed edge
      }
      self(self, cid, depth + 1);
    }
  };

  std::set<ConceptId> seen_roots;
  for (const ConceptId& r : roots_) {
    if (!seen_roots.insert(r).second)
      report(r, ViolationCode::DuplicateSibling, "root listed more than once");
    if (r.path.size() != 1)
      report(r, ViolationCode::BadChildPath, "root path must be one segment");
    check_node(check_node, r, 0);
  }

  for (const auto& [id, c] : index_) {
    if (!visited.contains(id))
      report(id, ViolationCode::Orphan, "not reachable from any root");
  }
  return out;
}

Ontology Ontology::from_parts(std::string slug, std::string title,
                              std::vector<ConceptId> roots,
                              std::map<ConceptId, Concept> index) {
  Ontology o;
  o.slug_ = std::move(slug);
  o.title_ = std::move(title);
  o.roots_ = std::move(roots);
  o.index_ = std::move(index);
  return o;
}

}  // namespace crossdep
