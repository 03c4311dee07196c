#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossdep {

/// Stratification level of a concept. The order matters: a valid forest has
/// Domain roots, Class children, and SubClass/Feature below that.
enum class ConceptKind { Domain, Class, SubClass, Feature };

std::string_view kind_name(ConceptKind kind);
std::optional<ConceptKind> kind_from_name(std::string_view name);

/// Domain is only legal at depth 0, Class at depth 1, SubClass and Feature
/// anywhere deeper.
bool kind_legal_at_depth(ConceptKind kind, std::size_t depth);

enum class ErrCode {
  EmptyLabel,
  DuplicateSibling,
  IllegalKind,
  UnknownParent,
  UnknownConcept,
  UnknownRequirement,
  DuplicateLink,
  IllegalLink,
  BadSlot,
  ScenarioInvalid,
  BadArgument,
};

class Error : public std::runtime_error {
public:
  Error(ErrCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrCode code() const { return code_; }

private:
  ErrCode code_;
};

/// True if `s` matches [a-z0-9]+(_[a-z0-9]+)*.
bool is_slug(std::string_view s);

/// Lowercases and replaces every maximal run of non-alphanumeric characters
/// with a single underscore, trimming leading/trailing underscores.
/// Throws Error{EmptyLabel} if nothing survives.
std::string slugify(std::string_view label);

/// Identity of a concept: the owning ontology's slug plus the slug path from
/// the root. String form is "<ontology>:<seg0>.<seg1>...".
struct ConceptId {
  std::string ontology;
  std::vector<std::string> path;

  std::string str() const;
  static std::optional<ConceptId> try_parse(std::string_view text);
  static ConceptId parse(std::string_view text);  // throws Error{BadArgument}

  bool is_root() const { return path.size() == 1; }
  ConceptId parent() const;  // throws Error{BadArgument} on roots
  ConceptId child(std::string_view slug) const;

  auto operator<=>(const ConceptId&) const = default;
};

struct Concept {
  ConceptId id;
  std::string label;  // display text, original casing
  ConceptKind kind = ConceptKind::Feature;
  std::vector<ConceptId> children;  // insertion order

  bool operator==(const Concept&) const = default;
};

enum class ViolationCode {
  IllegalKind,
  DanglingChild,
  Orphan,
  BadSlug,
  BadChildPath,
  DuplicateSibling,
};

std::string_view violation_name(ViolationCode code);

struct Violation {
  std::string subject;  // id string; may name a concept missing from the index
  ViolationCode code = ViolationCode::IllegalKind;
  std::string message;
};

/// A typed concept forest. Instances built through add_concept always satisfy
/// the forest invariants; from_parts admits arbitrary data so the validator
/// has something to report on.
class Ontology {
public:
  Ontology() = default;
  Ontology(std::string slug, std::string title);

  const std::string& slug() const { return slug_; }
  const std::string& title() const { return title_; }
  const std::vector<ConceptId>& roots() const { return roots_; }
  const std::map<ConceptId, Concept>& index() const { return index_; }
  std::size_t size() const { return index_.size(); }

  /// Inserts a concept under `parent` (or as a root when absent) and returns
  /// its id. Throws Error{UnknownParent, IllegalKind, DuplicateSibling,
  /// EmptyLabel}.
  ConceptId add_concept(const std::optional<ConceptId>& parent,
                        std::string_view label, ConceptKind kind);

  const Concept* find(const ConceptId& id) const;
  const Concept& at(const ConceptId& id) const;  // throws Error{UnknownConcept}

  /// Children in insertion order. Throws Error{UnknownConcept}.
  std::vector<const Concept*> children_of(const ConceptId& id) const;

  /// Number of concepts in the subtree rooted at `id`, including `id`.
  std::size_t subtree_count(const ConceptId& id) const;

  /// All concepts in depth-first pre-order over the roots.
  std::vector<const Concept*> preorder() const;

  /// Checks every forest invariant; an empty report means valid.
  std::vector<Violation> validate() const;

  /// Assembles an ontology without invariant checks (validator tests,
  /// untrusted data).
  static Ontology from_parts(std::string slug, std::string title,
                             std::vector<ConceptId> roots,
                             std::map<ConceptId, Concept> index);

  bool operator==(const Ontology&) const = default;

private:
  std::string slug_;
  std::string title_;
  std::vector<ConceptId> roots_;
  std::map<ConceptId, Concept> index_;
};

/// Directed labelled edge between concepts of two different ontologies.
struct CrossLink {
  ConceptId source;
  ConceptId target;
  std::string relation;

  auto operator<=>(const CrossLink&) const = default;
};

}  // namespace crossdep
