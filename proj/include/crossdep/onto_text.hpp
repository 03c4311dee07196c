#pragma once

#include <span>

#include "crossdep/ontology.hpp"

namespace crossdep {

enum class ParseCode {
  BadIndent,
  UnknownKeyword,
  UnterminatedString,
  IllegalKind,
  DuplicateSibling,
  BadQualifiedId,
  EmptyLabel,
  UnknownConcept,
  DuplicateLink,
  IllegalLink,
  UnknownPredicate,
  UnknownMode,
  DuplicateRuleId,
};

std::string_view parse_code_name(ParseCode code);

/// Position-carrying diagnostic shared by the .onto, .links and .rules
/// parsers. Line and column are 1-based and point at the first offending
/// character.
struct ParseError {
  std::string file;
  int line = 1;
  int column = 1;
  ParseCode code = ParseCode::UnknownKeyword;
  std::string message;

  std::string str() const;  // "<file>:<line>:<col> <code> <message>"
};

class ParseFailure : public std::runtime_error {
public:
  explicit ParseFailure(ParseError err)
      : std::runtime_error(err.str()), error_(std::move(err)) {}
  const ParseError& error() const { return error_; }

private:
  ParseError error_;
};

/// Parses the `.onto` format. The result always passes Ontology::validate().
Ontology parse_ontology(std::string_view text,
                        std::string_view filename = "<input>");

/// Canonical form: header line, depth-first pre-order, 2-space indentation,
/// double-quoted labels, LF newlines, trailing newline.
std::string serialize_ontology(const Ontology& onto);

/// Parses a `.links` file; every qualified id must resolve in `ontologies`.
std::vector<CrossLink> parse_links(std::string_view text,
                                   std::span<const Ontology* const> ontologies,
                                   std::string_view filename = "<input>");

std::string serialize_links(std::span<const CrossLink> links);

}  // namespace crossdep
