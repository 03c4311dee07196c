#include "crossdep/onto_text.hpp"

#include <algorithm>
#include <set>

#include "parse_util.hpp"

namespace crossdep {

using detail::LineCursor;

std::string_view parse_code_name(ParseCode code) {
  switch (code) {
    case ParseCode::BadIndent: return "BadIndent";
    case ParseCode::UnknownKeyword: return "UnknownKeyword";
    case ParseCode::UnterminatedString: return "UnterminatedString";
    case ParseCode::IllegalKind: return "IllegalKind";
    case ParseCode::DuplicateSibling: return "DuplicateSibling";
    case ParseCode::BadQualifiedId: return "BadQualifiedId";
    case ParseCode::EmptyLabel: return "EmptyLabel";
    case ParseCode::UnknownConcept: return "UnknownConcept";
    case ParseCode::DuplicateLink: return "DuplicateLink";
    case ParseCode::IllegalLink: return "IllegalLink";
    case ParseCode::UnknownPredicate: return "UnknownPredicate";
    case ParseCode::UnknownMode: return "UnknownMode";
    case ParseCode::DuplicateRuleId: return "DuplicateRuleId";
  }
  return "?";
}

std::string ParseError::str() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) +
         " " + std::string(parse_code_name(code)) + " " + message;
}

namespace {

std::string escape_quoted(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Ontology parse_ontology(std::string_view text, std::string_view filename) {
  bool seen_header = false;
  Ontology onto;
  std::vector<ConceptId> stack;  // stack[d] = most recent concept at depth d
  int prev_depth = -1;

  for (const detail::Line& raw : detail::split_lines(text)) {
    std::string_view content = detail::strip_comment(raw.text);
    if (detail::is_blank(content)) continue;
    LineCursor cur(filename, detail::Line{content, raw.number});

    if (!seen_header) {
      if (cur.read_indent() != 0)
        cur.fail_at(1, ParseCode::BadIndent, "header must not be indented");
      int kw_col = cur.column();
      std::string_view kw = cur.read_token();
      if (kw != "ontology")
        cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                    "expected 'ontology' header, got '" + std::string(kw) +
                        "'");
      cur.skip_spaces();
      int slug_col = cur.column();
      std::string slug(cur.read_token());
      if (!is_slug(slug))
        cur.fail_at(slug_col, ParseCode::BadQualifiedId,
                    "ontology slug must match [a-z0-9]+(_[a-z0-9]+)*");
      cur.skip_spaces();
      std::string title = cur.read_quoted();
      cur.expect_end("ontology header");
      onto = Ontology(std::move(slug), std::move(title));
      seen_header = true;
      continue;
    }

    int indent = cur.read_indent();
    if (indent % 2 != 0)
      cur.fail_at(indent + 1, ParseCode::BadIndent,
                  "indentation must be a multiple of two spaces");
    int depth = indent / 2;
    if (depth > prev_depth + 1)
      cur.fail_at(indent + 1, ParseCode::BadIndent,
                  "indentation increases by more than one level");

    int kw_col = cur.column();
    std::string_view kw = cur.read_token();
    std::optional<ConceptKind> kind = kind_from_name(kw);
    if (!kind)
      cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                  "expected a concept kind, got '" + std::string(kw) + "'");

    cur.skip_spaces();
    int label_col = cur.column();
    std::string label = cur.read_quoted();
    cur.expect_end("concept entry");

    std::optional<ConceptId> parent;
    if (depth > 0) parent = stack[static_cast<std::size_t>(depth) - 1];
    ConceptId id;
    try {
      id = onto.add_concept(parent, label, *kind);
    } catch (const Error& err) {
      switch (err.code()) {
        case ErrCode::EmptyLabel:
          cur.fail_at(label_col, ParseCode::EmptyLabel, err.what());
        case ErrCode::DuplicateSibling:
          cur.fail_at(label_col, ParseCode::DuplicateSibling, err.what());
        case ErrCode::IllegalKind:
          cur.fail_at(kw_col, ParseCode::IllegalKind, err.what());
        default:
          throw;
      }
    }
    stack.resize(static_cast<std::size_t>(depth));
    stack.push_back(id);
    prev_depth = depth;
  }

  if (!seen_header)
    detail::fail(filename, 1, 1, ParseCode::UnknownKeyword,
                 "missing ontology header");
  return onto;
}

std::string serialize_ontology(const Ontology& onto) {
  std::string out = "ontology " + onto.slug() + " \"" +
                    escape_quoted(onto.title()) + "\"\n";
  for (const Concept* c : onto.preorder()) {
    out.append(2 * (c->id.path.size() - 1), ' ');
    out += kind_name(c->kind);
    out += " \"";
    out += escape_quoted(c->label);
    out += "\"\n";
  }
  return out;
}

namespace {

const Concept* resolve_qid(std::span<const Ontology* const> ontologies,
                           const ConceptId& id) {
  for (const Ontology* onto : ontologies) {
    if (onto->slug() == id.ontology) return onto->find(id);
  }
  return nullptr;
}

ConceptId read_qid(LineCursor& cur,
                   std::span<const Ontology* const> ontologies) {
  cur.skip_spaces();
  int col = cur.column();
  std::string_view token = cur.read_token();
  std::optional<ConceptId> id = ConceptId::try_parse(token);
  if (!id)
    cur.fail_at(col, ParseCode::BadQualifiedId,
                "malformed concept id '" + std::string(token) + "'");
  if (!resolve_qid(ontologies, *id))
    cur.fail_at(col, ParseCode::UnknownConcept,
                "unknown concept '" + id->str() + "'");
  return *id;
}

void expect_token(LineCursor& cur, std::string_view want) {
  cur.skip_spaces();
  int col = cur.column();
  std::string_view got = cur.read_token();
  if (got != want)
    cur.fail_at(col, ParseCode::UnknownKeyword,
                "expected '" + std::string(want) + "', got '" +
                    std::string(got) + "'");
}

}  // namespace

std::vector<CrossLink> parse_links(std::string_view text,
                                   std::span<const Ontology* const> ontologies,
                                   std::string_view filename) {
  std::vector<CrossLink> links;
  std::set<CrossLink> seen;

  for (const detail::Line& raw : detail::split_lines(text)) {
    std::string_view content = detail::strip_comment(raw.text);
    if (detail::is_blank(content)) continue;
    LineCursor cur(filename, detail::Line{content, raw.number});

    cur.skip_spaces();
    int kw_col = cur.column();
    std::string_view kw = cur.read_token();
    if (kw != "link")
      cur.fail_at(kw_col, ParseCode::UnknownKeyword,
                  "expected 'link', got '" + std::string(kw) + "'");

    ConceptId source = read_qid(cur, ontologies);
    expect_token(cur, "->");
    cur.skip_spaces();
    int target_col = cur.column();
    ConceptId target = read_qid(cur, ontologies);
    expect_token(cur, ":");
    cur.skip_spaces();
    int rel_col = cur.column();
    std::string relation(cur.read_token());
    if (!is_slug(relation))
      cur.fail_at(rel_col, ParseCode::UnknownKeyword,
                  "relation must match [a-z0-9]+(_[a-z0-9]+)*");
    cur.expect_end("link entry");

    if (source.ontology == target.ontology)
      cur.fail_at(target_col, ParseCode::IllegalLink,
                  "link endpoints must belong to different ontologies");

    CrossLink link{std::move(source), std::move(target), std::move(relation)};
    if (!seen.insert(link).second)
      cur.fail_at(kw_col, ParseCode::DuplicateLink,
                  "duplicate link " + link.source.str() + " -> " +
                      link.target.str() + " : " + link.relation);
    links.push_back(std::move(link));
  }
  return links;
}

std::string serialize_links(std::span<const CrossLink> links) {
  std::string out;
  for (const CrossLink& link : links) {
    out += "link " + link.source.str() + " -> " + link.target.str() + " : " +
           link.relation + "\n";
  }
  return out;
}

}  // namespace crossdep
