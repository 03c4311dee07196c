#include "parse_util.hpp"

namespace crossdep::detail {

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // a trailing newline does not open an extra empty line
    if (nl == std::string_view::npos && line.empty() && start == text.size())
      break;
    out.push_back(Line{line, number});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
    ++number;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quote) {
      if (c == '\\') {
        ++i;  // escaped character, even if it is a quote or hash
      } else if (c == '"') {
        in_quote = false;
      }
    } else if (c == '"') {
      in_quote = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

void fail(std::string_view file, int line, int column, ParseCode code,
          std::string message) {
  throw ParseFailure(ParseError{std::string(file), line, column, code,
                                std::move(message)});
}

void LineCursor::skip_spaces() {
  while (!at_end() && text_[pos_] == ' ') ++pos_;
}

int LineCursor::read_indent() {
  while (!at_end()) {
    char c = text_[pos_];
    if (c == ' ') {
      ++pos_;
    } else if (c == '\t') {
      fail_here(ParseCode::BadIndent, "tab in indentation");
    } else {
      break;
    }
  }
  return static_cast<int>(pos_);
}

std::string_view LineCursor::read_token() {
  std::size_t start = pos_;
  while (!at_end()) {
    char c = text_[pos_];
    if (c == ' ' || c == '\t' || c == '"') break;
    ++pos_;
  }
  return text_.substr(start, pos_ - start);
}

std::string LineCursor::read_quoted() {
  if (peek() != '"')
    fail_here(ParseCode::UnknownKeyword, "expected quoted text");
  int open_column = column();
  ++pos_;
  std::string out;
  while (!at_end()) {
    char c = text_[pos_];
    if (c == '\\') {
      if (pos_ + 1 >= text_.size())
        fail_at(open_column, ParseCode::UnterminatedString,
                "string not terminated before end of line");
      out.push_back(text_[pos_ + 1]);
      pos_ += 2;
      continue;
    }
    if (c == '"') {
      ++pos_;
      return out;
    }
    out.push_back(c);
    ++pos_;
  }
  fail_at(open_column, ParseCode::UnterminatedString,
          "string not terminated before end of line");
}

void LineCursor::expect_end(std::string_view what) {
  skip_spaces();
  if (!at_end())
    fail_here(ParseCode::UnknownKeyword,
              "unexpected trailing content after " + std::string(what));
}

}  // namespace crossdep::detail
