#pragma once

#include <string_view>
#include <vector>

#include "crossdep/onto_text.hpp"

// Line-oriented scanning shared by the .onto, .links and .rules parsers.
namespace crossdep::detail {

struct Line {
  std::string_view text;  // without the newline (CR already stripped)
  int number = 1;         // 1-based
};

std::vector<Line> split_lines(std::string_view text);

/// Drops a trailing comment starting at an unquoted '#'. Quoted regions
/// respect backslash escapes.
std::string_view strip_comment(std::string_view line);

bool is_blank(std::string_view s);

[[noreturn]] void fail(std::string_view file, int line, int column,
                       ParseCode code, std::string message);

/// Cursor over one content line; all columns are 1-based offsets into the
/// original line.
class LineCursor {
public:
  LineCursor(std::string_view file, Line line)
      : file_(file), text_(line.text), line_(line.number) {}

  int line() const { return line_; }
  int column() const { return static_cast<int>(pos_) + 1; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_spaces();

  /// Leading indentation in spaces; fails with BadIndent on tabs.
  int read_indent();

  /// Word of [a-z_.=>:-] style token characters (no spaces, no quotes).
  std::string_view read_token();

  /// Double-quoted string starting at the cursor; handles \" and \\ escapes
  /// (an unknown escape yields the escaped character verbatim).
  std::string read_quoted();

  /// Fails unless the rest of the line is blank.
  void expect_end(std::string_view what);

  [[noreturn]] void fail_here(ParseCode code, std::string message) const {
    fail(file_, line_, column(), code, std::move(message));
  }
  [[noreturn]] void fail_at(int column, ParseCode code,
                            std::string message) const {
    fail(file_, line_, column, code, std::move(message));
  }

private:
  std::string_view file_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace crossdep::detail
