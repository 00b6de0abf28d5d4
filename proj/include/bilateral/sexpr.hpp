#pragma once

// Minimal s-expression reader shared by the rule DSL and the derivation
// format. Atoms are either bare symbols or double-quoted strings; `;` starts
// a comment that runs to the end of the line. Input is treated as UTF-8 bytes:
// any byte that is not whitespace, a paren, a quote or `;` belongs to a symbol.

#include <string>
#include <string_view>
#include <vector>

#include "bilateral/error.hpp"

namespace bilateral::sexpr {

struct Node {
  enum class Kind { Symbol, String, List };

  Kind kind = Kind::List;
  std::string text;  // symbol or string payload
  std::vector<Node> items;
  SourcePos pos;

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  bool is_string() const { return kind == Kind::String; }
  bool is_list() const { return kind == Kind::List; }

  /// True for a list whose first item is the symbol `head`.
  bool is_form(std::string_view head) const {
    return is_list() && !items.empty() && items.front().is_symbol(head);
  }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Node> read_all() {
    std::vector<Node> out;
    for (;;) {
      skip_blank();
      if (at_end()) break;
      out.push_back(read_node());
    }
    return out;
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return text_[offset_]; }
  SourcePos here() const { return {line_, column_}; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[offset_]) & 0xC0) != 0x80) {
      ++column_;  // count code points, not continuation bytes
    }
    ++offset_;
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == '"' || c == ';' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r' || c == '\f' || c == '\v';
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else {
        break;
      }
    }
  }

  Node read_node() {
    SourcePos start = here();
    char c = peek();
    if (c == ')') throw ParseError(start, "unexpected ')'");
    if (c == '(') {
      advance();
      Node list{Node::Kind::List, {}, {}, start};
      for (;;) {
        skip_blank();
        if (at_end()) throw ParseError(start, "unterminated list");
        if (peek() == ')') {
          advance();
          return list;
        }
        list.items.push_back(read_node());
      }
    }
    if (c == '"') {
      advance();
      std::string s;
      for (;;) {
        if (at_end()) throw ParseError(start, "unterminated string");
        char d = peek();
        advance();
        if (d == '"') break;
        if (d == '\\') {
          if (at_end()) throw ParseError(start, "unterminated string");
          char e = peek();
          advance();
          switch (e) {
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            case '"': s += '"'; break;
            case '\\': s += '\\'; break;
            default: throw ParseError(here(), std::string("unknown escape '\\") + e + "'");
          }
        } else {
          s += d;
        }
      }
      return Node{Node::Kind::String, std::move(s), {}, start};
    }
    std::string sym;
    while (!at_end() && !is_delimiter(peek())) {
      sym += peek();
      advance();
    }
    return Node{Node::Kind::Symbol, std::move(sym), {}, start};
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline std::vector<Node> read(std::string_view text) { return Reader(text).read_all(); }

/// Quotes a string for output, escaping what the reader unescapes.
inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace bilateral::sexpr
