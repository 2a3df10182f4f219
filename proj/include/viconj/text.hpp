#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "viconj/word.hpp"

namespace viconj {

/// Parse failure tied to one whitespace-separated token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token, std::size_t token_index,
             std::size_t column)
      : std::invalid_argument(what),
        token_(std::move(token)),
        token_index_(token_index),
        column_(column) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t token_index() const noexcept { return token_index_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string token_;
  std::size_t token_index_;
  std::size_t column_;
};

/// How generator names are read: x<i> within the alphabet, plus an optional
/// 0-based alias letter (y<i> or z<i> name x_{i+1}).
struct WordSyntax {
  Alphabet alphabet = Alphabet::of_rank(2);
  std::optional<char> alias;
};

inline std::string format_letter(Letter l) {
  std::string s = "x" + std::to_string(l.index);
  if (l.inverse) s += "^-1";
  return s;
}

/// Space-separated generator powers (x1 x3^2 x2^-1); the empty word prints as "1".
inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long long>(j - i);
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(w[i].index);
    if (run > 1 || w[i].inverse) out += "^" + std::to_string(w[i].inverse ? -run : run);
    i = j;
  }
  return out;
}

/// "t^k" prefix when k != 0, then the word; "1" for the identity.
inline std::string format_element(std::int64_t t_exp, const Word& x_part) {
  if (t_exp == 0) return format_word(x_part);
  std::string out = "t^" + std::to_string(t_exp);
  if (!x_part.empty()) out += " " + format_word(x_part);
  return out;
}

struct ParsedElement {
  std::int64_t t_exp = 0;
  Word x_part;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Appends the letters of one generator token; returns false if malformed.
inline bool append_generator(std::string_view tok, const WordSyntax& syntax, Word& out,
                             std::string& why) {
  const char head = tok.front();
  const bool is_x = head == 'x';
  const bool is_alias = syntax.alias && head == *syntax.alias;
  if (!is_x && !is_alias) {
    why = "unknown generator name";
    return false;
  }
  std::string_view rest = tok.substr(1);
  std::string_view exp_text;
  if (auto caret = rest.find('^'); caret != std::string_view::npos) {
    exp_text = rest.substr(caret + 1);
    rest = rest.substr(0, caret);
  }
  std::int32_t index = 0;
  if (!parse_int(rest, index)) {
    why = "malformed generator index";
    return false;
  }
  if (index < 0 && !syntax.alphabet.integer_indexed()) {
    why = "negative indices are only allowed in the shift group";
    return false;
  }
  if (is_alias) ++index;
  int exponent = 1;
  if (!exp_text.empty() || tok.find('^') != std::string_view::npos) {
    if (!parse_int(exp_text, exponent) || exponent == 0) {
      why = "malformed exponent";
      return false;
    }
  }
  if (!syntax.alphabet.contains(gen(index))) {
    why = "generator index out of range for rank " + std::to_string(syntax.alphabet.rank());
    return false;
  }
  out *= Word::generator(index, exponent);
  return true;
}

[[noreturn]] inline void fail_token(const Token& tok, std::size_t index, const std::string& why) {
  std::ostringstream os;
  os << why << ": token '" << tok.text << "' (#" << index + 1 << ", column " << tok.column + 1
     << ")";
  throw ParseError(os.str(), std::string(tok.text), index, tok.column);
}

}  // namespace detail

/// Grammar: ["t" | "t^" int] (gen-token | "1")*, where gen-token is
/// x<i> or x<i>^<int> (or the alias form). No tokens at all means the identity.
inline ParsedElement parse_element(std::string_view text, const WordSyntax& syntax) {
  ParsedElement out;
  const auto tokens = detail::tokenize(text);
  std::size_t i = 0;
  if (!tokens.empty() && tokens[0].text.front() == 't') {
    const std::string_view tok = tokens[0].text;
    if (tok == "t") {
      out.t_exp = 1;
    } else if (tok.size() > 2 && tok[1] == '^' && detail::parse_int(tok.substr(2), out.t_exp)) {
    } else {
      detail::fail_token(tokens[0], 0, "malformed t-power");
    }
    i = 1;
  }
  for (; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    if (tok.text == "1") continue;
    std::string why;
    if (!detail::append_generator(tok.text, syntax, out.x_part, why)) {
      detail::fail_token(tok, i, why);
    }
  }
  return out;
}

inline Word parse_word(std::string_view text, const WordSyntax& syntax) {
  const auto tokens = detail::tokenize(text);
  if (!tokens.empty() && tokens[0].text.front() == 't') {
    detail::fail_token(tokens[0], 0, "a t-power is not allowed in a free-group word");
  }
  return parse_element(text, syntax).x_part;
}

}  // namespace viconj
