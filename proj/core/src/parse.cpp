#include "hyperres/parse.hpp"

#include <cctype>

namespace hyperres {

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  RingPtr ring;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void syntax(const std::string& what, std::size_t at) {
    fail(errc::syntax_error,
         what + " at offset " + std::to_string(at), at);
  }

  std::uint64_t integer(bool exponent_position) {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t v = 0;
    bool overflow = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v >= (1ull << 31)) {
        if (exponent_position)
          fail(errc::exponent_overflow,
               "exponent literal at offset " + std::to_string(start) +
                   " exceeds 2^31",
               start);
        // coefficient literals may be large; reduce as we go
        v %= ring->field().modulus();
        overflow = true;
      }
      ++pos;
    }
    if (pos == start) syntax("expected integer", start);
    (void)overflow;
    return v;
  }

  // longest declared variable name starting at pos, or throw UnknownVariable
  std::size_t variable() {
    skip_ws();
    std::size_t best_len = 0, best_idx = 0;
    const auto& names = ring->var_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string& n = names[i];
      if (n.size() > best_len && s.substr(pos, n.size()) == n) {
        best_len = n.size();
        best_idx = i;
      }
    }
    if (best_len == 0) {
      std::size_t end = pos;
      while (end < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[end])) ||
              s[end] == '_'))
        ++end;
      std::string tok(s.substr(pos, end > pos ? end - pos : 1));
      fail(errc::unknown_variable,
           "unknown variable '" + tok + "' at offset " + std::to_string(pos),
           pos);
    }
    pos += best_len;
    return best_idx;
  }

  Polynomial expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
        continue;
      }
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
          c == '(') {
        acc = acc * factor(); // implicit multiplication
        continue;
      }
      break;
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      std::uint64_t e = integer(true);
      base = base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Polynomial inner = expr();
      skip_ws();
      if (!accept(')')) syntax("expected ')'", pos);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer(false);
      return Polynomial::constant(ring,
                                  static_cast<std::int64_t>(
                                      v % ring->field().modulus()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return Polynomial::variable(ring, variable());
    syntax("unexpected character", pos);
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, RingPtr ring) {
  Parser p{text, 0, std::move(ring)};
  if (p.eof())
    fail(errc::syntax_error, "empty polynomial expression", 0);
  Polynomial out = p.expr();
  if (!p.eof()) p.syntax("trailing input", p.pos);
  return out;
}

} // namespace hyperres
