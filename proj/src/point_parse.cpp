#include "quartet/point_parse.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quartet {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cartan point syntax error at position " +
                                std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool consume_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) != w) return false;
    // keywords must not run into an identifier character
    const std::size_t after = pos + w.size();
    if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) ||
                                text[after] == '_')) {
      // allow digits after "sqrt" (handled by caller), not after other words
      if (w != "sqrt") return false;
    }
    pos = after;
    return true;
  }

  bool peek_number() {
    skip_ws();
    return pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 (text[pos] == '.' && pos + 1 < text.size() &&
                                  std::isdigit(static_cast<unsigned char>(text[pos + 1]))));
  }

  double parse_number() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected a number");
    try {
      return std::stod(std::string(text.substr(start, pos - start)));
    } catch (const std::exception&) {
      fail("malformed number");
    }
  }

  // e^{[-][k] pi i [/d]}  or  e^{[-][k] i pi [/d]}
  Complex parse_exponential() {
    if (!consume('{')) fail("expected '{' after e^");
    double sign = 1.0;
    if (consume('-')) sign = -1.0;
    double k = 1.0;
    if (peek_number()) k = parse_number();
    bool saw_i = false, saw_pi = false;
    for (int rep = 0; rep < 2; ++rep) {
      if (!saw_pi && consume_word("pi")) {
        saw_pi = true;
      } else if (!saw_i && consume_word("i")) {
        saw_i = true;
      }
    }
    if (!saw_i || !saw_pi) fail("exponential must contain both i and pi");
    double d = 1.0;
    if (consume('/')) d = parse_number();
    if (d == 0.0) fail("zero denominator in exponential");
    if (!consume('}')) fail("expected '}' closing the exponential");
    return std::polar(1.0, sign * k * std::numbers::pi / d);
  }

  // A product of juxtaposed factors.
  Complex parse_term() {
    Complex value = 1.0;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == 'e' && text.substr(pos, 3) == "e^{") {
        pos += 2;
        value *= parse_exponential();
        any = true;
        continue;
      }
      if (consume_word("sqrt")) {
        if (!peek_number()) fail("expected a number after sqrt");
        const double arg = parse_number();
        if (arg < 0) fail("sqrt of a negative number");
        value *= std::sqrt(arg);
        any = true;
        continue;
      }
      if (consume_word("omega")) {
        value *= std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        any = true;
        continue;
      }
      if (consume_word("i")) {
        value *= Complex(0.0, 1.0);
        any = true;
        continue;
      }
      if (peek_number()) {
        double num = parse_number();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          const double den = parse_number();
          if (den == 0.0) fail("division by zero");
          num /= den;
        }
        value *= num;
        any = true;
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    return value;
  }

  Complex parse_entry() {
    Complex value = 0.0;
    double sign = 1.0;
    if (consume('-'))
      sign = -1.0;
    else
      consume('+');
    value += sign * parse_term();
    while (true) {
      if (consume('+'))
        sign = 1.0;
      else if (consume('-'))
        sign = -1.0;
      else
        break;
      value += sign * parse_term();
    }
    return value;
  }

  CartanPoint parse_point() {
    if (!consume('(')) fail("expected '('");
    CartanPoint z;
    for (int k = 0; k < 4; ++k) {
      z[k] = parse_entry();
      if (k < 3 && !consume(',')) fail("expected ','");
    }
    if (!consume(')')) fail("expected ')'");
    if (!at_end()) fail("trailing characters after the point");
    return z;
  }
};

}  // namespace

CartanPoint parse_cartan_point(std::string_view text) {
  Parser p{text};
  return p.parse_point();
}

}  // namespace quartet
