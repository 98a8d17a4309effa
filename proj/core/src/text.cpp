#include "baryassoc/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "baryassoc/error.hpp"

namespace baryassoc {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

namespace {

constexpr unsigned kMaxExponent = 4096;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, RingId ring, unsigned arity, std::size_t line)
      : text_(text), ring_(ring), arity_(arity), line_(line) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail(ParseError::Kind::Syntax, "empty expression");
    Polynomial out = expr();
    skip_space();
    if (!at_end()) fail(ParseError::Kind::Syntax, std::string("unexpected '") + peek() + "'");
    return out;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return acc;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(ParseError::Kind::Syntax, "'^' needs a nonnegative integer exponent");
    }
    mpz_class e(digits());
    if (e > kMaxExponent) fail_at(at, ParseError::Kind::Syntax, "exponent too large");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail(ParseError::Kind::Syntax, "unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_space();
      if (!accept(')')) fail(ParseError::Kind::Syntax, "expected ')'");
      return inner;
    }
    if (c == 'x') return variable();
    if (c == 'i' || std::isdigit(static_cast<unsigned char>(c))) return literal();
    fail(ParseError::Kind::Syntax, std::string("unexpected '") + c + "'");
  }

  Polynomial variable() {
    const std::size_t at = pos_;
    ++pos_;  // 'x'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(ParseError::Kind::Syntax, "variable needs an index, as in x1");
    }
    mpz_class index(digits());
    if (index == 0 || index > arity_) {
      fail_at(at, ParseError::Kind::VariableOutOfRange,
              "x" + index.get_str() + " is outside x1..x" + std::to_string(arity_));
    }
    no_juxtaposition();
    return Polynomial::variable(ring_, static_cast<unsigned>(index.get_ui()), arity_);
  }

  Polynomial literal() {
    const std::size_t at = pos_;
    mpq_class value = 1;
    if (peek() != 'i') {
      mpz_class num(digits());
      mpz_class den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail(ParseError::Kind::Syntax, "expected a denominator after '/'");
        }
        den = mpz_class(digits());
        if (den == 0) fail_at(at, ParseError::Kind::Syntax, "zero denominator");
      }
      value = mpq_class(num, den);
      value.canonicalize();
    }
    bool imaginary = false;
    if (!at_end() && peek() == 'i') {
      ++pos_;
      imaginary = true;
    }
    no_juxtaposition();
    try {
      RingValue v = imaginary ? RingValue(ring_, 0, value) : RingValue(ring_, value);
      return Polynomial::constant(v, arity_);
    } catch (const Error&) {
      fail_at(at, ParseError::Kind::BadLiteralForRing,
              "literal '" + std::string(text_.substr(at, pos_ - at)) + "' is not an element of ring " +
                  std::string(ring_name(ring_)));
    }
  }

  // `2x1`, `x1x2`, `3(x1)` and friends are rejected.
  void no_juxtaposition() {
    if (at_end()) return;
    const char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
      fail(ParseError::Kind::Syntax, "implicit multiplication is not allowed; use '*'");
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool accept(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) const {
    fail_at(pos_, kind, message);
  }
  [[noreturn]] void fail_at(std::size_t column, ParseError::Kind kind, const std::string& message) const {
    std::ostringstream out;
    if (line_ > 0) out << "line " << line_ << ", ";
    out << "column " << column + 1 << ": " << message;
    throw ParseError(kind, std::max<std::size_t>(line_, 1), column + 1, out.str());
  }

  std::string_view text_;
  RingId ring_;
  unsigned arity_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RingValue parse_ring_literal(std::string_view text, RingId ring) {
  Polynomial p = ExpressionParser(text, ring, 0, 0).parse();
  return constant_value(p);
}

Polynomial parse_polynomial(std::string_view text, RingId ring, unsigned arity) {
  return ExpressionParser(text, ring, arity, 0).parse();
}

PolyFamily parse_family(std::string_view text) {
  std::optional<RingId> ring;
  std::vector<Polynomial> members;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    last_line = line_no;

    const std::string_view line = trim(raw);
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
    if (line.empty() || line.front() == '#') continue;

    if (!ring) {
      if (line.substr(0, 4) != "ring" || line.size() < 5 || !std::isspace(static_cast<unsigned char>(line[4]))) {
        throw ParseError(ParseError::Kind::Syntax, line_no, indent + 1,
                         "line " + std::to_string(line_no) + ": expected 'ring <int|rat|gaussint|gaussrat>'");
      }
      ring = parse_ring_name(trim(line.substr(5)));
      if (!ring) {
        throw ParseError(ParseError::Kind::Syntax, line_no, indent + 6,
                         "line " + std::to_string(line_no) + ": unknown ring '" +
                             std::string(trim(line.substr(5))) + "'");
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    const std::string expected = "F" + std::to_string(members.size() + 1);
    if (eq == std::string_view::npos || trim(line.substr(0, eq)) != expected) {
      throw ParseError(ParseError::Kind::Syntax, line_no, indent + 1,
                       "line " + std::to_string(line_no) + ": expected '" + expected + " = <polynomial>'");
    }
    const auto arity = static_cast<unsigned>(members.size() + 1);
    const std::string_view body = line.substr(eq + 1);
    try {
      members.push_back(ExpressionParser(body, *ring, arity, line_no).parse());
    } catch (const ParseError& e) {
      const std::size_t column = indent + eq + 1 + e.column();
      throw ParseError(e.kind(), line_no, column,
                       "line " + std::to_string(line_no) + ", column " + std::to_string(column) +
                           ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
  }
  if (!ring) throw ParseError(ParseError::Kind::Syntax, std::max<std::size_t>(last_line, 1), 1, "missing 'ring' header");
  if (members.empty()) throw ParseError(ParseError::Kind::Syntax, last_line, 0, "family has no members");
  return PolyFamily(std::move(members));
}

std::string render_family(const PolyFamily& family) {
  std::string out = "ring " + std::string(ring_name(family.ring())) + "\n";
  for (unsigned n = 1; n <= family.max_arity(); ++n) {
    out += "F" + std::to_string(n) + " = " + family.member(n).to_string() + "\n";
  }
  return out;
}

}  // namespace baryassoc
