#include "jetvar/parse.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "jetvar/error.hpp"

namespace jetvar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const JetSpace& space) : text_(text), space_(space) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  const JetSpace& space_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
  }

  Expr expr() {
    std::vector<Expr> terms{term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(Expr::negate(term()));
      } else {
        break;
      }
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors{unary()};
    while (true) {
      if (accept('*')) {
        factors.push_back(unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        if (!at_digit()) fail("expected a number after '/'");
        Rational d = number();
        if (d == 0) throw SyntaxError(at, "division by zero");
        factors.push_back(Expr(Rational(1 / d)));
      } else {
        break;
      }
    }
    return Expr::product(std::move(factors));
  }

  Expr unary() {
    if (accept('-')) return Expr::negate(unary());
    return factor();
  }

  Expr factor() {
    Expr b = base();
    if (accept('^')) {
      const bool negative = accept('-');
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      const int k = std::stoi(digits);
      return Expr::power(std::move(b), negative ? -k : k);
    }
    return b;
  }

  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    const std::string literal(text_.substr(start, pos_ - start));
    if (literal == "." || literal.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    return rational_from_string(literal);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expr base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Expr(number());
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    const std::size_t start = pos_;
    const std::string name = identifier();
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      const std::string suffix = identifier();
      if (suffix.empty()) fail("expected coordinate names after '_'");
      return jet(name, suffix, start);
    }
    if (auto kind = function_kind(name)) {
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::function(*kind, std::move(arg));
    }
    if (auto axis = space_.find_coord(name)) return Expr::base(*axis);
    if (auto field = space_.find_field(name)) return Expr::jet(*field, MultiIndex(space_.p()));
    throw UnknownIdentifier("unknown identifier '" + name + "' at position " +
                            std::to_string(start));
  }

  static std::optional<FunctionKind> function_kind(const std::string& name) {
    if (name == "sin") return FunctionKind::Sin;
    if (name == "cos") return FunctionKind::Cos;
    if (name == "exp") return FunctionKind::Exp;
    if (name == "ln") return FunctionKind::Ln;
    return std::nullopt;
  }

  // Splits `suffix` into coordinate names; several coordinates may share a
  // prefix, so this backtracks.
  bool split_suffix(const std::string& suffix, std::size_t from, std::vector<int>& counts) const {
    if (from == suffix.size()) return true;
    for (std::size_t axis = 0; axis < space_.p(); ++axis) {
      const auto& n = space_.coord_name(axis);
      if (suffix.compare(from, n.size(), n) == 0) {
        ++counts[axis];
        if (split_suffix(suffix, from + n.size(), counts)) return true;
        --counts[axis];
      }
    }
    return false;
  }

  Expr jet(const std::string& name, const std::string& suffix, std::size_t start) {
    auto field = space_.find_field(name);
    if (!field)
      throw UnknownIdentifier("'" + name + "' at position " + std::to_string(start) +
                              " is not a field");
    std::vector<int> counts(space_.p(), 0);
    if (!split_suffix(suffix, 0, counts))
      throw UnknownIdentifier("suffix '" + suffix + "' at position " + std::to_string(start) +
                              " is not a string of coordinate names");
    MultiIndex index(std::move(counts));
    if (index.order() > space_.max_order())
      throw OrderExceeded("'" + name + "_" + suffix + "' has order " +
                          std::to_string(index.order()) + " above the declared " +
                          std::to_string(space_.max_order()));
    return Expr::jet(*field, std::move(index));
  }
};

}  // namespace

Expr parse_expr(std::string_view text, const JetSpace& space) {
  return Parser(text, space).parse();
}

}  // namespace jetvar
