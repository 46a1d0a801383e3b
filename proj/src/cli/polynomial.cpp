#include "liekit/cli/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace liekit {

class PolyParser {
 public:
  PolyParser(std::string_view text, Polynomial& out) : text_(text), out_(out) {}

  void run() {
    out_.root_ = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  using Node = Polynomial::Node;
  using Kind = Node::Kind;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int add(Node n) {
    out_.nodes_.push_back(n);
    return static_cast<int>(out_.nodes_.size() - 1);
  }

  std::size_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::size_t v = 0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc()) fail("integer out of range");
    return v;
  }

  double real() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      const std::size_t exp_start = pos_;
      digits();
      if (exp_start == pos_) fail("malformed exponent");
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) fail("malformed number");
    return v;
  }

  int expr() {
    int lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = add({Kind::Add, 0.0, 0, lhs, term()});
      else if (accept('-'))
        lhs = add({Kind::Sub, 0.0, 0, lhs, term()});
      else
        return lhs;
    }
  }
  int term() {
    int lhs = unary();
    while (accept('*')) lhs = add({Kind::Mul, 0.0, 0, lhs, unary()});
    return lhs;
  }
  int unary() {
    if (accept('-')) return add({Kind::Neg, 0.0, 0, unary(), -1});
    if (accept('+')) return unary();
    return power();
  }
  int power() {
    const int base = atom();
    if (!accept('^')) return base;
    const std::size_t e = integer();
    if (e > 64) fail("exponent too large");
    return add({Kind::Pow, 0.0, e, base, -1});
  }
  int atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t i = integer();
      if (i >= out_.n_vars_) fail("variable x" + std::to_string(i) + " out of range (n = " + std::to_string(out_.n_vars_) + ")");
      return add({Kind::Variable, 0.0, i, -1, -1});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return add({Kind::Constant, real(), 0, -1, -1});
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Polynomial& out_;
  std::size_t pos_ = 0;
};

Polynomial Polynomial::parse(std::string_view text, std::size_t n_vars) {
  Polynomial p;
  p.n_vars_ = n_vars;
  PolyParser(text, p).run();
  return p;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

}  // namespace

RealMap parse_polynomial_map(std::string_view spec, std::size_t n_vars, std::size_t expected, std::string name) {
  std::vector<Polynomial> comps;
  for (auto part : split_commas(spec)) comps.push_back(Polynomial::parse(part, n_vars));
  if (expected != 0 && comps.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " components, got " + std::to_string(comps.size()) +
                     " in '" + std::string(spec) + "'");
  const std::size_t k = comps.size();
  return RealMap::from_expr(
      n_vars, k,
      [comps](auto x) {
        using T = typename decltype(x)::value_type;
        std::vector<T> out;
        out.reserve(comps.size());
        for (const auto& c : comps) out.push_back(c.template eval<T>(x));
        return out;
      },
      name.empty() ? std::string(spec) : std::move(name));
}

Vector parse_point(std::string_view text) {
  Vector out;
  for (auto part : split_commas(text)) {
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() || res.ptr != part.data() + part.size() || !std::isfinite(v))
      throw ParseError("malformed coordinate '" + std::string(part) + "' in point '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace liekit
