#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "liekit/calculus/real_map.hpp"

namespace liekit {

/// Parsed polynomial expression in the variables x0 .. x{n-1}.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := real | 'x' integer | '(' expr ')'
///
/// Whitespace is ignored. Implicit multiplication is not accepted.
class Polynomial {
 public:
  /// Throws ParseError on malformed input or a variable index >= n_vars.
  static Polynomial parse(std::string_view text, std::size_t n_vars);

  std::size_t n_vars() const { return n_vars_; }

  template <class T>
  T eval(std::span<const T> x) const {
    return eval_node<T>(root_, x);
  }

 private:
  struct Node {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Neg, Pow } kind;
    double value = 0.0;
    std::size_t index = 0;  // variable index or exponent
    int lhs = -1;
    int rhs = -1;
  };
  friend class PolyParser;

  template <class T>
  T eval_node(int id, std::span<const T> x) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    switch (n.kind) {
      case Node::Kind::Constant: return T(n.value);
      case Node::Kind::Variable: return x[n.index];
      case Node::Kind::Add: return eval_node<T>(n.lhs, x) + eval_node<T>(n.rhs, x);
      case Node::Kind::Sub: return eval_node<T>(n.lhs, x) - eval_node<T>(n.rhs, x);
      case Node::Kind::Mul: return eval_node<T>(n.lhs, x) * eval_node<T>(n.rhs, x);
      case Node::Kind::Neg: return -eval_node<T>(n.lhs, x);
      case Node::Kind::Pow: return ipow(eval_node<T>(n.lhs, x), static_cast<unsigned>(n.index));
    }
    return T(0.0);
  }

  std::size_t n_vars_ = 0;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Comma-separated component expressions as a map R^n_vars -> R^k. When
/// `expected` is non-zero the component count must match it.
RealMap parse_polynomial_map(std::string_view spec, std::size_t n_vars, std::size_t expected = 0,
                             std::string name = {});

/// Comma-separated reals. Throws ParseError.
Vector parse_point(std::string_view text);

}  // namespace liekit
