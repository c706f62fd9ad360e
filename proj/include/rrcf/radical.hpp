#pragma once

// Radical expression trees over the integers: +, -, *, /, sqrt and rational
// powers. Expressions are evaluated at request-time precision and can be
// written as infix text or as a JSON AST.

#include "rrcf/real.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace rrcf {

class RadicalExpr {
 public:
  enum class Op { Integer, Add, Sub, Mul, Div, Neg, Sqrt, Pow };

  /// Parses infix text, e.g. "((1+sqrt(5))/2)^(3/2)*(3+sqrt(10))^(1/2)".
  static RadicalExpr parse(const std::string& text);
  static RadicalExpr integer(const mpz_class& v);
  static RadicalExpr from_json(const nlohmann::json& j);

  RadicalExpr operator+(const RadicalExpr& o) const;
  RadicalExpr operator-(const RadicalExpr& o) const;
  RadicalExpr operator*(const RadicalExpr& o) const;
  RadicalExpr operator/(const RadicalExpr& o) const;
  RadicalExpr operator-() const;
  RadicalExpr sqrt() const;
  RadicalExpr pow(long p, long q = 1) const;

  /// Principal real branches throughout; DomainError if a radicand is negative.
  Real evaluate(mpfr_prec_t bits) const;
  Real evaluate(const PrecisionCtx& ctx) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  Op op() const { return node_->op; }

  friend bool operator==(const RadicalExpr& a, const RadicalExpr& b);

 private:
  struct Node {
    Op op = Op::Integer;
    mpz_class value;  // Integer
    long exp_num = 1;
    long exp_den = 1;  // Pow
    std::vector<std::shared_ptr<const Node>> kids;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit RadicalExpr(NodePtr n) : node_(std::move(n)) {}
  static RadicalExpr make(Op op, std::vector<NodePtr> kids);

  static Real eval_node(const Node& n, mpfr_prec_t bits);
  static std::string print_node(const Node& n, int parent_prec);
  static nlohmann::json json_node(const Node& n);
  static NodePtr node_from_json(const nlohmann::json& j);
  static bool equal_nodes(const Node& a, const Node& b);

  friend class RadicalParser;

  NodePtr node_;
};

}  // namespace rrcf
