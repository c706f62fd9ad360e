#include "rrcf/radical.hpp"

#include "rrcf/errors.hpp"

#include <cctype>
#include <numeric>

namespace rrcf {

class RadicalParser {
 public:
  explicit RadicalParser(const std::string& text) : s_(text) {}

  RadicalExpr::NodePtr parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  using NodePtr = RadicalExpr::NodePtr;
  using Op = RadicalExpr::Op;

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("radical parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                      s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static NodePtr node(Op op, std::vector<NodePtr> kids) {
    auto n = std::make_shared<RadicalExpr::Node>();
    n->op = op;
    n->kids = std::move(kids);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (eat('+')) {
        lhs = node(Op::Add, {lhs, term()});
      } else if (eat('-')) {
        lhs = node(Op::Sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (eat('*')) {
        lhs = node(Op::Mul, {lhs, unary()});
      } else if (eat('/')) {
        lhs = node(Op::Div, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (eat('-')) return node(Op::Neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }

  long signed_int() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!eat('^')) return base;
    long p = 1;
    long q = 1;
    if (eat('(')) {
      p = signed_int();
      if (eat('/')) q = signed_int();
      expect(')');
    } else {
      p = signed_int();
    }
    if (q <= 0) fail("exponent denominator must be positive");
    const long g = std::gcd(p, q);
    auto n = std::make_shared<RadicalExpr::Node>();
    n->op = Op::Pow;
    n->exp_num = p / g;
    n->exp_den = q / g;
    n->kids = {base};
    return n;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (s_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      expect('(');
      NodePtr e = expr();
      expect(')');
      return node(Op::Sqrt, {e});
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_shared<RadicalExpr::Node>();
      n->op = Op::Integer;
      n->value = mpz_class(s_.substr(start, pos_ - start));
      return n;
    }
    fail("unexpected character");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

RadicalExpr RadicalExpr::parse(const std::string& text) { return RadicalExpr(RadicalParser(text).parse()); }

RadicalExpr RadicalExpr::integer(const mpz_class& v) {
  if (v < 0) return -integer(-v);
  auto n = std::make_shared<Node>();
  n->op = Op::Integer;
  n->value = v;
  return RadicalExpr(n);
}

RadicalExpr RadicalExpr::make(Op op, std::vector<NodePtr> kids) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->kids = std::move(kids);
  return RadicalExpr(n);
}

RadicalExpr RadicalExpr::operator+(const RadicalExpr& o) const { return make(Op::Add, {node_, o.node_}); }
RadicalExpr RadicalExpr::operator-(const RadicalExpr& o) const { return make(Op::Sub, {node_, o.node_}); }
RadicalExpr RadicalExpr::operator*(const RadicalExpr& o) const { return make(Op::Mul, {node_, o.node_}); }
RadicalExpr RadicalExpr::operator/(const RadicalExpr& o) const { return make(Op::Div, {node_, o.node_}); }
RadicalExpr RadicalExpr::operator-() const { return make(Op::Neg, {node_}); }
RadicalExpr RadicalExpr::sqrt() const { return make(Op::Sqrt, {node_}); }

RadicalExpr RadicalExpr::pow(long p, long q) const {
  if (q <= 0) throw DomainError("exponent denominator must be positive");
  const long g = std::gcd(p, q);
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->exp_num = p / g;
  n->exp_den = q / g;
  n->kids = {node_};
  return RadicalExpr(n);
}

Real RadicalExpr::eval_node(const Node& n, mpfr_prec_t bits) {
  switch (n.op) {
    case Op::Integer:
      return Real(n.value, bits);
    case Op::Add:
      return eval_node(*n.kids[0], bits) + eval_node(*n.kids[1], bits);
    case Op::Sub:
      return eval_node(*n.kids[0], bits) - eval_node(*n.kids[1], bits);
    case Op::Mul:
      return eval_node(*n.kids[0], bits) * eval_node(*n.kids[1], bits);
    case Op::Div: {
      Real d = eval_node(*n.kids[1], bits);
      if (d.is_zero()) throw DomainError("radical expression divides by zero");
      return eval_node(*n.kids[0], bits) / d;
    }
    case Op::Neg:
      return -eval_node(*n.kids[0], bits);
    case Op::Sqrt: {
      Real v = eval_node(*n.kids[0], bits);
      if (v.sign() < 0) throw DomainError("negative radicand in radical expression");
      return rrcf::sqrt(v);
    }
    case Op::Pow: {
      Real v = eval_node(*n.kids[0], bits);
      if (n.exp_den != 1 && v.sign() <= 0) throw DomainError("non-positive base of a fractional power");
      return rrcf::pow(v, n.exp_num, static_cast<unsigned long>(n.exp_den));
    }
  }
  throw DomainError("corrupt radical expression");
}

Real RadicalExpr::evaluate(mpfr_prec_t bits) const {
  // Nested radicals lose a few bits per level; carry 64 extra.
  Real v = eval_node(*node_, bits + 64);
  return v.with_bits(bits);
}

Real RadicalExpr::evaluate(const PrecisionCtx& ctx) const {
  Real v = evaluate(ctx.working_bits());
  v.set_at_digits(ctx.digits);
  return v;
}

namespace {

int precedence(RadicalExpr::Op op) {
  using Op = RadicalExpr::Op;
  switch (op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    default:
      return 5;
  }
}

}  // namespace

std::string RadicalExpr::print_node(const Node& n, int parent_prec) {
  const int p = precedence(n.op);
  std::string s;
  switch (n.op) {
    case Op::Integer:
      s = n.value.get_str();
      break;
    case Op::Add:
      s = print_node(*n.kids[0], 1) + "+" + print_node(*n.kids[1], 2);
      break;
    case Op::Sub:
      s = print_node(*n.kids[0], 1) + "-" + print_node(*n.kids[1], 2);
      break;
    case Op::Mul:
      s = print_node(*n.kids[0], 2) + "*" + print_node(*n.kids[1], 3);
      break;
    case Op::Div:
      s = print_node(*n.kids[0], 2) + "/" + print_node(*n.kids[1], 3);
      break;
    case Op::Neg:
      s = "-" + print_node(*n.kids[0], 3);
      break;
    case Op::Sqrt:
      return "sqrt(" + print_node(*n.kids[0], 0) + ")";
    case Op::Pow: {
      const std::string e = n.exp_den == 1 && n.exp_num >= 0
                                ? std::to_string(n.exp_num)
                                : "(" + std::to_string(n.exp_num) +
                                      (n.exp_den == 1 ? "" : "/" + std::to_string(n.exp_den)) + ")";
      s = print_node(*n.kids[0], 5) + "^" + e;
      break;
    }
  }
  return p < parent_prec ? "(" + s + ")" : s;
}

std::string RadicalExpr::to_string() const { return print_node(*node_, 0); }

nlohmann::json RadicalExpr::json_node(const Node& n) {
  using nlohmann::json;
  switch (n.op) {
    case Op::Integer:
      return json{{"int", n.value.get_str()}};
    case Op::Add:
      return json{{"op", "add"}, {"args", {json_node(*n.kids[0]), json_node(*n.kids[1])}}};
    case Op::Sub:
      return json{{"op", "sub"}, {"args", {json_node(*n.kids[0]), json_node(*n.kids[1])}}};
    case Op::Mul:
      return json{{"op", "mul"}, {"args", {json_node(*n.kids[0]), json_node(*n.kids[1])}}};
    case Op::Div:
      return json{{"op", "div"}, {"args", {json_node(*n.kids[0]), json_node(*n.kids[1])}}};
    case Op::Neg:
      return json{{"op", "neg"}, {"args", {json_node(*n.kids[0])}}};
    case Op::Sqrt:
      return json{{"op", "sqrt"}, {"args", {json_node(*n.kids[0])}}};
    case Op::Pow:
      return json{{"op", "pow"}, {"exp", {n.exp_num, n.exp_den}}, {"args", {json_node(*n.kids[0])}}};
  }
  return json();
}

nlohmann::json RadicalExpr::to_json() const { return json_node(*node_); }

RadicalExpr::NodePtr RadicalExpr::node_from_json(const nlohmann::json& j) {
  auto n = std::make_shared<Node>();
  if (j.contains("int")) {
    n->op = Op::Integer;
    n->value = mpz_class(j.at("int").get<std::string>());
    return n;
  }
  const std::string op = j.at("op").get<std::string>();
  const auto& args = j.at("args");
  size_t arity = 2;
  if (op == "add") {
    n->op = Op::Add;
  } else if (op == "sub") {
    n->op = Op::Sub;
  } else if (op == "mul") {
    n->op = Op::Mul;
  } else if (op == "div") {
    n->op = Op::Div;
  } else if (op == "neg") {
    n->op = Op::Neg;
    arity = 1;
  } else if (op == "sqrt") {
    n->op = Op::Sqrt;
    arity = 1;
  } else if (op == "pow") {
    n->op = Op::Pow;
    arity = 1;
    n->exp_num = j.at("exp").at(0).get<long>();
    n->exp_den = j.at("exp").at(1).get<long>();
    if (n->exp_den <= 0) throw DomainError("pow exponent denominator must be positive");
  } else {
    throw DomainError("unknown radical op '" + op + "'");
  }
  if (args.size() != arity) throw DomainError("wrong arity for radical op '" + op + "'");
  for (const auto& a : args) n->kids.push_back(node_from_json(a));
  return n;
}

RadicalExpr RadicalExpr::from_json(const nlohmann::json& j) { return RadicalExpr(node_from_json(j)); }

bool RadicalExpr::equal_nodes(const Node& a, const Node& b) {
  if (a.op != b.op || a.kids.size() != b.kids.size()) return false;
  if (a.op == Op::Integer) return a.value == b.value;
  if (a.op == Op::Pow && (a.exp_num != b.exp_num || a.exp_den != b.exp_den)) return false;
  for (size_t i = 0; i < a.kids.size(); ++i) {
    if (!equal_nodes(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

bool operator==(const RadicalExpr& a, const RadicalExpr& b) {
  return RadicalExpr::equal_nodes(*a.node_, *b.node_);
}

}  // namespace rrcf
