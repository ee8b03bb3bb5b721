#include "pqs/parse.hpp"

#include <cctype>

namespace pqs {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& vars, const TowerPtr& tower)
      : s_(s), vars_(vars), tower_(tower) {}

  EMPoly parse() {
    EMPoly acc(vars_.size());
    skip();
    if (pos_ == s_.size()) bad("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        bad("expected '+' or '-'");
      }
      EMPoly t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip();
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(ErrorKind::Input, "polynomial text: " + why + " at offset " + std::to_string(pos_));
  }

  EMPoly term() {
    EMPoly t(vars_.size(), EpsScalar(Rat(1)));
    t = t * factor();
    skip();
    while (peek() == '*' || peek() == '/') {
      char op = peek();
      ++pos_;
      skip();
      if (op == '/') {
        Rat d = number();
        if (is_zero(d)) bad("division by zero");
        t = t.scaled(EpsScalar(Rat(1 / d)));
      } else {
        t = t * factor();
      }
      skip();
    }
    return t;
  }

  Rat number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) bad("expected a number");
    return parse_rat(s_.substr(start, pos_ - start));
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    Rat e = number();
    return static_cast<int>(e.get_num().get_si());
  }

  EMPoly factor() {
    std::size_t nv = vars_.size();
    if (peek() == '(') {
      ++pos_;
      std::size_t depth = 1, start = pos_;
      while (pos_ < s_.size() && depth) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) bad("unbalanced parenthesis");
      Parser inner(s_.substr(start, pos_ - 1 - start), vars_, tower_);
      EMPoly p = inner.parse();
      return p.pow(exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rat c = number();
      int e = exponent();
      return EMPoly(nv, EpsScalar(rat_pow(c, static_cast<unsigned>(e))));
    }
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (start == pos_) bad("expected a factor");
    std::string name(s_.substr(start, pos_ - start));
    int e = exponent();
    for (std::size_t i = 0; i < nv; ++i)
      if (vars_[i] == name) {
        Mono m(nv, 0);
        m[i] = e;
        return EMPoly::monomial(nv, m, EpsScalar(Rat(1)));
      }
    int k = tower_ ? tower_->find(name) : -1;
    if (k < 0) bad("unknown identifier '" + name + "'");
    return EMPoly(nv, EpsScalar::eps(tower_, static_cast<std::size_t>(k), e));
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  const TowerPtr& tower_;
  std::size_t pos_ = 0;
};

}  // namespace

EMPoly parse_epoly(std::string_view text, const std::vector<std::string>& vars, const TowerPtr& tower) {
  return Parser(text, vars, tower).parse();
}

QMPoly parse_qpoly(std::string_view text, const std::vector<std::string>& vars) {
  TowerPtr none;
  EMPoly p = parse_epoly(text, vars, none);
  return p.map_coeffs([](const EpsScalar& c) { return c.rational(); });
}

QPoly parse_upoly(std::string_view text, const std::string& var) {
  QMPoly p = parse_qpoly(text, {var});
  std::vector<Rat> c(static_cast<std::size_t>(std::max(p.total_degree() + 1, 0)), Rat(0));
  for (const auto& [m, x] : p.terms()) c[static_cast<std::size_t>(m[0])] = x;
  return QPoly(std::move(c));
}

EPoly parse_eupoly(std::string_view text, const TowerPtr& tower, const std::string& var) {
  EMPoly p = parse_epoly(text, {var}, tower);
  std::vector<EpsScalar> c(static_cast<std::size_t>(std::max(p.total_degree() + 1, 0)), EpsScalar(0));
  for (const auto& [m, x] : p.terms()) c[static_cast<std::size_t>(m[0])] = x;
  return EPoly(std::move(c));
}

std::vector<std::string> var_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace pqs
