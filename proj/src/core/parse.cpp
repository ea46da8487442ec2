#include "symsing/core/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace symsing {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const RingPtr& ring) : s_(s), ring_(ring) {}

  QPoly parse() {
    QPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
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

  QPoly expr() {
    QPoly acc(ring_);
    bool neg = eat('-');
    if (!neg) eat('+');
    QPoly t = term();
    acc += neg ? -t : t;
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        QPoly den = power();
        if (den.num_terms() != 1 || den.terms().begin()->first != Exponents(ring_->size(), 0))
          fail("division by a non-constant");
        acc *= inverse(den.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  QPoly power() {
    QPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  QPoly atom() {
    skip();
    if (eat('(')) {
      QPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (eat('-')) return -power();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QPoly(ring_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return QPoly::variable(ring_, *idx);
    }
    fail("expected a number, variable or '('");
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(const std::string& text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace symsing
