#include <cctype>
#include <string>

#include "idensity/error.hpp"
#include "idensity/index_set.hpp"

namespace idensity {

namespace {

// expr   := term ('|' term)*
// term   := factor (('&' | '\') factor)*
// factor := '~' factor | '(' expr ')' | atom
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IndexSet parse() {
    IndexSet s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("index set: " + what, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  Natural number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 18) fail("number too large");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  IndexSet expr() {
    IndexSet acc = term();
    while (accept('|')) acc = acc | term();
    return acc;
  }

  IndexSet term() {
    IndexSet acc = factor();
    for (;;) {
      if (accept('&')) {
        acc = acc & factor();
      } else if (accept('\\')) {
        acc = acc - factor();
      } else {
        return acc;
      }
    }
  }

  IndexSet factor() {
    if (accept('~')) return ~factor();
    if (accept('(')) {
      IndexSet inner = expr();
      expect(')');
      return inner;
    }
    return atom();
  }

  IndexSet atom() {
    std::size_t at = pos_;
    try {
      if (accept_word("AP")) {
        expect('(');
        Natural first = number();
        expect(',');
        Natural step = number();
        expect(')');
        return IndexSet::progression(first, step);
      }
      if (accept_word("POW")) {
        expect('(');
        Natural base = number();
        expect(')');
        return IndexSet::powers_of(base);
      }
      if (accept_word("FIN")) {
        expect('{');
        std::vector<Natural> elements;
        if (!accept('}')) {
          do {
            elements.push_back(number());
          } while (accept(','));
          expect('}');
        }
        return IndexSet::finite(std::move(elements));
      }
      if (accept_word("SQUARES")) return IndexSet::squares();
      if (accept_word("CUBES")) return IndexSet::cubes();
      if (accept_word("NAT")) return IndexSet::naturals();
      if (accept_word("EMPTY")) return IndexSet::empty();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      pos_ = at;
      fail(e.what());
    }
    fail("expected an atom (AP, POW, FIN, SQUARES, CUBES, NAT, EMPTY)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IndexSet IndexSet::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace idensity
