#include "supercoinv/detail/term_parser.hpp"

#include <cctype>
#include <string>

#include "supercoinv/errors.hpp"

namespace supercoinv::detail {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  long number() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void parse_factor(Cursor& cur, int nvars, ParsedTerm& term) {
  char kind = cur.take();
  long index = cur.number();
  if (index < 1 || index > nvars) cur.fail("variable index out of range");
  if (kind == 'x') {
    long power = 1;
    if (cur.accept('^')) power = cur.number();
    int pos = static_cast<int>(index - 1);
    term.bosonic.set(pos, term.bosonic[pos] + static_cast<int>(power));
  } else {
    term.fermionic.push_back(static_cast<int>(index));
  }
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, int nvars) {
  Cursor cur(text);
  std::vector<ParsedTerm> out;
  if (text == "0") return out;
  if (text.empty()) cur.fail("empty input");
  bool first = true;
  while (!cur.done()) {
    ParsedTerm term{Rational(1), Monomial{}, {}};
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!first && !cur.accept('+')) {
      cur.fail("expected '+' or '-'");
    }
    first = false;

    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::string num = cur.digits();
      if (cur.accept('/')) num += "/" + cur.digits();
      term.coeff = Rational(num);
      term.coeff.canonicalize();
      if (term.coeff == 0) cur.fail("zero coefficient");
      need_factor = cur.accept('*');
    }
    if (need_factor) {
      do {
        if (cur.peek() != 'x' && cur.peek() != 't') cur.fail("expected variable");
        parse_factor(cur, nvars, term);
      } while (cur.accept('*'));
    }
    term.coeff *= sign;
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace supercoinv::detail
