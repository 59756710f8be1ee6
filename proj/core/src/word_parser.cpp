#include "subdirect/errors.hpp"
#include "subdirect/freewords.hpp"

#include <cctype>
#include <limits>

namespace subdirect {

namespace {

// Recursive descent over
//   product := factor*
//   factor  := atom ('^' integer)*
//   atom    := identifier | '1' | '(' product ')' | '[' product (',' product)+ ']'
// When no alphabet is given only the syntax is checked and identifiers are
// collected.
class WordParser {
 public:
  WordParser(std::string_view text, Alphabet const* alphabet) : text_(text), alphabet_(alphabet) {}

  std::optional<Word> parse() {
    skip_space();
    if (at_end()) fail("expected a word");
    auto result = product();
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

  std::vector<std::string> identifiers() const { return identifiers_; }

 private:
  using Value = std::optional<Word>;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::string const& message) const {
    throw InputError("word syntax error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + message);
  }

  Value identity() const { return alphabet_ ? Value(Word(*alphabet_)) : Value(); }

  static Value multiply(Value lhs, Value const& rhs) {
    if (lhs && rhs) *lhs *= *rhs;
    return lhs;
  }

  bool starts_factor() const {
    char const ch = peek();
    return (ch >= 'a' && ch <= 'z') || ch == '1' || ch == '(' || ch == '[';
  }

  Value product() {
    Value result = identity();
    skip_space();
    bool any = false;
    while (starts_factor()) {
      result = multiply(std::move(result), factor());
      any = true;
      skip_space();
    }
    if (!any) fail("expected a word");
    return result;
  }

  Value factor() {
    Value base = atom();
    skip_space();
    while (peek() == '^') {
      ++pos_;
      skip_space();
      long const exponent = integer();
      if (base) base = base->pow(exponent);
      skip_space();
    }
    return base;
  }

  long integer() {
    std::size_t const start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t const digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    Integer const value = parse_integer(text_.substr(start, pos_ - start));
    if (!value.fits_slong_p() || abs(value) > Integer(1'000'000)) fail("exponent out of range");
    return value.get_si();
  }

  Value atom() {
    char const ch = peek();
    if (ch == '1') {
      ++pos_;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) fail("only the literal 1 may appear as a number");
      return identity();
    }
    if (ch == '(') {
      ++pos_;
      Value inner = product();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      std::vector<Value> args;
      args.push_back(product());
      skip_space();
      while (peek() == ',') {
        ++pos_;
        args.push_back(product());
        skip_space();
      }
      if (peek() != ']') fail("expected ',' or ']'");
      ++pos_;
      if (args.size() < 2) fail("a commutator needs at least two arguments");
      if (!alphabet_) return Value();
      std::vector<Word> words;
      words.reserve(args.size());
      for (auto& arg : args) words.push_back(std::move(*arg));
      return comm(words);
    }
    return letter();
  }

  Value letter() {
    std::size_t const start = pos_;
    while (!at_end() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a letter");
    std::string name(text_.substr(start, pos_ - start));
    bool seen = false;
    for (auto const& id : identifiers_) seen = seen || id == name;
    if (!seen) identifiers_.push_back(name);
    if (!alphabet_) return Value();
    if (!alphabet_->contains(name)) {
      pos_ = start;
      fail("unknown letter '" + name + "'");
    }
    return Word::generator(*alphabet_, name);
  }

  std::string_view text_;
  Alphabet const* alphabet_;
  std::size_t pos_ = 0;
  std::vector<std::string> identifiers_;
};

}  // namespace

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  WordParser parser(text, &alphabet);
  return *parser.parse();
}

std::vector<std::string> word_identifiers(std::string_view text) {
  WordParser parser(text, nullptr);
  parser.parse();
  return parser.identifiers();
}

}  // namespace subdirect
