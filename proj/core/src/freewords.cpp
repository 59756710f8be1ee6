#include "subdirect/freewords.hpp"

#include "subdirect/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace subdirect {

namespace {

std::vector<std::string> checked_letters(std::vector<std::string> letters) {
  if (letters.empty()) throw InputError("alphabet must not be empty");
  std::set<std::string_view> seen;
  for (auto const& name : letters) {
    if (!is_identifier(name)) throw InputError("invalid letter name '" + name + "'");
    if (!seen.insert(name).second) throw InputError("duplicate letter '" + name + "'");
  }
  return letters;
}

void require_same_alphabet(Word const& u, Word const& v) {
  if (!(u.alphabet() == v.alphabet())) throw InputError("words are over different alphabets");
}

}  // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || text[0] < 'a' || text[0] > 'z') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9');
  });
}

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::make_shared<const std::vector<std::string>>(checked_letters(std::move(letters)))) {}

Alphabet::Alphabet(std::initializer_list<std::string_view> letters)
    : Alphabet(std::vector<std::string>(letters.begin(), letters.end())) {}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  auto const& letters = *letters_;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == name) return i;
  }
  return std::nullopt;
}

Alphabet const& free_alphabet() {
  static Alphabet const alphabet{"a", "b"};
  return alphabet;
}

Alphabet const& gamma_alphabet() {
  static Alphabet const alphabet{"w", "x", "y", "z"};
  return alphabet;
}

Word free_reduce(Alphabet const& alphabet, std::span<const Letter> raw) { return Word(alphabet, raw); }

Word::Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(Alphabet alphabet, std::span<const Letter> raw) : alphabet_(std::move(alphabet)) {
  letters_.reserve(raw.size());
  for (Letter const letter : raw) {
    if (letter.index >= alphabet_.size()) {
      throw InputError("letter index " + std::to_string(letter.index) + " outside alphabet");
    }
    if (letter.sign != 1 && letter.sign != -1) throw InputError("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back() == letter.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }
}

Word Word::generator(Alphabet const& alphabet, std::string_view name, long exponent) {
  auto index = alphabet.index_of(name);
  if (!index) throw InputError("unknown letter '" + std::string(name) + "'");
  Letter const letter{static_cast<std::uint32_t>(*index), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
  std::vector<Letter> raw(static_cast<std::size_t>(std::labs(exponent)), letter);
  return Word(alphabet, raw);
}

Word Word::operator*(Word const& rhs) const {
  Word result(*this);
  result *= rhs;
  return result;
}

Word& Word::operator*=(Word const& rhs) {
  require_same_alphabet(*this, rhs);
  for (Letter const letter : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == letter.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }
  return *this;
}

Word Word::inverse() const {
  Word result(alphabet_);
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) result.letters_.push_back(it->inverse());
  return result;
}

Word Word::pow(long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  Word result(alphabet_);
  for (long i = 0; i < std::labs(exponent); ++i) result *= base;
  return result;
}

Word Word::rebase(Alphabet const& target) const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (Letter const letter : letters_) {
    auto const& name = alphabet_.name(letter.index);
    auto index = target.index_of(name);
    if (!index) throw InputError("letter '" + name + "' is not in the target alphabet");
    raw.push_back({static_cast<std::uint32_t>(*index), letter.sign});
  }
  return Word(target, raw);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t run = 1;
    while (i + run < letters_.size() && letters_[i + run] == letters_[i]) ++run;
    if (!out.empty()) out += ' ';
    out += alphabet_.name(letters_[i].index);
    long const exponent = static_cast<long>(run) * letters_[i].sign;
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i += run;
  }
  return out;
}

Word mul_inv(Word const& u, Word const& v, MulMode mode) {
  require_same_alphabet(u, v);
  return mode == MulMode::multiply ? u * v : u.inverse();
}

Word mul(Word const& u, Word const& v) { return mul_inv(u, v, MulMode::multiply); }

Word inv(Word const& u) { return u.inverse(); }

Word comm(Word const& u, Word const& v) {
  require_same_alphabet(u, v);
  return u.inverse() * v.inverse() * u * v;
}

Word comm(std::span<const Word> args) {
  if (args.size() < 2) throw InputError("a commutator needs at least two arguments");
  Word result = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) result = comm(result, args[i]);
  return result;
}

Word substitute(Word const& g, std::span<const Word> images) {
  if (images.size() < g.alphabet().size()) {
    throw InputError("no image assigned to letter '" + g.alphabet().name(images.size()) + "'");
  }
  if (images.size() > g.alphabet().size()) throw InputError("more images than letters");
  Alphabet const& target = images.front().alphabet();
  for (auto const& image : images) {
    if (!(image.alphabet() == target)) throw InputError("images are over different alphabets");
  }
  std::vector<Word> inverses;
  inverses.reserve(images.size());
  for (auto const& image : images) inverses.push_back(image.inverse());

  Word result(target);
  for (Letter const letter : g.letters()) result *= letter.sign > 0 ? images[letter.index] : inverses[letter.index];
  return result;
}

Word substitute(Word const& g, std::map<std::string, Word, std::less<>> const& images, Alphabet const& target) {
  std::vector<Word> ordered;
  ordered.reserve(g.alphabet().size());
  for (auto const& name : g.alphabet().names()) {
    auto it = images.find(name);
    if (it == images.end()) throw InputError("no image assigned to letter '" + name + "'");
    if (!(it->second.alphabet() == target)) throw InputError("image of '" + name + "' is not over the target alphabet");
    ordered.push_back(it->second);
  }
  return substitute(g, ordered);
}

std::vector<Word> gamma_normal_gens(int c) {
  if (c < 1) throw InputError("lower central series index must be at least 1");
  Alphabet const& ab = free_alphabet();
  Word const a = Word::generator(ab, "a");
  Word const b = Word::generator(ab, "b");
  if (c == 1) return {a, b};

  std::vector<Word> current{comm(a, b)};
  for (int weight = 3; weight <= c; ++weight) {
    std::vector<Word> next;
    next.reserve(current.size() * 2);
    for (auto const& word : current) {
      next.push_back(comm(word, a));
      next.push_back(comm(word, b));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace subdirect
