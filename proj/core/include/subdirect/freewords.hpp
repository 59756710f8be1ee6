#pragma once

#include "subdirect/numbers.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subdirect {

// An ordered, immutable list of distinct letter names. Copies share storage;
// two alphabets are equal when their letter lists are equal.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);
  Alphabet(std::initializer_list<std::string_view> letters);

  std::size_t size() const noexcept { return letters_->size(); }
  std::string const& name(std::size_t index) const { return letters_->at(index); }
  std::vector<std::string> const& names() const noexcept { return *letters_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  friend bool operator==(Alphabet const& lhs, Alphabet const& rhs) noexcept {
    return lhs.letters_ == rhs.letters_ || *lhs.letters_ == *rhs.letters_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> letters_;
};

// {a, b}: the rank-2 free group F.
Alphabet const& free_alphabet();
// {w, x, y, z}: the rank-4 free group mapped into F^Z.
Alphabet const& gamma_alphabet();

bool is_identifier(std::string_view text) noexcept;

struct Letter {
  std::uint32_t index = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const noexcept { return {index, static_cast<std::int8_t>(-sign)}; }
  friend bool operator==(Letter, Letter) = default;
};

// A freely reduced word over an alphabet. Every constructor reduces, so two
// Words are equal as group elements iff they compare equal.
class Word {
 public:
  explicit Word(Alphabet alphabet);
  Word(Alphabet alphabet, std::span<const Letter> raw);

  static Word generator(Alphabet const& alphabet, std::string_view name, long exponent = 1);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word operator*(Word const& rhs) const;
  Word& operator*=(Word const& rhs);
  Word inverse() const;
  Word pow(long exponent) const;

  // Same letters read in another alphabet, matched by name.
  Word rebase(Alphabet const& target) const;

  // Letters collapsed into runs, e.g. "a^2 b^-1 a"; the empty word is "1".
  std::string to_string() const;

  friend bool operator==(Word const& lhs, Word const& rhs) {
    return lhs.alphabet_ == rhs.alphabet_ && lhs.letters_ == rhs.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

Word free_reduce(Alphabet const& alphabet, std::span<const Letter> raw);

enum class MulMode { multiply, invert_first };
Word mul_inv(Word const& u, Word const& v, MulMode mode = MulMode::multiply);
Word mul(Word const& u, Word const& v);
Word inv(Word const& u);

// Left-normed commutator [y1, ..., yk] = [[...[y1, y2], ...], yk] with
// [u, v] = u^-1 v^-1 u v.
Word comm(std::span<const Word> args);
Word comm(Word const& u, Word const& v);

// Image of g under the homomorphism sending letter i to images[i].
Word substitute(Word const& g, std::span<const Word> images);
Word substitute(Word const& g, std::map<std::string, Word, std::less<>> const& images,
                Alphabet const& target);

// Normal generators of the c-th lower central term of F = <a, b>:
// {a, b} for c = 1, otherwise [a, b, y3, ..., yc] with yi in {a, b}.
std::vector<Word> gamma_normal_gens(int c);

// Word grammar: identifiers [a-z][a-z0-9]*, juxtaposition, x^k powers,
// parentheses, [u, v, ...] commutators, and "1" for the identity.
Word parse_word(std::string_view text, Alphabet const& alphabet);

// Syntax-checks text and returns its identifiers in first-appearance order.
std::vector<std::string> word_identifiers(std::string_view text);

}  // namespace subdirect
