#pragma once

#include "subdirect/freewords.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subdirect {

// Presentation <A, X | S1, S2, S3> of Gamma_1 in which A generates the kernel
// N of Gamma_1 -> Q = <X | R>:
//   S1: x^e a x^-e V(x, a, e)  for every x, a and e = +-1
//   S2: r U(r)                 for every r in R
//   S3: words in A.
// All words live over alphabet(), the letters of A followed by those of X.
class StructPres1 {
 public:
  StructPres1(std::vector<std::string> a_letters, std::vector<std::string> x_letters);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t a_count() const noexcept { return a_count_; }
  std::size_t x_count() const noexcept { return alphabet_.size() - a_count_; }
  std::vector<std::string> a_letters() const;
  std::vector<std::string> x_letters() const;
  bool is_a_letter(Letter letter) const noexcept { return letter.index < a_count_; }

  Word parse(std::string_view text) const { return parse_word(text, alphabet_); }

  // x and a index into X and A respectively.
  Word const& v_word(std::size_t x, std::size_t a, int eps) const;
  void set_v_word(std::size_t x, std::size_t a, int eps, Word word);

  std::vector<Word> relators;  // R, X-letters only
  std::vector<Word> u_words;   // U(r) per relator, A-letters only
  std::vector<Word> s3;        // A-letters only

  // Checks table totality and letter subsets; throws InputError.
  void validate() const;

 private:
  std::size_t v_slot(std::size_t x, std::size_t a, int eps) const;

  Alphabet alphabet_;
  std::size_t a_count_;
  std::vector<Word> v_words_;
};

// A formal conjugate b^{w(X)} = w^-1 b^sign w, kept symbolic until assembly.
struct FormalConjugate {
  std::size_t b = 0;  // index into B
  int sign = 1;
  Word conjugator;    // X-letters only
};

using ConjugateWord = std::vector<FormalConjugate>;

// Presentation <B, X | T2, T3> of Gamma_2 with B in the kernel of
// Gamma_2 -> Q: T2 holds r W(r) for each r in R, T3 words in B*.
// Words live over alphabet(), the letters of B followed by those of X.
class StructPres2 {
 public:
  StructPres2(std::vector<std::string> b_letters, std::vector<std::string> x_letters);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::size_t b_count() const noexcept { return b_count_; }
  std::vector<std::string> b_letters() const;
  std::vector<std::string> x_letters() const;

  Word parse(std::string_view text) const { return parse_word(text, alphabet_); }
  Word expand(ConjugateWord const& word) const;

  std::vector<ConjugateWord> w_words;  // W(r) per relator of R
  std::vector<ConjugateWord> t3;

  void validate() const;

 private:
  Alphabet alphabet_;
  std::size_t b_count_;
};

struct IdentityEntry {
  Word conjugator;        // w_j, X-letters of StructPres1
  std::size_t relator;    // index into StructPres1::relators
  int eps = 1;
};

// prod_j w_j^-1 r_j^{eps_j} w_j, which must freely reduce to 1.
using IdentitySeq = std::vector<IdentityEntry>;

enum class Family { I, II, III, IV };
std::string_view family_tag(Family family);

struct TaggedRelator {
  Family family;
  Word word;
  friend bool operator==(TaggedRelator const&, TaggedRelator const&) = default;
};

struct Presentation {
  Alphabet generators;
  std::vector<TaggedRelator> relators;

  std::size_t count(Family family) const;

  // "gens: <letters>" then "rel <tag>: <word>" per relator.
  std::string to_string() const;
  static Presentation parse(std::string_view text);
};

// Called with each intermediate word while X-letters are pushed rightwards.
using RewriteObserver = std::function<void(Word const&)>;

// z_sigma: substitute r -> r U(r) into sigma, then move every X-letter past
// the A-letters with x^e a^d = V(x, a, e)^-d x^e until the X-part cancels.
Word translate_identity(IdentitySeq const& sigma, StructPres1 const& p1, RewriteObserver const& observer = {});

// Relator families on A u B u X:
//   I   S1, S3, Z, T3
//   II  r U(r) W(r)
//   III [a, b]
//   IV  [a, r U(r)]
Presentation assemble(StructPres1 const& p1, StructPres2 const& p2, std::vector<Word> const& z_words);

// Interpretation of generator names as words of a free group.
struct Interpretation {
  Alphabet target;
  std::map<std::string, Word, std::less<>> images;

  Interpretation(Alphabet target_alphabet) : target(std::move(target_alphabet)) {}  // NOLINT
  void assign(std::string const& name, std::string_view word_text);
};

// theta(a) = (a, 1), theta(b) = (1, b), theta(x) = (x, x): a letter missing
// from one interpretation is sent to 1 there, missing from both is an error.
std::pair<Word, Word> theta_eval(Word const& g, Interpretation const& iota1, Interpretation const& iota2);

struct AuditEntry {
  Family family;
  Word relator;
  Word image1;
  Word image2;
  bool pass = false;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  bool passed() const;
  std::size_t failures() const;
  std::string to_string() const;
};

AuditReport relator_audit(Presentation const& p, Interpretation const& iota1, Interpretation const& iota2);

}  // namespace subdirect
