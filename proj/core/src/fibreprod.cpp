#include "subdirect/fibreprod.hpp"

#include "subdirect/errors.hpp"

#include <algorithm>
#include <sstream>

namespace subdirect {

namespace {

std::vector<std::string> concat(std::vector<std::string> lhs, std::vector<std::string> const& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

// Letters [first, last) of the alphabet.
bool uses_only(Word const& word, std::size_t first, std::size_t last) {
  return std::all_of(word.letters().begin(), word.letters().end(),
                     [&](Letter letter) { return letter.index >= first && letter.index < last; });
}

void require_letters(Word const& word, Alphabet const& alphabet, std::size_t first, std::size_t last,
                     std::string const& what) {
  if (!(word.alphabet() == alphabet)) throw InputError(what + " is over the wrong alphabet");
  if (!uses_only(word, first, last)) throw InputError(what + " '" + word.to_string() + "' uses letters outside its set");
}

std::vector<std::string> slice(Alphabet const& alphabet, std::size_t first, std::size_t last) {
  return {alphabet.names().begin() + static_cast<std::ptrdiff_t>(first),
          alphabet.names().begin() + static_cast<std::ptrdiff_t>(last)};
}

}  // namespace

// StructPres1

StructPres1::StructPres1(std::vector<std::string> a_letters, std::vector<std::string> x_letters)
    : alphabet_(concat(a_letters, x_letters)),
      a_count_(a_letters.size()),
      v_words_(2 * a_letters.size() * x_letters.size(), Word(alphabet_)) {}

std::vector<std::string> StructPres1::a_letters() const { return slice(alphabet_, 0, a_count_); }

std::vector<std::string> StructPres1::x_letters() const { return slice(alphabet_, a_count_, alphabet_.size()); }

std::size_t StructPres1::v_slot(std::size_t x, std::size_t a, int eps) const {
  if (x >= x_count() || a >= a_count_ || (eps != 1 && eps != -1)) throw InputError("V table index out of range");
  return (x * a_count_ + a) * 2 + (eps < 0 ? 1 : 0);
}

Word const& StructPres1::v_word(std::size_t x, std::size_t a, int eps) const { return v_words_[v_slot(x, a, eps)]; }

void StructPres1::set_v_word(std::size_t x, std::size_t a, int eps, Word word) {
  require_letters(word, alphabet_, 0, a_count_, "V word");
  v_words_[v_slot(x, a, eps)] = std::move(word);
}

void StructPres1::validate() const {
  if (u_words.size() != relators.size()) throw InputError("U table must have one word per relator");
  for (auto const& r : relators) require_letters(r, alphabet_, a_count_, alphabet_.size(), "relator");
  for (auto const& u : u_words) require_letters(u, alphabet_, 0, a_count_, "U word");
  for (auto const& s : s3) require_letters(s, alphabet_, 0, a_count_, "S3 word");
  for (auto const& v : v_words_) require_letters(v, alphabet_, 0, a_count_, "V word");
}

// StructPres2

StructPres2::StructPres2(std::vector<std::string> b_letters, std::vector<std::string> x_letters)
    : alphabet_(concat(b_letters, x_letters)), b_count_(b_letters.size()) {}

std::vector<std::string> StructPres2::b_letters() const { return slice(alphabet_, 0, b_count_); }

std::vector<std::string> StructPres2::x_letters() const { return slice(alphabet_, b_count_, alphabet_.size()); }

Word StructPres2::expand(ConjugateWord const& word) const {
  Word result(alphabet_);
  for (auto const& conjugate : word) {
    if (conjugate.b >= b_count_) throw InputError("formal conjugate refers to an unknown B letter");
    if (conjugate.sign != 1 && conjugate.sign != -1) throw InputError("formal conjugate sign must be +1 or -1");
    require_letters(conjugate.conjugator, alphabet_, b_count_, alphabet_.size(), "conjugating word");
    Word const b = Word::generator(alphabet_, alphabet_.name(conjugate.b), conjugate.sign);
    result *= conjugate.conjugator.inverse() * b * conjugate.conjugator;
  }
  return result;
}

void StructPres2::validate() const {
  for (auto const& w : w_words) expand(w);
  for (auto const& t : t3) expand(t);
}

// Presentation

std::string_view family_tag(Family family) {
  switch (family) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
  }
  return "?";
}

std::size_t Presentation::count(Family family) const {
  return static_cast<std::size_t>(
      std::count_if(relators.begin(), relators.end(), [&](TaggedRelator const& r) { return r.family == family; }));
}

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (auto const& name : generators.names()) out += " " + name;
  out += "\n";
  for (auto const& r : relators) out += "rel " + std::string(family_tag(r.family)) + ": " + r.word.to_string() + "\n";
  return out;
}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Alphabet> generators;
  std::vector<TaggedRelator> relators;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string_view body(line);
    body.remove_prefix(first);
    auto const where = " on line " + std::to_string(line_number);
    if (body.starts_with("gens:")) {
      if (generators) throw InputError("duplicate gens line" + where);
      std::istringstream names{std::string(body.substr(5))};
      std::vector<std::string> letters;
      for (std::string name; names >> name;) letters.push_back(name);
      generators.emplace(std::move(letters));
      continue;
    }
    if (!body.starts_with("rel ")) throw InputError("expected 'gens:' or 'rel <tag>:'" + where);
    if (!generators) throw InputError("relator before the gens line" + where);
    body.remove_prefix(4);
    auto const colon = body.find(':');
    if (colon == std::string_view::npos) throw InputError("missing ':' after the family tag" + where);
    std::string_view const tag = body.substr(0, colon);
    std::optional<Family> family;
    for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
      if (tag == family_tag(f)) family = f;
    }
    if (!family) throw InputError("unknown family tag '" + std::string(tag) + "'" + where);
    relators.push_back({*family, parse_word(body.substr(colon + 1), *generators)});
  }
  if (!generators) throw InputError("presentation has no gens line");
  return {*generators, std::move(relators)};
}

// translate_identity

Word translate_identity(IdentitySeq const& sigma, StructPres1 const& p1, RewriteObserver const& observer) {
  p1.validate();
  Alphabet const& alphabet = p1.alphabet();
  std::size_t const a_count = p1.a_count();

  Word product(alphabet);
  Word zeta(alphabet);
  for (auto const& entry : sigma) {
    if (entry.relator >= p1.relators.size()) throw InputError("identity entry refers to an unknown relator");
    if (entry.eps != 1 && entry.eps != -1) throw InputError("identity entry exponent must be +1 or -1");
    require_letters(entry.conjugator, alphabet, a_count, alphabet.size(), "identity conjugator");
    Word const& r = p1.relators[entry.relator];
    Word const& w = entry.conjugator;
    product *= w.inverse() * r.pow(entry.eps) * w;
    zeta *= w.inverse() * (r * p1.u_words[entry.relator]).pow(entry.eps) * w;
  }
  if (!product.empty()) throw InputError("not an identity sequence: the product reduces to " + product.to_string());

  std::vector<Letter> letters(zeta.letters().begin(), zeta.letters().end());
  auto const is_a = [&](Letter letter) { return letter.index < a_count; };
  std::size_t const x_bound = static_cast<std::size_t>(std::count_if(letters.begin(), letters.end(), [&](Letter l) { return !is_a(l); }));
  if (observer) observer(zeta);

  for (std::size_t pass = 0;; ++pass) {
    auto const last_a = std::find_if(letters.rbegin(), letters.rend(), is_a);
    if (last_a == letters.rend()) break;
    auto const last_a_pos = static_cast<std::size_t>(letters.rend() - last_a) - 1;
    std::optional<std::size_t> x_pos;
    for (std::size_t i = last_a_pos; i-- > 0;) {
      if (!is_a(letters[i])) {
        x_pos = i;
        break;
      }
    }
    if (!x_pos) break;
    if (pass >= x_bound) throw InternalError("X-letter elimination exceeded its step bound");

    // letters (x_pos, last_a_pos] are all A-letters; carry the X-letter past them
    Letter const x = letters[*x_pos];
    std::vector<Letter> rewritten(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(*x_pos));
    for (std::size_t i = *x_pos + 1; i <= last_a_pos; ++i) {
      Letter const a = letters[i];
      Word const v = p1.v_word(x.index - a_count, a.index, x.sign).pow(-a.sign);
      rewritten.insert(rewritten.end(), v.letters().begin(), v.letters().end());
      if (observer) {
        std::vector<Letter> snapshot = rewritten;
        snapshot.push_back(x);
        snapshot.insert(snapshot.end(), letters.begin() + static_cast<std::ptrdiff_t>(i) + 1, letters.end());
        observer(Word(alphabet, snapshot));
      }
    }
    rewritten.push_back(x);
    rewritten.insert(rewritten.end(), letters.begin() + static_cast<std::ptrdiff_t>(last_a_pos) + 1, letters.end());
    Word const reduced(alphabet, rewritten);
    letters.assign(reduced.letters().begin(), reduced.letters().end());
  }

  Word const result(alphabet, letters);
  if (!uses_only(result, 0, a_count)) {
    throw InternalError("X-letters did not cancel after elimination: " + result.to_string());
  }
  return result;
}

// assemble

Presentation assemble(StructPres1 const& p1, StructPres2 const& p2, std::vector<Word> const& z_words) {
  p1.validate();
  p2.validate();
  if (p1.x_letters() != p2.x_letters()) throw InputError("the two presentations must share the same X letters");
  if (p2.w_words.size() != p1.relators.size()) throw InputError("W table must have one entry per relator of R");
  for (auto const& z : z_words) require_letters(z, p1.alphabet(), 0, p1.a_count(), "Z word");

  auto const a_letters = p1.a_letters();
  auto const b_letters = p2.b_letters();
  auto const x_letters = p1.x_letters();
  std::optional<Alphabet> joined;
  try {
    joined.emplace(concat(concat(a_letters, b_letters), x_letters));
  } catch (InputError const& e) {
    throw InputError(std::string("alphabet collision between A, B and X: ") + e.what());
  }
  Alphabet const& gens = *joined;
  Presentation out{gens, {}};
  auto const emit = [&](Family family, Word const& word) { out.relators.push_back({family, word.rebase(gens)}); };

  Alphabet const& alpha1 = p1.alphabet();
  for (std::size_t x = 0; x < x_letters.size(); ++x) {
    for (std::size_t a = 0; a < a_letters.size(); ++a) {
      for (int eps : {1, -1}) {
        Word const xe = Word::generator(alpha1, x_letters[x], eps);
        emit(Family::I, xe * Word::generator(alpha1, a_letters[a]) * xe.inverse() * p1.v_word(x, a, eps));
      }
    }
  }
  for (auto const& s : p1.s3) emit(Family::I, s);
  for (auto const& z : z_words) emit(Family::I, z);
  for (auto const& t : p2.t3) emit(Family::I, p2.expand(t));

  for (std::size_t r = 0; r < p1.relators.size(); ++r) {
    Word const head = (p1.relators[r] * p1.u_words[r]).rebase(gens);
    out.relators.push_back({Family::II, head * p2.expand(p2.w_words[r]).rebase(gens)});
  }

  for (auto const& a : a_letters) {
    for (auto const& b : b_letters) out.relators.push_back({Family::III, comm(Word::generator(gens, a), Word::generator(gens, b))});
  }

  for (auto const& a : a_letters) {
    for (std::size_t r = 0; r < p1.relators.size(); ++r) {
      Word const ru = (p1.relators[r] * p1.u_words[r]).rebase(gens);
      out.relators.push_back({Family::IV, comm(Word::generator(gens, a), ru)});
    }
  }
  return out;
}

// theta

void Interpretation::assign(std::string const& name, std::string_view word_text) {
  images.insert_or_assign(name, parse_word(word_text, target));
}

std::pair<Word, Word> theta_eval(Word const& g, Interpretation const& iota1, Interpretation const& iota2) {
  std::vector<Word> first;
  std::vector<Word> second;
  for (auto const& name : g.alphabet().names()) {
    auto const one = iota1.images.find(name);
    auto const two = iota2.images.find(name);
    if (one == iota1.images.end() && two == iota2.images.end()) {
      throw InputError("generator '" + name + "' has no interpretation");
    }
    first.push_back(one != iota1.images.end() ? one->second : Word(iota1.target));
    second.push_back(two != iota2.images.end() ? two->second : Word(iota2.target));
  }
  for (auto const& w : first) {
    if (!(w.alphabet() == iota1.target)) throw InputError("interpretation image over the wrong alphabet");
  }
  for (auto const& w : second) {
    if (!(w.alphabet() == iota2.target)) throw InputError("interpretation image over the wrong alphabet");
  }
  return {substitute(g, first), substitute(g, second)};
}

bool AuditReport::passed() const { return failures() == 0; }

std::size_t AuditReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](AuditEntry const& e) { return !e.pass; }));
}

std::string AuditReport::to_string() const {
  std::string out;
  for (auto const& e : entries) {
    out += std::string(e.pass ? "pass" : "FAIL") + " " + std::string(family_tag(e.family)) + ": " + e.relator.to_string();
    if (!e.pass) out += " -> (" + e.image1.to_string() + ", " + e.image2.to_string() + ")";
    out += "\n";
  }
  out += passed() ? "audit: pass\n" : "audit: " + std::to_string(failures()) + " failing relator(s)\n";
  return out;
}

AuditReport relator_audit(Presentation const& p, Interpretation const& iota1, Interpretation const& iota2) {
  AuditReport report;
  report.entries.reserve(p.relators.size());
  for (auto const& r : p.relators) {
    auto [first, second] = theta_eval(r.word, iota1, iota2);
    bool const pass = first.empty() && second.empty();
    report.entries.push_back({r.family, r.word, std::move(first), std::move(second), pass});
  }
  return report;
}

}  // namespace subdirect
