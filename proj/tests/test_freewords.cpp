#include "subdirect/errors.hpp"
#include "subdirect/freewords.hpp"
#include "subdirect/magnus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace subdirect {
namespace {

Alphabet const& ab() { return free_alphabet(); }
Word w(std::string_view text) { return parse_word(text, ab()); }

TEST(FreeReduce, CancelsAdjacentPairs) {
  std::vector<Letter> const raw{{0, 1}, {0, -1}, {1, 1}};
  EXPECT_EQ(free_reduce(ab(), raw), w("b"));
  EXPECT_TRUE(free_reduce(ab(), {}).empty());
  std::vector<Letter> const inner{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  EXPECT_EQ(free_reduce(ab(), inner).to_string(), "a^2");
}

TEST(FreeReduce, RejectsUnknownLetter) {
  std::vector<Letter> const raw{{2, 1}};
  EXPECT_THROW(free_reduce(ab(), raw), InputError);
}

TEST(FreeReduce, AgreesWithNaiveReductionAndIsIdempotent) {
  oracle::RandomWords gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    oracle::RawWord naive;
    long const length = gen.integer(0, 30);
    for (long i = 0; i < length; ++i) {
      auto const letter = static_cast<std::uint32_t>(gen.integer(0, 1));
      auto const sign = static_cast<std::int8_t>(gen.integer(0, 1) ? 1 : -1);
      raw.push_back({letter, sign});
      naive.emplace_back(letter, sign);
    }
    Word const reduced = free_reduce(ab(), raw);
    EXPECT_EQ(oracle::to_raw(reduced), oracle::naive_reduce(naive));
    EXPECT_EQ(free_reduce(ab(), reduced.letters()), reduced);
  }
}

TEST(MulInv, Examples) {
  EXPECT_TRUE(mul(w("a"), w("a^-1")).empty());
  EXPECT_EQ(inv(w("a b")), w("b^-1 a^-1"));
  EXPECT_EQ(mul_inv(w("a b"), w("1"), MulMode::invert_first), w("b^-1 a^-1"));
  EXPECT_EQ(mul(w("a b"), w("b^-1 a")), w("a a"));
  EXPECT_THROW(mul(w("a"), parse_word("x", gamma_alphabet())), InputError);
}

TEST(MulInv, AssociativeAndInvolutive) {
  oracle::RandomWords gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    Word const u = gen.word(ab());
    Word const v = gen.word(ab());
    Word const x = gen.word(ab());
    EXPECT_EQ(mul(mul(u, v), x), mul(u, mul(v, x)));
    EXPECT_EQ(inv(inv(u)), u);
  }
}

TEST(Comm, Examples) {
  EXPECT_EQ(comm(w("a"), w("b")).to_string(), "a^-1 b^-1 a b");
  EXPECT_TRUE(comm(w("a"), w("a")).empty());
  Word const nested = comm(comm(w("a"), w("b")), w("a"));
  EXPECT_EQ(nested.to_string(), "b^-1 a^-1 b a^-1 b^-1 a b a");
  EXPECT_EQ(nested.length(), 8U);
  std::vector<Word> const one{w("a")};
  EXPECT_THROW(comm(one), InputError);
}

TEST(Comm, NestedMatchesFreeReductionOracle) {
  // [[a,b],a] = [a,b]^-1 a^-1 [a,b] a expanded letter by letter
  oracle::RawWord const a{{0, 1}};
  oracle::RawWord const b{{1, 1}};
  oracle::RawWord const ab_comm = oracle::raw_concat({oracle::raw_inverse(a), oracle::raw_inverse(b), a, b});
  oracle::RawWord const expanded = oracle::raw_concat({oracle::raw_inverse(ab_comm), oracle::raw_inverse(a), ab_comm, a});
  EXPECT_EQ(oracle::to_raw(comm(comm(w("a"), w("b")), w("a"))), oracle::naive_reduce(expanded));
}

TEST(Comm, SwappingArgumentsInverts) {
  oracle::RandomWords gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    Word const u = gen.word(ab());
    Word const v = gen.word(ab());
    EXPECT_EQ(comm(u, v), inv(comm(v, u)));
  }
}

TEST(Substitute, PhiImages) {
  Alphabet const& gamma = gamma_alphabet();
  auto phi = [&](long n) {
    return std::vector<Word>{w("a"), w("b"), w("a").pow(n), w("b").pow(n)};
  };
  EXPECT_EQ(substitute(parse_word("y", gamma), phi(3)), w("a^3"));
  EXPECT_TRUE(substitute(parse_word("z x^-1", gamma), phi(1)).empty());
  EXPECT_TRUE(substitute(Word(gamma), phi(5)).empty());
}

TEST(Substitute, MissingImageIsAnError) {
  std::vector<Word> const partial{w("a")};
  EXPECT_THROW(substitute(w("a b"), partial), InputError);
  std::map<std::string, Word, std::less<>> images{{"a", w("b")}};
  EXPECT_THROW(substitute(w("a b"), images, ab()), InputError);
  images.emplace("b", w("a"));
  EXPECT_EQ(substitute(w("a b"), images, ab()), w("b a"));
}

TEST(Substitute, IsAHomomorphism) {
  oracle::RandomWords gen(14);
  Alphabet const& gamma = gamma_alphabet();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Word> images;
    for (int i = 0; i < 4; ++i) images.push_back(gen.word(ab(), 5));
    Word const u = gen.word(gamma);
    Word const v = gen.word(gamma);
    EXPECT_EQ(substitute(mul(u, v), images), mul(substitute(u, images), substitute(v, images)));
  }
}

TEST(GammaNormalGens, SmallCases) {
  EXPECT_EQ(gamma_normal_gens(1), (std::vector<Word>{w("a"), w("b")}));
  EXPECT_EQ(gamma_normal_gens(2), (std::vector<Word>{w("[a,b]")}));
  EXPECT_EQ(gamma_normal_gens(3), (std::vector<Word>{w("[[a,b],a]"), w("[[a,b],b]")}));
  EXPECT_EQ(gamma_normal_gens(4), (std::vector<Word>{w("[a,b,a,a]"), w("[a,b,a,b]"), w("[a,b,b,a]"), w("[a,b,b,b]")}));
  EXPECT_THROW(gamma_normal_gens(0), InputError);
}

TEST(GammaNormalGens, ExactlyInGammaC) {
  for (int c = 2; c <= 5; ++c) {
    auto const gens = gamma_normal_gens(c);
    EXPECT_EQ(gens.size(), std::size_t{1} << (c - 2));
    for (auto const& g : gens) {
      EXPECT_TRUE(lcs_member(g, c)) << g.to_string();
      EXPECT_FALSE(lcs_member(g, c + 1)) << g.to_string();
    }
  }
}

TEST(WordGrammar, ParsesPowersGroupsAndCommutators) {
  EXPECT_EQ(w("a^3 b^-2"), w("a a a b^-1 b^-1"));
  EXPECT_EQ(w("(a b)^-1"), w("b^-1 a^-1"));
  EXPECT_EQ(w("[a,b]"), w("a^-1 b^-1 a b"));
  EXPECT_EQ(w("[a, b, a]"), w("[[a,b],a]"));
  EXPECT_EQ(w("  a ^ -1  "), w("a^-1"));
  EXPECT_EQ(w("a^+2"), w("a a"));
  EXPECT_TRUE(w("1").empty());
  EXPECT_TRUE(w("a^0").empty());
  Alphabet const multi{"x1", "y"};
  EXPECT_EQ(parse_word("x1 y x1^-1", multi).length(), 3U);
}

TEST(WordGrammar, RejectsMalformedText) {
  for (auto const* bad : {"", "a^", "(a", "[a]", "[a,b", "a)", "2", "A", "ab", "a^x", "a,b", "12"}) {
    EXPECT_THROW(w(bad), InputError) << bad;
  }
}

TEST(WordGrammar, RenderingRoundTrips) {
  oracle::RandomWords gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    Word const g = gen.word(gamma_alphabet());
    EXPECT_EQ(parse_word(g.to_string(), gamma_alphabet()), g);
  }
}

TEST(WordGrammar, IdentifiersInFirstAppearanceOrder) {
  EXPECT_EQ(word_identifiers("[y, z x^-1] y"), (std::vector<std::string>{"y", "z", "x"}));
  EXPECT_THROW(word_identifiers("[y"), InputError);
}

TEST(Alphabet, Invariants) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{}), InputError);
  EXPECT_THROW((Alphabet{"a", "a"}), InputError);
  EXPECT_THROW((Alphabet{"A"}), InputError);
  EXPECT_EQ((Alphabet{"a", "b"}), free_alphabet());
  EXPECT_FALSE((Alphabet{"b", "a"}) == free_alphabet());
}

}  // namespace
}  // namespace subdirect
