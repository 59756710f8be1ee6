#include "subdirect/errors.hpp"
#include "subdirect/magnus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace subdirect {
namespace {

Monomial const A = Monomial::of(Symbol::alpha);
Monomial const B = Monomial::of(Symbol::beta);

Word fw(std::string_view text) { return parse_word(text, free_alphabet()); }
Word gw(std::string_view text) { return parse_word(text, gamma_alphabet()); }

// Builds a series from (monomial spelling, rational) pairs.
Series rational_series(int trunc, std::initializer_list<std::pair<std::string_view, long>> terms) {
  Series s(trunc);
  for (auto const& [mono, c] : terms) s.add(Monomial::parse(mono), TPoly(c));
  return s;
}

Series from_dense(oracle::DensePoly const& p) {
  Series s(p.trunc);
  for (auto const& [mono, c] : p.coeffs) s.add(Monomial::parse(mono.empty() ? "1" : mono), TPoly(c));
  return s;
}

Series homogeneous_part(Series const& s, int degree, int trunc) {
  Series out(trunc);
  for (auto const& [mono, c] : s.terms()) {
    if (mono.length() == degree) out.add(mono, c);
  }
  return out;
}

TEST(TPoly, ArithmeticAndRendering) {
  TPoly const t = TPoly::t();
  TPoly const p = t * (t - TPoly(1));
  EXPECT_EQ(p.to_string(), "-t + t^2");
  EXPECT_EQ((-p).to_string(), "t - t^2");
  EXPECT_EQ((p * TPoly(Rational(1, 2))).to_string(), "-1/2*t + 1/2*t^2");
  EXPECT_EQ(TPoly(3).to_string(), "3");
  EXPECT_EQ((TPoly(-3) + t * t * TPoly(2)).to_string(), "-3 + 2*t^2");
  EXPECT_EQ(TPoly().to_string(), "0");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(5), 20);
  TPoly rest;
  EXPECT_EQ(p.divide(t - TPoly(1), &rest), t);
  EXPECT_TRUE(rest.is_zero());
}

TEST(Monomial, OrderingIsLengthThenLex) {
  EXPECT_LT(Monomial{}, A);
  EXPECT_LT(A, B);
  EXPECT_LT(B, A * A);
  EXPECT_LT(A * B, B * A);
  EXPECT_EQ((A * B * B).to_string(), "ABB");
  EXPECT_EQ(Monomial::parse("BAB"), B * A * B);
  EXPECT_THROW(Monomial::parse("AC"), InputError);
}

TEST(SeriesMul, Examples) {
  Series const plus_a = rational_series(2, {{"1", 1}, {"A", 1}});
  Series const minus_a = rational_series(2, {{"1", 1}, {"A", -1}});
  EXPECT_EQ(series_mul(plus_a, minus_a), rational_series(2, {{"1", 1}, {"AA", -1}}));

  // term-by-term expansion oracle
  oracle::DensePoly const lhs{2, {{"", 1}, {"A", 1}}};
  oracle::DensePoly const rhs{2, {{"", 1}, {"B", 1}}};
  Series const plus_b = rational_series(2, {{"1", 1}, {"B", 1}});
  EXPECT_EQ(series_mul(plus_a, plus_b), from_dense(lhs.times(rhs)));
  EXPECT_EQ(series_mul(plus_a, plus_b), rational_series(2, {{"1", 1}, {"A", 1}, {"B", 1}, {"AB", 1}}));

  EXPECT_THROW(series_mul(Series::one(2), Series::one(3)), InputError);
}

TEST(SeriesMul, OneIsTheIdentity) {
  oracle::RandomWords gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    Series const s = eta_gamma(gen.word(gamma_alphabet(), 8), 4);
    EXPECT_EQ(series_mul(Series::one(4), s), s);
    EXPECT_EQ(series_mul(s, Series::one(4)), s);
  }
}

TEST(SeriesInv, Examples) {
  Series const s = rational_series(3, {{"1", 1}, {"A", 1}});
  Series const inverse = series_inv(s);
  EXPECT_EQ(inverse, rational_series(3, {{"1", 1}, {"A", -1}, {"AA", 1}, {"AAA", -1}}));
  EXPECT_EQ(series_mul(s, inverse), Series::one(3));
  EXPECT_EQ(series_inv(Series::one(3)), Series::one(3));

  Series const ab = rational_series(3, {{"1", 1}, {"AB", 1}});
  EXPECT_EQ(series_inv(ab), rational_series(3, {{"1", 1}, {"AB", -1}}));
  EXPECT_EQ(series_mul(ab, series_inv(ab)), Series::one(3));
}

TEST(SeriesInv, RejectsNonUnitConstant) {
  EXPECT_THROW(series_inv(rational_series(2, {{"1", 2}, {"A", 1}})), NonInvertibleError);
  EXPECT_THROW(series_inv(rational_series(2, {{"A", 1}})), NonInvertibleError);
}

TEST(BinomialSeries, FormalExponent) {
  Series const s = binomial_series_t(Symbol::alpha, 4);
  TPoly const t = TPoly::t();
  EXPECT_EQ(s.coefficient(A * A), t * (t - TPoly(1)) * TPoly(Rational(1, 2)));
  EXPECT_EQ(s.coefficient(A * A * A * A).degree(), 4);
  EXPECT_EQ(specialize(s, 0), Series::one(4));
  EXPECT_THROW(binomial_series_t(Symbol::alpha, -1), InputError);
}

TEST(BinomialSeries, IntegerExponent) {
  Series const plus_a = rational_series(3, {{"1", 1}, {"A", 1}});
  EXPECT_EQ(binomial_series(Symbol::alpha, 2, 3), series_mul(plus_a, plus_a));
  EXPECT_EQ(binomial_series(Symbol::alpha, 2, 3), rational_series(3, {{"1", 1}, {"A", 2}, {"AA", 1}}));
}

TEST(EtaFree, Examples) {
  EXPECT_EQ(eta_free(fw("a"), 3), rational_series(3, {{"1", 1}, {"A", 1}}));
  EXPECT_EQ(eta_free(fw("a a^-1"), 3), Series::one(3));
  EXPECT_EQ(eta_free(fw("[a,b]"), 2), rational_series(2, {{"1", 1}, {"AB", 1}, {"BA", -1}}));
  EXPECT_THROW(eta_free(gw("w"), 2), InputError);
}

TEST(EtaFree, MatchesDenseExpansionOracle) {
  oracle::RandomWords gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    Word const g = gen.word(free_alphabet(), 10);
    EXPECT_EQ(eta_free(g, 4), from_dense(oracle::magnus_oracle(oracle::to_raw(g), 4))) << g.to_string();
  }
}

TEST(EtaGamma, Examples) {
  TPoly const t = TPoly::t();
  Series expected = Series::one(1);
  expected.add(B, t - TPoly(1));
  EXPECT_EQ(eta_gamma(gw("z x^-1"), 1), expected);

  Series y_expected = Series::one(1);
  y_expected.add(A, t);
  EXPECT_EQ(eta_gamma(gw("y"), 1), y_expected);

  for (int trunc : {0, 1, 4, 7}) {
    Series one_plus_alpha = Series::one(trunc);
    one_plus_alpha.add(A, TPoly(1));
    EXPECT_EQ(eta_gamma(gw("w"), trunc), one_plus_alpha);
  }
  EXPECT_THROW(eta_gamma(fw("a"), 2), InputError);
}

TEST(EtaGamma, ZxInverseKModJ2) {
  // eta(z x^-k) = 1 + (t - k) beta mod J^2
  Word const z = gw("z");
  Word const x = gw("x");
  TPoly const t = TPoly::t();
  for (long k = -3; k <= 3; ++k) {
    Series expected = Series::one(1);
    expected.add(B, t - TPoly(k));
    EXPECT_EQ(eta_gamma(z * x.pow(-k), 1), expected) << k;
  }
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(eta_gamma(gw("y"), 3), 0), Series::one(3));
  EXPECT_EQ(specialize(eta_gamma(gw("z x^-1"), 1), 1), Series::one(1));

  // C(-1, k) = (-1)^k against the geometric series (1 + alpha)^-1
  Series const specialized = specialize(binomial_series_t(Symbol::alpha, 5), -1);
  EXPECT_EQ(specialized, series_inv(rational_series(5, {{"1", 1}, {"A", 1}})));
  EXPECT_EQ(specialized, from_dense(oracle::letter_image('A', -1, 5)));
}

TEST(LcsMember, Examples) {
  EXPECT_FALSE(lcs_member(fw("a"), 2));
  EXPECT_TRUE(lcs_member(fw("[a,b]"), 2));
  EXPECT_FALSE(lcs_member(fw("[a,b]"), 3));
  EXPECT_TRUE(lcs_member(fw("a"), 1));
  EXPECT_THROW(lcs_member(fw("a"), 0), InputError);
}

TEST(NilpEq, Examples) {
  EXPECT_TRUE(nilp_eq(fw("a b"), fw("b a"), 2));
  EXPECT_FALSE(nilp_eq(fw("a b"), fw("b a"), 3));
  oracle::RandomWords gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    Word const g = gen.word(free_alphabet());
    EXPECT_TRUE(nilp_eq(g, g, static_cast<int>(gen.integer(1, 5))));
  }
}

TEST(MagnusLaws, Homomorphism) {
  oracle::RandomWords gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    Word const u = gen.word(free_alphabet());
    Word const v = gen.word(free_alphabet());
    EXPECT_EQ(eta_free(mul(u, v), 6), series_mul(eta_free(u, 6), eta_free(v, 6)));
    Word const p = gen.word(gamma_alphabet());
    Word const q = gen.word(gamma_alphabet());
    EXPECT_EQ(eta_gamma(mul(p, q), 6), series_mul(eta_gamma(p, 6), eta_gamma(q, 6)));
  }
}

TEST(MagnusLaws, Inverse) {
  oracle::RandomWords gen(25);
  for (int trial = 0; trial < 100; ++trial) {
    Word const g = gen.word(gamma_alphabet());
    EXPECT_EQ(series_mul(eta_gamma(g, 6), eta_gamma(inv(g), 6)), Series::one(6));
    EXPECT_EQ(series_inv(eta_gamma(g, 6)), eta_gamma(inv(g), 6));
  }
}

TEST(MagnusLaws, CommutingSquare) {
  oracle::RandomWords gen(26);
  Word const a = fw("a");
  Word const b = fw("b");
  for (int trial = 0; trial < 100; ++trial) {
    Word const g = gen.word(gamma_alphabet());
    long const n = gen.integer(-3, 3);
    std::vector<Word> const phi{a, b, a.pow(n), b.pow(n)};
    EXPECT_EQ(specialize(eta_gamma(g, 6), n), eta_free(substitute(g, phi), 6)) << g.to_string() << " n=" << n;
  }
}

TEST(MagnusLaws, DegreeBound) {
  oracle::RandomWords gen(27);
  for (int trial = 0; trial < 200; ++trial) {
    Series const s = eta_gamma(gen.word(gamma_alphabet()), 6);
    for (auto const& [mono, coefficient] : s.terms()) EXPECT_LE(coefficient.degree(), mono.length());
  }
}

TEST(MagnusLaws, Monotonicity) {
  oracle::RandomWords gen(28);
  std::vector<Word> samples = gamma_normal_gens(4);
  for (int trial = 0; trial < 60; ++trial) samples.push_back(comm(gen.word(free_alphabet(), 6), gen.word(free_alphabet(), 6)));
  for (auto const& g : samples) {
    for (int c = 1; c <= 5; ++c) {
      if (!lcs_member(g, c)) continue;
      for (int lower = 1; lower <= c; ++lower) EXPECT_TRUE(lcs_member(g, lower));
    }
  }
}

TEST(MagnusLaws, TruncationCoherence) {
  oracle::RandomWords gen(29);
  for (int trial = 0; trial < 50; ++trial) {
    Word const g = gen.word(gamma_alphabet(), 12);
    Series const full = eta_gamma(g, 6);
    for (int lower = 0; lower < 6; ++lower) EXPECT_EQ(full.truncated(lower), eta_gamma(g, lower));
  }
}

TEST(MagnusLaws, CommutatorLeadingTerm) {
  // eta([U,V]) - 1 = uv - vu mod J^{k+l+1} for leading parts u in J^k, v in J^l
  oracle::RandomWords gen(30);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto sample = [&] {
      Word g = gen.word(gamma_alphabet(), 6);
      if (gen.integer(0, 1) == 1) g = comm(g, gen.word(gamma_alphabet(), 4));
      return g;
    };
    Word const U = sample();
    Word const V = sample();
    int const k = eta_gamma(U, 6).lowest_positive_degree();
    int const l = eta_gamma(V, 6).lowest_positive_degree();
    if (k + l > 6) continue;
    int const trunc = k + l;
    Series const u = homogeneous_part(eta_gamma(U, trunc), k, trunc);
    Series const v = homogeneous_part(eta_gamma(V, trunc), l, trunc);
    EXPECT_EQ(eta_gamma(comm(U, V), trunc) - Series::one(trunc), u * v - v * u) << U.to_string() << " / " << V.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(SeriesRendering, CanonicalLines) {
  EXPECT_EQ(eta_gamma(gw("[y, z x^-1]"), 2).to_string(), "1 : 1\nAB : -t + t^2\nBA : t - t^2\n");
  EXPECT_EQ(eta_free(fw("a^-1"), 2).to_string(), "1 : 1\nA : -1\nAA : 1\n");
}

}  // namespace
}  // namespace subdirect
