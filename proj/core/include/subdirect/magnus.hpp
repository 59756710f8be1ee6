#pragma once

#include "subdirect/freewords.hpp"
#include "subdirect/numbers.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace subdirect {

// Polynomial in t over the rationals; coefficient k multiplies t^k.
class TPoly {
 public:
  TPoly() = default;
  TPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  TPoly(long constant) : TPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit TPoly(std::vector<Rational> coefficients);

  static TPoly t();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const;
  std::vector<Rational> const& coefficients() const noexcept { return coeffs_; }

  Rational evaluate(Rational const& at) const;
  bool has_integer_coefficients() const;

  TPoly operator-() const;
  TPoly& operator+=(TPoly const& rhs);
  TPoly& operator-=(TPoly const& rhs);
  friend TPoly operator+(TPoly lhs, TPoly const& rhs) { return lhs += rhs; }
  friend TPoly operator-(TPoly lhs, TPoly const& rhs) { return lhs -= rhs; }
  friend TPoly operator*(TPoly const& lhs, TPoly const& rhs);

  // Exact division; returns the quotient and leaves the remainder in *remainder.
  TPoly divide(TPoly const& divisor, TPoly* remainder) const;

  friend bool operator==(TPoly const&, TPoly const&) = default;

  // "c0 + c1*t + c2*t^2", zero terms omitted, e.g. "-t + t^2" or "1/2*t".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class Symbol : std::uint8_t { alpha = 0, beta = 1 };

// A word in the free monoid on {alpha, beta}. Ordered by length, then
// lexicographically with alpha < beta.
class Monomial {
 public:
  static constexpr int max_length = 62;

  Monomial() = default;
  static Monomial of(Symbol symbol) { return Monomial{}.append(symbol); }
  // Parses the rendering alphabet: "A" for alpha, "B" for beta, "1" for empty.
  static Monomial parse(std::string_view text);

  int length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  Symbol at(int position) const noexcept {
    return static_cast<Symbol>((bits_ >> (length_ - 1 - position)) & 1U);
  }

  Monomial append(Symbol symbol) const;
  friend Monomial operator*(Monomial lhs, Monomial rhs);

  friend bool operator==(Monomial, Monomial) = default;
  friend std::strong_ordering operator<=>(Monomial lhs, Monomial rhs) noexcept {
    if (auto cmp = lhs.length_ <=> rhs.length_; cmp != 0) return cmp;
    return lhs.bits_ <=> rhs.bits_;
  }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;  // first symbol is the most significant of length_ bits
  int length_ = 0;
};

// Truncated noncommutative power series in alpha, beta with TPoly
// coefficients. Terms of length > trunc() are never stored, neither are
// zero coefficients, so equality is structural.
class Series {
 public:
  using Terms = std::map<Monomial, TPoly>;

  explicit Series(int trunc);
  static Series one(int trunc);
  static Series term(int trunc, Monomial monomial, TPoly coefficient);

  int trunc() const noexcept { return trunc_; }
  Terms const& terms() const noexcept { return terms_; }
  TPoly coefficient(Monomial monomial) const;
  TPoly constant_term() const { return coefficient(Monomial{}); }

  // Adds coefficient to the monomial's term; ignored beyond the truncation.
  void add(Monomial monomial, TPoly const& coefficient);

  // Drops every term longer than new_trunc (new_trunc <= trunc()).
  Series truncated(int new_trunc) const;

  // Smallest positive length carrying a non-zero coefficient, or trunc() + 1
  // when the series is constant up to the truncation.
  int lowest_positive_degree() const;

  Series operator-() const;
  Series& operator+=(Series const& rhs);
  Series& operator-=(Series const& rhs);
  friend Series operator+(Series lhs, Series const& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, Series const& rhs) { return lhs -= rhs; }
  friend Series operator*(Series const& lhs, Series const& rhs);

  friend bool operator==(Series const&, Series const&) = default;

  // One "<monomial> : <tpoly>" line per term, in monomial order.
  std::string to_string() const;

 private:
  int trunc_;
  Terms terms_;
};

Series series_mul(Series const& lhs, Series const& rhs);

// Requires constant term exactly 1; throws NonInvertibleError otherwise.
Series series_inv(Series const& s);

// (1 + symbol)^exponent = sum_k C(exponent, k) symbol^k up to k = trunc.
Series binomial_series(Symbol symbol, TPoly const& exponent, int trunc);
Series binomial_series(Symbol symbol, long exponent, int trunc);
// Formal exponent t.
Series binomial_series_t(Symbol symbol, int trunc);

// Magnus embedding of F = <a, b>: a -> 1 + alpha, b -> 1 + beta.
Series eta_free(Word const& g, int trunc);

// w -> 1 + alpha, x -> 1 + beta, y -> (1 + alpha)^t, z -> (1 + beta)^t.
Series eta_gamma(Word const& g, int trunc);

// Evaluates every coefficient at t = n.
Series specialize(Series const& s, Integer const& n);

// g lies in the c-th lower central term of F.
bool lcs_member(Word const& g, int c);

// u and v agree in F / gamma_c(F).
bool nilp_eq(Word const& u, Word const& v, int c);

}  // namespace subdirect
