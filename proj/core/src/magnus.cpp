#include "subdirect/magnus.hpp"

#include "subdirect/errors.hpp"

#include <array>

namespace subdirect {

// TPoly

TPoly::TPoly(Rational constant) : coeffs_{std::move(constant)} { trim(); }

TPoly::TPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

TPoly TPoly::t() { return TPoly(std::vector<Rational>{0, 1}); }

void TPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational TPoly::evaluate(Rational const& at) const {
  Rational value(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * at + *it;
  return value;
}

bool TPoly::has_integer_coefficients() const {
  for (auto const& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

TPoly TPoly::operator-() const {
  TPoly result(*this);
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

TPoly& TPoly::operator+=(TPoly const& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(TPoly const& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

TPoly operator*(TPoly const& lhs, TPoly const& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> product(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return TPoly(std::move(product));
}

TPoly TPoly::divide(TPoly const& divisor, TPoly* remainder) const {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  std::vector<Rational> rest = coeffs_;
  int const dd = divisor.degree();
  std::vector<Rational> quotient(rest.size() >= divisor.coeffs_.size() ? rest.size() - dd : 0);
  for (int k = static_cast<int>(rest.size()) - 1; k >= dd; --k) {
    Rational const factor = rest[k] / divisor.coeffs_.back();
    quotient[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rest[k - dd + j] -= factor * divisor.coeffs_[j];
  }
  if (remainder) *remainder = TPoly(std::move(rest));
  return TPoly(std::move(quotient));
}

std::string TPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational const& c = coeffs_[k];
    if (c == 0) continue;
    bool const negative = c < 0;
    Rational const magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += subdirect::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += subdirect::to_string(magnitude) + "*";
    out += 't';
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out;
}

// Monomial

Monomial Monomial::parse(std::string_view text) {
  Monomial result;
  if (text == "1") return result;
  if (text.empty()) throw InputError("empty monomial");
  for (char ch : text) {
    if (ch == 'A') {
      result = result.append(Symbol::alpha);
    } else if (ch == 'B') {
      result = result.append(Symbol::beta);
    } else {
      throw InputError("monomial symbols are A and B, got '" + std::string(text) + "'");
    }
  }
  return result;
}

Monomial Monomial::append(Symbol symbol) const {
  if (length_ >= max_length) throw InputError("monomial exceeds the supported length");
  Monomial result;
  result.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(symbol);
  result.length_ = length_ + 1;
  return result;
}

Monomial operator*(Monomial lhs, Monomial rhs) {
  if (lhs.length_ + rhs.length_ > Monomial::max_length) throw InputError("monomial exceeds the supported length");
  Monomial result;
  result.bits_ = (lhs.bits_ << rhs.length_) | rhs.bits_;
  result.length_ = lhs.length_ + rhs.length_;
  return result;
}

std::string Monomial::to_string() const {
  if (length_ == 0) return "1";
  std::string out;
  for (int i = 0; i < length_; ++i) out += at(i) == Symbol::alpha ? 'A' : 'B';
  return out;
}

// Series

namespace {

void check_trunc(int trunc) {
  if (trunc < 0) throw InputError("truncation degree must be non-negative");
  if (trunc > Monomial::max_length) throw InputError("truncation degree too large");
}

void require_same_trunc(Series const& lhs, Series const& rhs) {
  if (lhs.trunc() != rhs.trunc()) {
    throw InputError("series truncation mismatch: " + std::to_string(lhs.trunc()) + " vs " + std::to_string(rhs.trunc()));
  }
}

}  // namespace

Series::Series(int trunc) : trunc_(trunc) { check_trunc(trunc); }

Series Series::one(int trunc) { return term(trunc, Monomial{}, TPoly(1)); }

Series Series::term(int trunc, Monomial monomial, TPoly coefficient) {
  Series s(trunc);
  s.add(monomial, coefficient);
  return s;
}

TPoly Series::coefficient(Monomial monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? TPoly{} : it->second;
}

void Series::add(Monomial monomial, TPoly const& coefficient) {
  if (monomial.length() > trunc_ || coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::truncated(int new_trunc) const {
  if (new_trunc > trunc_) throw InputError("cannot raise the truncation degree of a series");
  Series result(new_trunc);
  for (auto const& [monomial, coefficient] : terms_) {
    if (monomial.length() <= new_trunc) result.terms_.emplace(monomial, coefficient);
  }
  return result;
}

int Series::lowest_positive_degree() const {
  for (auto const& [monomial, coefficient] : terms_) {
    if (!monomial.empty()) return monomial.length();
  }
  return trunc_ + 1;
}

Series Series::operator-() const {
  Series result(trunc_);
  for (auto const& [monomial, coefficient] : terms_) result.terms_.emplace(monomial, -coefficient);
  return result;
}

Series& Series::operator+=(Series const& rhs) {
  require_same_trunc(*this, rhs);
  for (auto const& [monomial, coefficient] : rhs.terms_) add(monomial, coefficient);
  return *this;
}

Series& Series::operator-=(Series const& rhs) {
  require_same_trunc(*this, rhs);
  for (auto const& [monomial, coefficient] : rhs.terms_) add(monomial, -coefficient);
  return *this;
}

Series operator*(Series const& lhs, Series const& rhs) {
  require_same_trunc(lhs, rhs);
  Series result(lhs.trunc_);
  for (auto const& [left, lc] : lhs.terms_) {
    for (auto const& [right, rc] : rhs.terms_) {
      // terms are ordered by length, so the rest of rhs is too long as well
      if (left.length() + right.length() > lhs.trunc_) break;
      result.add(left * right, lc * rc);
    }
  }
  return result;
}

std::string Series::to_string() const {
  std::string out;
  for (auto const& [monomial, coefficient] : terms_) {
    out += monomial.to_string() + " : " + coefficient.to_string() + "\n";
  }
  return out;
}

Series series_mul(Series const& lhs, Series const& rhs) { return lhs * rhs; }

Series series_inv(Series const& s) {
  if (!(s.constant_term() == TPoly(1))) throw NonInvertibleError("series constant term is not 1");
  // s = 1 + u with u in J, so s^-1 = sum_k (-u)^k and (-u)^k vanishes past k = trunc
  Series minus_u = Series::one(s.trunc()) - s;
  Series result = Series::one(s.trunc());
  Series power = Series::one(s.trunc());
  for (int k = 1; k <= s.trunc(); ++k) {
    power = power * minus_u;
    if (power.terms().empty()) break;
    result += power;
  }
  return result;
}

Series binomial_series(Symbol symbol, TPoly const& exponent, int trunc) {
  Series result(trunc);
  TPoly coefficient(1);
  Monomial power;
  for (int k = 0; k <= trunc; ++k) {
    result.add(power, coefficient);
    // C(e, k+1) = C(e, k) * (e - k) / (k + 1)
    coefficient = coefficient * (exponent - TPoly(k)) * TPoly(Rational(1, k + 1));
    if (k < trunc) power = power.append(symbol);
  }
  return result;
}

Series binomial_series(Symbol symbol, long exponent, int trunc) { return binomial_series(symbol, TPoly(exponent), trunc); }

Series binomial_series_t(Symbol symbol, int trunc) { return binomial_series(symbol, TPoly::t(), trunc); }

namespace {

// Product of per-letter images, images[2 * index + (sign < 0)].
Series evaluate_word(Word const& g, std::span<const Series> images, int trunc) {
  Series result = Series::one(trunc);
  for (Letter const letter : g.letters()) result = result * images[2 * letter.index + (letter.sign < 0 ? 1 : 0)];
  return result;
}

}  // namespace

Series eta_free(Word const& g, int trunc) {
  if (!(g.alphabet() == free_alphabet())) throw InputError("eta_free expects a word over {a, b}");
  std::array<Series, 4> const images{
      binomial_series(Symbol::alpha, 1, trunc), binomial_series(Symbol::alpha, -1, trunc),
      binomial_series(Symbol::beta, 1, trunc), binomial_series(Symbol::beta, -1, trunc)};
  return evaluate_word(g, images, trunc);
}

Series eta_gamma(Word const& g, int trunc) {
  if (!(g.alphabet() == gamma_alphabet())) throw InputError("eta_gamma expects a word over {w, x, y, z}");
  TPoly const t = TPoly::t();
  std::array<Series, 8> const images{
      binomial_series(Symbol::alpha, 1, trunc), binomial_series(Symbol::alpha, -1, trunc),
      binomial_series(Symbol::beta, 1, trunc),  binomial_series(Symbol::beta, -1, trunc),
      binomial_series(Symbol::alpha, t, trunc), binomial_series(Symbol::alpha, -t, trunc),
      binomial_series(Symbol::beta, t, trunc),  binomial_series(Symbol::beta, -t, trunc)};
  return evaluate_word(g, images, trunc);
}

Series specialize(Series const& s, Integer const& n) {
  Series result(s.trunc());
  Rational const at(n);
  for (auto const& [monomial, coefficient] : s.terms()) result.add(monomial, TPoly(coefficient.evaluate(at)));
  return result;
}

bool lcs_member(Word const& g, int c) {
  if (c < 1) throw InputError("lower central series index must be at least 1");
  if (c == 1) return true;
  return eta_free(g, c - 1).lowest_positive_degree() >= c;
}

bool nilp_eq(Word const& u, Word const& v, int c) { return lcs_member(u * v.inverse(), c); }

}  // namespace subdirect
