#pragma once

#include "subdirect/freewords.hpp"
#include "subdirect/magnus.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subdirect {

using Coordinate = std::int64_t;

// Index set E (sorted, distinct, non-empty) and class c >= 1 of S(E, c).
class SecSpec {
 public:
  SecSpec(std::vector<Coordinate> points, int c);

  std::vector<Coordinate> const& points() const noexcept { return points_; }
  int c() const noexcept { return c_; }
  bool contains(Coordinate n) const;

 private:
  std::vector<Coordinate> points_;
  int c_;
};

// An element of F^E: one word over {a, b} per point of E.
class TupleWord {
 public:
  TupleWord(std::vector<Coordinate> points, std::vector<Word> coords);

  // Identity everywhere except `word` at coordinate n.
  static TupleWord planted(std::vector<Coordinate> points, Coordinate n, Word const& word);

  std::vector<Coordinate> const& points() const noexcept { return points_; }
  std::vector<Word> const& coords() const noexcept { return coords_; }
  Word const& at(Coordinate n) const;

  TupleWord operator*(TupleWord const& rhs) const;
  TupleWord inverse() const;

  friend bool operator==(TupleWord const&, TupleWord const&) = default;

  // "n: <word>" per coordinate in increasing n.
  std::string to_string() const;

 private:
  std::vector<Coordinate> points_;
  std::vector<Word> coords_;
};

// phi_n: w -> a, x -> b, y -> a^n, z -> b^n.
Word phi_image(Word const& g, Coordinate n);

TupleWord phi_tuple(Word const& g, std::span<const Coordinate> points);

// phi-images of w, x, y, z, then gamma_normal_gens(c) planted in each
// coordinate in increasing order.
std::vector<TupleWord> sec_generators(SecSpec const& spec);

struct Certificate {
  Coordinate n = 0;
  int c = 1;
  std::vector<std::pair<Coordinate, bool>> vanishing;  // phi_m(g) == 1 for m in E \ {n}
  bool membership_at_c = false;                         // phi_n(g) in gamma_c
  bool nonmembership_at_c_plus_1 = false;               // phi_n(g) not in gamma_{c+1}
  bool enough_points = false;                           // |E| >= c + 1

  bool all_vanish() const;
  bool hypotheses_hold() const { return enough_points && all_vanish(); }
  std::string to_string() const;
};

// Raised when every vanishing verdict holds, |E| >= c + 1, and yet phi_n(g)
// is outside gamma_c. For S(E, c) this cannot happen.
class ImplicationViolation : public std::runtime_error {
 public:
  explicit ImplicationViolation(Certificate certificate);
  Certificate const& certificate() const noexcept { return certificate_; }

 private:
  Certificate certificate_;
};

Certificate intersection_certificate(Word const& g, SecSpec const& spec, Coordinate n);

// [y, z x^-1, z x^-2, ..., z x^-m]
Word example44_element(int m);

// w -> w, x -> x, y -> y w^-1, z -> z x^-1.
Word shift_auto(Word const& g);

}  // namespace subdirect
