#pragma once

#include "subdirect/freewords.hpp"
#include "subdirect/numbers.hpp"
#include "subdirect/secgroups.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subdirect {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  // "rows cols" followed by rows*cols whitespace-separated integers.
  static IntMatrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Integer const& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  friend IntMatrix operator*(IntMatrix const& lhs, IntMatrix const& rhs);
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

  // Same layout as parse(): header line, then one line per row.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// S = U * A * V with U, V unimodular and S diagonal, d1 | d2 | ... | dr > 0
// followed by zeros.
struct SNFResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  IntVector diagonal() const;
  std::size_t rank() const;
};

SNFResult smith_normal_form(IntMatrix const& A);

// Determinant of a square matrix by fraction-free elimination.
Integer determinant(IntMatrix const& A);

// Per-letter exponent sums: the image of g in the abelianisation.
IntVector exp_vector(Word const& g, Alphabet const& alphabet);

// Index of a sublattice of Z^k. Infinite when the rank is below k.
class LatticeIndex {
 public:
  static LatticeIndex infinite() { return LatticeIndex(); }
  static LatticeIndex finite(Integer value) { return LatticeIndex(std::move(value)); }

  bool is_finite() const noexcept { return value_.has_value(); }
  Integer const& value() const { return value_.value(); }
  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }

  friend bool operator==(LatticeIndex const&, LatticeIndex const&) = default;

 private:
  LatticeIndex() = default;
  explicit LatticeIndex(Integer value) : value_(std::move(value)) {}
  std::optional<Integer> value_;
};

LatticeIndex lattice_index(std::span<const IntVector> generators, std::size_t rank);

struct VspResult {
  bool finite = false;
  std::optional<Integer> index;
};

// Abelianised finite-index test for the projection of <Y> to the (i, j)
// factor pair. Valid when <Y> contains gamma_c of that pair for some c >= 2,
// which the caller asserts.
VspResult vsp_check(std::span<const TupleWord> Y, Coordinate i, Coordinate j, int c);

// Generators of ker(Z^{r1+r2+r3} -> Z^q / rowspace(relations)) for the map
// [M1 | M2 | M3]. Each Mt is q x rt; relations is s x q, one relation per row.
std::vector<IntVector> abelian_sum_kernel(IntMatrix const& relations, IntMatrix const& m1, IntMatrix const& m2,
                                          IntMatrix const& m3);

}  // namespace subdirect
