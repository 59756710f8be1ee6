#include "subdirect/abelattice.hpp"

#include "subdirect/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace subdirect {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("matrix of size " + std::to_string(rows_) + "x" + std::to_string(cols_) + " needs " +
                     std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InputError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) + ", expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t const start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > start) tokens.push_back(text.substr(start, pos - start));
  }
  if (tokens.size() < 2) throw InputError("matrix text must start with 'rows cols'");
  Integer const rows = parse_integer(tokens[0]);
  Integer const cols = parse_integer(tokens[1]);
  if (rows < 0 || cols < 0 || !rows.fits_uint_p() || !cols.fits_uint_p()) throw InputError("invalid matrix dimensions");
  std::vector<Integer> entries;
  entries.reserve(tokens.size() - 2);
  for (std::size_t i = 2; i < tokens.size(); ++i) entries.push_back(parse_integer(tokens[i]));
  return IntMatrix(rows.get_ui(), cols.get_ui(), std::move(entries));
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(IntMatrix const& lhs, IntMatrix const& rhs) {
  if (lhs.cols_ != rhs.rows_) throw InputError("matrix dimensions do not agree for multiplication");
  IntMatrix product(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) product(i, j) += lhs(i, k) * rhs(k, j);
    }
  }
  return product;
}

std::string IntMatrix::to_string() const {
  std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += (*this)(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

IntVector SNFResult::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (auto const& d : diagonal()) r += d != 0 ? 1 : 0;
  return r;
}

namespace {

// Elementary operations applied to S together with the matching transform.
struct SnfState {
  IntMatrix S, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(a, c), S(b, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, a), S(r, b));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
  }
  // row[target] += factor * row[source]
  void add_row(std::size_t target, std::size_t source, Integer const& factor) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(target, c) += factor * S(source, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(target, c) += factor * U(source, c);
  }
  // col[target] += factor * col[source]
  void add_col(std::size_t target, std::size_t source, Integer const& factor) {
    for (std::size_t r = 0; r < S.rows(); ++r) S(r, target) += factor * S(r, source);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, target) += factor * V(r, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(r, c) = -S(r, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = -U(r, c);
  }
};

}  // namespace

SNFResult smith_normal_form(IntMatrix const& A) {
  SnfState st{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
  std::size_t const m = A.rows();
  std::size_t const n = A.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // pivot: non-zero entry of least absolute value, first in row-major scan
      bool found = false;
      std::size_t pr = t;
      std::size_t pc = t;
      Integer best;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (st.S(r, c) == 0) continue;
          Integer const magnitude = abs(st.S(r, c));
          if (!found || magnitude < best) {
            found = true;
            best = magnitude;
            pr = r;
            pc = c;
          }
        }
      }
      if (!found) return {std::move(st.S), std::move(st.U), std::move(st.V)};
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      Integer q;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (st.S(r, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), st.S(r, t).get_mpz_t(), st.S(t, t).get_mpz_t());
        st.add_row(r, t, -q);
        clean = clean && st.S(r, t) == 0;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (st.S(t, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), st.S(t, c).get_mpz_t(), st.S(t, t).get_mpz_t());
        st.add_col(c, t, -q);
        clean = clean && st.S(t, c) == 0;
      }
      if (!clean) continue;

      // enforce the divisibility chain: fold in a row the pivot does not divide
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < m && !offending; ++r) {
        for (std::size_t c = t + 1; c < n; ++c) {
          if (!mpz_divisible_p(st.S(r, c).get_mpz_t(), st.S(t, t).get_mpz_t())) {
            offending = r;
            break;
          }
        }
      }
      if (offending) {
        st.add_row(t, *offending, 1);
        continue;
      }
      if (st.S(t, t) < 0) st.negate_row(t);
      break;
    }
  }
  return {std::move(st.S), std::move(st.U), std::move(st.V)};
}

Integer determinant(IntMatrix const& A) {
  if (A.rows() != A.cols()) throw InputError("determinant needs a square matrix");
  std::size_t const n = A.rows();
  if (n == 0) return 1;
  // Bareiss elimination
  IntMatrix M = A;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && M(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(M(k, c), M(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        M(i, j) = value;
      }
    }
    previous = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

IntVector exp_vector(Word const& g, Alphabet const& alphabet) {
  if (!(g.alphabet() == alphabet)) throw InputError("word is not over the given alphabet");
  IntVector sums(alphabet.size());
  for (Letter const letter : g.letters()) sums[letter.index] += letter.sign;
  return sums;
}

LatticeIndex lattice_index(std::span<const IntVector> generators, std::size_t rank) {
  for (auto const& v : generators) {
    if (v.size() != rank) throw InputError("generator length does not match the ambient rank");
  }
  if (rank == 0) return LatticeIndex::finite(1);
  SNFResult const snf = smith_normal_form(IntMatrix::from_rows(generators, rank));
  if (snf.rank() < rank) return LatticeIndex::infinite();
  Integer index = 1;
  for (auto const& d : snf.diagonal()) index *= d;
  return LatticeIndex::finite(index);
}

VspResult vsp_check(std::span<const TupleWord> Y, Coordinate i, Coordinate j, int c) {
  if (c < 1) throw InputError("c must be at least 1");
  if (i == j) throw InputError("vsp_check needs two distinct coordinates");
  if (Y.empty()) throw InputError("vsp_check needs at least one tuple");
  auto const& points = Y.front().points();
  auto in_points = [&](Coordinate n) { return std::binary_search(points.begin(), points.end(), n); };
  if (!in_points(i) || !in_points(j)) throw InputError("coordinates must belong to E");

  Alphabet const& ab = free_alphabet();
  std::vector<IntVector> vectors;
  vectors.reserve(Y.size());
  for (auto const& tuple : Y) {
    if (tuple.points() != points) throw InputError("tuples have different coordinate sets");
    IntVector v = exp_vector(tuple.at(i), ab);
    IntVector const right = exp_vector(tuple.at(j), ab);
    v.insert(v.end(), right.begin(), right.end());
    vectors.push_back(std::move(v));
  }
  LatticeIndex const index = lattice_index(vectors, 2 * ab.size());
  if (!index.is_finite()) return {false, std::nullopt};
  return {true, index.value()};
}

std::vector<IntVector> abelian_sum_kernel(IntMatrix const& relations, IntMatrix const& m1, IntMatrix const& m2,
                                          IntMatrix const& m3) {
  std::size_t const q = relations.cols();
  for (IntMatrix const* m : {&m1, &m2, &m3}) {
    if (m->rows() != q) throw InputError("each map must land in Z^q with q = number of relation columns");
  }
  std::size_t const r = m1.cols() + m2.cols() + m3.cols();
  std::size_t const s = relations.rows();

  // lambda is in the kernel iff [M1 | M2 | M3] lambda = relations^T mu for some
  // mu, i.e. (lambda, mu) is in the kernel of [M1 | M2 | M3 | -relations^T].
  IntMatrix system(q, r + s);
  std::size_t offset = 0;
  for (IntMatrix const* m : {&m1, &m2, &m3}) {
    for (std::size_t row = 0; row < q; ++row) {
      for (std::size_t col = 0; col < m->cols(); ++col) system(row, offset + col) = (*m)(row, col);
    }
    offset += m->cols();
  }
  for (std::size_t row = 0; row < q; ++row) {
    for (std::size_t rel = 0; rel < s; ++rel) system(row, r + rel) = -relations(rel, row);
  }

  SNFResult const snf = smith_normal_form(system);
  std::set<IntVector> seen;
  std::vector<IntVector> kernel;
  for (std::size_t col = snf.rank(); col < r + s; ++col) {
    IntVector v;
    v.reserve(r);
    bool zero = true;
    for (std::size_t row = 0; row < r; ++row) {
      v.push_back(snf.V(row, col));
      zero = zero && v.back() == 0;
    }
    if (zero || !seen.insert(v).second) continue;
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace subdirect
