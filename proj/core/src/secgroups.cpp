#include "subdirect/secgroups.hpp"

#include "subdirect/errors.hpp"

#include <algorithm>

namespace subdirect {

namespace {

std::vector<Coordinate> sorted_points(std::vector<Coordinate> points) {
  if (points.empty()) throw InputError("index set E must not be empty");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw InputError("index set E must consist of distinct integers");
  }
  return points;
}

std::size_t position_of(std::vector<Coordinate> const& points, Coordinate n) {
  auto it = std::lower_bound(points.begin(), points.end(), n);
  if (it == points.end() || *it != n) throw InputError("coordinate " + std::to_string(n) + " is not in E");
  return static_cast<std::size_t>(it - points.begin());
}

void require_gamma_word(Word const& g) {
  if (!(g.alphabet() == gamma_alphabet())) throw InputError("expected a word over {w, x, y, z}");
}

}  // namespace

SecSpec::SecSpec(std::vector<Coordinate> points, int c) : points_(sorted_points(std::move(points))), c_(c) {
  if (c < 1) throw InputError("c must be at least 1");
}

bool SecSpec::contains(Coordinate n) const { return std::binary_search(points_.begin(), points_.end(), n); }

TupleWord::TupleWord(std::vector<Coordinate> points, std::vector<Word> coords)
    : points_(std::move(points)), coords_(std::move(coords)) {
  if (points_.size() != coords_.size()) throw InputError("tuple needs exactly one word per coordinate");
  if (!std::is_sorted(points_.begin(), points_.end()) ||
      std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw InputError("tuple coordinates must be sorted and distinct");
  }
  for (auto const& word : coords_) {
    if (!(word.alphabet() == free_alphabet())) throw InputError("tuple coordinates must be words over {a, b}");
  }
}

TupleWord TupleWord::planted(std::vector<Coordinate> points, Coordinate n, Word const& word) {
  std::vector<Word> coords(points.size(), Word(free_alphabet()));
  coords[position_of(points, n)] = word;
  return TupleWord(std::move(points), std::move(coords));
}

Word const& TupleWord::at(Coordinate n) const { return coords_[position_of(points_, n)]; }

TupleWord TupleWord::operator*(TupleWord const& rhs) const {
  if (points_ != rhs.points_) throw InputError("tuples have different coordinate sets");
  std::vector<Word> coords;
  coords.reserve(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords.push_back(coords_[i] * rhs.coords_[i]);
  return TupleWord(points_, std::move(coords));
}

TupleWord TupleWord::inverse() const {
  std::vector<Word> coords;
  coords.reserve(coords_.size());
  for (auto const& word : coords_) coords.push_back(word.inverse());
  return TupleWord(points_, std::move(coords));
}

std::string TupleWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    out += std::to_string(points_[i]) + ": " + coords_[i].to_string() + "\n";
  }
  return out;
}

Word phi_image(Word const& g, Coordinate n) {
  require_gamma_word(g);
  Alphabet const& ab = free_alphabet();
  Word const a = Word::generator(ab, "a");
  Word const b = Word::generator(ab, "b");
  std::vector<Word> const images{a, b, a.pow(n), b.pow(n)};
  return substitute(g, images);
}

TupleWord phi_tuple(Word const& g, std::span<const Coordinate> points) {
  std::vector<Coordinate> sorted = sorted_points({points.begin(), points.end()});
  std::vector<Word> coords;
  coords.reserve(sorted.size());
  for (Coordinate n : sorted) coords.push_back(phi_image(g, n));
  return TupleWord(std::move(sorted), std::move(coords));
}

std::vector<TupleWord> sec_generators(SecSpec const& spec) {
  std::vector<TupleWord> generators;
  Alphabet const& gamma = gamma_alphabet();
  for (auto const& name : gamma.names()) generators.push_back(phi_tuple(Word::generator(gamma, name), spec.points()));
  auto const relators = gamma_normal_gens(spec.c());
  for (Coordinate n : spec.points()) {
    for (auto const& r : relators) generators.push_back(TupleWord::planted(spec.points(), n, r));
  }
  return generators;
}

bool Certificate::all_vanish() const {
  return std::all_of(vanishing.begin(), vanishing.end(), [](auto const& verdict) { return verdict.second; });
}

std::string Certificate::to_string() const {
  std::string out = "n: " + std::to_string(n) + "\nc: " + std::to_string(c) + "\n";
  for (auto const& [m, vanishes] : vanishing) out += "vanish " + std::to_string(m) + ": " + (vanishes ? "true" : "false") + "\n";
  out += std::string("hypotheses: ") + (hypotheses_hold() ? "true" : "false") + "\n";
  out += "member gamma_" + std::to_string(c) + ": " + (membership_at_c ? "true" : "false") + "\n";
  out += "member gamma_" + std::to_string(c + 1) + ": " + (nonmembership_at_c_plus_1 ? "false" : "true") + "\n";
  return out;
}

ImplicationViolation::ImplicationViolation(Certificate certificate)
    : std::runtime_error("phi_" + std::to_string(certificate.n) +
                         "(g) vanishes elsewhere on E but lies outside gamma_" + std::to_string(certificate.c)),
      certificate_(std::move(certificate)) {}

Certificate intersection_certificate(Word const& g, SecSpec const& spec, Coordinate n) {
  require_gamma_word(g);
  if (!spec.contains(n)) throw InputError("coordinate " + std::to_string(n) + " is not in E");

  Certificate cert;
  cert.n = n;
  cert.c = spec.c();
  cert.enough_points = spec.points().size() >= static_cast<std::size_t>(spec.c()) + 1;
  for (Coordinate m : spec.points()) {
    if (m != n) cert.vanishing.emplace_back(m, phi_image(g, m).empty());
  }

  // One expansion at truncation c settles both gamma_c and gamma_{c+1}.
  int const lowest = eta_free(phi_image(g, n), spec.c()).lowest_positive_degree();
  cert.membership_at_c = lowest >= spec.c();
  cert.nonmembership_at_c_plus_1 = lowest < spec.c() + 1;

  if (cert.hypotheses_hold() && !cert.membership_at_c) throw ImplicationViolation(cert);
  return cert;
}

Word example44_element(int m) {
  if (m < 1) throw InputError("m must be at least 1");
  Alphabet const& gamma = gamma_alphabet();
  Word const x = Word::generator(gamma, "x");
  Word const z = Word::generator(gamma, "z");
  std::vector<Word> args{Word::generator(gamma, "y")};
  for (int k = 1; k <= m; ++k) args.push_back(z * x.pow(-k));
  return comm(args);
}

Word shift_auto(Word const& g) {
  require_gamma_word(g);
  Alphabet const& gamma = gamma_alphabet();
  Word const w = Word::generator(gamma, "w");
  Word const x = Word::generator(gamma, "x");
  std::vector<Word> const images{w, x, Word::generator(gamma, "y") * w.inverse(), Word::generator(gamma, "z") * x.inverse()};
  return substitute(g, images);
}

}  // namespace subdirect
