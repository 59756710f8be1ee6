#include "subdirect/cli.hpp"

#include "subdirect/abelattice.hpp"
#include "subdirect/errors.hpp"
#include "subdirect/fibreprod.hpp"
#include "subdirect/freewords.hpp"
#include "subdirect/magnus.hpp"
#include "subdirect/numbers.hpp"
#include "subdirect/secgroups.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace subdirect::cli {

namespace {

struct FlagSpec {
  std::string name;
  bool required = false;
  bool repeatable = false;
};

struct LeafSpec {
  std::string group;
  std::string name;  // empty for single-level commands
  std::string help;
  std::vector<FlagSpec> flags;
};

std::vector<LeafSpec> const& leaves() {
  static std::vector<LeafSpec> const table{
      {"word", "reduce", "Freely reduce a word", {{"--word", true}}},
      {"word", "comm", "Left-normed commutator of the given words", {{"--word", true, true}}},
      {"magnus", "eval", "Truncated Magnus series of a word", {{"--word", true}, {"--trunc"}, {"--c"}}},
      {"magnus", "inv", "Inverse of the Magnus series of a word", {{"--word", true}, {"--trunc"}, {"--c"}}},
      {"lcs", "member", "Is the word in gamma_c(F)?", {{"--word", true}, {"--c", true}}},
      {"nilp", "eq", "Are two words equal in F / gamma_c(F)?", {{"--word", true, true}, {"--c", true}}},
      {"sec", "gens", "Generators of S(E, c)", {{"--E", true}, {"--c", true}}},
      {"sec", "cert", "Intersection certificate for words of Gamma",
       {{"--word", true, true}, {"--E", true}, {"--c", true}, {"--n", true}}},
      {"sec", "shift", "Apply y -> y w^-1, z -> z x^-1", {{"--word", true}}},
      {"lattice", "snf", "Smith normal form of a matrix file", {{"--file", true}}},
      {"lattice", "index", "Index of the row lattice of a matrix file", {{"--file", true}}},
      {"vsp", "check", "Finite-index test for the (i, j) projection of S(E, c)",
       {{"--E", true}, {"--c", true}, {"--i", true}, {"--j", true}}},
      {"kernel3", "", "Kernel of an abelian sum map (relations, M1, M2, M3 in one file)", {{"--file", true}}},
      {"fibre", "assemble", "Assemble a fibre-product presentation from a JSON problem", {{"--file", true}}},
      {"fibre", "audit", "Audit relators under theta",
       {{"--file", true}, {"--presentation"}}},
  };
  return table;
}

std::string command_name(LeafSpec const& leaf) { return leaf.name.empty() ? leaf.group : leaf.group + " " + leaf.name; }

// Flag access

int int_flag(Invocation const& inv, std::string const& flag, long lo, long hi) {
  Integer const value = parse_integer(inv.one(flag));
  if (value < lo || value > hi) {
    throw InputError(flag + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(value.get_si());
}

Coordinate coordinate_flag(Invocation const& inv, std::string const& flag) {
  constexpr long limit = 1'000'000;
  return int_flag(inv, flag, -limit, limit);
}

std::vector<Coordinate> points_flag(Invocation const& inv) {
  std::vector<Coordinate> points;
  std::string const& text = inv.one("--E");
  std::size_t start = 0;
  while (true) {
    std::size_t const comma = text.find(',', start);
    std::string const item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Integer const value = parse_integer(item);
    if (abs(value) > 1'000'000) throw InputError("--E entries must lie in [-1000000, 1000000]");
    points.push_back(value.get_si());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return points;
}

constexpr long max_class = 60;

int trunc_flag(Invocation const& inv) {
  if (inv.has("--trunc")) return int_flag(inv, "--trunc", 0, max_class);
  if (inv.has("--c")) return int_flag(inv, "--c", 1, max_class);
  throw InputError("--trunc is required when --c is absent");
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool subset_of(std::vector<std::string> const& names, Alphabet const& alphabet) {
  return std::all_of(names.begin(), names.end(), [&](std::string const& n) { return alphabet.contains(n); });
}

Alphabet alphabet_of(std::vector<std::string> const& texts) {
  std::vector<std::string> names;
  for (auto const& text : texts) {
    for (auto& id : word_identifiers(text)) {
      if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(std::move(id));
    }
  }
  if (names.empty()) names.push_back("a");
  return Alphabet(std::move(names));
}

Word free_word(std::string const& text) {
  if (!subset_of(word_identifiers(text), free_alphabet())) throw InputError("word must be over {a, b}: " + text);
  return parse_word(text, free_alphabet());
}

Word gamma_word(std::string const& text) {
  if (!subset_of(word_identifiers(text), gamma_alphabet())) throw InputError("word must be over {w, x, y, z}: " + text);
  return parse_word(text, gamma_alphabet());
}

// eta_free for words over {a, b}, eta_gamma for words over {w, x, y, z}.
Series magnus_image(std::string const& text, int trunc) {
  auto const ids = word_identifiers(text);
  if (subset_of(ids, free_alphabet())) return eta_free(parse_word(text, free_alphabet()), trunc);
  if (subset_of(ids, gamma_alphabet())) return eta_gamma(parse_word(text, gamma_alphabet()), trunc);
  throw InputError("word must be over {a, b} or {w, x, y, z}: " + text);
}

int verdict(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << '\n';
  return value ? success : negative;
}

std::string join(IntVector const& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + to_string(v[k]);
  return out;
}

// Whitespace-separated "rows cols entries..." matrices read one after another.
std::vector<IntMatrix> read_matrices(std::string const& text, std::size_t count) {
  std::istringstream in(text);
  auto next = [&](char const* what) {
    std::string token;
    if (!(in >> token)) throw InputError(std::string("matrix file ended while reading ") + what);
    return parse_integer(token);
  };
  std::vector<IntMatrix> out;
  for (std::size_t m = 0; m < count; ++m) {
    Integer const rows = next("a row count");
    Integer const cols = next("a column count");
    if (rows < 0 || cols < 0 || rows * cols > 1'000'000) throw InputError("matrix dimensions out of range");
    std::vector<Integer> entries;
    for (long k = 0; k < rows * cols; ++k) entries.push_back(next("an entry"));
    out.emplace_back(rows.get_ui(), cols.get_ui(), std::move(entries));
  }
  std::string extra;
  if (in >> extra) throw InputError("unexpected trailing text in matrix file: " + extra);
  return out;
}

// Fibre-product problem files

using nlohmann::json;

std::vector<std::string> names_of(json const& node, char const* key) {
  if (!node.contains(key)) return {};
  return node.at(key).get<std::vector<std::string>>();
}

std::size_t position(std::vector<std::string> const& names, std::string const& name, char const* what) {
  auto const it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError(std::string("unknown ") + what + " '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

int sign_of(json const& node, char const* key) {
  int const value = node.value(key, 1);
  if (value != 1 && value != -1) throw InputError(std::string(key) + " must be 1 or -1");
  return value;
}

Interpretation interpretation_of(json const& node) {
  Interpretation iota(Alphabet(names_of(node, "generators")));
  for (auto const& [name, image] : node.at("images").items()) iota.assign(name, image.get<std::string>());
  return iota;
}

struct FibreProblem {
  StructPres1 p1;
  StructPres2 p2;
  std::vector<IdentitySeq> identities;
  std::optional<Interpretation> iota1;
  std::optional<Interpretation> iota2;
};

ConjugateWord conjugate_word(json const& node, StructPres2 const& p2) {
  ConjugateWord word;
  for (auto const& f : node) {
    word.push_back({position(p2.b_letters(), f.at("b").get<std::string>(), "B letter"), sign_of(f, "sign"),
                    p2.parse(f.value("conjugator", "1"))});
  }
  return word;
}

FibreProblem fibre_problem(std::string const& text) {
  try {
    json const doc = json::parse(text);
    json const& g1 = doc.at("gamma1");
    json const& g2 = doc.at("gamma2");
    FibreProblem problem{StructPres1(names_of(g1, "A"), names_of(g1, "X")),
                         StructPres2(names_of(g2, "B"), names_of(g2, "X")), {}, {}, {}};
    StructPres1& p1 = problem.p1;
    for (auto const& r : g1.value("relators", json::array())) p1.relators.push_back(p1.parse(r.get<std::string>()));
    for (auto const& u : g1.value("U", json::array())) p1.u_words.push_back(p1.parse(u.get<std::string>()));
    for (auto const& s : g1.value("S3", json::array())) p1.s3.push_back(p1.parse(s.get<std::string>()));
    for (auto const& v : g1.value("V", json::array())) {
      p1.set_v_word(position(p1.x_letters(), v.at("x").get<std::string>(), "X letter"),
                    position(p1.a_letters(), v.at("a").get<std::string>(), "A letter"), sign_of(v, "eps"),
                    p1.parse(v.at("word").get<std::string>()));
    }
    p1.validate();

    StructPres2& p2 = problem.p2;
    for (auto const& w : g2.value("W", json::array())) p2.w_words.push_back(conjugate_word(w, p2));
    for (auto const& t : g2.value("T3", json::array())) p2.t3.push_back(conjugate_word(t, p2));
    p2.validate();

    for (auto const& seq : doc.value("identities", json::array())) {
      IdentitySeq sigma;
      for (auto const& e : seq) {
        sigma.push_back({p1.parse(e.value("conjugator", "1")), e.at("relator").get<std::size_t>(), sign_of(e, "eps")});
      }
      problem.identities.push_back(std::move(sigma));
    }
    if (doc.contains("iota1")) problem.iota1 = interpretation_of(doc.at("iota1"));
    if (doc.contains("iota2")) problem.iota2 = interpretation_of(doc.at("iota2"));
    return problem;
  } catch (json::exception const& e) {
    throw InputError(std::string("problem file: ") + e.what());
  }
}

Presentation assemble_problem(FibreProblem const& problem) {
  std::vector<Word> z_words;
  for (auto const& sigma : problem.identities) z_words.push_back(translate_identity(sigma, problem.p1));
  return assemble(problem.p1, problem.p2, z_words);
}

// Commands

int word_reduce(Invocation const& inv, std::ostream& out) {
  std::string const& text = inv.one("--word");
  out << parse_word(text, alphabet_of({text})).to_string() << '\n';
  return success;
}

int word_comm(Invocation const& inv, std::ostream& out) {
  auto const& texts = inv.all("--word");
  if (texts.size() < 2) throw InputError("word comm needs at least two --word values");
  Alphabet const alphabet = alphabet_of(texts);
  std::vector<Word> words;
  for (auto const& t : texts) words.push_back(parse_word(t, alphabet));
  out << comm(words).to_string() << '\n';
  return success;
}

int magnus_eval(Invocation const& inv, std::ostream& out) {
  out << magnus_image(inv.one("--word"), trunc_flag(inv)).to_string();
  return success;
}

int magnus_inv(Invocation const& inv, std::ostream& out) {
  out << series_inv(magnus_image(inv.one("--word"), trunc_flag(inv))).to_string();
  return success;
}

int lcs_member_cmd(Invocation const& inv, std::ostream& out) {
  return verdict(out, lcs_member(free_word(inv.one("--word")), int_flag(inv, "--c", 1, max_class)));
}

int nilp_eq_cmd(Invocation const& inv, std::ostream& out) {
  auto const& texts = inv.all("--word");
  if (texts.size() != 2) throw InputError("nilp eq needs exactly two --word values");
  return verdict(out, nilp_eq(free_word(texts[0]), free_word(texts[1]), int_flag(inv, "--c", 1, max_class)));
}

int sec_gens(Invocation const& inv, std::ostream& out) {
  auto const gens = sec_generators(SecSpec(points_flag(inv), int_flag(inv, "--c", 1, max_class)));
  for (std::size_t k = 0; k < gens.size(); ++k) out << (k ? "\n" : "") << gens[k].to_string();
  return success;
}

int sec_cert(Invocation const& inv, std::ostream& out) {
  SecSpec const spec(points_flag(inv), int_flag(inv, "--c", 1, max_class));
  Coordinate const n = coordinate_flag(inv, "--n");
  std::vector<Word> words;
  for (auto const& text : inv.all("--word")) words.push_back(gamma_word(text));

  struct Outcome {
    Certificate cert;
    bool violated = false;
  };
  std::vector<std::future<Outcome>> jobs;
  for (auto const& g : words) {
    jobs.push_back(std::async(std::launch::async, [&spec, n, g] {
      try {
        return Outcome{intersection_certificate(g, spec, n), false};
      } catch (ImplicationViolation const& v) {
        return Outcome{v.certificate(), true};
      }
    }));
  }
  std::vector<Outcome> outcomes;
  for (auto& job : jobs) outcomes.push_back(job.get());  // rethrows InputError before any output

  int code = success;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    out << (k ? "\n" : "") << "word: " << words[k].to_string() << '\n' << outcomes[k].cert.to_string();
    if (outcomes[k].violated) {
      out << "violation: true\n";
      code = negative;
    }
  }
  return code;
}

int sec_shift(Invocation const& inv, std::ostream& out) {
  out << shift_auto(gamma_word(inv.one("--word"))).to_string() << '\n';
  return success;
}

int lattice_snf(Invocation const& inv, std::ostream& out) {
  IntMatrix const a = IntMatrix::parse(read_file(inv.one("--file")));
  SNFResult const snf = smith_normal_form(a);
  out << "diagonal: " << join(snf.diagonal()) << "\nS:\n"
      << snf.S.to_string() << "U:\n"
      << snf.U.to_string() << "V:\n"
      << snf.V.to_string();
  return success;
}

int lattice_index_cmd(Invocation const& inv, std::ostream& out) {
  IntMatrix const a = IntMatrix::parse(read_file(inv.one("--file")));
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  LatticeIndex const index = lattice_index(rows, a.cols());
  out << "index: " << index.to_string() << '\n';
  return index.is_finite() ? success : negative;
}

int vsp_check_cmd(Invocation const& inv, std::ostream& out) {
  int const c = int_flag(inv, "--c", 1, max_class);
  auto const gens = sec_generators(SecSpec(points_flag(inv), c));
  VspResult const result = vsp_check(gens, coordinate_flag(inv, "--i"), coordinate_flag(inv, "--j"), c);
  out << "finite: " << (result.finite ? "true" : "false") << '\n';
  if (result.index) out << "index: " << to_string(*result.index) << '\n';
  return result.finite ? success : negative;
}

int kernel3(Invocation const& inv, std::ostream& out) {
  auto const m = read_matrices(read_file(inv.one("--file")), 4);
  for (auto const& v : abelian_sum_kernel(m[0], m[1], m[2], m[3])) out << join(v) << '\n';
  return success;
}

int fibre_assemble(Invocation const& inv, std::ostream& out) {
  out << assemble_problem(fibre_problem(read_file(inv.one("--file")))).to_string();
  return success;
}

int fibre_audit(Invocation const& inv, std::ostream& out) {
  FibreProblem const problem = fibre_problem(read_file(inv.one("--file")));
  if (!problem.iota1 || !problem.iota2) throw InputError("fibre audit needs iota1 and iota2 in the problem file");
  Presentation const p = inv.has("--presentation") ? Presentation::parse(read_file(inv.one("--presentation")))
                                                   : assemble_problem(problem);
  AuditReport const report = relator_audit(p, *problem.iota1, *problem.iota2);
  out << report.to_string();
  return report.passed() ? success : negative;
}

using Handler = int (*)(Invocation const&, std::ostream&);

std::map<std::string, Handler> const& handlers() {
  static std::map<std::string, Handler> const table{
      {"word reduce", word_reduce},     {"word comm", word_comm},         {"magnus eval", magnus_eval},
      {"magnus inv", magnus_inv},       {"lcs member", lcs_member_cmd},   {"nilp eq", nilp_eq_cmd},
      {"sec gens", sec_gens},           {"sec cert", sec_cert},           {"sec shift", sec_shift},
      {"lattice snf", lattice_snf},     {"lattice index", lattice_index_cmd}, {"vsp check", vsp_check_cmd},
      {"kernel3", kernel3},             {"fibre assemble", fibre_assemble}, {"fibre audit", fibre_audit},
  };
  return table;
}

}  // namespace

std::string const& Invocation::one(std::string const& flag) const {
  auto const it = flags.find(flag);
  if (it == flags.end() || it->second.empty()) throw InputError(flag + " is required");
  if (it->second.size() > 1) throw InputError(flag + " given more than once");
  return it->second.front();
}

std::vector<std::string> const& Invocation::all(std::string const& flag) const {
  auto const it = flags.find(flag);
  if (it == flags.end() || it->second.empty()) throw InputError(flag + " is required");
  return it->second;
}

Invocation parse_invocation(std::vector<std::string> const& args) {
  CLI::App app("Subdirect products of free groups: words, Magnus series, lattices, fibre products", "subdirect");
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<LeafSpec const*, CLI::App*>> leaf_apps;
  for (auto const& leaf : leaves()) {
    CLI::App* parent = nullptr;
    if (leaf.name.empty()) {
      parent = app.add_subcommand(leaf.group, leaf.help);
    } else {
      auto& group = groups[leaf.group];
      if (group == nullptr) {
        group = app.add_subcommand(leaf.group);
        group->require_subcommand(1);
      }
      parent = group->add_subcommand(leaf.name, leaf.help);
    }
    for (auto const& flag : leaf.flags) {
      CLI::Option* opt = parent->add_option(flag.name)->expected(1)->allow_extra_args(false);
      if (flag.repeatable) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      if (flag.required) opt->required();
    }
    parent->add_option("--format", "Output format (only 'text')")->expected(1)->check(CLI::IsMember({"text"}));
    leaf_apps.emplace_back(&leaf, parent);
  }

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    CLI::App const* shown = &app;
    for (auto const& [leaf, sub] : leaf_apps) {
      if (sub->parsed()) shown = sub;
    }
    for (auto const& [name, group] : groups) {
      if (group->parsed() && group->get_subcommands().empty()) shown = group;
    }
    throw HelpRequested{shown->help()};
  } catch (CLI::ParseError const& e) {
    throw InputError(e.what());
  }

  for (auto const& [leaf, sub] : leaf_apps) {
    if (!sub->parsed()) continue;
    Invocation inv;
    inv.command = command_name(*leaf);
    for (auto const& flag : leaf->flags) {
      CLI::Option const* opt = sub->get_option(flag.name);
      if (opt->count() == 0) continue;
      auto values = opt->results();
      if (!flag.repeatable && values.size() > 1) throw InputError(flag.name + " given more than once");
      inv.flags[flag.name] = std::move(values);
    }
    return inv;
  }
  throw InputError("no command given");
}

int execute(Invocation const& invocation, std::ostream& out) {
  auto const it = handlers().find(invocation.command);
  if (it == handlers().end()) throw InputError("unknown command '" + invocation.command + "'");
  return it->second(invocation, out);
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    int const code = execute(parse_invocation(args), buffer);
    out << buffer.str();
    return code;
  } catch (HelpRequested const& help) {
    out << help.text;
    return success;
  } catch (InputError const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (NonInvertibleError const& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace subdirect::cli
