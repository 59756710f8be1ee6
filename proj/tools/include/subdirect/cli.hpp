#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace subdirect::cli {

// 3 is reserved for internal errors (a bug, never an input problem).
enum ExitCode : int { success = 0, negative = 1, input_error = 2, internal_error = 3 };

// A recognised leaf command ("sec gens") with its flag values in the order
// given. Repeatable flags hold several values.
struct Invocation {
  std::string command;
  std::map<std::string, std::vector<std::string>> flags;

  bool has(std::string const& flag) const { return flags.count(flag) != 0; }
  std::string const& one(std::string const& flag) const;
  std::vector<std::string> const& all(std::string const& flag) const;
};

// Thrown by parse_invocation for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

// Throws InputError for unknown commands/flags and missing required flags.
Invocation parse_invocation(std::vector<std::string> const& args);

// Writes the command's text output to `out` and returns the exit code. Input
// errors surface as InputError before anything is written.
int execute(Invocation const& invocation, std::ostream& out);

// parse + execute. Output is written only if the whole command succeeds;
// diagnostics go to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace subdirect::cli
