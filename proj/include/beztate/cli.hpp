#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beztate/report.hpp"
#include "beztate/tate.hpp"

namespace beztate::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2, kInconclusive = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;

  // shared
  std::string field = "p:32003";
  bool quiet = false;
  bool timing = false;
  std::string output;

  // bezoutian, syzygies, duality
  std::string forms_path;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> slice;

  // tate
  int ell = 0;
  int p_min = 0;
  int p_max = 0;
  int t_min = 0;
  int t_max = 0;
  std::string subspace_path;

  // verify
  std::string check;
  std::string window_path;

  // syzygies
  int degree = 0;
  bool bezout = false;
  std::optional<int> b_max;
  std::optional<int> i;

  // duality, syzygies
  std::optional<int> a;
};

/// The report behind `verify --check NAME`: complex, exactness, generators
/// (every p whose generator degree lies in the window) or cone.
Report verify_window(const TateWindow& w, const std::string& check);

/// argv without the program name.  Throws UsageError naming the problem.
Command parse(const std::vector<std::string>& args);

/// Runs a parsed command.  JSON goes to `out` (or Command::output), human
/// summaries and diagnostics to `err`.
int execute(const Command& c, std::ostream& out, std::ostream& err);

/// parse + execute, mapping usage errors to exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beztate::cli
