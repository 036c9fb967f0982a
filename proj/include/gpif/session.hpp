#ifndef GPIF_SESSION_HPP
#define GPIF_SESSION_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpif/monomial.hpp"
#include "gpif/rpe.hpp"
#include "gpif/zmodule.hpp"

namespace gpif {

// One parsed statement of the session language; the file is replayed in
// order, so a Session is just the statement list plus name bookkeeping.
struct Statement {
  enum class Kind { Ring, Ideal, Module, Sub, Command };
  Kind kind;

  // ring
  bool ring_is_z = false;
  std::vector<std::string> ring_vars;

  // named declarations
  std::string name;
  std::vector<Monomial> ideal_gens;

  // module: rank plus optional relation columns (Z rings only)
  int rank = 0;
  std::vector<std::vector<Int>> relations;

  // sub: parent module ("" = the ring itself for rank-1 ideals is not used;
  // subs always name a module); generator columns, one entry per coordinate,
  // nullopt = 0 in the monomial case
  std::string parent;
  std::vector<std::vector<std::optional<Monomial>>> mono_columns;
  std::vector<std::vector<Int>> z_columns;

  // command
  std::string verb;
  std::vector<std::string> args;
  std::optional<PrimeIdeal> prime_arg;  // `colon N (x,y)` form

  bool operator==(const Statement&) const = default;
};

struct Session {
  std::vector<Statement> statements;

  bool has_ring = false;
  bool ring_is_z = false;
  std::vector<std::string> ring_vars;

  // name -> index into statements, for ideals/modules/subs
  std::map<std::string, std::size_t> names;

  bool operator==(const Session& o) const { return statements == o.statements; }
};

Session parse_session(const std::string& text);

// Re-emits source that parses back to an equal Session.
std::string print_session(const Session& s);

struct RunOptions {
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  TieBreak tie = TieBreak::Canonical;
  int oracle_bound = 512;
};

// Executes every command; returns the process exit code (0 ok, 2 theorem
// verdict violated, 3 internal verification failure).  Parse errors are
// thrown by parse_session before this runs.
int run_session(const Session& s, const RunOptions& opts, std::ostream& out);

}  // namespace gpif

#endif
