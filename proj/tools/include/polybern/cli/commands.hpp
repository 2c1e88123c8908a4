#ifndef POLYBERN_CLI_COMMANDS_HPP
#define POLYBERN_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <polybern/rational.hpp>
#include <polybern/verify.hpp>

namespace polybern::cli
{

/// Exit codes shared by every command.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// A named sequence with its parameters and exact values indexed from 0.
struct SequenceTable {
	std::string sequence;
	std::vector<std::pair<std::string, std::string>> params;
	std::vector<std::pair<int, Rational>> entries;
};

enum class Convention { egf, ogf };

struct TableRequest {
	std::string kind;
	int n_max = 10;
	std::optional<int> k;
	std::optional<Rational> x;
	std::optional<Convention> convention;
};

/// Builds the table for a request. Throws std::invalid_argument when the flag
/// combination is invalid for the requested kind.
SequenceTable build_table(const TableRequest &request);

/// CSV with header "n,value".
std::string render_csv(const SequenceTable &table);
/// {"sequence":..., "params":{...}, "entries":[{"n":0,"value":"1"},...]}
std::string render_json(const SequenceTable &table);

/// Parses "a" or "a..b" into the inclusive list of integers.
std::vector<int> parse_k_range(const std::string &text);

/// Runs `polybern <command> [flags]`; args excludes the program name.
/// Identities are resolved through `registry`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const IdentityRegistry &registry);

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polybern::cli

#endif
