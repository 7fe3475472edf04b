#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "torusfill/fillability.hpp"
#include "torusfill/mcgwords.hpp"
#include "torusfill/serialize.hpp"

namespace torusfill::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

/// Bad flags or flag combinations; carries the help text to print.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string help) : std::runtime_error(what), help_(std::move(help)) {}
  const std::string& help() const noexcept { return help_; }

 private:
  std::string help_;
};

enum class Command { Classify, H1, NormalForm, Rho, Reduce, Ledger, Verdict, EmbedSearch, Divisor, McgVerify };
enum class Format { Text, Json };

std::string_view to_string(Command c);

/// ledger --n: the parabolic cobordism W for xi_n.
struct ParabolicLedgerInput {
  Int n = 0;
  bool operator==(const ParabolicLedgerInput&) const = default;
};

/// ledger --matrix/--seq: one surgery along lambda.
struct HyperbolicLedgerInput {
  Mat2 monodromy;
  bool operator==(const HyperbolicLedgerInput&) const = default;
};

struct DivisorInput {
  std::vector<Int> e;
  bool operator==(const DivisorInput&) const = default;
};

struct McgInput {
  std::optional<std::string> script_path;
  std::optional<TwistWord> word;
  bool operator==(const McgInput&) const = default;
};

using Payload = std::variant<Mat2, DSeq, ContactDescriptor, ParabolicLedgerInput, HyperbolicLedgerInput, DivisorInput,
                             McgInput>;

struct Request {
  Command command = Command::Classify;
  Payload payload;
  Format format = Format::Text;
  VerdictOptions options;  // --budget sets seq_sum, --bound sets conjugator_bound

  bool operator==(const Request& o) const {
    return command == o.command && payload == o.payload && format == o.format &&
           options.budget.seq_sum == o.options.budget.seq_sum &&
           options.budget.conjugator_bound == o.options.budget.conjugator_bound;
  }
};

struct Report {
  Command command = Command::Classify;
  Json result;
  std::vector<std::string> citations;
  std::vector<std::string> warnings;
  std::vector<std::string> text;  // human-readable lines
  int exit_code = kExitOk;

  Json to_json() const;
};

/// argv without the program name. Throws UsageError.
Request parse_request(const std::vector<std::string>& args);

/// Throws torusfill::Error for domain failures.
Report run(const Request& req);

std::string render(const Report& report, Format format);

/// Whole program: parse, run, print, map failures to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusfill::cli
