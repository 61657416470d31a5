#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamlie::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kInputError = 2,
};

/// One parsed invocation. Operands are the --input files in order, followed
/// by the --inline documents in order.
struct JobSpec {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<std::string> inlines;
    std::optional<std::size_t> n;
    std::optional<std::size_t> p;
    std::optional<long> bound;
    std::size_t samples = 50;
    std::uint64_t seed = 0;
    bool of_cybe = false;
    std::string output;
};

/// Runs one job and writes its JSON report to `out` (or to job.output).
/// Returns an ExitCode.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and runs the
/// job. Usage errors return kInputError.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace hamlie::cli
