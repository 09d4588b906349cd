/*
   Copyright 2026 The hilbcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HILBCURVE_CLI_HPP
#define HILBCURVE_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbcurve::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum class OutputFormat { Json, Human };

/// Everything one invocation needs.  Fields not used by the chosen
/// subcommand stay empty.
struct CommandConfig {
    std::string subcommand;
    OutputFormat format = OutputFormat::Json;

    std::optional<unsigned> n;
    std::optional<unsigned> beta;
    std::vector<unsigned> branches;

    std::string a_text;
    std::string b_text;
    std::string f_text;

    std::vector<unsigned> mults;
    std::vector<std::string> points;
    std::string alpha_text;

    std::vector<unsigned> mu;
    std::optional<unsigned> zbeta;

    unsigned trials = 20;
    std::uint64_t seed = kDefaultSeed;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int input_error = 2;
} // namespace exit_code

struct CommandResult {
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

/// Parses argv (without the program name).  The default seed comes from
/// default_seed, which callers fill from HILB_SEED.  On parse failure or
/// --help the returned result carries the exit code and message instead.
struct ParsedCommand {
    std::optional<CommandConfig> config;
    CommandResult early_exit;
};
ParsedCommand parse_command_line(const std::vector<std::string>& args, std::uint64_t default_seed = kDefaultSeed);

CommandResult run(const CommandConfig& config);

/// parse_command_line followed by run.
CommandResult run(const std::vector<std::string>& args, std::uint64_t default_seed = kDefaultSeed);

/// HILB_SEED when set to a valid unsigned integer, else kDefaultSeed.
std::uint64_t seed_from_environment();

} // namespace hilbcurve::cli

#endif
