#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ostar::cli {

inline constexpr const char* kVersion = "ostar 1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;

enum class Format { Json, Csv };

struct RunConfig {
    std::string subcommand;
    int k = 0;
    int l = 0;
    std::size_t n = 0;
    double tol = 1e-12;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::optional<Format> format;  // json unless the subcommand defaults to csv

    std::string in_path;
    std::string out_path;

    // construct
    std::optional<double> alpha;
    std::optional<double> d;
    bool balanced = false;
    bool seed_given = false;

    // search
    bool exhaustive = false;
    bool local = false;
    std::size_t moves = 1000;
    std::size_t restarts = 1;

    // density / mc
    std::size_t exact_limit = 400;
    std::uint64_t samples = 1000000;

    // inducibility-table
    int m_min = 6;
    int m_max = 10;

    // verify
    std::string suite = "all";
    std::size_t graphs = 1000;

    // stability
    double eps = 0.05;
};

// Parses argv into a config. Throws CLI::ParseError (including the
// help/version requests) on usage problems.
RunConfig parse(int argc, const char* const* argv);

// Executes a parsed config, writing the report to `out`.
int run(const RunConfig& config, std::ostream& out);

// parse + run with error handling and exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ostar::cli
