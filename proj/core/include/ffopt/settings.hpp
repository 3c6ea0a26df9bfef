#pragma once

#include <string>
#include <vector>

#include "ffopt/trials.hpp"

namespace ffopt {

// Everything the CLI can configure, in one bag. Populated in precedence
// order: built-in defaults, then the config file, then --set pairs in
// command-line order, then the dedicated flags (--seed and friends).
struct Settings {
    // run selection
    std::string algorithm = "fa";          // run/trace
    std::vector<std::string> algorithms = {"ga", "pso", "fa"};  // bench matrix
    std::string objective = "michalewicz";  // run/trace
    std::vector<std::string> objectives = {"michalewicz"};      // bench matrix
    std::size_t dim = 0;  // 0 = objective default

    // protocol
    std::size_t runs = 100;
    std::uint64_t seed = 1;
    StopRule stop{};
    double success_tolerance = 1e-3;
    std::uint64_t evaluation_cap = 0;  // 0 = per-pair default

    // output
    std::string out_dir = ".";
    std::string format = "pretty";  // csv | tsv | pretty

    FaConfig fa{};
    PsoConfig pso{};
    GaConfig ga{};

    // plan for one (algorithm, objective) cell of the bench matrix
    TrialPlan plan_for(Algorithm algorithm, const std::string& objective) const;
};

// Defaults, with the output directory taken from $FFOPT_OUT when set.
Settings default_settings();

// All recognized keys, sorted — the unknown-key diagnostic lists these.
const std::vector<std::string>& valid_keys();

// Applies one key=value pair. Throws std::invalid_argument naming the
// offending key/value; unknown keys get the full valid-key list.
void apply_kv(Settings& s, const std::string& key, const std::string& value);

// Splits "key=value" and applies it.
void apply_set_arg(Settings& s, const std::string& pair);

// Flat config file: one key=value per line, '#' starts a comment,
// blank lines ignored. Errors carry the line number.
void load_config_file(Settings& s, const std::string& path);

}  // namespace ffopt
