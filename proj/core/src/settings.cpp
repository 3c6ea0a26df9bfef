#include "ffopt/settings.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ffopt/objectives.hpp"

namespace ffopt {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = value.find(',', start);
        const std::string item =
            trim(pos == std::string::npos ? value.substr(start)
                                          : value.substr(start, pos - start));
        if (!item.empty()) out.push_back(item);
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expect) {
    throw std::invalid_argument("bad value '" + value + "' for key '" + key +
                                "' (expected " + expect + ")");
}

double to_double(const std::string& key, const std::string& value) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size())
        bad_value(key, value, "a number");
    return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || p != value.data() + value.size())
        bad_value(key, value, "a nonnegative integer");
    return v;
}

std::size_t to_size(const std::string& key, const std::string& value) {
    return static_cast<std::size_t>(to_u64(key, value));
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    bad_value(key, value, "true/false");
}

void check_algorithm(const std::string& key, const std::string& value) {
    try {
        parse_algorithm(value);
    } catch (const std::invalid_argument&) {
        bad_value(key, value, "fa, pso, or ga");
    }
}

void check_objective(const std::string& key, const std::string& value) {
    if (!is_objective_name(value)) {
        std::ostringstream expect;
        expect << "one of:";
        for (const auto& n : objective_names()) expect << ' ' << n;
        bad_value(key, value, expect.str());
    }
}

}  // namespace

TrialPlan Settings::plan_for(Algorithm alg, const std::string& obj) const {
    TrialPlan plan;
    plan.algorithm = alg;
    plan.objective = obj;
    plan.dim = dim;
    plan.runs = runs;
    plan.base_seed = seed;
    plan.stop = stop;
    plan.success_tolerance = success_tolerance;
    plan.evaluation_cap = evaluation_cap;
    plan.fa = fa;
    plan.pso = pso;
    plan.ga = ga;
    return plan;
}

Settings default_settings() {
    Settings s;
    if (const char* env = std::getenv("FFOPT_OUT"); env && *env) s.out_dir = env;
    return s;
}

const std::vector<std::string>& valid_keys() {
    static const std::vector<std::string> keys = {
        "algorithm",
        "algorithms",
        "dim",
        "evaluation_cap",
        "fa.alpha",
        "fa.alpha_decay",
        "fa.attractiveness",
        "fa.beta0",
        "fa.gamma",
        "fa.m_exponent",
        "fa.max_evaluations",
        "fa.max_generations",
        "fa.n",
        "fa.noise",
        "fa.scale_alpha",
        "format",
        "ga.elitism",
        "ga.max_evaluations",
        "ga.max_generations",
        "ga.mutation_sigma_frac",
        "ga.n",
        "ga.p_c",
        "ga.p_m",
        "objective",
        "objectives",
        "out",
        "pso.alpha",
        "pso.beta",
        "pso.max_evaluations",
        "pso.max_generations",
        "pso.n",
        "pso.theta",
        "pso.v_max_scale",
        "runs",
        "seed",
        "stop.tolerance",
        "stop.window",
        "success_tolerance",
    };
    return keys;
}

void apply_kv(Settings& s, const std::string& key, const std::string& value) {
    if (key == "algorithm") {
        check_algorithm(key, value);
        s.algorithm = value;
    } else if (key == "algorithms") {
        auto items = split_list(value);
        if (items.empty()) bad_value(key, value, "a comma list of fa/pso/ga");
        for (const auto& a : items) check_algorithm(key, a);
        s.algorithms = std::move(items);
    } else if (key == "objective") {
        check_objective(key, value);
        s.objective = value;
    } else if (key == "objectives") {
        auto items = split_list(value);
        if (items.empty()) bad_value(key, value, "a comma list of objective names");
        for (const auto& o : items) check_objective(key, o);
        s.objectives = std::move(items);
    } else if (key == "dim") {
        s.dim = to_size(key, value);
    } else if (key == "runs") {
        s.runs = to_size(key, value);
        if (s.runs < 1) bad_value(key, value, "an integer >= 1");
    } else if (key == "seed") {
        s.seed = to_u64(key, value);
    } else if (key == "out") {
        s.out_dir = value;
    } else if (key == "format") {
        if (value != "csv" && value != "tsv" && value != "pretty")
            bad_value(key, value, "csv, tsv, or pretty");
        s.format = value;
    } else if (key == "stop.tolerance") {
        s.stop.tolerance = to_double(key, value);
        if (s.stop.tolerance <= 0.0) bad_value(key, value, "a number > 0");
    } else if (key == "stop.window") {
        s.stop.window = to_size(key, value);
    } else if (key == "success_tolerance") {
        s.success_tolerance = to_double(key, value);
        if (s.success_tolerance <= 0.0) bad_value(key, value, "a number > 0");
    } else if (key == "evaluation_cap") {
        s.evaluation_cap = to_u64(key, value);
    } else if (key == "fa.n") {
        s.fa.n = to_size(key, value);
    } else if (key == "fa.alpha") {
        s.fa.alpha = to_double(key, value);
    } else if (key == "fa.beta0") {
        s.fa.beta0 = to_double(key, value);
    } else if (key == "fa.gamma") {
        s.fa.gamma = to_double(key, value);
    } else if (key == "fa.m_exponent") {
        s.fa.m_exponent = to_double(key, value);
    } else if (key == "fa.attractiveness") {
        if (value == "gaussian")
            s.fa.attractiveness_form = FaConfig::Attractiveness::gaussian;
        else if (value == "rational")
            s.fa.attractiveness_form = FaConfig::Attractiveness::rational;
        else
            bad_value(key, value, "gaussian or rational");
    } else if (key == "fa.noise") {
        if (value == "uniform")
            s.fa.noise = FaConfig::Noise::uniform_centered;
        else if (value == "normal")
            s.fa.noise = FaConfig::Noise::normal;
        else
            bad_value(key, value, "uniform or normal");
    } else if (key == "fa.scale_alpha") {
        s.fa.scale_alpha_per_dim = to_bool(key, value);
    } else if (key == "fa.alpha_decay") {
        s.fa.alpha_decay = to_double(key, value);
    } else if (key == "fa.max_generations") {
        s.fa.max_generations = to_size(key, value);
    } else if (key == "fa.max_evaluations") {
        s.fa.max_evaluations = to_u64(key, value);
    } else if (key == "pso.n") {
        s.pso.n = to_size(key, value);
    } else if (key == "pso.alpha") {
        s.pso.alpha = to_double(key, value);
    } else if (key == "pso.beta") {
        s.pso.beta = to_double(key, value);
    } else if (key == "pso.theta") {
        if (value == "none")
            s.pso.theta.reset();
        else
            s.pso.theta = to_double(key, value);
    } else if (key == "pso.v_max_scale") {
        if (value == "none")
            s.pso.v_max_scale.reset();
        else
            s.pso.v_max_scale = to_double(key, value);
    } else if (key == "pso.max_generations") {
        s.pso.max_generations = to_size(key, value);
    } else if (key == "pso.max_evaluations") {
        s.pso.max_evaluations = to_u64(key, value);
    } else if (key == "ga.n") {
        s.ga.n = to_size(key, value);
    } else if (key == "ga.p_m") {
        s.ga.p_m = to_double(key, value);
    } else if (key == "ga.p_c") {
        s.ga.p_c = to_double(key, value);
    } else if (key == "ga.elitism") {
        s.ga.elitism = to_bool(key, value);
    } else if (key == "ga.mutation_sigma_frac") {
        s.ga.mutation_sigma_frac = to_double(key, value);
    } else if (key == "ga.max_generations") {
        s.ga.max_generations = to_size(key, value);
    } else if (key == "ga.max_evaluations") {
        s.ga.max_evaluations = to_u64(key, value);
    } else {
        std::ostringstream msg;
        msg << "unknown key '" << key << "'; valid keys:";
        for (const auto& k : valid_keys()) msg << ' ' << k;
        throw std::invalid_argument(msg.str());
    }
}

void apply_set_arg(Settings& s, const std::string& pair) {
    const auto pos = pair.find('=');
    if (pos == std::string::npos)
        throw std::invalid_argument("--set needs KEY=VALUE, got '" + pair + "'");
    apply_kv(s, trim(pair.substr(0, pos)), trim(pair.substr(pos + 1)));
}

void load_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto pos = line.find('=');
        if (pos == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value, got '" + line + "'");
        try {
            apply_kv(s, trim(line.substr(0, pos)), trim(line.substr(pos + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
}

}  // namespace ffopt
