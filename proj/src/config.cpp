#include "bec/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace bec::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

enum class KeyType { real, integer, text };

struct KeySpec {
    KeyType type = KeyType::real;
    bool required = false;
};

using SectionSchema = std::map<std::string, KeySpec>;
using Schema = std::map<std::string, SectionSchema>;

const KeySpec req_real{KeyType::real, true};
const KeySpec opt_real{KeyType::real, false};
const KeySpec req_int{KeyType::integer, true};
const KeySpec opt_int{KeyType::integer, false};
const KeySpec req_text{KeyType::text, true};
const KeySpec opt_text{KeyType::text, false};

SectionSchema grid_schema() {
    return {{"n", req_int}, {"x_min", req_real}, {"x_max", req_real}};
}

SectionSchema potential_schema() {
    return {{"kind", req_text},   {"omega", opt_real}, {"v0", opt_real},
            {"d", opt_real},      {"omega_z", opt_real}, {"z_center", opt_real}};
}

SectionSchema condensate_schema() {
    return {{"g", req_real}, {"n_particles", req_real}};
}

SectionSchema kernel_schema() {
    return {{"kind", req_text}, {"w0", opt_real}, {"a", opt_real},
            {"s", opt_real},    {"offset", opt_real}};
}

SectionSchema integrator_schema() {
    return {{"dt", req_real}, {"record_stride", opt_int}, {"scheme", opt_text},
            {"max_steps", opt_int}};
}

Schema schema_for(Experiment e) {
    Schema s;
    s["experiment"] = {{"name", req_text}};
    switch (e) {
        case Experiment::ground_state:
            s["grid"] = grid_schema();
            s["potential"] = potential_schema();
            s["condensate"] = condensate_schema();
            break;
        case Experiment::evolve_gpe:
            s["grid"] = grid_schema();
            s["potential"] = potential_schema();
            s["condensate"] = condensate_schema();
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            s["experiment"]["initial"] = opt_text;  // ground_state | gaussian | left_mode
            s["experiment"]["x0"] = opt_real;
            s["experiment"]["width"] = opt_real;
            break;
        case Experiment::modes:
            s["grid"] = grid_schema();
            s["potential"] = potential_schema();
            s["condensate"] = condensate_schema();
            s["kernel"] = kernel_schema();
            break;
        case Experiment::onebit:
            s["onebit"] = {{"e_onsite", opt_real}, {"omega", opt_real},  {"kappa_n", opt_real},
                           {"mu1_n", opt_real},    {"mu2_n", opt_real},  {"couplings_file", opt_text},
                           {"c0_re", opt_real},    {"c0_im", opt_real},  {"c1_re", opt_real},
                           {"c1_im", opt_real}};
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            break;
        case Experiment::twobit:
            s["twobit"] = {{"mode", req_text},     {"e_a", opt_real},   {"e_b", opt_real},
                           {"omega_a", opt_real},  {"omega_b", opt_real}, {"g_a", opt_real},
                           {"g_b", opt_real},      {"chi_a", opt_real}, {"chi_b", opt_real},
                           {"n_particles", opt_real}, {"mu1", opt_real}, {"mu2", opt_real},
                           {"nu1", opt_real},      {"nu2", opt_real},   {"report", opt_text},
                           {"c00_re", opt_real},   {"c00_im", opt_real}, {"c01_re", opt_real},
                           {"c01_im", opt_real},   {"c10_re", opt_real}, {"c10_im", opt_real},
                           {"c11_re", opt_real},   {"c11_im", opt_real}};
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            break;
        case Experiment::pairfield:
            s["grid"] = grid_schema();
            s["potential"] = potential_schema();
            s["condensate"] = condensate_schema();
            s["kernel"] = kernel_schema();
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            s["experiment"]["initial_a"] = opt_text;  // left | right | plus
            s["experiment"]["initial_b"] = opt_text;
            s["experiment"]["same_condensate_w"] = opt_text;
            break;
        case Experiment::pairfield_spinor:
            s["grid"] = grid_schema();
            s["kernel"] = kernel_schema();
            s["spinor_pair"] = {{"omega_z", req_real}, {"z0", req_real}, {"z1", req_real},
                                {"g00", req_real},     {"g01", req_real}, {"g11", req_real},
                                {"n_particles", req_real}, {"c00_re", opt_real},
                                {"c00_im", opt_real},  {"c01_re", opt_real}, {"c01_im", opt_real},
                                {"c10_re", opt_real},  {"c10_im", opt_real}, {"c11_re", opt_real},
                                {"c11_im", opt_real}};
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            break;
        case Experiment::spinor:
            s["grid"] = grid_schema();
            s["spinor"] = {{"rabi", req_real},   {"detuning", req_real}, {"g00", req_real},
                           {"g01", req_real},    {"g11", req_real},      {"n_particles", req_real},
                           {"omega_z", req_real}, {"z0", req_real},      {"z1", req_real}};
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            break;
        case Experiment::sweep:
            s["sweep"] = {{"parameter", req_text}, {"from", req_real}, {"to", req_real},
                          {"steps", req_int}};
            s["onebit"] = {{"omega", req_real},  {"c0_re", opt_real}, {"c0_im", opt_real},
                           {"c1_re", opt_real},  {"c1_im", opt_real}};
            s["integrator"] = integrator_schema();
            s["experiment"]["t_final"] = req_real;
            break;
    }
    return s;
}

bool parses_as_real(const std::string& v) {
    std::istringstream is(v);
    double d;
    is >> d;
    return is && is.eof();
}

bool parses_as_integer(const std::string& v) {
    std::istringstream is(v);
    long d;
    is >> d;
    return is && is.eof();
}

}  // namespace

Experiment experiment_from_name(const std::string& name) {
    static const std::map<std::string, Experiment> names = {
        {"ground_state", Experiment::ground_state},
        {"evolve_gpe", Experiment::evolve_gpe},
        {"modes", Experiment::modes},
        {"onebit", Experiment::onebit},
        {"twobit", Experiment::twobit},
        {"pairfield", Experiment::pairfield},
        {"pairfield_spinor", Experiment::pairfield_spinor},
        {"spinor", Experiment::spinor},
        {"sweep", Experiment::sweep},
    };
    auto it = names.find(name);
    if (it == names.end()) throw ConfigError("unknown experiment '" + name + "'");
    return it->second;
}

std::string experiment_name(Experiment e) {
    switch (e) {
        case Experiment::ground_state: return "ground_state";
        case Experiment::evolve_gpe: return "evolve_gpe";
        case Experiment::modes: return "modes";
        case Experiment::onebit: return "onebit";
        case Experiment::twobit: return "twobit";
        case Experiment::pairfield: return "pairfield";
        case Experiment::pairfield_spinor: return "pairfield_spinor";
        case Experiment::spinor: return "spinor";
        case Experiment::sweep: return "sweep";
    }
    return "";
}

RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::map<std::string, std::map<std::string, int>> key_lines;

    std::istringstream is(text);
    std::string line;
    std::string current;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty())
                throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
            sections[current];  // sections may be empty (e.g. kind-only later)
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        if (current.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        if (sections[current].count(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        sections[current][key] = value;
        key_lines[current][key] = line_no;
    }

    auto exp_it = sections.find("experiment");
    if (exp_it == sections.end() || !exp_it->second.count("name"))
        throw ConfigError("missing [experiment] section with a 'name' key");

    RunConfig cfg;
    cfg.experiment = experiment_from_name(exp_it->second.at("name"));
    cfg.sections = std::move(sections);

    const Schema schema = schema_for(cfg.experiment);
    for (const auto& [sec, keys] : cfg.sections) {
        auto sit = schema.find(sec);
        if (sit == schema.end())
            throw ConfigError("unknown section [" + sec + "] for experiment '" +
                              experiment_name(cfg.experiment) + "'");
        for (const auto& [key, value] : keys) {
            auto kit = sit->second.find(key);
            if (kit == sit->second.end())
                throw ConfigError("unknown key '" + key + "' in [" + sec + "]");
            const int ln = key_lines[sec][key];
            if (kit->second.type == KeyType::real && !parses_as_real(value))
                throw ConfigError("line " + std::to_string(ln) + ": value of '" + key +
                                  "' in [" + sec + "] is not a number");
            if (kit->second.type == KeyType::integer && !parses_as_integer(value))
                throw ConfigError("line " + std::to_string(ln) + ": value of '" + key +
                                  "' in [" + sec + "] is not an integer");
        }
    }
    for (const auto& [sec, keys] : schema)
        for (const auto& [key, spec] : keys)
            if (spec.required && (!cfg.sections.count(sec) || !cfg.sections.at(sec).count(key)))
                throw ConfigError("missing required key '" + key + "' in [" + sec + "]");

    return cfg;
}

bool RunConfig::has(const std::string& section, const std::string& key) const {
    auto it = sections.find(section);
    return it != sections.end() && it->second.count(key) > 0;
}

double RunConfig::real(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw ConfigError("missing required key '" + key + "' in [" + section + "]");
    return std::stod(sections.at(section).at(key));
}

double RunConfig::real_or(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? real(section, key) : fallback;
}

long RunConfig::integer(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw ConfigError("missing required key '" + key + "' in [" + section + "]");
    return std::stol(sections.at(section).at(key));
}

long RunConfig::integer_or(const std::string& section, const std::string& key,
                           long fallback) const {
    return has(section, key) ? integer(section, key) : fallback;
}

std::string RunConfig::str(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw ConfigError("missing required key '" + key + "' in [" + section + "]");
    return sections.at(section).at(key);
}

std::string RunConfig::str_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const {
    return has(section, key) ? str(section, key) : fallback;
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [sec, keys] : sections) {
        if (!first) os << "\n";
        first = false;
        os << "[" << sec << "]\n";
        for (const auto& [key, value] : keys) os << key << " = " << value << "\n";
    }
    return os.str();
}

}  // namespace bec::cli
