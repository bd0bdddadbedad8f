#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace bec::cli {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Experiment {
    ground_state,
    evolve_gpe,
    modes,
    onebit,
    twobit,
    pairfield,
    pairfield_spinor,
    spinor,
    sweep,
};

Experiment experiment_from_name(const std::string& name);
std::string experiment_name(Experiment e);

// Flat sectioned key=value configuration. Parsing is strict: sections and
// keys must belong to the chosen experiment's schema, required keys must
// be present, and numeric values must parse fully.
struct RunConfig {
    Experiment experiment = Experiment::ground_state;
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& section, const std::string& key) const;
    double real(const std::string& section, const std::string& key) const;
    double real_or(const std::string& section, const std::string& key, double fallback) const;
    long integer(const std::string& section, const std::string& key) const;
    long integer_or(const std::string& section, const std::string& key, long fallback) const;
    std::string str(const std::string& section, const std::string& key) const;
    std::string str_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;

    // Canonical text form; parse(serialize(c)) == c.
    std::string serialize() const;
};

RunConfig parse_config(const std::string& text);

}  // namespace bec::cli
