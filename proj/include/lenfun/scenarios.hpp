#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lenfun {

struct Failure {
    long case_index = 0;
    std::string detail;
};

/// Outcome of one scenario run; deterministic for a fixed (name, seed,
/// cases) apart from the wall time.
struct Report {
    std::string scenario;
    std::uint64_t seed = 0;
    long cases = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;
    long wall_ms = 0;

    bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& scenario_names();
bool is_scenario(const std::string& name);
long default_cases(const std::string& name);

/// Runs a named invariant suite; throws std::invalid_argument for unknown
/// names.
Report run_scenario(const std::string& name, std::uint64_t seed, long cases);

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace lenfun
