#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pubgood {

struct ReproOptions {
    std::uint64_t seed = 7;
    // pentagon-gap overrides; N < 0 means the default ladder {10, 100, 1000}.
    long pentagon_n = -1;
    double pentagon_p = 0.5;
};

struct ExperimentResult {
    std::string name;
    bool pass = false;
    std::string detail;    // one-line summary for the PASS/FAIL report
    nlohmann::json table;  // plot-ready rows
    double seconds = 0.0;
};

/// Names accepted by run_repro, in suite order.
const std::vector<std::string>& repro_names();

/// Runs one named reproduction experiment. Each experiment checks its
/// acceptance conditions at fixed tolerances and reports pass/fail plus a
/// data table. Deterministic given opt.seed.
ExperimentResult run_repro(const std::string& name, const ReproOptions& opt = {});

/// Runs the whole suite in order.
std::vector<ExperimentResult> run_all_repro(const ReproOptions& opt = {});

}  // namespace pubgood
