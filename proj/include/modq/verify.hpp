#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modq/enumgeo.hpp"

namespace modq::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    /// Exact identities are compared through q^order.
    std::int64_t order = 60;
    std::uint64_t seed = 20240601;
    double budget = enumgeo::kDefaultOracleBudget;
    /// Where the mirror suite archives its oracle-vs-mirror report.
    std::filesystem::path report_path = "mirror-report.json";
    /// Optional oracle cache.
    std::optional<std::filesystem::path> cache_path;
};

std::vector<CheckResult> run_exact(const Options& opts);
std::vector<CheckResult> run_numeric(const Options& opts);
std::vector<CheckResult> run_mirror(const Options& opts);

/// suite is one of exact, numeric, mirror, all.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& opts);

} // namespace modq::verify
