#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "strongpoly/hom.hpp"

namespace strongpoly::suite {

struct SuiteConfig {
    std::uint64_t seed = 0;
    HomOptions hom;
    /// Validation offsets handed to the verifier.
    std::vector<int> offsets{1, 2};
    /// Progress and failure lines, or null for silence.
    std::ostream* log = nullptr;
};

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// identities, branching, cotree, hypercube
const std::vector<std::string>& suite_names();

/// Criterion ids of a suite; criterion 10 is split into 10a (min bc) and 10b (gamma).
/// Throws DomainError for an unknown suite.
std::vector<std::string> suite_criteria(std::string_view suite);

/// "1" .. "12" plus "10a" and "10b". Exceptions inside a criterion become a failed result.
CriterionResult run_criterion(std::string_view id, const SuiteConfig& cfg = {});

std::vector<CriterionResult> run_suite(std::string_view suite, const SuiteConfig& cfg = {});

/// "PASS  6  title  (12.3 s)  detail"; the time is left out unless `timing`.
std::string format_result(const CriterionResult& r, bool timing = true);

}  // namespace strongpoly::suite
