#ifndef REESKIT_ANALYSIS_HPP
#define REESKIT_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeskit/instances.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

struct analyze_options {
    std::optional<int> s_hint;
    // candidate minimal primes of Fitt_{s+e-1} (0-based x-variable indices per
    // prime); when they certify, the oracle saturates by their product
    std::vector<std::vector<int>> fitting_primes;
    bool allow_nonlinear = false;
    // approximation chain: -1 skip, 0 default depth min(3, n-e), k>0 depth k
    int depth = -1;
    std::uint64_t seed = 0;
};

// Everything analyze computes.  Optional members stay empty when a stage is
// not applicable (wrong shape, nonlinear input) or was cut short by a
// resource limit (see abort_reason).
struct analysis_report {
    std::string field;
    std::uint64_t seed = 0;

    int n = 0, d = 0, e = 0;
    bool linear = true;
    bool few_generators = false;

    gs_profile_result gs;
    int s_used = 0;
    shape_classification shape;

    int fitting_index = 0;  // s + e - 1
    std::optional<unique_prime_result> unique_prime;
    std::optional<multi_prime_result> multi_prime;

    std::optional<oracle_result> oracle;
    std::optional<candidate_result> candidate;
    std::optional<bool> candidate_equals_oracle;

    std::optional<int> j_height;
    int expected_height = 0;
    bool height_ok = false;

    std::optional<fiber_result> fiber;
    std::optional<int> expected_spread;
    std::optional<bool> spread_ok;

    std::optional<residual_check_result> residual;
    std::optional<fiber_type_result> fiber_type;

    std::optional<chain_result> chain;

    std::vector<std::pair<std::string, double>> timings;   // (stage, seconds)
    std::optional<std::string> abort_reason;               // set on partial reports
};

// validate -> gs_profile -> classify -> submatrices -> candidate + oracle ->
// fiber -> verdicts (-> chain when requested).  Throws validation/parse/
// transition errors; resource limits instead truncate the report and set
// abort_reason.
analysis_report run_analysis(const poly_matrix& phi, int rank_e, const analyze_options& opts);

}  // namespace reeskit

#endif
