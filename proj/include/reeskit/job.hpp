#ifndef REESKIT_JOB_HPP
#define REESKIT_JOB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reeskit/analysis.hpp"

namespace reeskit {

inline constexpr const char* tool_name = "reeskit";
inline constexpr const char* tool_version = "0.1.0";

// One analysis job, as stored in a .json job file.  Matrix entries are
// polynomial strings; fitting primes are lists of x-variable names.
struct job_spec {
    std::string name;  // file stem; empty for jobs parsed from raw text
    field_spec field;
    int x_count = 0;
    std::vector<std::vector<std::string>> matrix;
    int rank_e = 0;
    std::optional<int> s_hint;
    std::vector<std::vector<std::string>> fitting_primes;
    bool allow_nonlinear = false;
    int depth = -1;  // approximation chain: -1 skip, 0 default, k > 0 depth k
    std::uint64_t seed = 0;
    double timeout_seconds = 0;  // 0: field default (600 rationals, 120 prime)
};

// "q" or "zp:<prime>"
field_spec parse_field(const std::string& text);

job_spec parse_job(const std::string& text);
job_spec load_job(const std::string& path);

// the ring the job lives in: x_count from the job, one T-variable per row
ring_spec job_ring(const job_spec& job);
poly_matrix job_matrix(const job_spec& job);
// resolves fitting-prime variable names to 0-based indices
analyze_options job_options(const job_spec& job);
double job_timeout(const job_spec& job);

nlohmann::json report_to_json(const analysis_report& rep, const std::string& job_name);

// report with run-varying keys (timings, tool_version) removed; its dump is
// byte-identical across runs of the same (job, seed, field)
nlohmann::json canonical_report(nlohmann::json rep);
std::string dump_report(const nlohmann::json& rep);

// recursive field-by-field comparison, ignoring run-varying keys; each entry
// is "path: expected <a>, got <b>"
std::vector<std::string> report_diff(const nlohmann::json& expected,
                                     const nlohmann::json& actual);

}  // namespace reeskit

#endif
