// regenerates the golden corpus: job files plus .expected.json sidecars
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "reeskit/instances.hpp"
#include "reeskit/job.hpp"

namespace fs = std::filesystem;
using namespace reeskit;
using nlohmann::json;

namespace {

json base_job(const std::vector<std::vector<std::string>>& matrix, int x_count, int rank_e) {
    json j;
    j["schema"] = 1;
    j["ring"] = {{"x_count", x_count}, {"field", "zp:32003"}};
    j["matrix"] = matrix;
    j["rank_e"] = rank_e;
    return j;
}

std::vector<std::vector<std::string>> matrix_strings(const poly_matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).str());
    return out;
}

// the four published examples: 1 and 2 need multi-prime saturation, 3 is the
// unique-minimal-prime case, 4 has one quadratic column
json example_1() {
    json j = base_job({{"0", "0", "0", "0", "x2"},
                       {"x2", "x1+x2", "0", "x1+x2", "x1"},
                       {"0", "0", "x3", "x3", "x4"},
                       {"0", "x2", "x1+x2", "0", "x1+x2"},
                       {"x4", "x3+x4", "0", "0", "x3"},
                       {"0", "0", "x4", "0", "x1"}},
                      4, 1);
    // explicit json::array: a brace list of string pairs would turn into an object
    j["fitting_primes"] = json::array({json::array({"x1", "x2"}), json::array({"x3", "x4"})});
    return j;
}

json example_2() {
    json j = base_job({{"x1-x2", "x2", "x2", "x1"},
                       {"x2", "0", "x2", "x1"},
                       {"x1+x2", "0", "x2", "x1"},
                       {"x4", "x1", "x3", "0"},
                       {"x1", "x3", "x1", "x4"}},
                      4, 1);
    j["fitting_primes"] =
        json::array({json::array({"x1", "x2"}), json::array({"x1", "x3", "x4"})});
    return j;
}

json example_3() {
    return base_job({{"x2", "0", "x2", "0"},
                     {"x2", "x1", "x4", "x2"},
                     {"0", "x1", "x2", "x3"},
                     {"0", "x2", "x3", "x1"},
                     {"x1", "x2", "x1", "x4"}},
                    4, 1);
}

json example_4() {
    json j = base_job({{"x1^2", "x1", "x2", "0"},
                       {"0", "0", "x1", "x1"},
                       {"x2^2", "x2", "x1", "0"},
                       {"0", "x1", "x2", "x2"},
                       {"x2^2", "x1", "x3", "x4"}},
                      4, 1);
    j["flags"] = {{"allow_nonlinear", true}};
    return j;
}

json constructed(bool column, instance_params prm, std::uint64_t seed, int depth) {
    // generate over the rationals so the matrix strings are small integers,
    // valid over any job field
    generated_instance gi =
        column ? make_column_instance(prm, field_spec::rationals(), seed)
               : make_row_instance(prm, field_spec::rationals(), seed);
    json j = base_job(matrix_strings(gi.pres.phi), prm.d, prm.e);
    j["s_hint"] = prm.s;
    json flags = {{"seed", gi.seed_used}};
    if (depth >= 0) flags["depth"] = depth;
    j["flags"] = flags;
    return j;
}

analysis_report run_job(const job_spec& job) {
    compute_limits lim;
    lim.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(job_timeout(job)));
    budget_scope scope(lim);
    return run_analysis(job_matrix(job), job.rank_e, job_options(job));
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";
    fs::create_directories(dir);

    std::vector<std::pair<std::string, json>> jobs = {
        {"example_6_1", example_1()},
        {"example_6_2", example_2()},
        {"example_6_3", example_3()},
        {"example_6_4", example_4()},
        {"column_d3_s2_n4_e1", constructed(true, {3, 2, 4, 1}, 1, -1)},
        {"column_d4_s2_n5_e1", constructed(true, {4, 2, 5, 1}, 2, -1)},
        {"row_d4_s2_n6_e1", constructed(false, {4, 2, 6, 1}, 3, 2)},
        {"row_d4_s3_n5_e1", constructed(false, {4, 3, 5, 1}, 4, -1)},
    };

    for (const auto& [name, body] : jobs) {
        std::string job_path = dir + "/" + name + ".json";
        std::ofstream(job_path) << body.dump(2) << "\n";
        std::cout << name << ": running... " << std::flush;
        auto t0 = std::chrono::steady_clock::now();
        job_spec job = load_job(job_path);
        analysis_report rep = run_job(job);
        json expected = canonical_report(report_to_json(rep, job.name));
        std::ofstream(dir + "/" + name + ".expected.json") << dump_report(expected);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (rep.abort_reason ? "ABORTED" : "done") << " (" << dt << " s)\n";
        if (rep.abort_reason) {
            std::cerr << "  " << *rep.abort_reason << "\n";
            return 1;
        }
    }
    return 0;
}
