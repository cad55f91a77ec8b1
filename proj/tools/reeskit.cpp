#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "reeskit/job.hpp"

namespace fs = std::filesystem;
using namespace reeskit;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_invalid = 3;
constexpr int exit_limit = 4;

struct overrides {
    std::string field;
    int depth = -1;
    std::uint64_t seed = 0;
    double timeout = 0;
    bool allow_nonlinear = false;
};

void add_common_flags(CLI::App* sub, overrides& ov, std::string& order) {
    sub->add_option("--field", ov.field, "coefficient field: q or zp:<prime>");
    sub->add_option("--order", order, "monomial order (only grevlex is supported)")
        ->check(CLI::IsMember({"grevlex"}));
    sub->add_option("--depth", ov.depth, "approximation chain depth (0 = default depth)");
    sub->add_option("--seed", ov.seed, "seed recorded in the report");
    sub->add_option("--timeout", ov.timeout, "wall-clock limit in seconds");
    sub->add_flag("--allow-nonlinear", ov.allow_nonlinear,
                  "accept presentation matrices with nonlinear entries");
}

void apply_overrides(job_spec& job, const CLI::App* sub, const overrides& ov) {
    if (sub->count("--field")) job.field = parse_field(ov.field);
    if (sub->count("--depth")) job.depth = ov.depth;
    if (sub->count("--seed")) job.seed = ov.seed;
    if (sub->count("--timeout")) job.timeout_seconds = ov.timeout;
    if (ov.allow_nonlinear) job.allow_nonlinear = true;
}

analysis_report run_job(const job_spec& job) {
    compute_limits lim;
    lim.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(job_timeout(job)));
    budget_scope scope(lim);
    return run_analysis(job_matrix(job), job.rank_e, job_options(job));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw error("cannot write " + tmp);
        out << content;
    }
    fs::rename(tmp, path);
}

void emit_report(const nlohmann::json& rep, const std::string& out_path) {
    std::string text = dump_report(rep);
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

int do_analyze(const job_spec& job, const std::string& out_path) {
    analysis_report rep = run_job(job);
    emit_report(report_to_json(rep, job.name), out_path);
    if (rep.abort_reason) {
        std::cerr << "resource limit hit: " << *rep.abort_reason << "\n";
        return exit_limit;
    }
    if (rep.candidate_equals_oracle && !*rep.candidate_equals_oracle) {
        std::cerr << "verdict mismatch: candidate ideal differs from the saturation\n";
        return exit_mismatch;
    }
    return exit_ok;
}

int do_verify(const job_spec& job, const std::string& out_path) {
    analysis_report rep = run_job(job);
    emit_report(report_to_json(rep, job.name), out_path);
    if (rep.abort_reason) {
        std::cerr << "resource limit hit: " << *rep.abort_reason << "\n";
        return exit_limit;
    }
    if (rep.shape.kind != shape_kind::column && rep.shape.kind != shape_kind::row) {
        std::cerr << "ShapeNotNormalForm: matrix classifies as " << rep.shape.str()
                  << " at s = " << rep.s_used << "\n";
        return exit_invalid;
    }
    if (!rep.candidate) {
        std::cerr << "ShapeNotNormalForm: no candidate ideal (nonlinear presentation)\n";
        return exit_invalid;
    }

    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cerr << (ok ? "  PASS  " : "  FAIL  ") << name;
        if (!detail.empty()) std::cerr << "  (" << detail << ")";
        std::cerr << "\n";
        all_ok = all_ok && ok;
    };

    check("candidate_equals_oracle", rep.candidate_equals_oracle.value_or(false),
          rep.candidate->provenance);
    check("height",
          rep.height_ok,
          "ht J = " + (rep.j_height ? std::to_string(*rep.j_height) : std::string("?")) +
              ", expected " + std::to_string(rep.expected_height));
    check("analytic_spread", rep.spread_ok.value_or(false),
          rep.fiber ? "spread " + std::to_string(rep.fiber->analytic_spread) + ", expected " +
                          (rep.expected_spread ? std::to_string(*rep.expected_spread)
                                               : std::string("?"))
                    : "fiber not computed");
    check("residual_intersection", rep.residual && rep.residual->ok, "");
    bool expect_fiber_type = rep.shape.kind == shape_kind::column || rep.s_used == rep.d - 1;
    check("fiber_type",
          rep.fiber_type && rep.fiber_type->holds == expect_fiber_type,
          std::string("expected ") + (expect_fiber_type ? "fiber type" : "not fiber type"));
    if (rep.chain) {
        check("chain_heights", rep.chain->all_heights_ok, "");
        check("chain_inclusions", rep.chain->all_inclusions_ok, "");
    }
    return all_ok ? exit_ok : exit_mismatch;
}

struct corpus_row {
    std::string name;
    std::string status;  // PASS / FAIL / SKIP
    std::vector<std::string> diff;
};

int do_corpus(const std::string& dir, int workers, const CLI::App* sub, const overrides& ov) {
    std::vector<fs::path> jobs;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name.size() < 5 || name.substr(name.size() - 5) != ".json") continue;
        if (name.size() >= 14 && name.substr(name.size() - 14) == ".expected.json") continue;
        jobs.push_back(entry.path());
    }
    std::sort(jobs.begin(), jobs.end());

    std::vector<corpus_row> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= jobs.size()) return;
            const fs::path& path = jobs[idx];
            corpus_row& row = rows[idx];
            row.name = path.stem().string();
            fs::path expected_path = path;
            expected_path.replace_extension(".expected.json");
            if (!fs::exists(expected_path)) {
                row.status = "SKIP";
                row.diff.push_back("no sidecar " + expected_path.filename().string());
                continue;
            }
            try {
                job_spec job = load_job(path.string());
                apply_overrides(job, sub, ov);
                nlohmann::json expected;
                {
                    std::ifstream in(expected_path);
                    in >> expected;
                }
                analysis_report rep = run_job(job);
                nlohmann::json actual = report_to_json(rep, job.name);
                row.diff = report_diff(expected, actual);
                row.status = row.diff.empty() ? "PASS" : "FAIL";
            } catch (const std::exception& e) {
                row.status = "FAIL";
                row.diff.push_back(std::string("error: ") + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::max(1, workers);
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int passed = 0, failed = 0, skipped = 0;
    for (const auto& row : rows) {
        std::printf("%-6s %s\n", row.status.c_str(), row.name.c_str());
        for (const auto& line : row.diff) std::printf("       %s\n", line.c_str());
        if (row.status == "PASS") ++passed;
        else if (row.status == "FAIL") ++failed;
        else ++skipped;
    }
    std::printf("%d/%d passed", passed, passed + failed);
    if (skipped) std::printf(", %d skipped", skipped);
    std::printf("\n");
    return failed == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rees algebra defining-ideal computation and verification"};
    app.require_subcommand(1);

    std::string job_path, out_path, corpus_dir, order = "grevlex";
    overrides ov;
    int workers = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "run the full pipeline on a job file");
    analyze->add_option("job", job_path, "job JSON file")->required();
    analyze->add_option("--out", out_path, "write the report here instead of stdout");
    add_common_flags(analyze, ov, order);

    CLI::App* verify = app.add_subcommand(
        "verify", "analyze, then assert the normal-form predictions hold");
    verify->add_option("job", job_path, "job JSON file")->required();
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    add_common_flags(verify, ov, order);

    CLI::App* corpus = app.add_subcommand("corpus", "run a directory of jobs against sidecars");
    corpus->add_option("dir", corpus_dir, "directory of job files with .expected.json sidecars")
        ->required();
    corpus->add_option("--jobs", workers, "worker pool size");
    add_common_flags(corpus, ov, order);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            job_spec job = load_job(job_path);
            apply_overrides(job, analyze, ov);
            return do_analyze(job, out_path);
        }
        if (verify->parsed()) {
            job_spec job = load_job(job_path);
            apply_overrides(job, verify, ov);
            return do_verify(job, out_path);
        }
        return do_corpus(corpus_dir, workers, corpus, ov);
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit hit: " << e.what() << "\n";
        return exit_limit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}
