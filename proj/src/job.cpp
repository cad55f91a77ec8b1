#include "reeskit/job.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace reeskit {

field_spec parse_field(const std::string& text) {
    if (text == "q") return field_spec::rationals();
    if (text.rfind("zp:", 0) == 0) {
        unsigned long p = 0;
        try {
            p = std::stoul(text.substr(3));
        } catch (const std::exception&) {
            throw error("bad field spec '" + text + "': expected zp:<prime>");
        }
        return field_spec::prime(static_cast<std::uint32_t>(p));
    }
    throw error("bad field spec '" + text + "': expected q or zp:<prime>");
}

job_spec parse_job(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("job is not valid JSON: ") + e.what(),
                          e.byte > 0 ? e.byte - 1 : 0);
    }
    job_spec job;
    try {
        if (!j.is_object()) throw error("job must be a JSON object");
        if (j.value("schema", 0) != 1)
            throw error("unsupported job schema (expected \"schema\": 1)");
        const json& ring = j.at("ring");
        job.x_count = ring.at("x_count").get<int>();
        job.field = parse_field(ring.value("field", "q"));
        job.matrix = j.at("matrix").get<std::vector<std::vector<std::string>>>();
        job.rank_e = j.at("rank_e").get<int>();
        if (j.contains("s_hint")) job.s_hint = j.at("s_hint").get<int>();
        if (j.contains("fitting_primes"))
            job.fitting_primes =
                j.at("fitting_primes").get<std::vector<std::vector<std::string>>>();
        if (j.contains("flags")) {
            const json& f = j.at("flags");
            job.allow_nonlinear = f.value("allow_nonlinear", false);
            job.depth = f.value("depth", -1);
            job.seed = f.value("seed", std::uint64_t{0});
            job.timeout_seconds = f.value("timeout", 0.0);
        }
    } catch (const json::exception& e) {
        throw error(std::string("bad job file: ") + e.what());
    }
    if (job.matrix.empty() || job.matrix.front().empty())
        throw error("bad job file: matrix must be non-empty");
    for (const auto& row : job.matrix)
        if (row.size() != job.matrix.front().size())
            throw error("bad job file: matrix rows have unequal lengths");
    return job;
}

job_spec load_job(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open job file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    job_spec job = parse_job(buf.str());
    auto slash = path.find_last_of('/');
    std::string stem = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = stem.rfind(".json");
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    job.name = stem;
    return job;
}

ring_spec job_ring(const job_spec& job) {
    return ring_spec(job.x_count, static_cast<int>(job.matrix.size()), job.field);
}

poly_matrix job_matrix(const job_spec& job) {
    return poly_matrix::from_strings(job_ring(job), job.matrix);
}

analyze_options job_options(const job_spec& job) {
    analyze_options opts;
    opts.s_hint = job.s_hint;
    opts.allow_nonlinear = job.allow_nonlinear;
    opts.depth = job.depth;
    opts.seed = job.seed;
    for (const auto& prime : job.fitting_primes) {
        std::vector<int> vars;
        for (const auto& name : prime) {
            if (name.size() < 2 || name[0] != 'x')
                throw error("fitting prime generator '" + name + "' is not an x-variable");
            int idx = 0;
            try {
                idx = std::stoi(name.substr(1));
            } catch (const std::exception&) {
                throw error("fitting prime generator '" + name + "' is not an x-variable");
            }
            if (idx < 1 || idx > job.x_count)
                throw error("fitting prime generator '" + name + "' out of range");
            vars.push_back(idx - 1);
        }
        opts.fitting_primes.push_back(std::move(vars));
    }
    return opts;
}

double job_timeout(const job_spec& job) {
    if (job.timeout_seconds > 0) return job.timeout_seconds;
    return job.field.kind == field_kind::prime ? 120.0 : 600.0;
}

namespace {

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(); }

json gens_json(const ideal& i) {
    std::vector<std::string> out;
    for (const auto& g : i.gens()) out.push_back(g.str());
    std::sort(out.begin(), out.end());
    return json(out);
}

json census_json(const std::map<bidegree, int>& census) {
    json out = json::array();
    for (const auto& [deg, count] : census)
        out.push_back({{"x", deg.x_deg}, {"t", deg.t_deg}, {"count", count}});
    return out;
}

json unique_prime_json(const unique_prime_result& u) {
    return {{"contained", u.contained},
            {"fitting_height", opt_int(u.fitting_height)},
            {"height_ok", u.height_ok},
            {"generator_in_radical", json(u.generator_in_radical)},
            {"ok", u.ok}};
}

json multi_prime_json(const multi_prime_result& m) {
    json primes = json::array();
    for (const auto& cert : m.primes) {
        std::vector<std::string> names;
        for (int v : cert.vars) names.push_back("x" + std::to_string(v + 1));
        primes.push_back(
            {{"vars", json(names)}, {"contains_f", cert.contains_f}, {"height", cert.ht}});
    }
    return {{"primes", primes},
            {"product_in_radical", m.product_in_radical},
            {"pairwise_incomparable", m.pairwise_incomparable},
            {"ok", m.ok}};
}

}  // namespace

json report_to_json(const analysis_report& rep, const std::string& job_name) {
    json r;
    r["schema"] = 1;
    r["tool"] = tool_name;
    r["tool_version"] = tool_version;
    if (!job_name.empty()) r["job"] = job_name;
    r["field"] = rep.field;
    r["seed"] = rep.seed;
    r["presentation"] = {{"n", rep.n},
                         {"d", rep.d},
                         {"e", rep.e},
                         {"linear", rep.linear},
                         {"few_generators", rep.few_generators}};

    json table = json::array();
    for (const auto& row : rep.gs.table)
        table.push_back({{"i", row.i},
                         {"height", opt_int(row.ht)},
                         {"required", row.required},
                         {"ok", row.ok}});
    r["gs_profile"] = {
        {"table", table}, {"s_max", rep.gs.s_max}, {"g_infinity", rep.gs.g_infinity}};

    r["s_used"] = rep.s_used;
    r["shape"] = {{"kind", rep.shape.str()},
                  {"residual_rank", rep.shape.residual_rank},
                  {"witness", rep.shape.witness}};

    json fitting = {{"index", rep.fitting_index}};
    fitting["unique_prime"] = rep.unique_prime ? unique_prime_json(*rep.unique_prime) : json();
    fitting["certified_primes"] =
        rep.multi_prime ? multi_prime_json(*rep.multi_prime) : json();
    r["fitting"] = fitting;

    r["oracle"] = json();
    r["defining_ideal"] = json();
    if (rep.oracle) {
        r["oracle"] = {{"exponent", rep.oracle->exponent},
                       {"saturated_by", gens_json(rep.oracle->saturated_by)}};
        json di = {{"generators", gens_json(rep.oracle->j)},
                   {"height", opt_int(rep.j_height)},
                   {"expected_height", rep.expected_height},
                   {"height_ok", rep.height_ok}};
        di["census"] = rep.fiber ? census_json(rep.fiber->census) : json();
        r["defining_ideal"] = di;
    }

    r["candidate"] = json();
    if (rep.candidate)
        r["candidate"] = {{"provenance", rep.candidate->provenance},
                          {"generators", gens_json(rep.candidate->j)},
                          {"equals_oracle", rep.candidate_equals_oracle
                                                ? json(*rep.candidate_equals_oracle)
                                                : json()}};

    r["fiber"] = json();
    if (rep.fiber)
        r["fiber"] = {{"generators", gens_json(rep.fiber->fiber)},
                      {"analytic_spread", rep.fiber->analytic_spread},
                      {"expected_spread", opt_int(rep.expected_spread)},
                      {"spread_ok", rep.spread_ok ? json(*rep.spread_ok) : json()}};

    r["residual_intersection"] = json();
    if (rep.residual)
        r["residual_intersection"] = {{"l_contained", rep.residual->l_contained},
                                      {"colon_equals", rep.residual->colon_equals},
                                      {"height_ok", rep.residual->height_ok},
                                      {"ok", rep.residual->ok}};

    r["fiber_type"] = json();
    if (rep.fiber_type)
        r["fiber_type"] = {{"trivial", rep.fiber_type->trivial},
                           {"holds", rep.fiber_type->holds}};

    r["chain"] = json();
    if (rep.chain) {
        json steps = json::array();
        for (const auto& st : rep.chain->steps)
            steps.push_back({{"i", st.i},
                             {"generator_count", static_cast<int>(st.j.gens().size())},
                             {"exponent", st.exponent},
                             {"height", opt_int(st.ht)},
                             {"expected_height", st.expected_ht},
                             {"height_ok", st.height_ok},
                             {"inclusion_ok", st.inclusion_ok}});
        r["chain"] = {{"steps", steps},
                      {"all_heights_ok", rep.chain->all_heights_ok},
                      {"all_inclusions_ok", rep.chain->all_inclusions_ok}};
    }

    json timings = json::array();
    for (const auto& [stage, seconds] : rep.timings)
        timings.push_back({{"stage", stage}, {"seconds", seconds}});
    r["timings"] = timings;
    r["abort_reason"] = rep.abort_reason ? json(*rep.abort_reason) : json();
    return r;
}

namespace {

const char* const varying_keys[] = {"timings", "tool_version"};

bool is_varying(const std::string& key) {
    for (const char* k : varying_keys)
        if (key == k) return true;
    return false;
}

void strip_varying(json& j) {
    if (j.is_object()) {
        for (const char* k : varying_keys) j.erase(k);
        for (auto& [key, value] : j.items()) strip_varying(value);
    } else if (j.is_array()) {
        for (auto& v : j) strip_varying(v);
    }
}

void diff_walk(const json& a, const json& b, const std::string& path,
               std::vector<std::string>& out) {
    if (a.is_object() && b.is_object()) {
        for (const auto& [key, value] : a.items()) {
            if (is_varying(key)) continue;
            std::string sub = path.empty() ? key : path + "." + key;
            if (!b.contains(key))
                out.push_back(sub + ": expected " + value.dump() + ", got <missing>");
            else
                diff_walk(value, b.at(key), sub, out);
        }
        for (const auto& [key, value] : b.items())
            if (!is_varying(key) && !a.contains(key))
                out.push_back((path.empty() ? key : path + "." + key) + ": expected <missing>, got " +
                              value.dump());
        return;
    }
    if (a.is_array() && b.is_array()) {
        if (a.size() != b.size()) {
            out.push_back(path + ": expected " + std::to_string(a.size()) + " entries, got " +
                          std::to_string(b.size()));
            return;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            diff_walk(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    if (a != b) out.push_back(path + ": expected " + a.dump() + ", got " + b.dump());
}

}  // namespace

json canonical_report(json rep) {
    strip_varying(rep);
    return rep;
}

std::string dump_report(const json& rep) { return rep.dump(2) + "\n"; }

std::vector<std::string> report_diff(const json& expected, const json& actual) {
    std::vector<std::string> out;
    diff_walk(expected, actual, "", out);
    return out;
}

}  // namespace reeskit
