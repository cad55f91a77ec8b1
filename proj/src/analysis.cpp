#include "reeskit/analysis.hpp"

#include <algorithm>
#include <chrono>

namespace reeskit {

namespace {

struct stage_clock {
    analysis_report& rep;
    std::string name;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    stage_clock(analysis_report& r, std::string n) : rep(r), name(std::move(n)) {}
    ~stage_clock() {
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.timings.emplace_back(name, dt);
    }
};

}  // namespace

analysis_report run_analysis(const poly_matrix& phi, int rank_e, const analyze_options& opts) {
    analysis_report rep;
    rep.field = phi.ring().field.str();
    rep.seed = opts.seed;

    presentation p;
    {
        stage_clock t(rep, "validate");
        p = validate_presentation(phi, rank_e, opts.allow_nonlinear);
    }
    rep.n = p.n;
    rep.d = p.d;
    rep.e = p.rank_e;
    rep.linear = p.linear;
    rep.few_generators = p.few_generators;
    rep.expected_height = p.phi.cols();

    const char* stage = "gs_profile";
    try {
        {
            stage_clock t(rep, "gs_profile");
            rep.gs = gs_profile(p);
        }
        int s = opts.s_hint ? *opts.s_hint : std::clamp(rep.gs.s_max, 1, p.d - 1);
        if (s < 1 || s > p.d - 1)
            throw validation_error(validation_error::kind_t::bad_shape,
                                   "s = " + std::to_string(s) + " outside 1..d-1");
        rep.s_used = s;
        rep.fitting_index = s + p.rank_e - 1;

        stage = "classify";
        {
            stage_clock t(rep, "classify");
            rep.shape = classify_shape(p, s);
        }

        stage = "fitting_certificates";
        {
            stage_clock t(rep, "fitting_certificates");
            ideal fitt = fitting_ideal(p.phi, rep.fitting_index);
            rep.unique_prime = unique_minimal_prime_check(fitt, s);
            if (!opts.fitting_primes.empty())
                rep.multi_prime = certify_minimal_primes(fitt, opts.fitting_primes);
        }

        // the oracle saturates by the certified nonlinear-type locus: the
        // product of certified primes when given, else (x1..xs)
        stage = "oracle";
        {
            stage_clock t(rep, "oracle");
            const ring_spec& ring = p.ring();
            ideal q;
            if (rep.multi_prime && rep.multi_prime->ok) {
                bool first = true;
                for (const auto& cert : rep.multi_prime->primes) {
                    ideal pi = ideal::of_variables(ring, cert.vars);
                    q = first ? pi : product(q, pi);
                    first = false;
                }
            } else {
                std::vector<int> xs(s);
                for (int v = 0; v < s; ++v) xs[v] = v;
                q = ideal::of_variables(ring, xs);
            }
            rep.oracle = saturation_oracle(p, q);
        }

        stage = "height";
        {
            stage_clock t(rep, "height");
            rep.j_height = height(rep.oracle->j);
            rep.height_ok = rep.j_height && *rep.j_height == rep.expected_height;
        }

        submatrices sub;
        bool have_sub = false;
        if (p.linear &&
            (rep.shape.kind == shape_kind::column || rep.shape.kind == shape_kind::row)) {
            stage = "submatrices";
            {
                stage_clock t(rep, "submatrices");
                sub = extract_submatrices(p, rep.shape);
                have_sub = true;
            }
            stage = "candidate";
            {
                stage_clock t(rep, "candidate");
                rep.candidate = candidate_defining_ideal(p, sub, rep.shape);
                rep.candidate_equals_oracle = ideal_equal(rep.candidate->j, rep.oracle->j);
            }
        }

        stage = "fiber";
        {
            stage_clock t(rep, "fiber");
            rep.fiber = fiber_analysis(rep.oracle->j, p);
            if (have_sub) {
                rep.expected_spread = rep.shape.kind == shape_kind::column
                                          ? s + p.rank_e
                                          : p.d + p.rank_e - 1;
                rep.spread_ok = rep.fiber->analytic_spread == *rep.expected_spread;
            }
        }

        if (have_sub) {
            stage = "residual_intersection";
            {
                stage_clock t(rep, "residual_intersection");
                rep.residual = residual_intersection_check(p, sub, rep.shape, rep.oracle->j);
            }
            stage = "fiber_type";
            {
                stage_clock t(rep, "fiber_type");
                rep.fiber_type = fiber_type_check(p, sub, rep.shape);
            }
        }

        if (opts.depth >= 0) {
            stage = "chain";
            stage_clock t(rep, "chain");
            int depth = opts.depth == 0 ? std::min(3, p.phi.cols()) : opts.depth;
            rep.chain = approximation_chain(p, s, depth);
        }
    } catch (const resource_limit_error& e) {
        rep.abort_reason = std::string(stage) + ": " + e.what() +
                           (e.diagnostics.empty() ? "" : " [" + e.diagnostics + "]");
    }
    return rep;
}

}  // namespace reeskit
