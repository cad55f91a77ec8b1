#include "reeskit/instances.hpp"

#include <random>

namespace reeskit {

namespace {

// small random linear form in x1..xs; mt19937_64 output used directly so the
// stream is identical across platforms
polynomial random_a_form(const ring_spec& ring, int s, std::mt19937_64& rng) {
    polynomial f(ring);
    for (int j = 0; j < s; ++j) {
        int c = static_cast<int>(rng() % 5) - 2;  // -2..2
        if (c) f += polynomial::variable(ring, j) * polynomial::from_long(ring, c);
    }
    return f;
}

generated_instance search(const instance_params& prm, const field_spec& field,
                          std::uint64_t seed, bool column) {
    const int d = prm.d, s = prm.s, n = prm.n, e = prm.e;
    const int m = n - e;
    if (!(d >= 3 && 2 <= s && s <= d - 1 && n >= d + e && e >= 1))
        throw error("instance parameters outside the supported range");
    ring_spec ring(d, n, field);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::uint64_t cur = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(cur);
        poly_matrix phi(ring, n, m);
        if (column) {
            // everything x1..xs-linear except the tail of the last column,
            // which is exactly x_{s+1}..x_d
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < m; ++k) phi.at(i, k) = random_a_form(ring, s, rng);
            for (int r = 0; r < d - s; ++r)
                phi.at(n - (d - s) + r, m - 1) = polynomial::variable(ring, s + r);
        } else {
            const int q = m - (d - s);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < m; ++k) phi.at(i, k) = random_a_form(ring, s, rng);
            for (int c = 0; c < d - s; ++c)
                phi.at(n - 1, q + c) = polynomial::variable(ring, s + c);
        }
        try {
            presentation p = validate_presentation(phi, e, false);
            gs_profile_result gs = gs_profile(p);
            if (gs.g_infinity || gs.s_max != s) continue;
            shape_classification shape = classify_shape(p, s);
            if (shape.kind != (column ? shape_kind::column : shape_kind::row) &&
                !(column == false && d - s == 1 && shape.kind == shape_kind::column))
                continue;  // d-s == 1 row shapes legitimately classify as columns
            return {std::move(p), cur, attempt + 1};
        } catch (const validation_error&) {
            continue;  // bad luck (content or rank degenerate): next seed
        }
    }
    throw error("no admissible instance found after 200 attempts");
}

}  // namespace

generated_instance make_column_instance(const instance_params& prm, const field_spec& field,
                                        std::uint64_t seed) {
    return search(prm, field, seed, true);
}

generated_instance make_row_instance(const instance_params& prm, const field_spec& field,
                                     std::uint64_t seed) {
    return search(prm, field, seed, false);
}

}  // namespace reeskit
