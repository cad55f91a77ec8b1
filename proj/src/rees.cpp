#include "reeskit/rees.hpp"

#include <algorithm>

namespace reeskit {

namespace {

std::vector<int> first_x_vars(int s) {
    std::vector<int> v(s);
    for (int i = 0; i < s; ++i) v[i] = i;
    return v;
}

}  // namespace

poly_matrix jacobian_dual(const presentation& p) {
    if (!p.linear)
        throw validation_error(validation_error::kind_t::nonlinear_entry,
                               "the Jacobian dual is only defined (uniquely) for linear "
                               "presentations");
    const ring_spec& ring = p.ring();
    const int m = p.phi.cols();
    poly_matrix b(ring, p.d, m);
    for (int i = 0; i < p.n; ++i) {
        polynomial ti = polynomial::variable(ring, ring.t_var(i + 1));
        for (int k = 0; k < m; ++k) {
            const polynomial& entry = p.phi.at(i, k);
            for (const term& t : entry.terms()) {
                // linear entry: each term is c * x_v
                int v = t.m.support().front();
                b.at(v, k) += ti * polynomial::constant(ring, t.c);
            }
        }
    }
    // sanity: [x1..xd] . B == [T1..Tn] . phi
    std::vector<polynomial> l = symmetric_generators(p);
    for (int k = 0; k < m; ++k) {
        polynomial lhs(ring);
        for (int v = 0; v < p.d; ++v) lhs += polynomial::variable(ring, v) * b.at(v, k);
        if (lhs != l[k]) throw error("Jacobian dual identity failed (internal)");
    }
    return b;
}

std::vector<polynomial> symmetric_generators(const presentation& p) {
    const ring_spec& ring = p.ring();
    std::vector<polynomial> l;
    l.reserve(p.phi.cols());
    for (int k = 0; k < p.phi.cols(); ++k) {
        polynomial acc(ring);
        for (int i = 0; i < p.n; ++i)
            acc += polynomial::variable(ring, ring.t_var(i + 1)) * p.phi.at(i, k);
        l.push_back(std::move(acc));
    }
    return l;
}

ideal symmetric_ideal(const presentation& p) {
    return ideal(p.ring(), symmetric_generators(p));
}

namespace {

void require_identity(bool ok, const std::string& what) {
    if (!ok) throw transition_identity_error("transition identity failed: " + what);
}

}  // namespace

submatrices extract_submatrices(const presentation& p, const shape_classification& shape) {
    const ring_spec& ring = p.ring();
    const int s = shape.s, d = p.d, n = p.n, m = p.phi.cols();
    if (shape.kind != shape_kind::column && shape.kind != shape_kind::row)
        throw transition_identity_error("submatrix extraction needs a column or row shape, got " +
                                        shape.str());
    if (s < 1 || s >= d) throw error("shape parameter s must satisfy 1 <= s <= d-1");

    submatrices out;
    out.b_matrix = jacobian_dual(p);
    const poly_matrix& b = out.b_matrix;
    std::vector<polynomial> l = symmetric_generators(p);
    auto xv = [&](int j) { return polynomial::variable(ring, j); };  // 0-based x index

    if (shape.kind == shape_kind::column) {
        require_identity(shape.witness == m - 1, "the distinguished column must be the last");
        // rows s..d-1 of B must vanish outside the last column
        for (int j = s; j < d; ++j)
            for (int k = 0; k + 1 < m; ++k)
                require_identity(b.at(j, k).is_zero(),
                                 "column " + std::to_string(k + 1) +
                                     " has an entry outside k[x1..x" + std::to_string(s) + "]");
        // last column of B carries T_{n-d+j} in row x_j for j > s
        polynomial gamma(ring);
        for (int j = s; j < d; ++j) {
            polynomial want = polynomial::variable(ring, ring.t_var(n - d + j + 1));
            require_identity(b.at(j, m - 1) == want,
                             "expected " + want.str() + " at row " + std::to_string(j + 1) +
                                 " of the last column of the Jacobian dual, found " +
                                 b.at(j, m - 1).str());
            gamma += xv(j) * want;
        }
        out.gamma = gamma;

        std::vector<int> top(s), left(m - 1);
        for (int i = 0; i < s; ++i) top[i] = i;
        for (int k = 0; k + 1 < m; ++k) left[k] = k;
        out.b_prime = b.submatrix(top, left);

        out.b_doubleprime = poly_matrix(ring, s + 1, m);
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < m; ++k) out.b_doubleprime.at(i, k) = b.at(i, k);
        out.b_doubleprime.at(s, m - 1) = polynomial::from_long(ring, 1);

        // [l_1..l_{m-1}] = [x1..xs] . B'
        for (int k = 0; k + 1 < m; ++k) {
            polynomial rhs(ring);
            for (int j = 0; j < s; ++j) rhs += xv(j) * out.b_prime.at(j, k);
            require_identity(l[k] == rhs, "l_" + std::to_string(k + 1) + " = [x1..xs].B' at column " +
                                              std::to_string(k + 1));
        }
        // [l_1..l_m] = [x1..xs gamma] . B''
        for (int k = 0; k < m; ++k) {
            polynomial rhs(ring);
            for (int j = 0; j < s; ++j) rhs += xv(j) * out.b_doubleprime.at(j, k);
            rhs += gamma * out.b_doubleprime.at(s, k);
            require_identity(l[k] == rhs, "l_" + std::to_string(k + 1) +
                                              " = [x1..xs gamma].B'' at column " +
                                              std::to_string(k + 1));
        }
        return out;
    }

    // row case
    const int q = m - (d - s);  // columns of B'
    require_identity(shape.witness == n - 1, "the distinguished row must be the last");
    require_identity(q >= 1, "not enough columns for a row-shaped presentation");
    for (int j = s; j < d; ++j)
        for (int k = 0; k < q; ++k)
            require_identity(b.at(j, k).is_zero(),
                             "column " + std::to_string(k + 1) +
                                 " has an entry outside k[x1..x" + std::to_string(s) + "]");
    polynomial tn = polynomial::variable(ring, ring.t_var(n));
    for (int r = 0; r < d - s; ++r)
        for (int c = 0; c < d - s; ++c) {
            const polynomial& got = b.at(s + r, q + c);
            polynomial want = r == c ? tn : polynomial(ring);
            require_identity(got == want, "expected the trailing block of the Jacobian dual "
                                          "to be Tn times the identity");
        }

    std::vector<int> top(s), left(q), right(d - s);
    for (int i = 0; i < s; ++i) top[i] = i;
    for (int k = 0; k < q; ++k) left[k] = k;
    for (int k = 0; k < d - s; ++k) right[k] = q + k;
    out.b_prime = b.submatrix(top, left);
    out.psi = b.submatrix(top, right);

    poly_matrix c(ring, s + 1, m);
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < m; ++k) c.at(i, k) = b.at(i, k);
    for (int k = 0; k < d - s; ++k) c.at(s, q + k) = xv(s + k);
    out.c_matrix = c;

    out.b_doubleprime = poly_matrix(ring, d, m);
    for (int i = 0; i < s; ++i)
        for (int k = 0; k < m; ++k) out.b_doubleprime.at(i, k) = b.at(i, k);
    for (int r = 0; r < d - s; ++r)
        out.b_doubleprime.at(s + r, q + r) = polynomial::from_long(ring, 1);

    // [l_1..l_q] = [x1..xs] . B'
    for (int k = 0; k < q; ++k) {
        polynomial rhs(ring);
        for (int j = 0; j < s; ++j) rhs += xv(j) * out.b_prime.at(j, k);
        require_identity(l[k] == rhs, "l_" + std::to_string(k + 1) + " = [x1..xs].B' at column " +
                                          std::to_string(k + 1));
    }
    // [l_1..l_m] = [x1..xs Tn] . C
    for (int k = 0; k < m; ++k) {
        polynomial rhs(ring);
        for (int j = 0; j < s; ++j) rhs += xv(j) * c.at(j, k);
        rhs += tn * c.at(s, k);
        require_identity(l[k] == rhs, "l_" + std::to_string(k + 1) + " = [x1..xs Tn].C at column " +
                                          std::to_string(k + 1));
    }
    // [l_1..l_m] = [x1..xs  x_{s+1}Tn .. x_dTn] . B''
    for (int k = 0; k < m; ++k) {
        polynomial rhs(ring);
        for (int j = 0; j < s; ++j) rhs += xv(j) * out.b_doubleprime.at(j, k);
        for (int r = 0; r < d - s; ++r) rhs += xv(s + r) * tn * out.b_doubleprime.at(s + r, k);
        require_identity(l[k] == rhs, "l_" + std::to_string(k + 1) +
                                          " = [x1..xs x_{s+1}Tn..x_dTn].B'' at column " +
                                          std::to_string(k + 1));
    }
    return out;
}

candidate_result candidate_defining_ideal(const presentation& p, const submatrices& sub,
                                          const shape_classification& shape) {
    ideal l = symmetric_ideal(p);
    const int s = shape.s;
    candidate_result out;
    if (shape.kind == shape_kind::column) {
        out.j = sum(l, minors(sub.b_prime, s));
        out.provenance = "L + minors(B', " + std::to_string(s) + ")";
    } else if (shape.kind == shape_kind::row) {
        out.j = sum(sum(l, minors(sub.b_prime, s)), minors(*sub.c_matrix, s + 1));
        out.provenance = "L + minors(B', " + std::to_string(s) + ") + minors(C, " +
                         std::to_string(s + 1) + ")";
    } else {
        throw error("no candidate defining ideal for shape " + shape.str());
    }
    out.j = ideal(out.j.ring(), trim(out.j.gens()));
    return out;
}

oracle_result saturation_oracle(const presentation& p, const ideal& q) {
    oracle_result out;
    out.saturated_by = q;
    saturation_result s = saturate(symmetric_ideal(p), q);
    out.j = std::move(s.stable);
    out.exponent = s.exponent;
    return out;
}

unique_prime_result unique_minimal_prime_check(const ideal& f, int s) {
    unique_prime_result out;
    const ring_spec& ring = f.ring();
    ideal p = ideal::of_variables(ring, first_x_vars(s));
    out.contained = p.contains(f);
    out.fitting_height = height(f);
    out.height_ok = out.fitting_height && *out.fitting_height == s;
    bool rad = true;
    for (int v = 0; v < s; ++v) {
        bool in = radical_membership(polynomial::variable(ring, v), f);
        out.generator_in_radical.push_back(in);
        rad = rad && in;
    }
    out.ok = out.contained && out.height_ok && rad;
    return out;
}

multi_prime_result certify_minimal_primes(const ideal& f,
                                          const std::vector<std::vector<int>>& prime_vars) {
    multi_prime_result out;
    if (prime_vars.empty()) return out;
    const ring_spec& ring = f.ring();
    ideal prod;
    bool first = true;
    for (const auto& vars : prime_vars) {
        prime_certificate cert;
        cert.vars = vars;
        cert.ht = static_cast<int>(vars.size());
        ideal p = ideal::of_variables(ring, vars);
        cert.contains_f = p.contains(f);
        prod = first ? p : product(prod, p);
        first = false;
        out.primes.push_back(std::move(cert));
    }
    out.product_in_radical = true;
    for (const polynomial& g : prod.gens())
        if (!radical_membership(g, f)) { out.product_in_radical = false; break; }
    out.pairwise_incomparable = true;
    for (std::size_t a = 0; a < prime_vars.size(); ++a)
        for (std::size_t b = 0; b < prime_vars.size(); ++b) {
            if (a == b) continue;
            bool subset = true;
            for (int v : prime_vars[a])
                if (std::find(prime_vars[b].begin(), prime_vars[b].end(), v) ==
                    prime_vars[b].end()) { subset = false; break; }
            if (subset) out.pairwise_incomparable = false;
        }
    out.ok = out.product_in_radical && out.pairwise_incomparable;
    for (const auto& c : out.primes) out.ok = out.ok && c.contains_f;
    return out;
}

fiber_result fiber_analysis(const ideal& j, const presentation& p) {
    fiber_result out;
    const ring_spec& ring = p.ring();
    std::vector<int> ts(p.n);
    for (int i = 0; i < p.n; ++i) ts[i] = ring.t_var(i + 1);
    // (J + (x1..xd)) ∩ k[T] is J evaluated at x = 0: an x-free element of
    // J + (x1..xd) differs from an element of J by a member of (x1..xd)
    std::vector<polynomial> trimmed_j = trim(j.gens());
    std::vector<polynomial> fib;
    for (const polynomial& g : trimmed_j) {
        term_list keep;
        for (const term& t : g.terms()) {
            bool x_free = true;
            for (int v = 0; v < ring.x_count; ++v)
                if (t.m.exp(v)) { x_free = false; break; }
            if (x_free) keep.push_back(t);
        }
        if (!keep.empty()) fib.push_back(polynomial::from_terms(ring, std::move(keep)));
    }
    ideal fiber_ideal(ring, std::move(fib));
    out.fiber = ideal(ring, fiber_ideal.gens().empty() ? fiber_ideal.gens()
                                                       : trim(fiber_ideal.gens()));
    auto dim = dimension_within(out.fiber, ts);
    if (!dim) throw error("special fiber ideal is the unit ideal (internal)");
    out.analytic_spread = *dim;
    out.census = bidegree_census(trimmed_j);
    return out;
}

chain_result approximation_chain(const presentation& p, int s, int depth) {
    chain_result out;
    const ring_spec& ring = p.ring();
    const int m = p.phi.cols();
    depth = std::min(depth, m);
    ideal pr = ideal::of_variables(ring, first_x_vars(s));
    std::vector<polynomial> l = symmetric_generators(p);
    for (int i = 0; i <= depth; ++i) {
        chain_step st;
        st.i = i;
        st.l = ideal(ring, std::vector<polynomial>(l.begin(), l.end() - i));
        saturation_result sat = saturate(st.l, pr);
        st.j = std::move(sat.stable);
        st.exponent = sat.exponent;
        st.ht = height(st.j);
        st.expected_ht = m - i;
        st.height_ok = st.ht && *st.ht == st.expected_ht;
        if (i > 0) {
            const ideal& prev = out.steps.back().j;
            st.inclusion_ok = prev.contains(st.j);
        }
        out.all_heights_ok = out.all_heights_ok && st.height_ok;
        out.all_inclusions_ok = out.all_inclusions_ok && st.inclusion_ok;
        out.steps.push_back(std::move(st));
    }
    return out;
}

residual_check_result residual_intersection_check(const presentation& p, const submatrices& sub,
                                                  const shape_classification& shape,
                                                  const ideal& j) {
    residual_check_result out;
    const ring_spec& ring = p.ring();
    const int s = shape.s;
    std::vector<polynomial> gens;
    for (int v = 0; v < s; ++v) gens.push_back(polynomial::variable(ring, v));
    if (shape.kind == shape_kind::column) {
        gens.push_back(*sub.gamma);
    } else {
        polynomial tn = polynomial::variable(ring, ring.t_var(p.n));
        for (int v = s; v < p.d; ++v) gens.push_back(polynomial::variable(ring, v) * tn);
    }
    out.residual = ideal(ring, std::move(gens));
    ideal l = symmetric_ideal(p);
    out.l_contained = out.residual.contains(l);
    out.colon_equals = ideal_equal(colon(l, out.residual), j);
    auto ht = height(j);
    out.height_ok = ht && *ht == p.phi.cols();
    out.ok = out.l_contained && out.colon_equals && out.height_ok;
    return out;
}

fiber_type_result fiber_type_check(const presentation& p, const submatrices& sub,
                                   const shape_classification& shape) {
    fiber_type_result out;
    if (shape.kind == shape_kind::column) {
        out.trivial = true;
        out.holds = true;
        return out;
    }
    ideal base = sum(symmetric_ideal(p), minors(sub.b_prime, shape.s));
    ideal c_minors = minors(*sub.c_matrix, shape.s + 1);
    out.holds = true;
    for (const polynomial& g : c_minors.gens())
        if (!base.contains(g)) { out.holds = false; break; }
    return out;
}

}  // namespace reeskit
