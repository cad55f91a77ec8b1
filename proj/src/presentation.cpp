#include "reeskit/presentation.hpp"

#include "reeskit/idealops.hpp"

namespace reeskit {

presentation validate_presentation(const poly_matrix& phi, int rank_e, bool allow_nonlinear) {
    using kind = validation_error::kind_t;
    const ring_spec& ring = phi.ring();
    presentation p;
    p.phi = phi;
    p.n = phi.rows();
    p.d = ring.x_count;
    p.rank_e = rank_e;

    if (ring.t_count != p.n)
        throw validation_error(kind::bad_shape,
                               "ring has " + std::to_string(ring.t_count) +
                                   " T-variables but the matrix has " + std::to_string(p.n) +
                                   " rows");
    if (rank_e < 1 || phi.cols() != p.n - rank_e)
        throw validation_error(kind::bad_shape,
                               "expected an n x (n-e) matrix: n=" + std::to_string(p.n) +
                                   ", e=" + std::to_string(rank_e) + ", cols=" +
                                   std::to_string(phi.cols()));

    // entries must be x-forms; linear unless explicitly allowed
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.cols(); ++j) {
            const polynomial& f = phi.at(i, j);
            if (f.is_zero()) continue;
            bidegree_result b = f.bidegree_info();
            if (b.kind != bidegree_result::kind_t::bihomogeneous || b.deg.t_deg != 0 ||
                b.deg.x_deg < 1)
                throw validation_error(kind::entry_not_base,
                                       "entry (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) +
                                           ") is not a homogeneous form in the x-variables: " +
                                           f.str(),
                                       i, j);
            if (b.deg.x_deg != 1) {
                if (!allow_nonlinear)
                    throw validation_error(kind::nonlinear_entry,
                                           "entry (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ") is nonlinear: " +
                                               f.str(),
                                           i, j);
                p.linear = false;
            }
        }

    // content check: I_1(phi) = (x1..xd)
    std::vector<polynomial> entries;
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.cols(); ++j)
            if (!phi.at(i, j).is_zero()) entries.push_back(phi.at(i, j));
    std::vector<int> xs(p.d);
    for (int v = 0; v < p.d; ++v) xs[v] = v;
    if (!ideal_equal(ideal(ring, entries), ideal::of_variables(ring, xs)))
        throw validation_error(kind::content_not_maximal,
                               "the entries of phi do not generate (x1..x" +
                                   std::to_string(p.d) + ")");

    // full column rank: some maximal minor is nonzero
    if (minors(phi, phi.cols()).is_zero_ideal())
        throw validation_error(kind::degenerate_rank,
                               "all maximal minors of phi vanish: phi does not have full "
                               "column rank");

    p.few_generators = p.n < p.d + rank_e;
    return p;
}

gs_profile_result gs_profile(const presentation& p) {
    gs_profile_result out;
    const int e = p.rank_e;
    const int hi = std::min(p.n - 1, p.d + e - 2);
    int first_fail = -1;
    for (int i = e; i <= hi; ++i) {
        fitting_row row;
        row.i = i;
        row.required = i - e + 2;
        ideal fitt = fitting_ideal(p.phi, i);
        row.ht = height(fitt);  // nullopt: unit ideal, condition holds vacuously
        row.ok = !row.ht || *row.ht >= row.required;
        if (!row.ok && first_fail < 0) first_fail = i;
        out.table.push_back(std::move(row));
    }
    if (first_fail < 0) {
        out.g_infinity = true;
        out.s_max = hi - e + 2;  // every condition in range holds
    } else {
        out.s_max = first_fail - e + 1;
    }
    return out;
}

int residual_rank(const presentation& p, int s) {
    std::vector<int> vars(s);
    for (int v = 0; v < s; ++v) vars[v] = v;
    poly_matrix bar = p.phi.subs_zero(vars);
    for (int t = std::min(bar.rows(), bar.cols()); t >= 1; --t)
        if (!minors(bar, t).is_zero_ideal()) return t;
    return 0;
}

std::string shape_classification::str() const {
    switch (kind) {
        case shape_kind::column: return "column";
        case shape_kind::row: return "row";
        case shape_kind::rank_one_unstructured: return "rank_one_unstructured";
        case shape_kind::not_rank_one: return "not_rank_one";
    }
    return "?";
}

shape_classification classify_shape(const presentation& p, int s) {
    shape_classification out;
    out.s = s;
    out.residual_rank = residual_rank(p, s);
    if (out.residual_rank != 1) {
        out.kind = shape_kind::not_rank_one;
        return out;
    }
    std::vector<int> vars(s);
    for (int v = 0; v < s; ++v) vars[v] = v;
    poly_matrix bar = p.phi.subs_zero(vars);
    int the_col = -1, the_row = -1;
    bool one_col = true, one_row = true;
    for (int i = 0; i < bar.rows(); ++i)
        for (int j = 0; j < bar.cols(); ++j) {
            if (bar.at(i, j).is_zero()) continue;
            if (the_col < 0) the_col = j;
            else if (the_col != j) one_col = false;
            if (the_row < 0) the_row = i;
            else if (the_row != i) one_row = false;
        }
    if (one_col) {
        out.kind = shape_kind::column;
        out.witness = the_col;
    } else if (one_row) {
        out.kind = shape_kind::row;
        out.witness = the_row;
    } else {
        out.kind = shape_kind::rank_one_unstructured;
    }
    return out;
}

}  // namespace reeskit
