#ifndef REESKIT_PRESENTATION_HPP
#define REESKIT_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/matrix.hpp"

namespace reeskit {

// A module E presented by an n x (n-e) matrix phi over k[x1..xd], living in
// the bigraded ring k[x1..xd][T1..Tn] with one T-variable per row of phi.
// E = coker(phi^T) has rank e; entries of phi are x-forms (linear in the
// standard setting).
struct presentation {
    poly_matrix phi;
    int n = 0;        // rows = number of generators of E = t_count of the ring
    int d = 0;        // x_count of the ring
    int rank_e = 0;   // n - cols
    bool linear = true;       // every entry linear in the x's
    bool few_generators = false;  // n < d + e: outside the usual size range

    const ring_spec& ring() const { return phi.ring(); }
};

// Checks that phi presents a module of the declared rank: entries are
// x-homogeneous with no T-variables, entries generate (x1..xd), maximal
// minors are not all zero, ring dimensions match.  Nonlinear entries are an
// error unless allow_nonlinear, in which case `linear` is recorded false.
presentation validate_presentation(const poly_matrix& phi, int rank_e, bool allow_nonlinear);

// One row of the Fitting-height table: ht Fitt_i(E) vs the bound i - e + 2.
struct fitting_row {
    int i = 0;
    std::optional<int> ht;  // nullopt: Fitt_i is the unit ideal (height +infinity)
    int required = 0;
    bool ok = false;
};

// The G_s profile: heights of Fitt_i for e <= i <= min(n-1, d+e-2).
// s_max is the largest s with ht Fitt_i >= i - e + 2 for all e <= i <= s+e-2;
// g_infinity when no condition in range fails.
struct gs_profile_result {
    std::vector<fitting_row> table;
    int s_max = 1;
    bool g_infinity = false;
};
gs_profile_result gs_profile(const presentation& p);

// rank of phi modulo (x1..xs): the largest t with a nonzero t-minor after
// substituting x1 = ... = xs = 0
int residual_rank(const presentation& p, int s);

enum class shape_kind {
    column,               // all entries outside one column die mod (x1..xs)
    row,                  // all entries outside one row die mod (x1..xs)
    rank_one_unstructured,  // residual rank 1 but neither shape
    not_rank_one,         // residual rank 0 or >= 2
};

struct shape_classification {
    shape_kind kind = shape_kind::not_rank_one;
    int s = 0;
    int residual_rank = 0;
    int witness = -1;    // 0-based distinguished column/row index when applicable
    std::string str() const;
};

// Inspects phi mod (x1..xs).  Column wins ties (a single surviving entry is
// reported as a column shape when it sits in the last column).
shape_classification classify_shape(const presentation& p, int s);

}  // namespace reeskit

#endif
