#ifndef REESKIT_REES_HPP
#define REESKIT_REES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/idealops.hpp"
#include "reeskit/presentation.hpp"

namespace reeskit {

// Jacobian dual B(phi): the unique d x (n-e) matrix over k[T1..Tn] with
// [x1..xd] . B(phi) = [T1..Tn] . phi.  Requires a linear presentation.
poly_matrix jacobian_dual(const presentation& p);

// entries of [T1..Tn] . phi: the defining forms l_1..l_{n-e} of Sym(E)
std::vector<polynomial> symmetric_generators(const presentation& p);
ideal symmetric_ideal(const presentation& p);

// The distinguished blocks of the Jacobian dual for a column/row shaped
// presentation.  Extraction verifies every transition identity entrywise and
// throws transition_identity_error when the input is not in normal form.
struct submatrices {
    poly_matrix b_matrix;                  // full Jacobian dual, d x (n-e)
    poly_matrix b_prime;                   // s x (n-e-1) column / s x (n-e-d+s) row
    std::optional<poly_matrix> c_matrix;   // row only: (s+1) x (n-e)
    std::optional<poly_matrix> psi;        // row only: s x (d-s)
    poly_matrix b_doubleprime;             // column: (s+1) x (n-e); row: d x (n-e)
    std::optional<polynomial> gamma;       // column only: x_{s+1}T_{n-d+s+1}+...+x_dT_n
};
submatrices extract_submatrices(const presentation& p, const shape_classification& shape);

// L + I_s(B') (column) or L + I_s(B') + I_{s+1}(C) (row), generators trimmed
struct candidate_result {
    ideal j;
    std::string provenance;
};
candidate_result candidate_defining_ideal(const presentation& p, const submatrices& sub,
                                          const shape_classification& shape);

// The shape-independent ground truth: saturate(L, q) where q is the locus
// ideal ((x1..xs), or a product of certified minimal primes of the
// appropriate Fitting ideal).
struct oracle_result {
    ideal j;
    int exponent = 0;
    ideal saturated_by;
};
oracle_result saturation_oracle(const presentation& p, const ideal& q);

// Certificate that (x1..xs) is the unique minimal prime of F:
// F inside (x1..xs), ht F = s, each x_j in radical(F).
struct unique_prime_result {
    bool contained = false;
    std::optional<int> fitting_height;
    bool height_ok = false;
    std::vector<bool> generator_in_radical;
    bool ok = false;
};
unique_prime_result unique_minimal_prime_check(const ideal& f, int s);

// Certificate that the listed variable-generated primes are exactly the
// minimal primes of F: F inside each, every generator of their product lies
// in radical(F), and the primes are pairwise incomparable.
struct prime_certificate {
    std::vector<int> vars;      // 0-based variable indices
    bool contains_f = false;
    int ht = 0;                 // = vars.size() for a variable-generated prime
};
struct multi_prime_result {
    std::vector<prime_certificate> primes;
    bool product_in_radical = false;
    bool pairwise_incomparable = false;
    bool ok = false;
};
multi_prime_result certify_minimal_primes(const ideal& f,
                                          const std::vector<std::vector<int>>& prime_vars);

// Special fiber F(E) = k[T] / ((J + (x1..xd)) cap k[T]), its dimension
// (the analytic spread), and the bidegree census of the trimmed generators
// of J itself.
struct fiber_result {
    ideal fiber;
    int analytic_spread = 0;
    std::map<bidegree, int> census;
};
fiber_result fiber_analysis(const ideal& j, const presentation& p);

// Successive truncations phi_i = phi minus its last i columns,
// L_i = (l_1..l_{n-e-i}), J_i = saturate(L_i, (x1..xs)).  Verifies
// ht J_i = n-e-i and J_i inside J_{i-1}.
struct chain_step {
    int i = 0;
    ideal l;
    ideal j;
    int exponent = 0;
    std::optional<int> ht;
    int expected_ht = 0;
    bool height_ok = false;
    bool inclusion_ok = true;  // J_i inside J_{i-1}; vacuous at i = 0
};
struct chain_result {
    std::vector<chain_step> steps;
    bool all_heights_ok = true;
    bool all_inclusions_ok = true;
};
chain_result approximation_chain(const presentation& p, int s, int depth);

// J as a residual intersection: L inside A, J = L : A, ht J = n - e, where
// A = (x1..xs, gamma) in the column case and (x1..xs, x_{s+1}Tn, .., x_dTn)
// in the row case.
struct residual_check_result {
    ideal residual;
    bool l_contained = false;
    bool colon_equals = false;
    bool height_ok = false;
    bool ok = false;
};
residual_check_result residual_intersection_check(const presentation& p, const submatrices& sub,
                                                  const shape_classification& shape,
                                                  const ideal& j);

// Row case: does every generator of I_{s+1}(C) already lie in L + I_s(B')?
// (Fiber type: J needs no generators of mixed bidegree beyond L.)  Column
// case holds trivially.
struct fiber_type_result {
    bool trivial = false;
    bool holds = false;
};
fiber_type_result fiber_type_check(const presentation& p, const submatrices& sub,
                                   const shape_classification& shape);

}  // namespace reeskit

#endif
