#ifndef REESKIT_GROEBNER_HPP
#define REESKIT_GROEBNER_HPP

#include <chrono>
#include <map>
#include <optional>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

// Caps honored by the Buchberger loop.  Zero means "no cap".  Exceeding a cap
// raises resource_limit_error carrying partial-state diagnostics.
struct compute_limits {
    int degree_cap = 0;   // abort when a selected S-pair's lcm degree exceeds this
    long pair_cap = 0;    // abort after this many selected pairs
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Ambient per-thread budget.  Scopes nest; the innermost wins.
const compute_limits& current_limits();
class budget_scope {
public:
    explicit budget_scope(compute_limits l);
    ~budget_scope();
    budget_scope(const budget_scope&) = delete;
    budget_scope& operator=(const budget_scope&) = delete;

private:
    compute_limits prev_;
};

// A reduced Groebner basis: monic elements, no term of any element divisible
// by another element's leading monomial, listed ascending by leading monomial.
// This form is canonical for the ideal and the order, so two ideals are equal
// iff their bases here are identical.
struct groebner_basis {
    ring_spec ring;
    monomial_order order;
    std::vector<polynomial> elements;       // canonical term sort (printing)
    std::vector<term_list> sorted_terms;    // same elements, sorted under `order`
    std::vector<monomial> lead;             // leading monomials under `order`

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
    bool is_zero() const { return elements.empty(); }
};

// Remainder of f on division by `basis` under `order`: repeatedly reduces the
// highest reducible term, picking the first divisor in list order.  The
// result has no term divisible by any basis leading monomial.
polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis,
                       const monomial_order& order);
polynomial normal_form(const polynomial& f, const groebner_basis& gb);

// Buchberger with the product and chain criteria, normal pair selection
// (smallest lcm degree first, ties by the order, then by index), and full
// inter-reduction of the result.  Zero generators are ignored; an all-zero
// input yields the empty basis.
groebner_basis buchberger(const std::vector<polynomial>& gens, const monomial_order& order,
                          const compute_limits& limits = current_limits());

// Reduced basis of the ideal of `gb` plus one more generator.  Since every
// S-pair internal to a Groebner basis reduces to zero, only pairs involving
// the new element are processed; the result is identical to rerunning
// buchberger on the enlarged generating set.
groebner_basis groebner_extend(const groebner_basis& gb, const polynomial& p,
                               const compute_limits& limits = current_limits());

bool membership(const polynomial& f, const groebner_basis& gb);

// Minimal generating subset of a set of bihomogeneous generators (graded
// Nakayama greedy: sort by ascending degree, drop anything the earlier kept
// elements already generate).  The returned bidegree multiset is an invariant
// of the ideal.
std::vector<polynomial> trim(const std::vector<polynomial>& gens,
                             const compute_limits& limits = current_limits());

std::map<bidegree, int> bidegree_census(const std::vector<polynomial>& gens);

}  // namespace reeskit

#endif
