#ifndef REESKIT_IDEALOPS_HPP
#define REESKIT_IDEALOPS_HPP

#include <optional>

#include "reeskit/ideal.hpp"

namespace reeskit {

ideal sum(const ideal& a, const ideal& b);
// generated by pairwise products of generators
ideal product(const ideal& a, const ideal& b);

// I cap J via the single-auxiliary-variable trick: eliminate z from
// z*I + (1-z)*J in ring[z].
ideal intersect(const ideal& a, const ideal& b);

// I : J = cap over nonzero generators g of J of (I cap (g)) / g.  The result
// is trimmed when all its generators are bihomogeneous.
ideal colon(const ideal& i, const ideal& j);

struct saturation_result {
    ideal stable;   // I : J^infinity
    int exponent;   // smallest k with I : J^k stable; 0 when I : J = I
};
// iterated colon until two consecutive quotients agree
saturation_result saturate(const ideal& i, const ideal& j);

// generators of I lying in k[keep], computed with a block elimination order
// whose front is the complement of `keep`; returned in the same ring
ideal eliminate(const ideal& i, const std::vector<int>& keep);

// f in radical(I), by the Rabinowitsch trick: 1 in I + (1 - y f) in ring[y]
bool radical_membership(const polynomial& f, const ideal& i);

// Krull dimension of ring/I via maximal leading-term-independent variable
// subsets; nullopt for the unit ideal
std::optional<int> dimension(const ideal& i);
// same, but independent sets are confined to `subset` and only leading terms
// fully supported inside `subset` constrain (dimension of the subring quotient
// when all generators lie in k[subset])
std::optional<int> dimension_within(const ideal& i, const std::vector<int>& subset);
// var_count - dimension; 0 for the zero ideal, nullopt for the unit ideal
std::optional<int> height(const ideal& i);

// equality via identity of reduced Groebner bases (canonical forms)
bool ideal_equal(const ideal& a, const ideal& b);

}  // namespace reeskit

#endif
