#ifndef REESKIT_POLYNOMIAL_HPP
#define REESKIT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "reeskit/field.hpp"
#include "reeskit/monomial.hpp"
#include "reeskit/ring.hpp"

namespace reeskit {

struct term {
    monomial m;
    coeff c;
    bool operator==(const term&) const = default;
};

using term_list = std::vector<term>;

// --- raw term-list helpers, parameterized by the active order -------------
// All lists are sorted strictly descending; helpers preserve that invariant.

void sort_terms(term_list& ts, const monomial_order& ord);
term_list merge_terms(const term_list& a, const term_list& b, const monomial_order& ord);
// (c * m) * a; multiplicativity of the order keeps the sort
term_list scale_terms(const term_list& a, const coeff& c, const monomial& m);

// x-degree / T-degree pair of a bihomogeneous element
struct bidegree {
    int x_deg = 0;
    int t_deg = 0;
    auto operator<=>(const bidegree&) const = default;
    std::string str() const {
        return "(" + std::to_string(x_deg) + "," + std::to_string(t_deg) + ")";
    }
};

struct bidegree_result {
    enum class kind_t { bihomogeneous, zero_polynomial, mixed };
    kind_t kind;
    bidegree deg;  // meaningful only when bihomogeneous
    bool is(int x, int t) const {
        return kind == kind_t::bihomogeneous && deg == bidegree{x, t};
    }
};

// A sparse exact polynomial.  Terms are kept strictly descending under the
// ring's default order (grevlex, T-block above x-block), so the leading term
// is terms().front() and printing is canonical.
class polynomial {
public:
    polynomial() = default;  // zero over a placeholder ring; containers only
    explicit polynomial(const ring_spec& ring) : ring_(ring) {}

    static polynomial from_terms(const ring_spec& ring, term_list ts);
    static polynomial constant(const ring_spec& ring, const coeff& c);
    static polynomial from_long(const ring_spec& ring, long n);
    static polynomial variable(const ring_spec& ring, int v);

    const ring_spec& ring() const { return ring_; }
    const term_list& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().m.is_one(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const term& leading_term() const;  // throws on zero
    int total_degree() const;          // -1 for the zero polynomial

    polynomial operator-() const;
    polynomial operator+(const polynomial& o) const;
    polynomial operator-(const polynomial& o) const;
    polynomial operator*(const polynomial& o) const;
    polynomial operator*(const coeff& c) const;
    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
    polynomial pow(unsigned k) const;

    bool operator==(const polynomial& o) const;
    bool operator!=(const polynomial& o) const { return !(*this == o); }

    bidegree_result bidegree_info() const;

    // coefficient of an exact monomial (zero coeff when absent)
    coeff coefficient_of(const monomial& m) const;
    // image under sending the listed variables to 0
    polynomial subs_zero(const std::vector<int>& vars) const;
    // full evaluation; point must supply one coefficient per ring variable
    coeff eval(const std::vector<coeff>& point) const;
    // reinterpret in `target`, which must contain this ring's variables as a
    // positional prefix (used to hop between a ring and its aux extension)
    polynomial lift_to(const ring_spec& target) const;

    std::string str() const;

private:
    ring_spec ring_;
    term_list terms_;
};

// quotient p/q when q divides p exactly, nullopt otherwise
std::optional<polynomial> exact_divide(const polynomial& p, const polynomial& q);

}  // namespace reeskit

#endif
