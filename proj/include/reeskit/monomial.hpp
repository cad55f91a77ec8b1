#ifndef REESKIT_MONOMIAL_HPP
#define REESKIT_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "reeskit/ring.hpp"

namespace reeskit {

// A power product, stored as one exponent per ring variable.
class monomial {
public:
    monomial() = default;
    explicit monomial(int nvars) : e_(nvars, 0) {}
    explicit monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e_.size()); }
    std::uint16_t exp(int v) const { return e_[v]; }
    void set_exp(int v, std::uint16_t k) { e_[v] = k; }

    int degree() const {
        int d = 0;
        for (auto x : e_) d += x;
        return d;
    }
    int degree_on(const std::vector<int>& vars) const {
        int d = 0;
        for (int v : vars) d += e_[v];
        return d;
    }
    bool is_one() const {
        for (auto x : e_) if (x) return false;
        return true;
    }

    monomial operator*(const monomial& o) const;
    bool divides(const monomial& o) const;          // this | o
    monomial divide(const monomial& o) const;       // this / o, caller ensures o | this
    static monomial lcm(const monomial& a, const monomial& b);
    static monomial gcd(const monomial& a, const monomial& b);
    bool coprime(const monomial& o) const;

    bool operator==(const monomial&) const = default;

    // variables with nonzero exponent
    std::vector<int> support() const;

    std::string str(const ring_spec& ring) const;  // "x1^2*T3", "1" for the empty product

private:
    std::vector<std::uint16_t> e_;
};

// Total orders on monomials.  All are global (1 is smallest) and
// multiplicative.  `ranking` lists variable indices from highest precedence to
// lowest; grevlex breaks degree ties at the lowest-ranked variable.
// A block order compares the front block (first block_size ranked variables)
// grevlex-first, then the remaining variables grevlex; it eliminates the
// front block.
class monomial_order {
public:
    enum class kind_t { grevlex, lex, block };

    static monomial_order grevlex(const ring_spec& ring);  // T-block above x-block, aux last
    // grevlex with variable v moved to the cheapest slot (saturation by v via
    // dividing basis elements, valid for homogeneous ideals)
    static monomial_order grevlex_cheapest(const ring_spec& ring, int v);
    static monomial_order lex(const ring_spec& ring);      // same ranking, lex
    // eliminates `front` (compared grevlex among themselves); remaining
    // variables keep the default ranking
    static monomial_order block_elim(const ring_spec& ring, const std::vector<int>& front);

    kind_t kind() const { return kind_; }
    const std::vector<int>& ranking() const { return ranking_; }
    int block_size() const { return block_size_; }

    // <0 if a < b, 0 if equal, >0 if a > b
    int compare(const monomial& a, const monomial& b) const;
    bool less(const monomial& a, const monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const monomial_order&) const = default;
    // lexicographic on (kind, block_size, ranking): cache-map key
    std::strong_ordering operator<=>(const monomial_order& o) const;

private:
    kind_t kind_ = kind_t::grevlex;
    std::vector<int> ranking_;
    int block_size_ = 0;

    static std::vector<int> default_ranking(const ring_spec& ring);
    int grevlex_span(const monomial& a, const monomial& b, int lo, int hi) const;
};

}  // namespace reeskit

#endif
