#ifndef REESKIT_TEST_HELPERS_HPP
#define REESKIT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "reeskit/parse.hpp"
#include "reeskit/polynomial.hpp"

namespace reeskit::testing {

inline ring_spec qq(int xs, int ts = 0) { return ring_spec(xs, ts, field_spec::rationals()); }
inline ring_spec zp(int xs, int ts = 0, std::uint32_t p = default_prime) {
    return ring_spec(xs, ts, field_spec::prime(p));
}

inline polynomial pp(const std::string& text, const ring_spec& ring) {
    return parse_polynomial(text, ring);
}

// random monomial with exponents 0..max_exp on every variable
inline monomial random_monomial(std::mt19937_64& rng, const ring_spec& ring, int max_exp = 3) {
    monomial m(ring.var_count());
    for (int v = 0; v < ring.var_count(); ++v)
        m.set_exp(v, static_cast<std::uint16_t>(rng() % (max_exp + 1)));
    return m;
}

// random polynomial with up to max_terms terms, integer coefficients -4..4
inline polynomial random_polynomial(std::mt19937_64& rng, const ring_spec& ring,
                                    int max_terms = 5, int max_exp = 3) {
    term_list ts;
    int n = static_cast<int>(rng() % (max_terms + 1));
    for (int i = 0; i < n; ++i) {
        long c = static_cast<long>(rng() % 9) - 4;
        ts.push_back({random_monomial(rng, ring, max_exp), coeff::from_long(c, ring.field)});
    }
    return polynomial::from_terms(ring, std::move(ts));
}

inline std::vector<coeff> random_point(std::mt19937_64& rng, const ring_spec& ring) {
    std::vector<coeff> pt;
    for (int v = 0; v < ring.var_count(); ++v)
        pt.push_back(coeff::from_long(static_cast<long>(rng() % 11) - 5, ring.field));
    return pt;
}

}  // namespace reeskit::testing

#endif
