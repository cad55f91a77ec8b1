#include "reeskit/ideal.hpp"

namespace reeskit {

ideal::ideal(const ring_spec& ring, std::vector<polynomial> gens) : ring_(ring) {
    for (polynomial& g : gens) {
        if (g.is_zero()) continue;
        require_same_ring(ring_, g.ring(), "ideal construction");
        gens_.push_back(std::move(g));
    }
}

ideal ideal::of_variables(const ring_spec& ring, const std::vector<int>& vars) {
    std::vector<polynomial> gens;
    gens.reserve(vars.size());
    for (int v : vars) gens.push_back(polynomial::variable(ring, v));
    return ideal(ring, std::move(gens));
}

const groebner_basis& ideal::groebner() const {
    return groebner(monomial_order::grevlex(ring_));
}

const groebner_basis& ideal::groebner(const monomial_order& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(ord);
    if (it == cache_->by_order.end()) {
        groebner_basis gb = buchberger(gens_, ord);
        gb.ring = ring_;  // buchberger cannot infer the ring of the zero ideal
        it = cache_->by_order.emplace(ord, std::move(gb)).first;
    }
    return it->second;
}

bool ideal::contains(const ideal& other) const {
    for (const polynomial& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

}  // namespace reeskit
