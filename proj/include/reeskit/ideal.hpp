#ifndef REESKIT_IDEAL_HPP
#define REESKIT_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "reeskit/groebner.hpp"

namespace reeskit {

// An ideal given by generators, with lazily computed Groebner bases cached
// per monomial order.  Generators are immutable after construction; copies
// share the cache.  Cache fills are idempotent (reduced bases are canonical),
// and a mutex keeps concurrent fills benign.
class ideal {
public:
    ideal() = default;
    ideal(const ring_spec& ring, std::vector<polynomial> gens);

    static ideal zero(const ring_spec& ring) { return ideal(ring, {}); }
    static ideal unit(const ring_spec& ring) {
        return ideal(ring, {polynomial::from_long(ring, 1)});
    }
    // (x_{v} : v in vars), vars being 0-based ring variable indices
    static ideal of_variables(const ring_spec& ring, const std::vector<int>& vars);

    const ring_spec& ring() const { return ring_; }
    const std::vector<polynomial>& gens() const { return gens_; }

    const groebner_basis& groebner() const;
    const groebner_basis& groebner(const monomial_order& ord) const;

    bool contains(const polynomial& f) const { return membership(f, groebner()); }
    // every generator of `other` lies in this ideal
    bool contains(const ideal& other) const;
    bool is_zero_ideal() const { return gens_.empty(); }  // zero gens are dropped
    bool is_unit_ideal() const { return groebner().is_unit(); }

private:
    struct cache_t {
        std::mutex mu;
        std::map<monomial_order, groebner_basis> by_order;
    };
    ring_spec ring_;
    std::vector<polynomial> gens_;
    std::shared_ptr<cache_t> cache_ = std::make_shared<cache_t>();
};

}  // namespace reeskit

#endif
