#include "reeskit/idealops.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace reeskit {

ideal sum(const ideal& a, const ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return ideal(a.ring(), std::move(gens));
}

ideal product(const ideal& a, const ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal product");
    std::vector<polynomial> gens;
    for (const polynomial& f : a.gens())
        for (const polynomial& g : b.gens()) gens.push_back(f * g);
    return ideal(a.ring(), std::move(gens));
}

ideal intersect(const ideal& a, const ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersection");
    const ring_spec& ring = a.ring();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return ideal::zero(ring);
    ring_spec ext = ring.with_aux(1);
    const int z = ext.var_count() - 1;
    polynomial zp = polynomial::variable(ext, z);
    polynomial one_minus_z = polynomial::from_long(ext, 1) - zp;
    std::vector<polynomial> gens;
    for (const polynomial& f : a.gens()) gens.push_back(zp * f.lift_to(ext));
    for (const polynomial& g : b.gens()) gens.push_back(one_minus_z * g.lift_to(ext));
    groebner_basis gb = buchberger(gens, monomial_order::block_elim(ext, {z}));
    std::vector<polynomial> kept;
    for (const polynomial& e : gb.elements) {
        bool has_z = false;
        for (const term& t : e.terms())
            if (t.m.exp(z)) { has_z = true; break; }
        if (!has_z) kept.push_back(e.lift_to(ring));
    }
    return ideal(ring, std::move(kept));
}

namespace {

ideal colon_single(const ideal& i, const polynomial& g) {
    if (g.is_constant()) return i;  // nonzero constant: colon is the whole story
    ideal k = intersect(i, ideal(i.ring(), {g}));
    std::vector<polynomial> gens;
    for (const polynomial& h : k.gens()) {
        auto q = exact_divide(h, g);
        if (!q) throw error("colon: intersection element not divisible by the generator");
        gens.push_back(std::move(*q));
    }
    return ideal(i.ring(), std::move(gens));
}

}  // namespace

ideal colon(const ideal& i, const ideal& j) {
    require_same_ring(i.ring(), j.ring(), "ideal colon");
    if (j.is_zero_ideal()) throw error("colon by the zero ideal");
    bool first = true;
    ideal acc;
    for (const polynomial& g : j.gens()) {
        ideal part = colon_single(i, g);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    bool bihom = true;
    for (const polynomial& g : acc.gens())
        if (g.bidegree_info().kind != bidegree_result::kind_t::bihomogeneous) {
            bihom = false;
            break;
        }
    if (bihom && !acc.gens().empty()) return ideal(acc.ring(), trim(acc.gens()));
    return acc;
}

namespace {

// the variable indices generating j, when every generator is a single
// degree-one term
std::optional<std::vector<int>> variable_generators(const ideal& j) {
    std::vector<int> vars;
    for (const polynomial& g : j.gens()) {
        if (g.nterms() != 1 || g.terms().front().m.degree() != 1) return std::nullopt;
        int v = g.terms().front().m.support().front();
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    if (vars.empty()) return std::nullopt;
    return vars;
}

bool all_bihomogeneous(const ideal& i) {
    for (const polynomial& g : i.gens())
        if (g.bidegree_info().kind != bidegree_result::kind_t::bihomogeneous) return false;
    return true;
}

// I : v^infinity for homogeneous I: under grevlex with v cheapest, dividing
// every basis element by its v-power saturates (a term with v^0 would beat
// any term with v > 0 of the same degree, so v | lt forces v | f)
ideal saturate_by_variable(const ideal& i, int v) {
    const ring_spec& ring = i.ring();
    const groebner_basis& gb = i.groebner(monomial_order::grevlex_cheapest(ring, v));
    std::vector<polynomial> out;
    for (const polynomial& g : gb.elements) {
        int k = g.terms().front().m.exp(v);
        for (const term& t : g.terms()) k = std::min<int>(k, t.m.exp(v));
        if (k == 0) {
            out.push_back(g);
            continue;
        }
        monomial pow(ring.var_count());
        pow.set_exp(v, static_cast<std::uint16_t>(k));
        term_list ts;
        for (const term& t : g.terms()) ts.push_back({t.m.divide(pow), t.c});
        out.push_back(polynomial::from_terms(ring, std::move(ts)));
    }
    return ideal(ring, std::move(out));
}

// smallest k <= cap with candidate * (k-fold generator products) landing in I,
// which certifies candidate = I : J^k = I : J^infinity when candidate already
// contains the saturation; nullopt when no such k exists up to the cap
std::optional<int> saturation_exponent(const ideal& i, const ideal& j, const ideal& candidate,
                                       int cap) {
    const groebner_basis& gb = i.groebner();
    std::vector<polynomial> products = {polynomial::from_long(i.ring(), 1)};
    std::vector<std::size_t> min_gen(products.size(), 0);
    for (int k = 0; k <= cap; ++k) {
        bool ok = true;
        for (const polynomial& f : candidate.gens()) {
            for (const polynomial& p : products)
                if (!membership(f * p, gb)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return k;
        // extend to the degree-(k+1) products without repeating permutations
        std::vector<polynomial> next;
        std::vector<std::size_t> next_min;
        for (std::size_t pi = 0; pi < products.size(); ++pi)
            for (std::size_t gi = min_gen[pi]; gi < j.gens().size(); ++gi) {
                next.push_back(products[pi] * j.gens()[gi]);
                next_min.push_back(gi);
            }
        products = std::move(next);
        min_gen = std::move(next_min);
    }
    return std::nullopt;
}

ideal trimmed(ideal i) {
    if (!i.gens().empty() && all_bihomogeneous(i)) return ideal(i.ring(), trim(i.gens()));
    return i;
}

}  // namespace

saturation_result saturate(const ideal& i, const ideal& j) {
    require_same_ring(i.ring(), j.ring(), "saturation");
    if (j.is_zero_ideal()) throw error("saturation by the zero ideal");
    if (!i.is_zero_ideal() && all_bihomogeneous(i)) {
        if (auto vars = variable_generators(j)) {
            // saturating by one variable after another gives I : (v1...vk)^inf,
            // which contains I : J^inf and usually equals it; a bounded
            // membership scan certifies equality and yields the exponent
            ideal stable = saturate_by_variable(i, (*vars)[0]);
            for (std::size_t k = 1; k < vars->size(); ++k)
                stable = saturate_by_variable(stable, (*vars)[k]);
            stable = trimmed(std::move(stable));
            if (auto exp = saturation_exponent(i, j, stable, 16)) return {stable, *exp};
            // the product saturation was strictly larger: fall back to
            // intersecting the per-variable saturations
            stable = saturate_by_variable(i, (*vars)[0]);
            for (std::size_t k = 1; k < vars->size(); ++k)
                stable = intersect(stable, saturate_by_variable(i, (*vars)[k]));
            stable = trimmed(std::move(stable));
            if (auto exp = saturation_exponent(i, j, stable, 64)) return {stable, *exp};
            throw resource_limit_error("saturation exponent did not stabilize within 64 steps",
                                       "membership scan");
        }
    }
    ideal prev = i;
    ideal cur = colon(prev, j);
    if (ideal_equal(cur, prev)) return {prev, 0};
    for (int k = 1; k <= 64; ++k) {
        ideal next = colon(cur, j);
        if (ideal_equal(next, cur)) return {cur, k};
        cur = std::move(next);
    }
    throw resource_limit_error("saturation did not stabilize within 64 steps",
                               "iterated colon chain");
}

ideal eliminate(const ideal& i, const std::vector<int>& keep) {
    const ring_spec& ring = i.ring();
    std::vector<int> front;
    for (int v = 0; v < ring.var_count(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end()) front.push_back(v);
    const groebner_basis& gb = i.groebner(monomial_order::block_elim(ring, front));
    std::vector<polynomial> kept;
    for (const polynomial& e : gb.elements) {
        bool inside = true;
        for (const term& t : e.terms()) {
            for (int v : front)
                if (t.m.exp(v)) { inside = false; break; }
            if (!inside) break;
        }
        if (inside) kept.push_back(e);
    }
    return ideal(ring, std::move(kept));
}

bool radical_membership(const polynomial& f, const ideal& i) {
    require_same_ring(f.ring(), i.ring(), "radical membership");
    if (f.is_zero()) return true;
    ring_spec ext = i.ring().with_aux(1);
    const int y = ext.var_count() - 1;
    std::vector<polynomial> gens;
    for (const polynomial& g : i.gens()) gens.push_back(g.lift_to(ext));
    gens.push_back(polynomial::from_long(ext, 1) -
                   polynomial::variable(ext, y) * f.lift_to(ext));
    groebner_basis gb = buchberger(gens, monomial_order::block_elim(ext, {y}));
    return gb.is_unit();
}

namespace {

// max independent subset among `constrained`, where a set S is dependent as
// soon as it contains some support entirely
int max_independent(const std::vector<std::vector<int>>& supports,
                    const std::vector<int>& constrained) {
    int best = 0;
    std::vector<int> chosen;
    // depth-first include/exclude with a simple remaining-count prune
    std::function<void(std::size_t)> go = [&](std::size_t pos) {
        if (static_cast<int>(chosen.size()) +
                static_cast<int>(constrained.size() - pos) <= best)
            return;
        if (pos == constrained.size()) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        int v = constrained[pos];
        chosen.push_back(v);
        bool ok = true;
        for (const auto& s : supports) {
            bool covered = true;
            for (int w : s)
                if (std::find(chosen.begin(), chosen.end(), w) == chosen.end()) {
                    covered = false;
                    break;
                }
            if (covered) { ok = false; break; }
        }
        if (ok) go(pos + 1);
        chosen.pop_back();
        go(pos + 1);
    };
    go(0);
    return best;
}

}  // namespace

std::optional<int> dimension_within(const ideal& i, const std::vector<int>& subset) {
    const groebner_basis& gb = i.groebner();
    if (gb.is_unit()) return std::nullopt;
    std::vector<std::vector<int>> supports;
    for (const monomial& l : gb.lead) {
        std::vector<int> s = l.support();
        bool inside = true;
        for (int v : s)
            if (std::find(subset.begin(), subset.end(), v) == subset.end()) {
                inside = false;
                break;
            }
        if (inside) supports.push_back(std::move(s));  // only these can constrain
    }
    std::vector<int> constrained;
    for (int v : subset) {
        bool hit = false;
        for (const auto& s : supports)
            if (std::find(s.begin(), s.end(), v) != s.end()) { hit = true; break; }
        if (hit) constrained.push_back(v);
    }
    int free_count = static_cast<int>(subset.size() - constrained.size());
    return free_count + max_independent(supports, constrained);
}

std::optional<int> dimension(const ideal& i) {
    std::vector<int> all(i.ring().var_count());
    for (int v = 0; v < i.ring().var_count(); ++v) all[v] = v;
    return dimension_within(i, all);
}

std::optional<int> height(const ideal& i) {
    auto d = dimension(i);
    if (!d) return std::nullopt;
    return i.ring().var_count() - *d;
}

bool ideal_equal(const ideal& a, const ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal equality");
    return a.groebner().elements == b.groebner().elements;
}

}  // namespace reeskit
