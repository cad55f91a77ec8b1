#include "reeskit/groebner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace reeskit {

namespace {

thread_local compute_limits g_limits;

void check_deadline(const compute_limits& lim, const char* where) {
    if (lim.deadline && std::chrono::steady_clock::now() > *lim.deadline)
        throw resource_limit_error("wall-clock deadline exceeded",
                                   std::string("stage: ") + where);
}

// division algorithm on term lists sorted descending under ord; basis entries
// monic, nonempty
term_list nf_terms(const term_list& f, const std::vector<term_list>& basis,
                   const monomial_order& ord, const compute_limits& lim) {
    term_list rem;
    term_list work = f;
    std::size_t idx = 0;
    long steps = 0;
    while (idx < work.size()) {
        if (((++steps) & 0xff) == 0) check_deadline(lim, "normal_form");
        const term& t = work[idx];
        const term_list* red = nullptr;
        for (const term_list& g : basis) {
            if (g.front().m.divides(t.m)) { red = &g; break; }
        }
        if (!red) {
            rem.push_back(t);
            ++idx;
            continue;
        }
        // cancel t against the reducer's lead; merge in the scaled tail
        term_list tail(work.begin() + idx + 1, work.end());
        term_list sub = scale_terms(term_list(red->begin() + 1, red->end()), -t.c,
                                    t.m.divide(red->front().m));
        work = merge_terms(tail, sub, ord);
        idx = 0;
    }
    return rem;
}

void make_monic(term_list& g) {
    if (g.empty() || g.front().c.is_one()) return;
    coeff inv = g.front().c.inv();
    for (term& t : g) t.c = t.c * inv;
}

term_list resort(const polynomial& p, const monomial_order& ord) {
    term_list ts = p.terms();
    sort_terms(ts, ord);
    return ts;
}

polynomial to_canonical(const ring_spec& ring, term_list ts) {
    return polynomial::from_terms(ring, std::move(ts));
}

struct pair_rec {
    int i, j;
    monomial lcm;
    int deg;
};

struct pair_less {
    const monomial_order* ord;
    bool operator()(const pair_rec& a, const pair_rec& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = ord->compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

// Buchberger working state, shared by the full run and the one-new-generator
// extension.  `g` holds monic term lists sorted under `order`.
struct completion_state {
    monomial_order order;
    ring_spec ring;
    std::vector<term_list> g;
    std::set<pair_rec, pair_less> queue;
    std::set<std::pair<int, int>> pending;

    explicit completion_state(monomial_order ord)
        : order(std::move(ord)), queue(pair_less{&order}) {}
    completion_state(const completion_state&) = delete;

    void push_pairs(int t) {
        for (int i = 0; i < t; ++i) {
            monomial l = monomial::lcm(g[i].front().m, g[t].front().m);
            queue.insert({i, t, l, l.degree()});
            pending.insert({i, t});
        }
    }

    void run(const compute_limits& limits) { run_until(std::numeric_limits<int>::max(), limits); }

    // process pairs of lcm degree <= max_deg; for homogeneous input the basis
    // then decides membership exactly for elements of degree <= max_deg
    void run_until(int max_deg, const compute_limits& limits) {
        long picked = 0;
        auto diagnostics = [&](const char* why) {
            std::ostringstream os;
            os << why << "; basis size " << g.size() << ", pairs processed " << picked
               << ", pairs remaining " << queue.size();
            return os.str();
        };

        while (!queue.empty() && queue.begin()->deg <= max_deg) {
            pair_rec pr = *queue.begin();
            queue.erase(queue.begin());
            pending.erase({pr.i, pr.j});
            ++picked;
            check_deadline(limits, "buchberger");
            if (limits.pair_cap && picked > limits.pair_cap)
                throw resource_limit_error("S-pair budget exceeded", diagnostics("pair cap hit"));
            if (limits.degree_cap && pr.deg > limits.degree_cap)
                throw resource_limit_error(
                    "degree cap " + std::to_string(limits.degree_cap) + " exceeded",
                    diagnostics("degree cap hit"));

            const monomial &li = g[pr.i].front().m, &lj = g[pr.j].front().m;
            if (li.coprime(lj)) continue;  // product criterion
            bool chained = false;          // chain criterion
            for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!g[k].front().m.divides(pr.lcm)) continue;
                auto key = [](int a, int b) {
                    return std::pair<int, int>(std::min(a, b), std::max(a, b));
                };
                if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chained = true;
            }
            if (chained) continue;

            // S-polynomial via tails: the leads cancel exactly (both monic)
            term_list spoly = merge_terms(
                scale_terms(term_list(g[pr.i].begin() + 1, g[pr.i].end()),
                            coeff::one(ring.field), pr.lcm.divide(li)),
                scale_terms(term_list(g[pr.j].begin() + 1, g[pr.j].end()),
                            -coeff::one(ring.field), pr.lcm.divide(lj)),
                order);
            term_list r = nf_terms(spoly, g, order, limits);
            if (r.empty()) continue;
            make_monic(r);
            g.push_back(std::move(r));
            push_pairs(static_cast<int>(g.size()) - 1);
        }
    }

    groebner_basis finalize(const compute_limits& limits) {
        // minimalize: keep one element per minimal leading monomial
        std::vector<int> idx(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (int c = order.compare(g[a].front().m, g[b].front().m)) return c < 0;
            return a < b;
        });
        std::vector<term_list> kept;
        for (int i : idx) {
            bool dominated = false;
            for (const term_list& k : kept)
                if (k.front().m.divides(g[i].front().m)) { dominated = true; break; }
            if (!dominated) kept.push_back(g[i]);
        }

        // inter-reduce tails; leading monomials are already pairwise minimal
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<term_list> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            term_list r = nf_terms(kept[i], others, order, limits);
            make_monic(r);
            kept[i] = std::move(r);
        }
        std::sort(kept.begin(), kept.end(), [&](const term_list& a, const term_list& b) {
            return order.compare(a.front().m, b.front().m) < 0;
        });

        groebner_basis out;
        out.order = order;
        out.ring = ring;
        for (term_list& ts : kept) {
            out.lead.push_back(ts.front().m);
            out.elements.push_back(to_canonical(out.ring, ts));
            out.sorted_terms.push_back(std::move(ts));
        }
        return out;
    }
};

}  // namespace

const compute_limits& current_limits() { return g_limits; }

budget_scope::budget_scope(compute_limits l) : prev_(g_limits) { g_limits = std::move(l); }
budget_scope::~budget_scope() { g_limits = prev_; }

polynomial normal_form(const polynomial& f, const std::vector<polynomial>& basis,
                       const monomial_order& order) {
    std::vector<term_list> b;
    for (const polynomial& g : basis) {
        if (g.is_zero()) continue;
        require_same_ring(f.ring(), g.ring(), "normal_form");
        term_list ts = resort(g, order);
        make_monic(ts);
        b.push_back(std::move(ts));
    }
    return to_canonical(f.ring(),
                        nf_terms(resort(f, order), b, order, current_limits()));
}

polynomial normal_form(const polynomial& f, const groebner_basis& gb) {
    require_same_ring(f.ring(), gb.ring, "normal_form");
    return to_canonical(f.ring(),
                        nf_terms(resort(f, gb.order), gb.sorted_terms, gb.order,
                                 current_limits()));
}

groebner_basis buchberger(const std::vector<polynomial>& gens, const monomial_order& order,
                          const compute_limits& limits) {
    completion_state st(order);
    for (const polynomial& p : gens) {
        if (p.is_zero()) continue;
        if (st.g.empty()) st.ring = p.ring();
        else require_same_ring(st.ring, p.ring(), "buchberger");
        term_list ts = resort(p, order);
        make_monic(ts);
        st.g.push_back(std::move(ts));
    }
    if (st.g.empty()) {
        groebner_basis out;
        out.order = order;
        if (!gens.empty()) out.ring = gens.front().ring();
        return out;
    }
    for (int t = 1; t < static_cast<int>(st.g.size()); ++t) st.push_pairs(t);
    st.run(limits);
    return st.finalize(limits);
}

groebner_basis groebner_extend(const groebner_basis& gb, const polynomial& p,
                               const compute_limits& limits) {
    if (p.is_zero()) return gb;
    if (gb.is_zero()) return buchberger({p}, gb.order, limits);
    require_same_ring(gb.ring, p.ring(), "groebner_extend");
    completion_state st(gb.order);
    st.ring = gb.ring;
    st.g = gb.sorted_terms;
    term_list ts = nf_terms(resort(p, st.order), st.g, st.order, limits);
    if (ts.empty()) return gb;  // already in the ideal
    make_monic(ts);
    st.g.push_back(std::move(ts));
    st.push_pairs(static_cast<int>(st.g.size()) - 1);
    st.run(limits);
    return st.finalize(limits);
}

bool membership(const polynomial& f, const groebner_basis& gb) {
    if (f.is_zero()) return true;
    if (gb.is_zero()) return false;
    return normal_form(f, gb).is_zero();
}

std::vector<polynomial> trim(const std::vector<polynomial>& gens, const compute_limits& limits) {
    std::vector<polynomial> nonzero;
    for (const polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.bidegree_info().kind != bidegree_result::kind_t::bihomogeneous)
            throw error("trim requires bihomogeneous generators, got " + g.str());
        nonzero.push_back(g);
    }
    if (nonzero.empty()) return {};
    const ring_spec ring = nonzero.front().ring();
    const monomial_order ord = monomial_order::grevlex(ring);
    // ascending degree makes the graded-Nakayama greedy valid; the rest of the
    // key is a determinism tie-break
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [&](const polynomial& a, const polynomial& b) {
                         if (a.total_degree() != b.total_degree())
                             return a.total_degree() < b.total_degree();
                         bidegree da = a.bidegree_info().deg, db = b.bidegree_info().deg;
                         if (da != db) return da < db;
                         if (int c = ord.compare(a.leading_term().m, b.leading_term().m))
                             return c < 0;
                         return a.str() < b.str();
                     });
    // drop tests only ever see candidates of degree <= the current truncation,
    // so the basis never has to be completed past the largest input degree
    std::vector<polynomial> kept;
    completion_state st(ord);
    st.ring = ring;
    for (const polynomial& g : nonzero) {
        if (!kept.empty()) {
            st.run_until(g.total_degree(), limits);
            if (nf_terms(resort(g, ord), st.g, ord, limits).empty()) continue;
        }
        kept.push_back(g);
        term_list ts = resort(g, ord);
        make_monic(ts);
        st.g.push_back(std::move(ts));
        st.push_pairs(static_cast<int>(st.g.size()) - 1);
    }
    return kept;
}

std::map<bidegree, int> bidegree_census(const std::vector<polynomial>& gens) {
    std::map<bidegree, int> census;
    for (const polynomial& g : gens) {
        bidegree_result r = g.bidegree_info();
        if (r.kind == bidegree_result::kind_t::bihomogeneous) ++census[r.deg];
    }
    return census;
}

}  // namespace reeskit
