#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "reeskit/groebner.hpp"

using namespace reeskit;
using namespace reeskit::testing;

namespace {

// substitution-to-fixpoint oracle for reduction modulo {x^2 - y, y^2 - 1}
polynomial subst_fixpoint(polynomial f, const ring_spec& r) {
    polynomial x = polynomial::variable(r, 0), y = polynomial::variable(r, 1);
    for (;;) {
        polynomial next(r);
        bool changed = false;
        for (const term& t : f.terms()) {
            monomial m = t.m;
            if (m.exp(0) >= 2) {
                m.set_exp(0, static_cast<std::uint16_t>(m.exp(0) - 2));
                next += polynomial::from_terms(r, {{m, t.c}}) * y;
                changed = true;
            } else if (m.exp(1) >= 2) {
                m.set_exp(1, static_cast<std::uint16_t>(m.exp(1) - 2));
                next += polynomial::from_terms(r, {{m, t.c}});
                changed = true;
            } else {
                next += polynomial::from_terms(r, {{m, t.c}});
            }
        }
        if (!changed) return f;
        f = next;
    }
}

polynomial spoly(const polynomial& f, const polynomial& g, const monomial_order& ord) {
    term_list fs = f.terms(), gs = g.terms();
    sort_terms(fs, ord);
    sort_terms(gs, ord);
    monomial l = monomial::lcm(fs[0].m, gs[0].m);
    polynomial uf = polynomial::from_terms(f.ring(), {{l.divide(fs[0].m), gs[0].c}});
    polynomial ug = polynomial::from_terms(g.ring(), {{l.divide(gs[0].m), fs[0].c}});
    return f * uf - g * ug;
}

}  // namespace

TEST_CASE("normal form reproduces the substitution fixpoint") {
    ring_spec r = qq(2);
    monomial_order lex = monomial_order::lex(r);
    std::vector<polynomial> basis = {pp("x1^2 - x2", r), pp("x2^2 - 1", r)};
    CHECK(normal_form(pp("x1^2*x2", r), basis, lex) == pp("1", r));
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        polynomial f = random_polynomial(rng, r, 5, 4);
        CHECK(normal_form(f, basis, lex) == subst_fixpoint(f, r));
    }
}

TEST_CASE("normal form leaves no reducible term and is linear over the ideal") {
    ring_spec r = qq(3);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(29);
    for (int it = 0; it < 50; ++it) {
        std::vector<polynomial> basis;
        for (int i = 0; i < 3; ++i) {
            polynomial g = random_polynomial(rng, r, 3, 2);
            if (!g.is_zero()) basis.push_back(g);
        }
        if (basis.empty()) continue;
        polynomial f = random_polynomial(rng, r, 5, 3);
        polynomial nf = normal_form(f, basis, ord);
        for (const term& t : nf.terms())
            for (const polynomial& g : basis) {
                term_list gs = g.terms();
                sort_terms(gs, ord);
                CHECK(!gs[0].m.divides(t.m));
            }
        // f - nf lies in the ideal: reduce it by a full GB
        groebner_basis gb = buchberger(basis, ord);
        CHECK(normal_form(f - nf, gb).is_zero());
    }
}

TEST_CASE("irreducible inputs pass through") {
    ring_spec r = qq(2);
    monomial_order lex = monomial_order::lex(r);
    CHECK(normal_form(pp("x1", r), {pp("x2", r)}, lex) == pp("x1", r));
    CHECK(normal_form(pp("0", r), {pp("x2", r)}, lex).is_zero());
}

TEST_CASE("buchberger worked example under lex") {
    ring_spec r = qq(3);
    monomial_order lex = monomial_order::lex(r);
    // x - y^2, y - z with x > y > z: the reduced basis substitutes through
    groebner_basis gb = buchberger({pp("x1 - x2^2", r), pp("x2 - x3", r)}, lex);
    REQUIRE(gb.elements.size() == 2);
    CHECK(gb.elements[0] == pp("x2 - x3", r));
    CHECK(gb.elements[1] == pp("x1 - x3^2", r));
    // mutual membership of both generating sets
    CHECK(membership(pp("x1 - x2^2", r), gb));
    groebner_basis gb2 = buchberger({pp("x2 - x3", r), pp("x1 - x3^2", r)}, lex);
    CHECK(membership(pp("x1 - x2^2", r), gb2));
}

TEST_CASE("single generator becomes monic") {
    ring_spec r = qq(2);
    groebner_basis gb = buchberger({pp("3*x1^2 - 6*x2", r)}, monomial_order::grevlex(r));
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == pp("x1^2 - 2*x2", r));
}

TEST_CASE("zero and unit ideals") {
    ring_spec r = qq(2);
    monomial_order ord = monomial_order::grevlex(r);
    CHECK(buchberger({pp("0", r)}, ord).is_zero());
    groebner_basis unit = buchberger({pp("x1", r), pp("x1 + 1", r)}, ord);
    CHECK(unit.is_unit());
    CHECK(unit.elements[0] == pp("1", r));
}

TEST_CASE("reduced bases are canonical under permutation and redundancy") {
    ring_spec r = qq(3, 1);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        std::vector<polynomial> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(random_polynomial(rng, r, 3, 2));
        groebner_basis gb = buchberger(gens, ord);
        std::vector<polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(gens[0] * gens[1 % gens.size()]);  // redundant element
        groebner_basis gb2 = buchberger(shuffled, ord);
        REQUIRE(gb.elements.size() == gb2.elements.size());
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            CHECK(gb.elements[i] == gb2.elements[i]);
    }
}

TEST_CASE("extending a basis one generator at a time matches a full rerun") {
    ring_spec r = zp(3, 1);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(47);
    for (int it = 0; it < 25; ++it) {
        std::vector<polynomial> gens;
        for (int i = 0; i < 5; ++i) gens.push_back(random_polynomial(rng, r, 3, 2));
        groebner_basis full = buchberger(gens, ord);
        groebner_basis grown = buchberger({gens[0]}, ord);
        for (std::size_t i = 1; i < gens.size(); ++i) grown = groebner_extend(grown, gens[i]);
        REQUIRE(full.elements.size() == grown.elements.size());
        for (std::size_t i = 0; i < full.elements.size(); ++i)
            CHECK(full.elements[i] == grown.elements[i]);
    }
}

TEST_CASE("reduced basis invariants and S-polynomial reduction") {
    ring_spec r = qq(2, 2);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(37);
    for (int it = 0; it < 25; ++it) {
        std::vector<polynomial> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_polynomial(rng, r, 3, 2));
        groebner_basis gb = buchberger(gens, ord);
        for (std::size_t i = 0; i < gb.elements.size(); ++i) {
            // monic under the active order
            CHECK(gb.sorted_terms[i][0].c.is_one());
            CHECK(gb.sorted_terms[i][0].m == gb.lead[i]);
            // ascending leading monomials
            if (i + 1 < gb.elements.size()) CHECK(ord.compare(gb.lead[i], gb.lead[i + 1]) < 0);
            // reduced: no term divisible by another element's lead
            for (std::size_t j = 0; j < gb.elements.size(); ++j) {
                if (i == j) continue;
                for (const term& t : gb.sorted_terms[i]) CHECK(!gb.lead[j].divides(t.m));
            }
        }
        // every input generator is a member, every S-polynomial reduces to zero
        for (const polynomial& g : gens) CHECK(membership(g, gb));
        for (std::size_t i = 0; i < gb.elements.size(); ++i)
            for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
                CHECK(normal_form(spoly(gb.elements[i], gb.elements[j], ord), gb).is_zero());
    }
}

TEST_CASE("membership on monomial ideals matches divisibility") {
    ring_spec r = qq(3);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(41);
    for (int it = 0; it < 50; ++it) {
        std::vector<polynomial> gens;
        std::vector<monomial> ms;
        for (int i = 0; i < 3; ++i) {
            monomial m = random_monomial(rng, r, 3);
            ms.push_back(m);
            gens.push_back(polynomial::from_terms(r, {{m, coeff::one(r.field)}}));
        }
        groebner_basis gb = buchberger(gens, ord);
        for (int k = 0; k < 20; ++k) {
            monomial probe = random_monomial(rng, r, 4);
            bool divisible = false;
            for (const auto& m : ms) divisible = divisible || m.divides(probe);
            polynomial f = polynomial::from_terms(r, {{probe, coeff::one(r.field)}});
            CHECK(membership(f, gb) == divisible);
        }
    }
    CHECK(!membership(pp("x1", r), buchberger({pp("x1^2", r), pp("x1*x2", r)}, ord)));
    CHECK(membership(pp("x1*x2", r), buchberger({pp("x1^2", r), pp("x1*x2", r)}, ord)));
}

TEST_CASE("trim drops redundant bihomogeneous generators") {
    ring_spec r = qq(2);
    auto out = trim({pp("x1", r), pp("x1^2", r), pp("x2", r)});
    REQUIRE(out.size() == 2);
    std::vector<std::string> strs = {out[0].str(), out[1].str()};
    std::sort(strs.begin(), strs.end());
    CHECK(strs == std::vector<std::string>{"x1", "x2"});

    auto both = trim({pp("x1 + x2", r), pp("x1 - x2", r)});
    CHECK(both.size() == 2);
    auto census = bidegree_census(both);
    CHECK(census[{1, 0}] == 2);

    ring_spec rt = qq(2, 2);
    CHECK_THROWS_AS(trim({pp("x1 + T1", rt)}), error);  // not bihomogeneous
}

TEST_CASE("trim output generates the same ideal with minimal count") {
    ring_spec r = qq(2, 1);
    monomial_order ord = monomial_order::grevlex(r);
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        // random bihomogeneous generators: scale a few monomials of fixed bidegree
        std::vector<polynomial> gens;
        for (int i = 0; i < 4; ++i) {
            int xd = static_cast<int>(rng() % 3), td = static_cast<int>(rng() % 2);
            polynomial g(r);
            for (const auto& m : {random_monomial(rng, r, 2), random_monomial(rng, r, 2)}) {
                monomial mm(r.var_count());
                // force bidegree (xd, td): distribute over x1,x2 and T1
                mm.set_exp(0, static_cast<std::uint16_t>(m.exp(0) % (xd + 1)));
                mm.set_exp(1, static_cast<std::uint16_t>(xd - mm.exp(0)));
                mm.set_exp(2, static_cast<std::uint16_t>(td));
                g += polynomial::from_terms(
                    r, {{mm, coeff::from_long(static_cast<long>(rng() % 5) - 2, r.field)}});
            }
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto out = trim(gens);
        CHECK(out.size() <= gens.size());
        groebner_basis full = buchberger(gens, ord);
        groebner_basis trimmed = buchberger(out.empty() ? std::vector<polynomial>{pp("0", r)} : out, ord);
        REQUIRE(full.elements.size() == trimmed.elements.size());
        for (std::size_t i = 0; i < full.elements.size(); ++i)
            CHECK(full.elements[i] == trimmed.elements[i]);
        // none of the kept generators is generated by the others
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<polynomial> rest;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) rest.push_back(out[j]);
            if (rest.empty()) {
                CHECK(!out[i].is_zero());
                continue;
            }
            CHECK(!membership(out[i], buchberger(rest, ord)));
        }
    }
}

TEST_CASE("resource limits abort with diagnostics") {
    ring_spec r = qq(4);
    monomial_order ord = monomial_order::grevlex(r);
    // cyclic-ish generators that need several pairs
    std::vector<polynomial> gens = {pp("x1*x2 - x3*x4", r), pp("x1^2 - x2*x4", r),
                                    pp("x2^2*x3 - x1*x4^2", r)};
    compute_limits pair_lim;
    pair_lim.pair_cap = 1;
    CHECK_THROWS_AS(buchberger(gens, ord, pair_lim), resource_limit_error);
    compute_limits deg_lim;
    deg_lim.degree_cap = 1;
    CHECK_THROWS_AS(buchberger(gens, ord, deg_lim), resource_limit_error);
    compute_limits past;
    past.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(buchberger(gens, ord, past), resource_limit_error);
    try {
        buchberger(gens, ord, pair_lim);
    } catch (const resource_limit_error& e) {
        CHECK(!e.diagnostics.empty());
    }
    // ambient budget: the same caps flow through budget_scope
    {
        budget_scope scope(pair_lim);
        CHECK_THROWS_AS(buchberger(gens, ord), resource_limit_error);
    }
    CHECK(buchberger(gens, ord).elements.size() >= 3);
}
