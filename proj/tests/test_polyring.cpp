#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reeskit/parse.hpp"

using namespace reeskit;
using namespace reeskit::testing;

TEST_CASE("rational coefficient arithmetic") {
    field_spec f = field_spec::rationals();
    coeff half = coeff::from_decimal("1", "2", f);
    coeff third = coeff::from_decimal("1", "3", f);
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(half.inv().str() == "2");
    CHECK((-half).str() == "-1/2");
    CHECK((-half).negative());
    CHECK_THROWS_AS(half / coeff::zero(f), error);
}

TEST_CASE("prime field arithmetic") {
    field_spec f = field_spec::prime(7);
    coeff three = coeff::from_long(3, f);
    coeff five = coeff::from_long(-2, f);
    CHECK(five.str() == "5");
    CHECK((three + five).str() == "1");
    CHECK((three * five).str() == "1");
    CHECK(three.inv().str() == "5");
    CHECK((three * three.inv()).is_one());
    // 1/2 mod 7 = 4
    CHECK(coeff::from_decimal("1", "2", f).str() == "4");
    CHECK_THROWS_AS(coeff::from_decimal("1", "7", f), error);
    CHECK_THROWS_AS(field_spec::prime(6), error);
}

TEST_CASE("cross-field operations are rejected") {
    coeff a = coeff::from_long(1, field_spec::rationals());
    coeff b = coeff::from_long(1, field_spec::prime(7));
    coeff c = coeff::from_long(1, field_spec::prime(11));
    CHECK_THROWS_AS(a + b, ring_mismatch_error);
    CHECK_THROWS_AS(b * c, ring_mismatch_error);
    CHECK(a != b);
}

TEST_CASE("parse and print round-trip on canonical forms") {
    ring_spec r = qq(3, 2);
    for (const char* text : {
             "0",
             "1",
             "-1",
             "x1",
             "x1 + x2",
             "x1 - x2",
             "2*x1^2 - 3*x2*x3 + 1",
             "x1*T1 - x2*T2",
             "x1^2*T2^3 + 1/2*x3",
             "T1^2 - 2*T1*T2 + T2^2",
             "-x1^3 + 5/7",
         }) {
        polynomial p = pp(text, r);
        CHECK(p.str() == text);
        CHECK(pp(p.str(), r) == p);
    }
}

TEST_CASE("parser normalizes non-canonical input") {
    ring_spec r = qq(2, 1);
    CHECK(pp("x2 + x1", r).str() == "x1 + x2");
    CHECK(pp("x1 + x1", r).str() == "2*x1");
    CHECK(pp("x1 - x1", r).str() == "0");
    CHECK(pp("(x1+x2)^2", r).str() == "x1^2 + 2*x1*x2 + x2^2");
    CHECK(pp("(x1-x2)*(x1+x2)", r).str() == "x1^2 - x2^2");
    CHECK(pp("3/6", r).str() == "1/2");
    CHECK(pp("2x1", r) == pp("2*x1", r));          // juxtaposition
    CHECK(pp("x1(x1+x2)", r) == pp("x1^2+x1*x2", r));
    CHECK(pp("T1x1", r) == pp("T1*x1", r));
    CHECK(pp("- x1 + x1", r).str() == "0");
    CHECK(pp("x1^0", r).str() == "1");
}

TEST_CASE("parse errors carry byte positions") {
    ring_spec r = qq(2, 1);
    auto pos_of = [&](const std::string& text) {
        try {
            pp(text, r);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position);
        }
        return -1L;
    };
    CHECK(pos_of("x3") >= 0);        // index out of range
    CHECK(pos_of("T2 + 1") >= 0);    // no T2 in this ring
    CHECK(pos_of("y1") >= 0);        // unknown variable letter
    CHECK(pos_of("x1 + ") >= 0);     // dangling operator
    CHECK(pos_of("(x1") >= 0);       // unclosed paren
    CHECK(pos_of("1/0") >= 0);       // zero denominator
    CHECK(pos_of("x1^70000") >= 0);  // exponent over 16 bits
    CHECK(pp("x1 x2", r) == pp("x1*x2", r));  // juxtaposition across a space is a product
}

namespace {

// textbook reference comparators, written to the definitions
int ref_grevlex(const monomial& a, const monomial& b, const std::vector<int>& ranking) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = static_cast<int>(ranking.size()) - 1; i >= 0; --i) {
        int v = ranking[i];
        if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? -1 : 1;
    }
    return 0;
}

int ref_lex(const monomial& a, const monomial& b, const std::vector<int>& ranking) {
    for (int v : ranking)
        if (a.exp(v) != b.exp(v)) return a.exp(v) < b.exp(v) ? -1 : 1;
    return 0;
}

int sign_of(int x) { return x < 0 ? -1 : x > 0 ? 1 : 0; }

std::vector<monomial> all_monomials(const ring_spec& ring, int max_deg) {
    std::vector<monomial> out;
    monomial m(ring.var_count());
    // odometer enumeration of exponent vectors with entries <= max_deg
    std::vector<int> e(ring.var_count(), 0);
    for (;;) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= max_deg) {
            monomial mm(ring.var_count());
            for (int v = 0; v < ring.var_count(); ++v)
                mm.set_exp(v, static_cast<std::uint16_t>(e[v]));
            out.push_back(mm);
        }
        int i = 0;
        while (i < static_cast<int>(e.size()) && e[i] == max_deg) e[i++] = 0;
        if (i == static_cast<int>(e.size())) return out;
        ++e[i];
    }
}

}  // namespace

TEST_CASE("grevlex and lex match their definitions on all small monomials") {
    ring_spec r = qq(2, 2);
    monomial_order grev = monomial_order::grevlex(r);
    monomial_order lex = monomial_order::lex(r);
    auto ms = all_monomials(r, 3);
    for (const auto& a : ms)
        for (const auto& b : ms) {
            CHECK(sign_of(grev.compare(a, b)) == ref_grevlex(a, b, grev.ranking()));
            CHECK(sign_of(lex.compare(a, b)) == ref_lex(a, b, lex.ranking()));
        }
}

TEST_CASE("orders are multiplicative and global") {
    ring_spec r = qq(3, 1);
    std::mt19937_64 rng(7);
    monomial one(r.var_count());
    for (const auto& ord : {monomial_order::grevlex(r), monomial_order::lex(r),
                            monomial_order::block_elim(r, {0, 2})}) {
        for (int it = 0; it < 300; ++it) {
            monomial a = random_monomial(rng, r), b = random_monomial(rng, r);
            monomial c = random_monomial(rng, r, 2);
            CHECK(sign_of(ord.compare(a, b)) == -sign_of(ord.compare(b, a)));
            CHECK(sign_of(ord.compare(a * c, b * c)) == sign_of(ord.compare(a, b)));
            if (!(a == one)) CHECK(ord.compare(one, a) < 0);  // global: 1 is least
        }
    }
}

TEST_CASE("block order eliminates its front block") {
    ring_spec r = qq(2, 2);
    monomial_order elim = monomial_order::block_elim(r, {3});  // front = T2
    auto ms = all_monomials(r, 2);
    for (const auto& a : ms)
        for (const auto& b : ms) {
            if (a.exp(3) > 0 && b.exp(3) == 0) CHECK(elim.compare(a, b) > 0);
        }
}

TEST_CASE("T variables dominate x variables in the default order") {
    ring_spec r = qq(2, 2);
    monomial_order grev = monomial_order::grevlex(r);
    polynomial p = pp("T1*x1 + T2*x2 + x1^2", r);
    CHECK(p.leading_term().m == pp("T1*x1", r).leading_term().m);
    // within equal T-degree, higher T-index wins only by the grevlex rule
    CHECK(grev.compare(pp("T1", r).leading_term().m, pp("T2", r).leading_term().m) > 0);
}

TEST_CASE("arithmetic agrees with point evaluation") {
    for (const ring_spec& r : {qq(2, 2), zp(2, 2)}) {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 200; ++it) {
            polynomial a = random_polynomial(rng, r), b = random_polynomial(rng, r);
            polynomial c = random_polynomial(rng, r, 3, 2);
            auto pt = random_point(rng, r);
            CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
            CHECK((a - b).eval(pt) == a.eval(pt) - b.eval(pt));
            CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
            CHECK(((a + b) * c).eval(pt) == (a * c + b * c).eval(pt));
            CHECK((a.pow(3)).eval(pt) == a.eval(pt) * a.eval(pt) * a.eval(pt));
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("terms stay sorted and combined under arithmetic") {
    ring_spec r = qq(3, 0);
    monomial_order grev = monomial_order::grevlex(r);
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        polynomial a = random_polynomial(rng, r), b = random_polynomial(rng, r);
        for (const polynomial* p : {&a, &b}) {
            const auto& ts = p->terms();
            for (std::size_t i = 0; i + 1 < ts.size(); ++i)
                CHECK(grev.compare(ts[i].m, ts[i + 1].m) > 0);
            for (const auto& t : ts) CHECK(!t.c.is_zero());
        }
        CHECK(pp((a * b).str(), r) == a * b);
    }
}

TEST_CASE("bidegree classification") {
    ring_spec r = qq(2, 2);
    CHECK(pp("x1*T1 + x2*T2", r).bidegree_info().is(1, 1));
    CHECK(pp("x1^2*T1*T2", r).bidegree_info().is(2, 2));
    CHECK(pp("T1^2 - T2^2", r).bidegree_info().is(0, 2));
    CHECK(pp("0", r).bidegree_info().kind == bidegree_result::kind_t::zero_polynomial);
    CHECK(pp("x1 + T1", r).bidegree_info().kind == bidegree_result::kind_t::mixed);
    CHECK(pp("x1*T1 + x2", r).bidegree_info().kind == bidegree_result::kind_t::mixed);
}

TEST_CASE("substitution and coefficient extraction") {
    ring_spec r = qq(3, 1);
    polynomial p = pp("x1*T1 + x2*T1 + x3^2", r);
    CHECK(p.subs_zero({0, 1}) == pp("x3^2", r));
    CHECK(p.subs_zero({2}) == pp("x1*T1 + x2*T1", r));
    CHECK(p.subs_zero({0, 1, 2}).is_zero());
    CHECK(p.coefficient_of(pp("x1*T1", r).leading_term().m).str() == "1");
    CHECK(p.coefficient_of(pp("x2^2", r).leading_term().m).is_zero());
}

TEST_CASE("exact division is sound and complete on products") {
    ring_spec r = qq(2, 1);
    std::mt19937_64 rng(17);
    int nontrivial = 0;
    for (int it = 0; it < 300; ++it) {
        polynomial a = random_polynomial(rng, r, 4, 2), b = random_polynomial(rng, r, 4, 2);
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
        if (!a.is_zero()) ++nontrivial;
        auto q2 = exact_divide(a * b + polynomial::from_long(r, 1), b);
        if (!b.is_constant()) CHECK(!q2.has_value());
    }
    CHECK(nontrivial > 100);
    CHECK(!exact_divide(pp("x1^2 + x2", r), pp("x1 + x2", r)).has_value());
}

TEST_CASE("lift to an aux extension and back") {
    ring_spec r = qq(2, 2);
    ring_spec rz = r.with_aux(1);
    polynomial p = pp("x1*T2 - 3*x2^2", r);
    polynomial up = p.lift_to(rz);
    CHECK(up.ring() == rz);
    CHECK(up.lift_to(r) == p);
    polynomial z = polynomial::variable(rz, rz.var_count() - 1);
    CHECK_THROWS_AS((up * z).lift_to(r), error);  // nonzero aux exponent cannot drop
}
