#include "reeskit/polynomial.hpp"

#include <algorithm>

namespace reeskit {

void sort_terms(term_list& ts, const monomial_order& ord) {
    std::sort(ts.begin(), ts.end(),
              [&](const term& a, const term& b) { return ord.compare(a.m, b.m) > 0; });
}

term_list merge_terms(const term_list& a, const term_list& b, const monomial_order& ord) {
    term_list out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = ord.compare(a[i].m, b[j].m);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
        } else {
            coeff s = a[i].c + b[j].c;
            if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

term_list scale_terms(const term_list& a, const coeff& c, const monomial& m) {
    term_list out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const term& t : a) out.push_back({t.m * m, t.c * c});
    return out;
}

polynomial polynomial::from_terms(const ring_spec& ring, term_list ts) {
    polynomial p(ring);
    for (term& t : ts)
        if (t.m.nvars() != ring.var_count())
            throw ring_mismatch_error("monomial arity does not match ring");
    monomial_order ord = monomial_order::grevlex(ring);
    sort_terms(ts, ord);
    // combine runs of equal monomials, drop zeros
    term_list out;
    out.reserve(ts.size());
    for (term& t : ts) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    p.terms_ = std::move(out);
    return p;
}

polynomial polynomial::constant(const ring_spec& ring, const coeff& c) {
    polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({monomial(ring.var_count()), c});
    return p;
}

polynomial polynomial::from_long(const ring_spec& ring, long n) {
    return constant(ring, coeff::from_long(n, ring.field));
}

polynomial polynomial::variable(const ring_spec& ring, int v) {
    if (v < 0 || v >= ring.var_count()) throw error("variable index out of range");
    monomial m(ring.var_count());
    m.set_exp(v, 1);
    polynomial p(ring);
    p.terms_.push_back({std::move(m), coeff::one(ring.field)});
    return p;
}

const term& polynomial::leading_term() const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    return terms_.front();
}

int polynomial::total_degree() const {
    int d = -1;
    for (const term& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

polynomial polynomial::operator-() const {
    polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const term& t : terms_) p.terms_.push_back({t.m, -t.c});
    return p;
}

polynomial polynomial::operator+(const polynomial& o) const {
    if (terms_.empty()) return o;
    if (o.terms_.empty()) return *this;
    require_same_ring(ring_, o.ring_, "polynomial addition");
    polynomial p(ring_);
    p.terms_ = merge_terms(terms_, o.terms_, monomial_order::grevlex(ring_));
    return p;
}

polynomial polynomial::operator-(const polynomial& o) const { return *this + (-o); }

polynomial polynomial::operator*(const polynomial& o) const {
    if (terms_.empty()) return *this;
    if (o.terms_.empty()) return o;
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    monomial_order ord = monomial_order::grevlex(ring_);
    term_list acc;
    for (const term& t : terms_) acc = merge_terms(acc, scale_terms(o.terms_, t.c, t.m), ord);
    polynomial p(ring_);
    p.terms_ = std::move(acc);
    return p;
}

polynomial polynomial::operator*(const coeff& c) const {
    polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_ = scale_terms(terms_, c, monomial(ring_.var_count()));
    return p;
}

polynomial polynomial::pow(unsigned k) const {
    polynomial r = from_long(ring_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool polynomial::operator==(const polynomial& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

bidegree_result polynomial::bidegree_info() const {
    using kind_t = bidegree_result::kind_t;
    if (terms_.empty()) return {kind_t::zero_polynomial, {}};
    auto deg_of = [&](const monomial& m) {
        bidegree d;
        for (int v = 0; v < ring_.var_count(); ++v) {
            if (ring_.is_x(v)) d.x_deg += m.exp(v);
            else if (ring_.is_t(v)) d.t_deg += m.exp(v);
            else if (m.exp(v)) d.x_deg = -1;  // aux variables poison bihomogeneity
        }
        return d;
    };
    bidegree d0 = deg_of(terms_.front().m);
    if (d0.x_deg < 0) return {kind_t::mixed, {}};
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (deg_of(terms_[i].m) != d0) return {kind_t::mixed, {}};
    return {kind_t::bihomogeneous, d0};
}

coeff polynomial::coefficient_of(const monomial& m) const {
    for (const term& t : terms_)
        if (t.m == m) return t.c;
    return coeff::zero(ring_.field);
}

polynomial polynomial::subs_zero(const std::vector<int>& vars) const {
    term_list kept;
    for (const term& t : terms_) {
        bool drop = false;
        for (int v : vars)
            if (t.m.exp(v)) { drop = true; break; }
        if (!drop) kept.push_back(t);
    }
    polynomial p(ring_);
    p.terms_ = std::move(kept);  // subsequence of a sorted list stays sorted
    return p;
}

coeff polynomial::eval(const std::vector<coeff>& point) const {
    if (static_cast<int>(point.size()) != ring_.var_count())
        throw error("evaluation point arity mismatch");
    coeff acc = coeff::zero(ring_.field);
    for (const term& t : terms_) {
        coeff v = t.c;
        for (int i = 0; i < ring_.var_count(); ++i)
            for (int k = 0; k < t.m.exp(i); ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

polynomial polynomial::lift_to(const ring_spec& target) const {
    if (target.x_count != ring_.x_count || target.t_count != ring_.t_count ||
        target.field != ring_.field)
        throw ring_mismatch_error("lift_to: rings differ beyond aux block");
    const int from = ring_.var_count(), to = target.var_count();
    term_list ts;
    ts.reserve(terms_.size());
    for (const term& t : terms_) {
        std::vector<std::uint16_t> e(to, 0);
        for (int v = 0; v < from; ++v) {
            if (v >= to && t.m.exp(v))
                throw error("lift_to: nonzero exponent on a dropped variable");
            if (v < to) e[v] = t.m.exp(v);
        }
        ts.push_back({monomial(std::move(e)), t.c});
    }
    return from_terms(target, std::move(ts));
}

std::string polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const term& t = terms_[i];
        coeff c = t.c;
        if (i == 0) {
            if (c.negative()) { out += '-'; c = -c; }
        } else {
            out += c.negative() ? " - " : " + ";
            if (c.negative()) c = -c;
        }
        if (t.m.is_one()) {
            out += c.str();
        } else if (c.is_one()) {
            out += t.m.str(ring_);
        } else {
            out += c.str() + "*" + t.m.str(ring_);
        }
    }
    return out;
}

std::optional<polynomial> exact_divide(const polynomial& p, const polynomial& q) {
    if (q.is_zero()) throw error("exact division by the zero polynomial");
    require_same_ring(p.ring(), q.ring(), "exact division");
    const ring_spec ring = p.ring();
    const monomial_order ord = monomial_order::grevlex(ring);
    term_list rem = p.terms(), quot;
    const term& lq = q.leading_term();
    while (!rem.empty()) {
        const term& lr = rem.front();
        if (!lq.m.divides(lr.m)) return std::nullopt;
        term t{lr.m.divide(lq.m), lr.c / lq.c};
        quot.push_back(t);
        rem = merge_terms(rem, scale_terms(q.terms(), -t.c, t.m), ord);
    }
    return polynomial::from_terms(ring, std::move(quot));
}

}  // namespace reeskit
