#include "reeskit/monomial.hpp"

#include <algorithm>

namespace reeskit {

monomial monomial::operator*(const monomial& o) const {
    monomial r(*this);
    for (int v = 0; v < nvars(); ++v) r.e_[v] = static_cast<std::uint16_t>(e_[v] + o.e_[v]);
    return r;
}

bool monomial::divides(const monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
        if (e_[v] > o.e_[v]) return false;
    return true;
}

monomial monomial::divide(const monomial& o) const {
    monomial r(*this);
    for (int v = 0; v < nvars(); ++v) r.e_[v] = static_cast<std::uint16_t>(e_[v] - o.e_[v]);
    return r;
}

monomial monomial::lcm(const monomial& a, const monomial& b) {
    monomial r(a);
    for (int v = 0; v < a.nvars(); ++v) r.e_[v] = std::max(a.e_[v], b.e_[v]);
    return r;
}

monomial monomial::gcd(const monomial& a, const monomial& b) {
    monomial r(a);
    for (int v = 0; v < a.nvars(); ++v) r.e_[v] = std::min(a.e_[v], b.e_[v]);
    return r;
}

bool monomial::coprime(const monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
        if (e_[v] && o.e_[v]) return false;
    return true;
}

std::vector<int> monomial::support() const {
    std::vector<int> s;
    for (int v = 0; v < nvars(); ++v)
        if (e_[v]) s.push_back(v);
    return s;
}

std::string monomial::str(const ring_spec& ring) const {
    std::string out;
    for (int v = 0; v < nvars(); ++v) {
        if (!e_[v]) continue;
        if (!out.empty()) out += '*';
        out += ring.var_name(v);
        if (e_[v] > 1) out += '^' + std::to_string(e_[v]);
    }
    return out.empty() ? "1" : out;
}

std::vector<int> monomial_order::default_ranking(const ring_spec& ring) {
    std::vector<int> r;
    r.reserve(ring.var_count());
    for (int i = 0; i < ring.t_count; ++i) r.push_back(ring.x_count + i);
    for (int i = 0; i < ring.x_count; ++i) r.push_back(i);
    for (int i = 0; i < ring.aux_count; ++i) r.push_back(ring.x_count + ring.t_count + i);
    return r;
}

monomial_order monomial_order::grevlex(const ring_spec& ring) {
    monomial_order o;
    o.kind_ = kind_t::grevlex;
    o.ranking_ = default_ranking(ring);
    return o;
}

monomial_order monomial_order::grevlex_cheapest(const ring_spec& ring, int v) {
    monomial_order o;
    o.kind_ = kind_t::grevlex;
    for (int w : default_ranking(ring))
        if (w != v) o.ranking_.push_back(w);
    o.ranking_.push_back(v);
    return o;
}

monomial_order monomial_order::lex(const ring_spec& ring) {
    monomial_order o;
    o.kind_ = kind_t::lex;
    o.ranking_ = default_ranking(ring);
    return o;
}

monomial_order monomial_order::block_elim(const ring_spec& ring, const std::vector<int>& front) {
    monomial_order o;
    o.kind_ = kind_t::block;
    o.block_size_ = static_cast<int>(front.size());
    o.ranking_ = front;
    for (int v : default_ranking(ring))
        if (std::find(front.begin(), front.end(), v) == front.end()) o.ranking_.push_back(v);
    return o;
}

// grevlex comparison restricted to ranking_[lo..hi): degree first, then the
// reverse tie-break (larger exponent on the lowest-ranked differing variable
// loses)
int monomial_order::grevlex_span(const monomial& a, const monomial& b, int lo, int hi) const {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exp(ranking_[i]);
        db += b.exp(ranking_[i]);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        int d = static_cast<int>(a.exp(ranking_[i])) - static_cast<int>(b.exp(ranking_[i]));
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

int monomial_order::compare(const monomial& a, const monomial& b) const {
    const int n = static_cast<int>(ranking_.size());
    switch (kind_) {
        case kind_t::grevlex:
            return grevlex_span(a, b, 0, n);
        case kind_t::lex:
            for (int i = 0; i < n; ++i) {
                int d = static_cast<int>(a.exp(ranking_[i])) - static_cast<int>(b.exp(ranking_[i]));
                if (d) return d;
            }
            return 0;
        case kind_t::block: {
            if (int c = grevlex_span(a, b, 0, block_size_)) return c;
            return grevlex_span(a, b, block_size_, n);
        }
    }
    return 0;  // unreachable
}

std::strong_ordering monomial_order::operator<=>(const monomial_order& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    if (auto c = block_size_ <=> o.block_size_; c != 0) return c;
    return ranking_ <=> o.ranking_;
}

}  // namespace reeskit
