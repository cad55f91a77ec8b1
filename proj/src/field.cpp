#include "reeskit/field.hpp"

namespace reeskit {

field_spec field_spec::prime(std::uint32_t p) {
    if (p < 2) throw error("prime field modulus must be >= 2, got " + std::to_string(p));
    // trial division is plenty for the 32-bit moduli we accept
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw error("modulus " + std::to_string(p) + " is not prime");
    return {field_kind::prime, p};
}

std::string field_spec::str() const {
    return kind == field_kind::rationals ? "q" : "zp:" + std::to_string(modulus);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p, nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw error("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

const coeff::residue& coeff::check_same(const residue& a, const residue& b) {
    if (a.p != b.p)
        throw ring_mismatch_error("coefficients from different prime fields: p=" +
                                  std::to_string(a.p) + " vs p=" + std::to_string(b.p));
    return b;
}

coeff coeff::zero(const field_spec& f) {
    if (f.kind == field_kind::rationals) return coeff(mpq_class(0));
    return coeff(0, f.modulus);
}

coeff coeff::one(const field_spec& f) {
    if (f.kind == field_kind::rationals) return coeff(mpq_class(1));
    return coeff(1 % f.modulus, f.modulus);
}

coeff coeff::from_long(long n, const field_spec& f) {
    if (f.kind == field_kind::rationals) return coeff(mpq_class(n));
    std::int64_t r = n % static_cast<std::int64_t>(f.modulus);
    if (r < 0) r += f.modulus;
    return coeff(static_cast<std::uint64_t>(r), f.modulus);
}

coeff coeff::from_decimal(const std::string& num, const std::string& den, const field_spec& f) {
    if (f.kind == field_kind::rationals) {
        mpq_class q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return coeff(std::move(q));
    }
    const std::uint32_t p = f.modulus;
    auto reduce = [p](const std::string& digits) {
        std::uint64_t acc = 0;
        std::size_t i = 0;
        bool neg = false;
        if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) neg = digits[i++] == '-';
        for (; i < digits.size(); ++i)
            acc = (acc * 10 + static_cast<std::uint64_t>(digits[i] - '0')) % p;
        if (neg && acc) acc = p - acc;
        return acc;
    };
    std::uint64_t n = reduce(num), d = reduce(den);
    if (d == 0)
        throw error("denominator " + den + " is divisible by the field modulus " +
                    std::to_string(p));
    return coeff(n * mod_inverse(d, p) % p, p);
}

bool coeff::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<residue>(v_).v == 0;
}

bool coeff::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    const auto& r = std::get<residue>(v_);
    return r.v == 1 % r.p;
}

bool coeff::negative() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) < 0;
    return false;
}

field_spec coeff::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return field_spec::rationals();
    return {field_kind::prime, std::get<residue>(v_).p};
}

coeff coeff::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return coeff(mpq_class(-*q));
    const auto& r = std::get<residue>(v_);
    return coeff(r.v == 0 ? 0 : r.p - r.v, r.p);
}

coeff coeff::operator+(const coeff& o) const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        if (!std::holds_alternative<mpq_class>(o.v_))
            throw ring_mismatch_error("rational + prime-field coefficient");
        return coeff(mpq_class(*q + std::get<mpq_class>(o.v_)));
    }
    const auto& a = std::get<residue>(v_);
    if (!std::holds_alternative<residue>(o.v_))
        throw ring_mismatch_error("prime-field + rational coefficient");
    const auto& b = check_same(a, std::get<residue>(o.v_));
    std::uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return coeff(s, a.p);
}

coeff coeff::operator-(const coeff& o) const { return *this + (-o); }

coeff coeff::operator*(const coeff& o) const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        if (!std::holds_alternative<mpq_class>(o.v_))
            throw ring_mismatch_error("rational * prime-field coefficient");
        return coeff(mpq_class(*q * std::get<mpq_class>(o.v_)));
    }
    const auto& a = std::get<residue>(v_);
    if (!std::holds_alternative<residue>(o.v_))
        throw ring_mismatch_error("prime-field * rational coefficient");
    const auto& b = check_same(a, std::get<residue>(o.v_));
    return coeff(a.v * b.v % a.p, a.p);
}

coeff coeff::inv() const {
    if (is_zero()) throw error("division by zero coefficient");
    if (const auto* q = std::get_if<mpq_class>(&v_)) return coeff(mpq_class(1 / *q));
    const auto& r = std::get<residue>(v_);
    return coeff(mod_inverse(r.v, r.p), r.p);
}

coeff coeff::operator/(const coeff& o) const { return *this * o.inv(); }

bool coeff::operator==(const coeff& o) const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) {
        const auto* r = std::get_if<mpq_class>(&o.v_);
        return r && *q == *r;
    }
    const auto* b = std::get_if<residue>(&o.v_);
    return b && std::get<residue>(v_) == *b;
}

std::string coeff::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<residue>(v_).v);
}

}  // namespace reeskit
