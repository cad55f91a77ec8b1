#ifndef REESKIT_FIELD_HPP
#define REESKIT_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "reeskit/errors.hpp"

namespace reeskit {

// Which coefficient field a ring works over.  Exact rationals by default;
// a prime field for fast modular runs.
enum class field_kind { rationals, prime };

struct field_spec {
    field_kind kind = field_kind::rationals;
    std::uint32_t modulus = 0;  // meaningful only for field_kind::prime

    static field_spec rationals() { return {field_kind::rationals, 0}; }
    static field_spec prime(std::uint32_t p);

    bool operator==(const field_spec&) const = default;
    std::string str() const;
};

// Default modulus for prime-field runs.
inline constexpr std::uint32_t default_prime = 32003;

// One coefficient.  Self-describing: a rational or a residue that carries its
// modulus, so mixed-field bugs surface as exceptions instead of silent junk.
class coeff {
public:
    coeff() : v_(mpq_class(0)) {}  // rational zero

    static coeff zero(const field_spec& f);
    static coeff one(const field_spec& f);
    static coeff from_long(long n, const field_spec& f);
    // numerator/denominator given as decimal digit strings (den == "1" for ints)
    static coeff from_decimal(const std::string& num, const std::string& den,
                              const field_spec& f);

    bool is_zero() const;
    bool is_one() const;
    // true when the canonical printed form starts with '-' (rationals only;
    // residues always print as their least nonnegative representative)
    bool negative() const;
    field_spec field() const;

    coeff operator-() const;
    coeff operator+(const coeff& o) const;
    coeff operator-(const coeff& o) const;
    coeff operator*(const coeff& o) const;
    coeff operator/(const coeff& o) const;  // throws on division by zero
    coeff inv() const;

    coeff& operator+=(const coeff& o) { return *this = *this + o; }
    coeff& operator-=(const coeff& o) { return *this = *this - o; }
    coeff& operator*=(const coeff& o) { return *this = *this * o; }

    bool operator==(const coeff& o) const;
    bool operator!=(const coeff& o) const { return !(*this == o); }

    // "3", "-3", "3/4"; residues print as their least nonnegative representative
    std::string str() const;

private:
    struct residue {
        std::uint64_t v;
        std::uint32_t p;
        bool operator==(const residue&) const = default;
    };
    std::variant<mpq_class, residue> v_;

    explicit coeff(mpq_class q) : v_(std::move(q)) {}
    coeff(std::uint64_t v, std::uint32_t p) : v_(residue{v, p}) {}

    static const residue& check_same(const residue& a, const residue& b);
};

// modular inverse of a (mod p), a != 0 mod p
std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p);

}  // namespace reeskit

#endif
