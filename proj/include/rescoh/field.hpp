#pragma once

#include <cstdint>
#include <iosfwd>

#include "rescoh/report.hpp"

namespace rescoh {

/// A prime modulus. Also the arithmetic context for raw residues in [0, p):
/// the matrix and vector code stores plain uint32 values and calls these.
class Prime {
public:
    /// Largest modulus accepted; keeps products of two residues inside 32 bits.
    static constexpr std::uint32_t kMax = 65521;

    explicit Prime(std::uint64_t p);

    std::uint32_t value() const { return p_; }
    operator std::uint32_t() const { return p_; }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    /// Throws ZeroInverse for 0.
    std::uint32_t inv(std::uint32_t a) const;
    /// (-1)^k as a residue.
    std::uint32_t sign(std::uint64_t k) const { return (k & 1) ? p_ - 1 : 1 % p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

class FpScalar {
public:
    FpScalar(std::int64_t value, Prime p) : p_(p), v_(p.reduce(value)) {}

    std::uint32_t value() const { return v_; }
    Prime modulus() const { return p_; }

    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar operator-() const { return FpScalar(p_.neg(v_), p_); }
    FpScalar pow(std::uint64_t e) const { return FpScalar(p_.pow(v_, e), p_); }

    friend bool operator==(const FpScalar& a, const FpScalar& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend std::ostream& operator<<(std::ostream& os, const FpScalar& s);

private:
    Prime p_;
    std::uint32_t v_;
};

FpScalar fp_inv(const FpScalar& a);

/// C(a, b) mod p, zero when b > a.
FpScalar binom_mod(std::uint64_t a, std::uint64_t b, Prime p);

/// Default upper bound on p for verify_identities.
constexpr std::uint32_t kIdentityBound = 13;

/// Exhaustive check of the four binomial identity families for one prime.
/// Check names: "reflection", "alternating_sum", "diagonal_sum", "dimension_count".
Report verify_identities(Prime p, std::uint32_t bound = kIdentityBound);

}  // namespace rescoh
