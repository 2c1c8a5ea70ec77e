#include "rescoh/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

using boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(std::uint64_t p) {
    if (!is_prime(p)) throw NotAPrime(std::to_string(p) + " is not prime");
    if (p > kMax) throw TooLarge("modulus " + std::to_string(p) + " exceeds " + std::to_string(kMax));
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t Prime::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t Prime::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse("0 has no inverse mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
    if (!(p_ == o.p_)) throw DimensionMismatch("scalars over different primes");
    return FpScalar(p_.add(v_, o.v_), p_);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
    if (!(p_ == o.p_)) throw DimensionMismatch("scalars over different primes");
    return FpScalar(p_.sub(v_, o.v_), p_);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
    if (!(p_ == o.p_)) throw DimensionMismatch("scalars over different primes");
    return FpScalar(p_.mul(v_, o.v_), p_);
}

std::ostream& operator<<(std::ostream& os, const FpScalar& s) {
    return os << s.v_ << " (mod " << s.p_.value() << ")";
}

FpScalar fp_inv(const FpScalar& a) { return FpScalar(a.modulus().inv(a.value()), a.modulus()); }

namespace {

cpp_int binom_exact(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    cpp_int r = 1;
    for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
}

std::uint32_t to_residue(const cpp_int& x, Prime p) {
    cpp_int r = x % p.value();
    if (r < 0) r += p.value();
    return r.convert_to<std::uint32_t>();
}

}  // namespace

FpScalar binom_mod(std::uint64_t a, std::uint64_t b, Prime p) {
    return FpScalar(to_residue(binom_exact(a, b), p), p);
}

Report verify_identities(Prime prime, std::uint32_t bound) {
    const std::uint32_t p = prime.value();
    if (p > bound)
        throw UnsupportedPrime("identity check bound is " + std::to_string(bound));
    Report report;
    auto bm = [&](std::int64_t a, std::int64_t b) -> std::uint32_t {
        if (a < 0 || b < 0) return 0;
        return binom_mod(a, b, prime).value();
    };

    {
        std::string bad;
        for (std::uint32_t s = 0; s < p && bad.empty(); ++s)
            for (std::uint32_t t = 0; t < p && bad.empty(); ++t) {
                std::uint32_t lhs = bm(p - 1 - s, t);
                std::uint32_t rhs = prime.mul(prime.sign(s + t), bm(p - 1 - t, s));
                if (lhs != rhs) bad = "s=" + std::to_string(s) + " t=" + std::to_string(t);
            }
        bad.empty() ? report.pass("reflection") : report.fail("reflection", bad);
    }

    {
        std::string bad;
        for (std::uint32_t a = 1; a <= 2 * p && bad.empty(); ++a)
            for (std::uint32_t b = 0; b < a && bad.empty(); ++b)
                for (std::uint32_t c = 1; c <= a - b && bad.empty(); ++c) {
                    std::uint32_t lhs = 0;
                    for (std::uint32_t i = b; i <= a - c; ++i)
                        lhs = prime.add(lhs, prime.mul(prime.sign(i), prime.mul(bm(a, i + c), bm(i, b))));
                    std::uint32_t rhs = prime.mul(prime.sign(b), bm(a - b - 1, c - 1));
                    if (lhs != rhs)
                        bad = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
                }
        bad.empty() ? report.pass("alternating_sum") : report.fail("alternating_sum", bad);
    }

    {
        std::string bad;
        for (std::uint32_t n = 2; n <= p && bad.empty(); ++n) {
            std::uint32_t sum = 0;
            for (std::uint32_t k = 0; k < n; ++k) sum = prime.add(sum, bm(p - n + k, k));
            if (sum != 0) bad = "n=" + std::to_string(n);
        }
        bad.empty() ? report.pass("diagonal_sum") : report.fail("diagonal_sum", bad);
    }

    {
        // Checked over the integers, not just mod p.
        std::string bad;
        for (std::uint32_t n = 1; n <= p && bad.empty(); ++n)
            for (std::uint32_t k = 0; k <= p && bad.empty(); ++k) {
                cpp_int lhs = 0;
                for (std::uint32_t t = 0; 2 * t <= k; ++t)
                    lhs += binom_exact(n, k - 2 * t) * binom_exact(n + t - 1, t);
                if (lhs != binom_exact(n + k - 1, k))
                    bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        bad.empty() ? report.pass("dimension_count") : report.fail("dimension_count", bad);
    }
    return report;
}

}  // namespace rescoh
