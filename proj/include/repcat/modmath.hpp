#pragma once

/**
 * @file modmath.hpp
 * @brief Exact modular arithmetic on 64-bit residues.
 *
 * Moduli are unsigned 64-bit values no larger than kMaxModulus (2^62);
 * products go through unsigned __int128 so nothing overflows. Signed
 * inputs are normalized into [0, m) before use.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace repcat {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr u64 kMaxModulus = u64{1} << 62;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    u64 value() const;
    bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const { return factors_; }
    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    /// Product of p^e over all factors. Throws CapacityError past 2^64.
    u64 product() const;

    bool operator==(const Factorization&) const = default;

private:
    std::vector<PrimePower> factors_;
};

/// (-1)^mu * 5^nu mod 2^alpha.
struct TwoAdicDecomposition {
    unsigned mu;
    u64 nu;
    unsigned alpha;

    u64 recompose() const;
    bool operator==(const TwoAdicDecomposition&) const = default;
};

// Basic residue arithmetic. m >= 1 throughout.
u64 normalize(i64 x, u64 m);
u64 normalize(const BigInt& x, u64 m);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 add_mod(u64 a, u64 b, u64 m);
u64 sub_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);

/// Exact p^e, or CapacityError when it exceeds `limit`.
u64 checked_pow(u64 p, unsigned e, u64 limit = kMaxModulus);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// gamma with p^gamma | c and p^(gamma+1) not dividing c. Sign of c ignored.
unsigned valuation(i64 c, u64 p);
unsigned valuation(const BigInt& c, u64 p);

/// y in [0, m) with x*y == 1 (mod m); 0 when m == 1.
u64 mod_inverse(i64 x, u64 m);

Factorization factorize(u64 m);

/// Smallest primitive root modulo p^alpha.
u64 primitive_root(u64 p, unsigned alpha);

/// True when g generates the unit group modulo p^alpha.
bool is_primitive_root(u64 g, u64 p, unsigned alpha);

/// Index of x to the base g modulo p^alpha, in [0, p^(alpha-1)(p-1)).
u64 discrete_log(u64 g, i64 x, u64 p, unsigned alpha);

/// Unique (mu, nu) with x == (-1)^mu 5^nu (mod 2^alpha); x odd, 3 <= alpha <= 62.
TwoAdicDecomposition two_adic_decompose(i64 x, unsigned alpha);

} // namespace repcat
