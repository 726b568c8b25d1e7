#include "repcat/modmath.hpp"

#include "repcat/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

namespace repcat {

u64 PrimePower::value() const { return checked_pow(prime, exponent, ~u64{0}); }

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (f.exponent == 0 || !is_prime(f.prime))
            throw DomainError("factorization entry is not a prime power");
        if (i > 0 && factors_[i - 1].prime >= f.prime)
            throw DomainError("factorization primes must be strictly increasing");
    }
}

u64 Factorization::product() const {
    u128 acc = 1;
    for (const auto& f : factors_) {
        acc *= f.value();
        if (acc > ~u64{0})
            throw CapacityError("factorization product exceeds 64 bits");
    }
    return static_cast<u64>(acc);
}

u64 TwoAdicDecomposition::recompose() const {
    const u64 m = checked_pow(2, alpha, ~u64{0});
    const u64 five = pow_mod(5, nu, m);
    return mu == 0 ? five : sub_mod(0, five, m);
}

u64 normalize(i64 x, u64 m) {
    if (m == 0)
        throw DomainError("modulus must be positive");
    if (x >= 0)
        return static_cast<u64>(x) % m;
    // |x| as unsigned without overflowing on INT64_MIN
    const u64 r = (u64{0} - static_cast<u64>(x)) % m;
    return r == 0 ? 0 : m - r;
}

u64 normalize(const BigInt& x, u64 m) {
    if (m == 0)
        throw DomainError("modulus must be positive");
    BigInt r = x % m;
    if (r < 0)
        r += m;
    return r.convert_to<u64>();
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    if (((a | b) >> 32) == 0)
        return (a * b) % m;
    return static_cast<u64>((u128{a} * b) % m);
}

u64 add_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128{a} + b) % m); }

u64 sub_mod(u64 a, u64 b, u64 m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : m - (b - a);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1)
        return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 checked_pow(u64 p, unsigned e, u64 limit) {
    u128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        acc *= p;
        if (acc > limit)
            throw CapacityError(std::to_string(p) + "^" + std::to_string(e) + " exceeds the modulus capacity");
    }
    return static_cast<u64>(acc);
}

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // {2, 3, 5, 7} is exact below 3215031751; the full set below 3.3e24.
    const std::initializer_list<u64> small_witnesses = {2, 3, 5, 7};
    const std::initializer_list<u64> all_witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 a : n < 3215031751ULL ? small_witnesses : all_witnesses) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

unsigned valuation(i64 c, u64 p) {
    if (c == 0)
        throw DomainError("valuation of zero is undefined");
    if (!is_prime(p))
        throw DomainError("valuation base " + std::to_string(p) + " is not prime");
    u64 x = c > 0 ? static_cast<u64>(c) : u64{0} - static_cast<u64>(c);
    unsigned gamma = 0;
    while (x % p == 0) {
        x /= p;
        ++gamma;
    }
    return gamma;
}

unsigned valuation(const BigInt& c, u64 p) {
    if (c == 0)
        throw DomainError("valuation of zero is undefined");
    if (!is_prime(p))
        throw DomainError("valuation base " + std::to_string(p) + " is not prime");
    BigInt x = abs(c);
    unsigned gamma = 0;
    while (x % p == 0) {
        x /= p;
        ++gamma;
    }
    return gamma;
}

u64 mod_inverse(i64 x, u64 m) {
    if (m == 0)
        throw DomainError("modulus must be positive");
    if (m == 1)
        return 0;
    // Extended Euclid on (m, x mod m) with signed 128-bit coefficients.
    __int128 old_r = normalize(x, m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1)
        throw NotInvertibleError(std::to_string(x) + " is not invertible modulo " + std::to_string(m));
    __int128 y = old_s % static_cast<__int128>(m);
    if (y < 0)
        y += m;
    return static_cast<u64>(y);
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;
constexpr u64 kRhoIterationBudget = u64{1} << 26;

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n,
// or 0 if the budget runs out.
u64 rho_factor(u64 n, std::mt19937_64& rng) {
    if (n % 2 == 0)
        return 2;
    u64 spent = 0;
    while (spent < kRhoIterationBudget) {
        const u64 c = rng() % (n - 1) + 1;
        u64 y = rng() % n, x = y, ys = y, q = 1, g = 1;
        const auto step = [&](u64 v) { return add_mod(mul_mod(v, v, n), c, n); };
        constexpr u64 batch = 128;
        for (u64 len = 1; g == 1 && spent < kRhoIterationBudget; len <<= 1) {
            x = y;
            for (u64 i = 0; i < len; ++i)
                y = step(y);
            for (u64 k = 0; k < len && g == 1; k += batch) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, len - k); ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                spent += batch;
            }
        }
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n && g != 1)
            return g;
    }
    return 0;
}

void split(u64 n, std::vector<u64>& primes, std::mt19937_64& rng) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const u64 f = rho_factor(n, rng);
    if (f == 0)
        throw CapacityError("factorization budget exhausted for " + std::to_string(n));
    split(f, primes, rng);
    split(n / f, primes, rng);
}

} // namespace

Factorization factorize(u64 m) {
    if (m < 2)
        throw DomainError("factorize requires m >= 2");
    std::vector<PrimePower> out;
    u64 rest = m;
    for (u64 q = 2; q <= kTrialLimit && q * q <= rest; q += (q == 2 ? 1 : 2)) {
        if (rest % q != 0)
            continue;
        unsigned e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        out.push_back({q, e});
    }
    if (rest > 1) {
        std::vector<u64> primes;
        std::mt19937_64 rng(0x5eedf00dULL);
        split(rest, primes, rng);
        std::sort(primes.begin(), primes.end());
        for (u64 q : primes) {
            if (!out.empty() && out.back().prime == q)
                ++out.back().exponent;
            else
                out.push_back({q, 1});
        }
    }
    return Factorization(std::move(out));
}

namespace {

u64 unit_group_order(u64 p, unsigned alpha) { return checked_pow(p, alpha - 1) * (p - 1); }

void check_prime_power(u64 p, unsigned alpha) {
    if (!is_prime(p))
        throw DomainError(std::to_string(p) + " is not prime");
    if (alpha == 0)
        throw DomainError("exponent must be >= 1");
    checked_pow(p, alpha);
}

bool has_primitive_root(u64 p, unsigned alpha) { return p != 2 || alpha <= 2; }

bool generates(u64 g, u64 modulus, u64 order, const Factorization& order_factors) {
    if (gcd(g, modulus) != 1)
        return false;
    for (const auto& f : order_factors) {
        if (pow_mod(g, order / f.prime, modulus) == 1)
            return false;
    }
    return true;
}

Factorization factorize_order(u64 order) { return order < 2 ? Factorization{} : factorize(order); }

} // namespace

bool is_primitive_root(u64 g, u64 p, unsigned alpha) {
    check_prime_power(p, alpha);
    if (!has_primitive_root(p, alpha))
        return false;
    const u64 modulus = checked_pow(p, alpha);
    const u64 order = unit_group_order(p, alpha);
    return generates(g % modulus, modulus, order, factorize_order(order));
}

u64 primitive_root(u64 p, unsigned alpha) {
    check_prime_power(p, alpha);
    if (!has_primitive_root(p, alpha))
        throw NoPrimitiveRootError("no primitive root modulo 2^" + std::to_string(alpha));
    const u64 modulus = checked_pow(p, alpha);
    if (modulus == 2)
        return 1;
    if (modulus == 4)
        return 3;
    // Smallest root mod p, then lift. A root g mod p stays a root mod p^alpha
    // unless g^(p-1) == 1 (mod p^2); the smallest root mod p^alpha need not be
    // the lifted one, so scan upward testing the full group order.
    const u64 order = unit_group_order(p, alpha);
    const Factorization order_factors = factorize_order(order);
    for (u64 g = 2; g < modulus; ++g) {
        if (generates(g, modulus, order, order_factors))
            return g;
    }
    throw DomainError("no primitive root found");  // unreachable for valid input
}

namespace {

constexpr u64 kExhaustiveOrder = u64{1} << 10;
constexpr u64 kLinearScanOrder = 256;
constexpr u64 kMaxBsgsPrime = u64{1} << 44;

// Smallest e in [0, order) with base^e == target, base of exact order `order`.
u64 baby_step_giant_step(u64 base, u64 target, u64 order, u64 modulus) {
    if (order <= kLinearScanOrder) {
        u64 cur = 1 % modulus;
        for (u64 e = 0; e < order; ++e) {
            if (cur == target)
                return e;
            cur = mul_mod(cur, base, modulus);
        }
        throw DomainError("target is not in the subgroup");
    }
    if (order > kMaxBsgsPrime)
        throw CapacityError("discrete log subgroup of order " + std::to_string(order) + " is too large");
    u64 step = 1;
    while (u128{step} * step < order)
        ++step;
    std::vector<std::pair<u64, u64>> table;  // (base^j, j)
    table.reserve(step);
    u64 cur = 1;
    for (u64 j = 0; j < step; ++j) {
        table.emplace_back(cur, j);
        cur = mul_mod(cur, base, modulus);
    }
    std::sort(table.begin(), table.end());
    const u64 giant = mod_inverse(static_cast<i64>(pow_mod(base, step, modulus)), modulus);
    u64 gamma = target;
    for (u64 i = 0; i <= step; ++i) {
        const auto it = std::lower_bound(table.begin(), table.end(), std::pair{gamma, u64{0}});
        if (it != table.end() && it->first == gamma)
            return (i * step + it->second) % order;
        gamma = mul_mod(gamma, giant, modulus);
    }
    throw DomainError("target is not in the subgroup");
}

// Pohlig-Hellman over the factorization of the group order.
u64 pohlig_hellman(u64 g, u64 x, u64 modulus, u64 order, const Factorization& order_factors) {
    u64 acc_residue = 0, acc_modulus = 1;
    for (const auto& f : order_factors) {
        const u64 q = f.prime;
        const u64 qe = f.value();
        const u64 cofactor = order / qe;
        const u64 gi = pow_mod(g, cofactor, modulus);   // order q^e
        const u64 xi = pow_mod(x, cofactor, modulus);
        const u64 gamma = pow_mod(gi, qe / q, modulus); // order q
        u64 digits = 0, q_pow = 1;
        for (unsigned k = 0; k < f.exponent; ++k) {
            const u64 shift = mod_inverse(static_cast<i64>(pow_mod(gi, digits, modulus)), modulus);
            const u64 h = pow_mod(mul_mod(xi, shift, modulus), qe / q_pow / q, modulus);
            const u64 dk = baby_step_giant_step(gamma, h, q, modulus);
            digits += dk * q_pow;
            if (k + 1 < f.exponent)
                q_pow *= q;
        }
        // Combine digits mod q^e into the running CRT solution.
        const u64 inv = mod_inverse(static_cast<i64>(acc_modulus % qe), qe);
        const u64 t = mul_mod(sub_mod(digits, acc_residue % qe, qe), inv, qe);
        acc_residue += acc_modulus * t;
        acc_modulus *= qe;
    }
    return acc_residue % order;
}

} // namespace

u64 discrete_log(u64 g, i64 x, u64 p, unsigned alpha) {
    check_prime_power(p, alpha);
    const u64 modulus = checked_pow(p, alpha);
    const u64 target = normalize(x, modulus);
    if (gcd(target, p) != 1)
        throw DomainError("discrete_log target is not a unit");
    const u64 order = unit_group_order(p, alpha);
    const Factorization order_factors = factorize_order(order);
    g %= modulus;
    if (!has_primitive_root(p, alpha) || !generates(g, modulus, order, order_factors))
        throw DomainError(std::to_string(g) + " does not generate the unit group");
    if (order <= kExhaustiveOrder) {
        u64 cur = 1 % modulus;
        for (u64 e = 0; e < order; ++e) {
            if (cur == target % modulus)
                return e;
            cur = mul_mod(cur, g, modulus);
        }
        throw DomainError("target not reached by generator");  // unreachable for a unit
    }
    return pohlig_hellman(g, target, modulus, order, order_factors);
}

TwoAdicDecomposition two_adic_decompose(i64 x, unsigned alpha) {
    if (alpha < 3 || alpha > 62)
        throw DomainError("two-adic decomposition needs 3 <= alpha <= 62");
    const u64 modulus = u64{1} << alpha;
    const u64 r = normalize(x, modulus);
    if ((r & 1) == 0)
        throw DomainError("two-adic decomposition needs an odd residue");
    const unsigned mu = (r % 4 == 1) ? 0 : 1;
    const u64 y = mu == 0 ? r : modulus - r;  // == 1 (mod 4)
    // 5^(2^i) == 1 + 2^(i+2) (mod 2^(i+3)), so each bit of nu is fixed by one
    // further power of two.
    const u64 inv5 = mod_inverse(5, modulus);
    u64 nu = 0;
    u64 t = y;  // y * 5^(-nu)
    for (unsigned i = 0; i + 2 < alpha; ++i) {
        const u64 mask = (u64{1} << (i + 3)) - 1;
        if ((t & mask) != 1) {
            nu |= u64{1} << i;
            t = mul_mod(t, pow_mod(inv5, u64{1} << i, modulus), modulus);
        }
    }
    return {mu, nu, alpha};
}

} // namespace repcat
