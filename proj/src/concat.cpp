#include "repcat/concat.hpp"

#include "repcat/errors.hpp"

namespace repcat {

namespace {

void check_base(u64 b) {
    if (b < 2)
        throw DomainError("base must be >= 2");
}

void check_positive(const BigInt& n) {
    if (n < 1)
        throw DomainError("expected a positive integer");
}

// (sum_{j<k} x^j, x^k) mod m by binary splitting on k.
std::pair<u64, u64> geometric_sum(u64 x, u64 k, u64 m) {
    if (k == 0)
        return {0, 1 % m};
    if (k % 2 == 1) {
        auto [s, pw] = geometric_sum(x, k - 1, m);
        // S(k) = 1 + x S(k-1)
        return {add_mod(1 % m, mul_mod(x, s, m), m), mul_mod(pw, x, m)};
    }
    auto [s, pw] = geometric_sum(x, k / 2, m);
    // S(2h) = S(h) (1 + x^h)
    return {mul_mod(s, add_mod(1 % m, pw, m), m), mul_mod(pw, pw, m)};
}

} // namespace

unsigned digit_length(const BigInt& n, u64 b) {
    check_positive(n);
    check_base(b);
    unsigned len = 0;
    for (BigInt x = n; x > 0; x /= b)
        ++len;
    return len;
}

BigInt repeated_concat(u64 n, u64 k, u64 b) {
    check_positive(n);
    check_base(b);
    if (k < 1)
        throw DomainError("repetition count must be >= 1");
    const BigInt shift = pow(BigInt(b), digit_length(n, b));
    BigInt r = 0;
    for (u64 j = 0; j < k; ++j)
        r = r * shift + n;
    return r;
}

u64 repeated_concat_mod(u64 n, u64 k, u64 b, u64 m) {
    check_positive(n);
    check_base(b);
    if (k < 1)
        throw DomainError("repetition count must be >= 1");
    if (m == 0)
        throw DomainError("modulus must be positive");
    const u64 shift = pow_mod(b, digit_length(n, b), m);
    return mul_mod(n % m, geometric_sum(shift, k, m).first, m);
}

BigInt zero_padded_concat(u64 n, u64 k, u64 b) {
    check_positive(n);
    check_base(b);
    const BigInt shift = pow(BigInt(b), static_cast<unsigned>(k + digit_length(n, b)));
    return n * shift + n;
}

BigInt digit_reverse(const BigInt& n, u64 b) {
    check_positive(n);
    check_base(b);
    BigInt out = 0;
    for (BigInt x = n; x > 0; x /= b)
        out = out * b + x % b;
    return out;
}

} // namespace repcat
