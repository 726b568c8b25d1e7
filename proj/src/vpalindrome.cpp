#include "repcat/vpalindrome.hpp"

#include "repcat/concat.hpp"
#include "repcat/errors.hpp"

namespace repcat {

namespace {

u64 to_u64(const BigInt& n) {
    if (n < 1)
        throw DomainError("expected a positive integer");
    if (n > std::numeric_limits<u64>::max())
        throw CapacityError(n.str() + " is beyond the factorization capacity");
    return n.convert_to<u64>();
}

} // namespace

VValue v_value(const BigInt& n) {
    const u64 x = to_u64(n);
    if (x == 1)
        return {0, {}};
    Factorization f = factorize(x);
    u64 total = 0;
    for (const auto& pp : f)
        total += pp.prime + (pp.exponent >= 2 ? pp.exponent : 0);
    return {total, std::move(f)};
}

u64 v(const BigInt& n) { return v_value(n).value; }

bool is_v_palindrome(const BigInt& n) {
    to_u64(n);
    if (n % 10 == 0)
        return false;
    const BigInt r = digit_reverse(n, 10);
    if (r == n)
        return false;
    return v(n) == v(r);
}

bool is_binary_digit_palindrome(const BigInt& rho) {
    if (rho < 1)
        return false;
    for (BigInt x = rho; x > 0; x /= 10) {
        if (x % 10 > 1)
            return false;
    }
    return digit_reverse(rho, 10) == rho;
}

BigInt eighteen_times_palindrome(const BigInt& rho) {
    if (!is_binary_digit_palindrome(rho))
        throw DomainError(rho.str() + " is not a decimal palindrome of 0s and 1s");
    return 18 * rho;
}

std::vector<std::pair<u64, bool>> concat_family_check(u64 n, u64 kmax) {
    if (n < 1 || kmax < 1)
        throw DomainError("concat_family_check needs n >= 1 and kmax >= 1");
    std::vector<std::pair<u64, bool>> out;
    out.reserve(kmax);
    for (u64 k = 1; k <= kmax; ++k)
        out.emplace_back(k, is_v_palindrome(repeated_concat(n, k, 10)));
    return out;
}

} // namespace repcat
