#pragma once

/**
 * @file vpalindrome.hpp
 * @brief The additive function v and decimal v-palindromes.
 *
 * v is additive over coprime factors with v(p) = p and v(p^e) = p + e for
 * e >= 2. A positive integer n is a v-palindrome when 10 does not divide n,
 * n differs from its decimal reversal r(n), and v(n) == v(r(n)).
 *
 * Everything here is decimal. Inputs must fit in 64 bits so they can be
 * factored; larger values raise CapacityError rather than guessing.
 */

#include "repcat/modmath.hpp"

#include <utility>
#include <vector>

namespace repcat {

struct VValue {
    u64 value;
    Factorization factorization;
};

VValue v_value(const BigInt& n);
u64 v(const BigInt& n);

bool is_v_palindrome(const BigInt& n);

/// True when rho's decimal digits are all 0 or 1 and read the same reversed.
bool is_binary_digit_palindrome(const BigInt& rho);

/// 18 * rho for a 0/1 decimal palindrome rho; always a v-palindrome.
BigInt eighteen_times_palindrome(const BigInt& rho);

/// For k = 1..kmax, whether the decimal k-fold concatenation of n is a
/// v-palindrome.
std::vector<std::pair<u64, bool>> concat_family_check(u64 n, u64 kmax);

} // namespace repcat
