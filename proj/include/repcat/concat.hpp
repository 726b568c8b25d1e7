#pragma once

// Base-b digit manipulation on positive integers.

#include "repcat/modmath.hpp"

namespace repcat {

/// L with b^(L-1) <= n < b^L.
unsigned digit_length(const BigInt& n, u64 b);

/// n(k)_b: k copies of n's base-b digits, exact.
BigInt repeated_concat(u64 n, u64 k, u64 b);

/// n(k)_b mod m in O(L + log k) multiplications, without materializing n(k)_b.
u64 repeated_concat_mod(u64 n, u64 k, u64 b, u64 m);

/// n[k]_b: the digits of n, then k zeros, then n again.
BigInt zero_padded_concat(u64 n, u64 k, u64 b);

/// Digits of n reversed; trailing zeros of n disappear.
BigInt digit_reverse(const BigInt& n, u64 b);

} // namespace repcat
