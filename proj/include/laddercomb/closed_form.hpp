#pragma once

// Closed-form alternating binomial sums for corner-to-corner path counts on
// diagonal two-sided ladders, the one-sided specialization, and the
// power-of-two / Fibonacci identities they collapse to.

#include "laddercomb/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace laddercomb {

struct DiagonalLadderParams {
    int m = 0;  // rows
    int n = 0;  // cols
    int k = 0;  // upper corner cut depth
    int l = 0;  // lower corner cut depth
};

inline void validate(const DiagonalLadderParams& p) {
    if (p.m < 2 || p.n < 2) {
        throw std::invalid_argument("DiagonalLadderParams: grid must be at least 2x2");
    }
    const int cut_max = std::min(p.m - 2, p.n - 2);
    if (p.k < 0 || p.k > cut_max || p.l < 0 || p.l > cut_max) {
        throw std::invalid_argument("DiagonalLadderParams: cuts must satisfy 0 <= k,l <= min(m-2, n-2)");
    }
}

// Corner-to-corner path count on the diagonal two-sided ladder (m, n, k, l):
// sum over (i, j) in T of (-1)^(i+j) C(m+n-2, m-1 + i(k-m) + j(l-n)).
inline ApInt two_sided_count(const DiagonalLadderParams& p) {
    validate(p);
    return signed_sum_over_T(p.m + p.n - 2, p.m - 1, p.k - p.m, p.l - p.n);
}

inline ApInt two_sided_count(int m, int n, int k, int l) {
    return two_sided_count(DiagonalLadderParams{m, n, k, l});
}

// One-sided ladder (l = 0): the sum collapses to two binomials.
inline ApInt one_sided_count(int m, int n, int k) {
    validate(DiagonalLadderParams{m, n, k, 0});
    return binomial(m + n - 2, m - 1) - binomial(m + n - 2, k - 1);
}

// sum over T of (-1)^(i+j) C(2m, m - 2i - 2j); equals 2^m.
inline ApInt power_of_two_lhs(int m) {
    if (m < 1) throw std::invalid_argument("power_of_two_lhs: m must be positive");
    return signed_sum_over_T(2 * m, m, -2, -2);
}

// sum over T of (-1)^(i+j) C(2m, m - 3i - 2j); equals F_{2m+1}.
inline ApInt fibonacci_lhs_odd(int m) {
    if (m < 1) throw std::invalid_argument("fibonacci_lhs_odd: m must be positive");
    return signed_sum_over_T(2 * m, m, -3, -2);
}

// sum over T of (-1)^(i+j) C(2m-1, m - 3i - 2j); equals F_{2m}.
inline ApInt fibonacci_lhs_even(int m) {
    if (m < 1) throw std::invalid_argument("fibonacci_lhs_even: m must be positive");
    return signed_sum_over_T(2 * m - 1, m, -3, -2);
}

// F_1 = F_2 = 1, F_i = F_{i-1} + F_{i-2}.
inline ApInt fibonacci_reference(int i) {
    if (i < 1) throw std::invalid_argument("fibonacci_reference: index must be positive");
    ApInt a = 1, b = 1;
    for (int t = 3; t <= i; ++t) {
        ApInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return i == 1 ? a : b;
}

}  // namespace laddercomb
