#pragma once

// Determinantal multiplicity formulas: the generic minor-ideal determinant,
// its maximal-minor (Giambelli) specialization, the two-sided and one-sided
// diagonal ladder determinants, and the ladder pfaffian determinants. Every
// formula here is a determinant of binomials or of alternating T-sums; the
// combinatorial meaning (a count of vertex-disjoint path families) is what
// the test suites check them against.

#include "laddercomb/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace laddercomb {

struct MinorParams {
    int m = 0;
    int n = 0;
    std::vector<int> a;  // strictly increasing, a_r <= m
    std::vector<int> b;  // strictly increasing, b_r <= n
};

struct LadderMinorParams {
    int m = 0;
    int n = 0;
    int k = 0;
    int l = 0;
    int r = 0;
};

struct PfaffianParams {
    int n = 0;  // matrix order
    int l = 0;  // ladder width
    int r = 0;  // pfaffian size parameter (2r-pfaffians)
};

inline void validate(const MinorParams& p) {
    if (p.m < 1 || p.n < 1) {
        throw std::invalid_argument("MinorParams: matrix shape must be positive");
    }
    if (p.a.size() != p.b.size()) {
        throw std::invalid_argument("MinorParams: index sequences must have equal length");
    }
    for (std::size_t t = 0; t < p.a.size(); ++t) {
        if (p.a[t] < 1 || p.a[t] > p.m || p.b[t] < 1 || p.b[t] > p.n) {
            throw std::invalid_argument("MinorParams: indices must lie within the matrix shape");
        }
        if (t > 0 && (p.a[t - 1] >= p.a[t] || p.b[t - 1] >= p.b[t])) {
            throw std::invalid_argument("MinorParams: index sequences must be strictly increasing");
        }
    }
}

inline void validate(const LadderMinorParams& p) {
    if (p.m < 2 || p.n < 2) {
        throw std::invalid_argument("LadderMinorParams: grid must be at least 2x2");
    }
    const int cut_max = std::min(p.m - 2, p.n - 2);
    if (p.k < 0 || p.k > cut_max || p.l < 0 || p.l > cut_max) {
        throw std::invalid_argument("LadderMinorParams: cuts must satisfy 0 <= k,l <= min(m-2, n-2)");
    }
    if (p.r < 0 || p.r >= std::min(p.m - p.k, p.n - p.l)) {
        throw std::invalid_argument("LadderMinorParams: size must satisfy 0 <= r < min(m-k, n-l)");
    }
}

inline void validate(const PfaffianParams& p) {
    if (p.r < 1) throw std::invalid_argument("PfaffianParams: need r >= 1");
    if (!(p.r < p.l && p.l < p.n)) {
        throw std::invalid_argument("PfaffianParams: need r < l < n");
    }
    if (2 * p.r > p.n) throw std::invalid_argument("PfaffianParams: need 2r <= n");
}

// det[ C(m+n-a_i-b_j, m-a_i) ]
inline ApInt multiplicity_generic(const MinorParams& p) {
    validate(p);
    const int r = static_cast<int>(p.a.size());
    ApMatrix matrix(r);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            matrix.at(i, j) = binomial(p.m + p.n - p.a[i - 1] - p.b[j - 1], p.m - p.a[i - 1]);
        }
    }
    return det(matrix);
}

// Giambelli case a_i = b_i = i: det[ C(m+n-i-j, m-i) ]
inline ApInt multiplicity_maximal(int m, int n, int r) {
    if (r < 1 || r > std::min(m, n) - 1) {
        throw std::invalid_argument("multiplicity_maximal: need 1 <= r <= min(m, n) - 1");
    }
    MinorParams p{m, n, {}, {}};
    for (int i = 1; i <= r; ++i) {
        p.a.push_back(i);
        p.b.push_back(i);
    }
    return multiplicity_generic(p);
}

// Entry (i, j) of the two-sided ladder determinant, written as the T-sum of
// the corner-to-corner formula with m, n, l shifted to m-i+1, n-j+1,
// l-i-j+2.
inline ApInt ladder_entry_substituted(const LadderMinorParams& p, int i, int j) {
    return signed_sum_over_T(p.m + p.n - i - j, p.m - i,
                             p.k - p.m + (i - 1), p.l - p.n - (i - 1));
}

// The same entry evaluated from its direct form: sum over (a, b) in T of
// (-1)^(a+b) C(m+n-i-j, m-1 + (a-b-1)(i-1) + a(k-m) + b(l-n)), iterating T
// literally over the window |a| <= top+1 (which covers every nonzero term
// for parameters within the validated domain).
inline ApInt ladder_entry_direct(const LadderMinorParams& p, int i, int j) {
    const std::int64_t top = p.m + p.n - i - j;
    ApInt sum = 0;
    for (const auto& [a, b] : index_set_t(top + 1)) {
        const std::int64_t arg = (p.m - 1) + (a - b - 1) * (i - 1) +
                                 a * (p.k - p.m) + b * (p.l - p.n);
        const ApInt term = binomial(top, arg);
        if ((a + b) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

// det of the r x r matrix of ladder entries; r = 0 yields 1.
inline ApInt multiplicity_ladder(const LadderMinorParams& p) {
    validate(p);
    ApMatrix matrix(p.r);
    for (int i = 1; i <= p.r; ++i) {
        for (int j = 1; j <= p.r; ++j) {
            matrix.at(i, j) = ladder_entry_substituted(p, i, j);
        }
    }
    return det(matrix);
}

inline ApInt multiplicity_ladder(int m, int n, int k, int l, int r) {
    return multiplicity_ladder(LadderMinorParams{m, n, k, l, r});
}

// One-sided ladder: det[ C(m+n-i-j, m-i) - C(m+n-i-j, k-1) ]
inline ApInt multiplicity_one_sided_ladder(int m, int n, int k, int r) {
    if (m < 2 || n < 2 || k < 0 || k > std::min(m - 2, n - 2)) {
        throw std::invalid_argument("multiplicity_one_sided_ladder: cut must satisfy 0 <= k <= min(m-2, n-2)");
    }
    if (r < 0 || r >= m - k || r >= n) {
        throw std::invalid_argument("multiplicity_one_sided_ladder: size must satisfy 0 <= r < m-k and r < n");
    }
    ApMatrix matrix(r);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            matrix.at(i, j) = binomial(m + n - i - j, m - i) - binomial(m + n - i - j, k - 1);
        }
    }
    return det(matrix);
}

// Ladder pfaffian: det of the (r-1) x (r-1) matrix with entry
// sum over T of (-1)^(a+b) C(2n-2r-i-j, n-r-i + a(-r+i-1) + b(r-l-i));
// r = 1 yields the empty determinant 1.
inline ApInt multiplicity_pfaffian(const PfaffianParams& p) {
    validate(p);
    ApMatrix matrix(p.r - 1);
    for (int i = 1; i <= p.r - 1; ++i) {
        for (int j = 1; j <= p.r - 1; ++j) {
            matrix.at(i, j) = signed_sum_over_T(2 * p.n - 2 * p.r - i - j, p.n - p.r - i,
                                                -p.r + i - 1, p.r - p.l - i);
        }
    }
    return det(matrix);
}

inline ApInt multiplicity_pfaffian(int n, int l, int r) {
    return multiplicity_pfaffian(PfaffianParams{n, l, r});
}

// Full skew-symmetric matrix (l = n-1):
// det[ C(2n-2r-i-j, n-r-i) - C(2n-2r-i-j, n-2r-1) ]
inline ApInt multiplicity_pfaffian_full(int n, int r) {
    if (r < 1 || 2 * r > n) {
        throw std::invalid_argument("multiplicity_pfaffian_full: need r >= 1 and 2r <= n");
    }
    ApMatrix matrix(r - 1);
    for (int i = 1; i <= r - 1; ++i) {
        for (int j = 1; j <= r - 1; ++j) {
            matrix.at(i, j) = binomial(2 * n - 2 * r - i - j, n - r - i) -
                              binomial(2 * n - 2 * r - i - j, n - 2 * r - 1);
        }
    }
    return det(matrix);
}

}  // namespace laddercomb
