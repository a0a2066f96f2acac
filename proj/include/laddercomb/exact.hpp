#pragma once

// Exact integer kernels shared by every counting formula in the library:
// arbitrary-precision integers, binomial coefficients with the vanishing
// convention, fraction-free determinants, and alternating binomial sums
// indexed by T = {(a, b) in Z x Z : a - b = 0 or 1}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace laddercomb {

using ApInt = boost::multiprecision::cpp_int;

// Floor/ceil division for a signed numerator and positive denominator.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a > 0 ? (a + b - 1) / b : -(-a / b);
}

// C(n, k), exact. Zero outside 0 <= k <= n; negative n is rejected rather
// than generalized.
inline ApInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: upper index must be nonnegative");
    }
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ApInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result equals C(n-k+i, i) after each step
    }
    return result;
}

// Square matrix of exact integers, addressed 1-based.
class ApMatrix {
public:
    explicit ApMatrix(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("ApMatrix: negative order");
        entries_.resize(static_cast<std::size_t>(order) * order);
    }

    int order() const { return order_; }

    ApInt& at(int i, int j) {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * order_ + (j - 1)];
    }

    const ApInt& at(int i, int j) const {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i - 1) * order_ + (j - 1)];
    }

private:
    void check_index(int i, int j) const {
        if (i < 1 || i > order_ || j < 1 || j > order_) {
            throw std::out_of_range("ApMatrix: index outside matrix");
        }
    }

    int order_ = 0;
    std::vector<ApInt> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination. Every division
// is exact, so no rational intermediates appear. The empty matrix has
// determinant 1.
inline ApInt det(ApMatrix m) {
    const int n = m.order();
    if (n == 0) return 1;

    int sign = 1;
    ApInt prev = 1;
    for (int k = 1; k < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot_row = 0;
            for (int i = k + 1; i <= n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot_row = i;
                    break;
                }
            }
            if (pivot_row == 0) return 0;
            for (int j = 1; j <= n; ++j) {
                std::swap(m.at(k, j), m.at(pivot_row, j));
            }
            sign = -sign;
        }
        for (int i = k + 1; i <= n; ++i) {
            for (int j = k + 1; j <= n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    ApInt result = m.at(n, n);
    if (sign < 0) result = -result;
    return result;
}

// The members (a, b) of T with |a| <= bound, ordered by a then b.
inline std::vector<std::pair<std::int64_t, std::int64_t>> index_set_t(std::int64_t bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> members;
    members.reserve(static_cast<std::size_t>(2 * (2 * bound + 1)));
    for (std::int64_t a = -bound; a <= bound; ++a) {
        members.emplace_back(a, a - 1);
        members.emplace_back(a, a);
    }
    return members;
}

// Sum over (a, b) in T of (-1)^(a+b) * C(top, base + a*step_a + b*step_b).
// Both steps must be negative so that only finitely many terms are nonzero.
// Splitting T into the branches b = a (sign +) and b = a - 1 (sign -), the
// binomial argument is an affine function of a with slope step_a + step_b
// <= -2, so the a-range contributing arguments inside [0, top] is an exact
// interval computed per branch; everything outside it vanishes.
inline ApInt signed_sum_over_T(std::int64_t top, std::int64_t base,
                               std::int64_t step_a, std::int64_t step_b) {
    if (top < 0) {
        throw std::invalid_argument("signed_sum_over_T: top must be nonnegative");
    }
    if (step_a >= 0 || step_b >= 0) {
        throw std::invalid_argument(
            "signed_sum_over_T: both steps must be negative for a finite sum");
    }
    const std::int64_t slope = -(step_a + step_b);

    ApInt sum = 0;
    const auto accumulate = [&](std::int64_t offset, int sign) {
        // offset - a*slope in [0, top]
        const std::int64_t a_lo = ceil_div(offset - top, slope);
        const std::int64_t a_hi = floor_div(offset, slope);
        for (std::int64_t a = a_lo; a <= a_hi; ++a) {
            const ApInt term = binomial(top, offset - a * slope);
            if (sign > 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    };
    accumulate(base, +1);           // branch (a, a)
    accumulate(base - step_b, -1);  // branch (a, a-1)
    return sum;
}

}  // namespace laddercomb
