#pragma once

// Families of vertex-disjoint paths on two-sided ladder regions counted by
// a determinant of pairwise path counts, with validation of the endpoint
// hypotheses under which the identity is asserted.
//
// For sources P_i = (a_i, n) on the top edge and sinks Q_i = (c_i, d_i), the
// hypotheses are:
//   (i)   1 = a_1 < a_2 < ... < a_r <= m
//   (ii)  1 <= c_1 <= ... <= c_r = m and 1 = d_1 < d_2 < ... < d_r <= n
//   (iii) c_1 > k2 whenever the region has an upper corner cut with
//         k2 = hi(m) >= 2
// together with membership of every endpoint. A variant of (iii) used by an
// alternative statement of the identity - if (1,1) is outside the region
// then (c_1 - 1, 1) must be inside - is validated separately and does not
// gate the determinant.

#include "laddercomb/exact.hpp"
#include "laddercomb/paths.hpp"
#include "laddercomb/region.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace laddercomb {

struct EndpointConfig {
    std::vector<Point> sources;
    std::vector<Point> sinks;

    int size() const { return static_cast<int>(sources.size()); }
};

struct EndpointValidation {
    std::vector<std::string> violations;  // subset of {"i", "ii", "iii", "membership"}
    bool iii_alt_violated = false;

    bool ok() const { return violations.empty(); }

    std::string describe() const {
        std::string text;
        for (const std::string& v : violations) {
            if (!text.empty()) text += ", ";
            text += v;
        }
        return text;
    }
};

inline EndpointValidation validate_endpoints(const LadderRegion& region,
                                             const EndpointConfig& cfg) {
    if (cfg.sources.empty() || cfg.sources.size() != cfg.sinks.size()) {
        throw std::invalid_argument("validate_endpoints: need equal, nonempty source and sink lists");
    }
    EndpointValidation result;
    const int m = region.row_count();
    const int n = region.col_count();
    const int r = cfg.size();

    bool members = true;
    for (const Point p : cfg.sources) members = members && region.contains(p);
    for (const Point p : cfg.sinks) members = members && region.contains(p);
    if (!members) result.violations.push_back("membership");

    bool cond_i = cfg.sources[0].row == 1;
    for (int t = 0; t < r; ++t) {
        cond_i = cond_i && cfg.sources[t].col == n && cfg.sources[t].row <= m;
        if (t > 0) cond_i = cond_i && cfg.sources[t - 1].row < cfg.sources[t].row;
    }
    if (!cond_i) result.violations.push_back("i");

    bool cond_ii = cfg.sinks[0].col == 1 && cfg.sinks[r - 1].row == m;
    for (int t = 0; t < r; ++t) {
        cond_ii = cond_ii && cfg.sinks[t].row >= 1 && cfg.sinks[t].col <= n;
        if (t > 0) {
            cond_ii = cond_ii && cfg.sinks[t - 1].row <= cfg.sinks[t].row &&
                      cfg.sinks[t - 1].col < cfg.sinks[t].col;
        }
    }
    if (!cond_ii) result.violations.push_back("ii");

    const int k2 = region.hi(m);
    const bool upper_cut = k2 < n;
    if (upper_cut && k2 >= 2 && cfg.sinks[0].row <= k2) {
        result.violations.push_back("iii");
    }

    if (!region.contains({1, 1})) {
        const Point above{cfg.sinks[0].row - 1, 1};
        result.iii_alt_violated = !region.contains(above);
    }
    return result;
}

namespace detail {

inline ApMatrix pairwise_path_counts(const LadderRegion& region, const EndpointConfig& cfg) {
    const int r = cfg.size();
    ApMatrix matrix(r);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= r; ++j) {
            matrix.at(i, j) = count_paths(region, cfg.sources[i - 1], cfg.sinks[j - 1]);
        }
    }
    return matrix;
}

}  // namespace detail

// Matrix of all pairwise path counts w(P_i, Q_j); requires a config passing
// validation.
inline ApMatrix path_matrix(const LadderRegion& region, const EndpointConfig& cfg) {
    const EndpointValidation validation = validate_endpoints(region, cfg);
    if (!validation.ok()) {
        throw std::invalid_argument("path_matrix: endpoint config violates condition(s): " +
                                    validation.describe());
    }
    return detail::pairwise_path_counts(region, cfg);
}

// det[w(P_i, Q_j)] without hypothesis validation; endpoints must still lie in
// the region. Exists for sweeps probing behaviour outside the hypotheses.
inline ApInt count_disjoint_families_unchecked(const LadderRegion& region,
                                               const EndpointConfig& cfg) {
    return det(detail::pairwise_path_counts(region, cfg));
}

// Number of vertex-disjoint path families, computed as det[w(P_i, Q_j)].
// Refuses configs failing conditions (i)-(iii): outside them the determinant
// is not asserted to count anything.
inline ApInt count_disjoint_families(const LadderRegion& region, const EndpointConfig& cfg) {
    return det(path_matrix(region, cfg));
}

// Every endpoint config on the region that passes validation, with
// source/sink tuple sizes up to max_r, in ascending lexicographic order,
// truncated at `cap` configs.
inline std::vector<EndpointConfig> enumerate_endpoint_configs(const LadderRegion& region,
                                                              int max_r,
                                                              std::size_t cap = 5000) {
    const int m = region.row_count();
    const int n = region.col_count();
    std::vector<EndpointConfig> configs;

    for (int r = 1; r <= max_r && configs.size() < cap; ++r) {
        std::vector<std::vector<Point>> source_lists;
        std::vector<Point> sources;
        const auto grow_sources = [&](auto&& self, int next_row) -> void {
            if (static_cast<int>(sources.size()) == r) {
                source_lists.push_back(sources);
                return;
            }
            for (int a = next_row; a <= m; ++a) {
                const Point p{a, n};
                if (!region.contains(p)) continue;
                sources.push_back(p);
                self(self, a + 1);
                sources.pop_back();
            }
        };
        if (region.contains({1, n})) {
            sources.push_back({1, n});
            grow_sources(grow_sources, 2);
        }

        std::vector<std::vector<Point>> sink_lists;
        std::vector<Point> sinks;
        const auto grow_sinks = [&](auto&& self, int min_row, int min_col) -> void {
            const int index = static_cast<int>(sinks.size());
            if (index == r) {
                if (sinks.back().row == m) sink_lists.push_back(sinks);
                return;
            }
            for (int c = min_row; c <= m; ++c) {
                const int d_first = index == 0 ? 1 : min_col;
                const int d_last = index == 0 ? 1 : n;
                for (int d = d_first; d <= d_last; ++d) {
                    const Point q{c, d};
                    if (!region.contains(q)) continue;
                    sinks.push_back(q);
                    self(self, c, d + 1);
                    sinks.pop_back();
                }
            }
        };
        grow_sinks(grow_sinks, 1, 2);

        for (const auto& src : source_lists) {
            for (const auto& snk : sink_lists) {
                EndpointConfig cfg{src, snk};
                if (validate_endpoints(region, cfg).ok()) {
                    configs.push_back(std::move(cfg));
                    if (configs.size() >= cap) return configs;
                }
            }
        }
    }
    return configs;
}

}  // namespace laddercomb
