#pragma once

// Path counting on grid regions, explicit path enumeration, and the
// brute-force counter for families of pairwise vertex-disjoint paths.
// The enumerators are deliberately determinant-free: they are the ground
// truth every closed formula in this library is checked against.

#include "laddercomb/exact.hpp"
#include "laddercomb/region.hpp"

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace laddercomb {

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LatticePath {
    std::vector<Point> points;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

template <typename Region>
concept GridRegion = requires(const Region& r, Point p) {
    { r.row_count() } -> std::convertible_to<int>;
    { r.col_count() } -> std::convertible_to<int>;
    { r.contains(p) } -> std::convertible_to<bool>;
};

// Number of paths from `from` to `to` staying inside the region. Zero when
// `to` is not reachable (it must lie weakly below and weakly left of
// `from`); one when the endpoints coincide.
template <GridRegion Region>
ApInt count_paths(const Region& region, Point from, Point to) {
    if (!region.contains(from)) {
        throw std::invalid_argument("count_paths: source " + to_string(from) + " outside region");
    }
    if (!region.contains(to)) {
        throw std::invalid_argument("count_paths: sink " + to_string(to) + " outside region");
    }
    if (to.row < from.row || to.col > from.col) return 0;

    const int rows = to.row - from.row + 1;
    const int cols = from.col - to.col + 1;
    std::vector<ApInt> table(static_cast<std::size_t>(rows) * cols);
    const auto cell = [&](int i, int j) -> ApInt& {
        return table[static_cast<std::size_t>(i) * cols + j];
    };
    // sweep rows ascending, columns descending: both predecessors of a cell
    // ((row-1, col) and (row, col+1)) are already final
    for (int i = 0; i < rows; ++i) {
        for (int j = cols - 1; j >= 0; --j) {
            const Point p{from.row + i, to.col + j};
            if (!region.contains(p)) continue;
            if (i == 0 && j == cols - 1) {
                cell(i, j) = 1;
                continue;
            }
            ApInt ways = 0;
            if (i > 0) ways += cell(i - 1, j);
            if (j + 1 < cols) ways += cell(i, j + 1);
            cell(i, j) = std::move(ways);
        }
    }
    return cell(rows - 1, 0);
}

namespace detail {

template <GridRegion Region>
void enumerate_paths_rec(const Region& region, Point cur, Point to,
                         std::vector<Point>& prefix, std::vector<LatticePath>& out,
                         std::size_t cap) {
    prefix.push_back(cur);
    if (cur == to) {
        if (out.size() == cap) {
            throw cap_exceeded("enumerate_paths: more than " + std::to_string(cap) + " paths");
        }
        out.push_back(LatticePath{prefix});
    } else {
        const Point down{cur.row + 1, cur.col};
        if (cur.row < to.row && region.contains(down)) {
            enumerate_paths_rec(region, down, to, prefix, out, cap);
        }
        const Point left{cur.row, cur.col - 1};
        if (cur.col > to.col && region.contains(left)) {
            enumerate_paths_rec(region, left, to, prefix, out, cap);
        }
    }
    prefix.pop_back();
}

}  // namespace detail

// All paths from `from` to `to`, in the fixed order that explores the row
// step before the column step at every branch. Throws cap_exceeded if more
// than `cap` paths exist.
template <GridRegion Region>
std::vector<LatticePath> enumerate_paths(const Region& region, Point from, Point to,
                                         std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("enumerate_paths: cap must be positive");
    if (!region.contains(from)) {
        throw std::invalid_argument("enumerate_paths: source " + to_string(from) + " outside region");
    }
    if (!region.contains(to)) {
        throw std::invalid_argument("enumerate_paths: sink " + to_string(to) + " outside region");
    }
    std::vector<LatticePath> out;
    if (to.row < from.row || to.col > from.col) return out;
    std::vector<Point> prefix;
    detail::enumerate_paths_rec(region, from, to, prefix, out, cap);
    return out;
}

namespace detail {

template <GridRegion Region>
class DisjointFamilyCounter {
public:
    DisjointFamilyCounter(const Region& region, const std::vector<Point>& sources,
                          const std::vector<Point>& sinks, std::int64_t cap)
        : region_(region), sources_(sources), sinks_(sinks), cap_(cap),
          cols_(region.col_count()),
          occupied_(static_cast<std::size_t>(region.row_count()) * region.col_count(), 0) {}

    std::int64_t run() {
        place(0);
        return count_;
    }

private:
    bool occupied(Point p) const {
        return occupied_[static_cast<std::size_t>(p.row - 1) * cols_ + (p.col - 1)] != 0;
    }
    void set_occupied(Point p, bool value) {
        occupied_[static_cast<std::size_t>(p.row - 1) * cols_ + (p.col - 1)] = value ? 1 : 0;
    }

    void place(std::size_t index) {
        if (index == sources_.size()) {
            if (++count_ > cap_) {
                throw cap_exceeded("count_disjoint_families_bruteforce: more than " +
                                   std::to_string(cap_) + " families");
            }
            return;
        }
        if (!occupied(sources_[index])) walk(index, sources_[index]);
    }

    void walk(std::size_t index, Point cur) {
        set_occupied(cur, true);
        const Point sink = sinks_[index];
        if (cur == sink) {
            place(index + 1);
        } else {
            const Point down{cur.row + 1, cur.col};
            if (cur.row < sink.row && region_.contains(down) && !occupied(down)) {
                walk(index, down);
            }
            const Point left{cur.row, cur.col - 1};
            if (cur.col > sink.col && region_.contains(left) && !occupied(left)) {
                walk(index, left);
            }
        }
        set_occupied(cur, false);
    }

    const Region& region_;
    const std::vector<Point>& sources_;
    const std::vector<Point>& sinks_;
    std::int64_t cap_;
    std::int64_t count_ = 0;
    int cols_;
    std::vector<unsigned char> occupied_;
};

}  // namespace detail

// Number of r-tuples (C_1, ..., C_r) where C_i is a path from sources[i] to
// sinks[i] and the paths are pairwise vertex-disjoint. Pure depth-first
// enumeration in index order with an occupied-vertex grid; a partial
// placement is abandoned as soon as a vertex collides. No determinant is
// involved anywhere.
template <GridRegion Region>
ApInt count_disjoint_families_bruteforce(const Region& region,
                                         const std::vector<Point>& sources,
                                         const std::vector<Point>& sinks,
                                         std::int64_t cap = 10'000'000) {
    if (sources.empty() || sources.size() != sinks.size()) {
        throw std::invalid_argument("count_disjoint_families_bruteforce: need equal, nonempty source and sink lists");
    }
    if (cap < 1) {
        throw std::invalid_argument("count_disjoint_families_bruteforce: cap must be positive");
    }
    for (const Point p : sources) {
        if (!region.contains(p)) {
            throw std::invalid_argument("count_disjoint_families_bruteforce: source " + to_string(p) + " outside region");
        }
    }
    for (const Point p : sinks) {
        if (!region.contains(p)) {
            throw std::invalid_argument("count_disjoint_families_bruteforce: sink " + to_string(p) + " outside region");
        }
    }
    detail::DisjointFamilyCounter<Region> counter(region, sources, sinks, cap);
    return counter.run();
}

}  // namespace laddercomb
