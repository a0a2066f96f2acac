#pragma once

// Grid regions on which lattice paths are counted. Points are 1-based
// (row, col); a path step moves to (row+1, col) or (row, col-1).
//
// Two representations are used:
//   * LadderRegion - one column interval [lo_i, hi_i] per row, both bounds
//     weakly nonincreasing down the rows. This covers rectangles, corner-cut
//     staircase regions and diagonal ladders, and makes membership O(1).
//   * PointSetRegion - an explicit finite point set, for regions whose rows
//     are not contiguous (the skew-symmetric ladder with its hooks removed).

#include <algorithm>
#include <compare>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace laddercomb {

struct Point {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline std::string to_string(Point p) {
    return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

// A staircase boundary chain: consecutive points differ by exactly one step,
// (row+1, col) or (row, col-1).
struct BoundaryPath {
    std::vector<Point> points;

    explicit BoundaryPath(std::vector<Point> pts) : points(std::move(pts)) {
        if (points.empty()) {
            throw std::invalid_argument("BoundaryPath: empty chain");
        }
        for (std::size_t i = 1; i < points.size(); ++i) {
            const Point a = points[i - 1];
            const Point b = points[i];
            const bool row_step = b.row == a.row + 1 && b.col == a.col;
            const bool col_step = b.row == a.row && b.col == a.col - 1;
            if (!row_step && !col_step) {
                throw std::invalid_argument("BoundaryPath: consecutive points must differ by a single row or column step");
            }
        }
    }

    Point front() const { return points.front(); }
    Point back() const { return points.back(); }
};

class LadderRegion {
public:
    LadderRegion(int rows, int cols, std::vector<int> lo, std::vector<int> hi)
        : rows_(rows), cols_(cols), lo_(std::move(lo)), hi_(std::move(hi)) {
        if (rows_ < 1 || cols_ < 1) {
            throw std::invalid_argument("LadderRegion: grid must be at least 1x1");
        }
        if (lo_.size() != static_cast<std::size_t>(rows_) ||
            hi_.size() != static_cast<std::size_t>(rows_)) {
            throw std::invalid_argument("LadderRegion: need one column interval per row");
        }
        for (int i = 0; i < rows_; ++i) {
            if (lo_[i] < 1 || lo_[i] > hi_[i] || hi_[i] > cols_) {
                throw std::invalid_argument("LadderRegion: intervals must satisfy 1 <= lo <= hi <= cols");
            }
            if (i > 0 && (lo_[i] > lo_[i - 1] || hi_[i] > hi_[i - 1])) {
                throw std::invalid_argument("LadderRegion: lo and hi must be weakly nonincreasing");
            }
        }
    }

    static LadderRegion rectangle(int rows, int cols) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("rectangle: dimensions must be positive");
        }
        return LadderRegion(rows, cols, std::vector<int>(rows, 1), std::vector<int>(rows, cols));
    }

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }
    int lo(int row) const { return lo_[check_row(row)]; }
    int hi(int row) const { return hi_[check_row(row)]; }

    bool contains(Point p) const {
        if (p.row < 1 || p.row > rows_ || p.col < 1 || p.col > cols_) return false;
        return lo_[p.row - 1] <= p.col && p.col <= hi_[p.row - 1];
    }

    long point_count() const {
        long total = 0;
        for (int i = 0; i < rows_; ++i) total += hi_[i] - lo_[i] + 1;
        return total;
    }

    friend bool operator==(const LadderRegion& a, const LadderRegion& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    int check_row(int row) const {
        if (row < 1 || row > rows_) throw std::out_of_range("LadderRegion: row outside grid");
        return row - 1;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> lo_;
    std::vector<int> hi_;
};

// The m x n grid with both diagonal corner cuts: row i spans columns
// max(1, l-i+2) .. min(n, n+m-k-i). k cuts the (m, n) corner, l cuts (1, 1);
// k = l = 0 gives the full rectangle.
inline LadderRegion diagonal_two_sided(int m, int n, int k, int l) {
    if (m < 2 || n < 2) {
        throw std::invalid_argument("diagonal_two_sided: grid must be at least 2x2");
    }
    const int cut_max = std::min(m - 2, n - 2);
    if (k < 0 || k > cut_max || l < 0 || l > cut_max) {
        throw std::invalid_argument("diagonal_two_sided: cuts must satisfy 0 <= k,l <= min(m-2, n-2)");
    }
    std::vector<int> lo(m), hi(m);
    for (int i = 1; i <= m; ++i) {
        lo[i - 1] = std::max(1, l - i + 2);
        hi[i - 1] = std::min(n, n + m - k - i);
    }
    return LadderRegion(m, n, std::move(lo), std::move(hi));
}

// The diagonal staircase cutting the (m, n) corner: from (m-k, n) to
// (m, n-k), alternating column and row steps. k = 0 degenerates to the
// single point (m, n).
inline BoundaryPath upper_diagonal_boundary(int m, int n, int k) {
    if (m < 1 || n < 1 || k < 0 || k > m - 1 || k > n - 1) {
        throw std::invalid_argument("upper_diagonal_boundary: need 0 <= k <= min(m-1, n-1)");
    }
    std::vector<Point> pts;
    pts.push_back({m - k, n});
    for (int i = 0; i < k; ++i) {
        pts.push_back({m - k + i, n - 1 - i});
        pts.push_back({m - k + i + 1, n - 1 - i});
    }
    return BoundaryPath(std::move(pts));
}

// The diagonal staircase cutting the (1, 1) corner: from (1, l+1) to
// (l+1, 1), alternating row and column steps. l = 0 degenerates to (1, 1).
inline BoundaryPath lower_diagonal_boundary(int l) {
    if (l < 0) {
        throw std::invalid_argument("lower_diagonal_boundary: cut depth must be nonnegative");
    }
    std::vector<Point> pts;
    pts.push_back({1, l + 1});
    for (int i = 0; i < l; ++i) {
        pts.push_back({2 + i, l + 1 - i});
        pts.push_back({2 + i, l - i});
    }
    return BoundaryPath(std::move(pts));
}

// Region bounded by the grid edges, an upper staircase from (k1, n) to
// (m, k2) cutting the (m, n) corner, and a lower staircase from (1, k3) to
// (k4, 1) cutting the (1, 1) corner. Boundary points belong to the region.
inline LadderRegion from_boundaries(int m, int n, const BoundaryPath& upper,
                                    const BoundaryPath& lower) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("from_boundaries: grid must be at least 1x1");
    }
    const Point u0 = upper.front();
    const Point u1 = upper.back();
    if (u0.col != n || u0.row <= 1 || u0.row > m || u1.row != m || u1.col <= 1) {
        throw std::invalid_argument("from_boundaries: upper boundary must run from (k1, n), k1 > 1, to (m, k2), k2 > 1");
    }
    const Point l0 = lower.front();
    const Point l1 = lower.back();
    if (l0.row != 1 || l0.col < 1 || l0.col >= n || l1.col != 1 || l1.row >= m) {
        throw std::invalid_argument("from_boundaries: lower boundary must run from (1, k3), k3 < n, to (k4, 1), k4 < m");
    }

    std::vector<int> lo(m, 1), hi(m, n);
    {
        std::vector<int> max_col(m + 1, 0);
        for (const Point p : upper.points) {
            max_col[p.row] = std::max(max_col[p.row], p.col);
        }
        for (int i = u0.row; i <= m; ++i) {
            hi[i - 1] = max_col[i];
        }
    }
    {
        std::vector<int> min_col(m + 1, n + 1);
        for (const Point p : lower.points) {
            min_col[p.row] = std::min(min_col[p.row], p.col);
        }
        for (int i = 1; i <= l1.row; ++i) {
            lo[i - 1] = min_col[i];
        }
    }
    for (int i = 1; i <= m; ++i) {
        if (lo[i - 1] > hi[i - 1]) {
            throw std::invalid_argument("from_boundaries: boundaries cross");
        }
    }
    return LadderRegion(m, n, std::move(lo), std::move(hi));
}

class PointSetRegion {
public:
    PointSetRegion() = default;
    explicit PointSetRegion(std::set<Point> pts) : points_(std::move(pts)) {
        for (const Point p : points_) note_bounds(p);
    }

    void insert(Point p) {
        if (p.row < 1 || p.col < 1) {
            throw std::invalid_argument("PointSetRegion: coordinates must be positive");
        }
        points_.insert(p);
        note_bounds(p);
    }

    bool contains(Point p) const { return points_.count(p) > 0; }
    int row_count() const { return max_row_; }
    int col_count() const { return max_col_; }
    const std::set<Point>& points() const { return points_; }

private:
    void note_bounds(Point p) {
        max_row_ = std::max(max_row_, p.row);
        max_col_ = std::max(max_col_, p.col);
    }

    std::set<Point> points_;
    int max_row_ = 0;
    int max_col_ = 0;
};

// The skew-symmetric diagonal ladder with its forced hooks removed, plus the
// source/sink lists of the reduced counting problem. The underlying point set
// is the strict upper triangle {(i, j) : 1 <= i < j <= min(n, l+i)} minus,
// for each i = 1..r-1, the hook {(i, j) : i+1 <= j <= r} u
// {(j, n-i+1) : n-r+1 <= j <= n-i}. Columns are flipped (j -> n+1-j) so the
// standard step rule (row+1, col-1) realizes the ascending order used on
// this region; sources and sinks are returned in flipped coordinates.
struct PfaffianGeometry {
    PointSetRegion region;
    std::vector<Point> sources;
    std::vector<Point> sinks;
};

inline PfaffianGeometry pfaffian_region(int n, int l, int r) {
    if (r < 2) throw std::invalid_argument("pfaffian_region: need r >= 2");
    if (!(r < l && l < n)) throw std::invalid_argument("pfaffian_region: need r < l < n");
    if (2 * r > n) throw std::invalid_argument("pfaffian_region: need 2r <= n");

    std::set<Point> original;
    for (int i = 1; i <= n; ++i) {
        const int top = std::min(n, l + i);
        for (int j = i + 1; j <= top; ++j) original.insert({i, j});
    }
    for (int i = 1; i <= r - 1; ++i) {
        for (int j = i + 1; j <= r; ++j) original.erase({i, j});
        for (int j = n - r + 1; j <= n - i; ++j) original.erase({j, n - i + 1});
    }

    PfaffianGeometry geometry;
    std::set<Point> flipped;
    for (const Point p : original) flipped.insert({p.row, n + 1 - p.col});
    geometry.region = PointSetRegion(std::move(flipped));
    for (int i = 1; i <= r - 1; ++i) {
        geometry.sources.push_back({i, n - r});        // (i, r+1) flipped
        geometry.sinks.push_back({n - r, i});          // (n-r, n-i+1) flipped
    }
    return geometry;
}

// Plain-text serialization: ladder regions as one "row lo hi" triple per
// line, point sets as one "row col" pair per line.

inline std::string format_region(const LadderRegion& region) {
    std::ostringstream out;
    for (int i = 1; i <= region.row_count(); ++i) {
        out << i << ' ' << region.lo(i) << ' ' << region.hi(i) << '\n';
    }
    return out.str();
}

inline std::string format_region(const PointSetRegion& region) {
    std::ostringstream out;
    for (const Point p : region.points()) {
        out << p.row << ' ' << p.col << '\n';
    }
    return out.str();
}

inline LadderRegion parse_ladder_region(std::istream& in) {
    std::vector<std::pair<int, std::pair<int, int>>> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        int row = 0, lo = 0, hi = 0;
        if (!(fields >> row >> lo >> hi)) {
            throw std::invalid_argument("parse_ladder_region: each line must hold 'row lo hi'");
        }
        entries.push_back({row, {lo, hi}});
    }
    if (entries.empty()) {
        throw std::invalid_argument("parse_ladder_region: empty region description");
    }
    std::sort(entries.begin(), entries.end());
    const int rows = static_cast<int>(entries.size());
    std::vector<int> lo(rows), hi(rows);
    int cols = 0;
    for (int i = 0; i < rows; ++i) {
        if (entries[i].first != i + 1) {
            throw std::invalid_argument("parse_ladder_region: rows must cover 1..m exactly once");
        }
        lo[i] = entries[i].second.first;
        hi[i] = entries[i].second.second;
        cols = std::max(cols, hi[i]);
    }
    return LadderRegion(rows, cols, std::move(lo), std::move(hi));
}

inline PointSetRegion parse_point_set(std::istream& in) {
    PointSetRegion region;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        int row = 0, col = 0;
        if (!(fields >> row >> col)) {
            throw std::invalid_argument("parse_point_set: each line must hold 'row col'");
        }
        region.insert({row, col});
    }
    return region;
}

}  // namespace laddercomb
