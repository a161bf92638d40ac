#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace growth {

/// A corner of the cell grid. x counts columns from the left, y rows from the bottom.
struct Corner {
    int x = 0;
    int y = 0;
    auto operator<=>(const Corner&) const = default;
};

/// A cell, addressed 1-based: column from the left, row from the bottom.
struct Cell {
    int col = 0;
    int row = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Ferrers shape in French notation given by its D/R boundary word, read from
/// the top-left corner to the bottom-right corner.
///
/// The raw word is kept as given. Leading D's produce rows of length zero on
/// top and trailing R's produce columns of height zero on the right; these
/// "pending edges" carry corners of their own, which the border readers use.
class FerrersShape {
public:
    FerrersShape() = default;

    explicit FerrersShape(std::string_view word) : word_(word) {
        int r = 0;
        for (char ch : word_) {
            if (ch == 'D')
                ++r;
            else if (ch != 'R')
                throw parse_error("shape word may only contain D and R: '" + word_ + "'");
        }
        rows_ = r;
        cols_ = static_cast<int>(word_.size()) - r;
        row_len_.assign(rows_ + 1, 0);
        int x = 0, y = rows_;
        for (char ch : word_) {
            if (ch == 'R') {
                ++x;
            } else {
                row_len_[y] = x;
                --y;
            }
        }
        // row 0 is a sentinel holding the full width
        row_len_[0] = cols_;
    }

    /// Shape with the given row lengths, bottom row first.
    static FerrersShape from_rows(const Partition& rows) {
        std::string w;
        int x = 0;
        for (int y = rows.length(); y >= 1; --y) {
            for (; x < rows.row(y); ++x)
                w += 'R';
            w += 'D';
        }
        for (; x < rows.row(1); ++x)
            w += 'R';
        return FerrersShape(w);
    }

    static FerrersShape rectangle(int cols, int rows) {
        return from_rows(Partition(std::vector<int>(rows, cols)));
    }

    /// Triangle with n-1 cells in the bottom row, carrying one pending edge on
    /// top and one on the right: the word is D(RD)^{n-1}R.
    static FerrersShape staircase(int n) {
        require_positive(n);
        std::string w = "D";
        for (int i = 1; i < n; ++i)
            w += "RD";
        w += 'R';
        return FerrersShape(w);
    }

    const std::string& word() const { return word_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Length of row y (1-based from the bottom); 0 outside the shape.
    int row_length(int y) const { return (y >= 1 && y <= rows_) ? row_len_[y] : 0; }

    /// Height of column c (1-based from the left); 0 outside the shape.
    int col_height(int c) const {
        if (c < 1 || c > cols_)
            return 0;
        int h = 0;
        while (h < rows_ && row_len_[h + 1] >= c)
            ++h;
        return h;
    }

    Partition row_lengths() const {
        return Partition(std::vector<int>(row_len_.begin() + 1, row_len_.end()));
    }

    Partition col_heights() const { return conjugate(row_lengths()); }

    int num_cells() const {
        int s = 0;
        for (int y = 1; y <= rows_; ++y)
            s += row_len_[y];
        return s;
    }

    bool has_cell(int c, int r) const { return r >= 1 && r <= rows_ && c >= 1 && c <= row_len_[r]; }
    bool has_cell(Cell cell) const { return has_cell(cell.col, cell.row); }

    bool has_corner(int x, int y) const {
        if (y < 0 || y > rows_ || x < 0)
            return false;
        return x <= row_len_[y];
    }

    /// Cells in column-major order: left to right, bottom to top within a column.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int c = 1; c <= cols_; ++c)
            for (int r = 1; r <= rows_ && row_len_[r] >= c; ++r)
                out.push_back({c, r});
        return out;
    }

    /// Corners along the right/up border, from top-left to bottom-right.
    std::vector<Corner> border_corners() const {
        std::vector<Corner> out;
        int x = 0, y = rows_;
        out.push_back({x, y});
        for (char ch : word_) {
            if (ch == 'R')
                ++x;
            else
                --y;
            out.push_back({x, y});
        }
        return out;
    }

    /// Same cell set with the pending edges dropped.
    FerrersShape normalized() const { return from_rows(row_lengths()); }

    bool operator==(const FerrersShape& o) const { return word_ == o.word_; }

    /// Every cell (c,r) with c1<=c<=c2, r1<=r<=r2 lies in the shape.
    bool contains_rectangle(int c1, int r1, int c2, int r2) const {
        if (c1 < 1 || r1 < 1 || c1 > c2 || r1 > r2)
            return false;
        // left and bottom justified, so the far corner decides
        return has_cell(c2, r2);
    }

private:
    static void require_positive(int n) {
        if (n < 1)
            throw precondition_error("staircase size must be positive");
    }

    std::string word_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_len_{0};
};

/// Transpose: reverse the word and swap D with R.
inline FerrersShape reflect(const FerrersShape& f) {
    std::string w(f.word().rbegin(), f.word().rend());
    for (char& ch : w)
        ch = (ch == 'D') ? 'R' : 'D';
    return FerrersShape(w);
}

inline bool is_symmetric(const FerrersShape& f) {
    return reflect(f).normalized() == f.normalized();
}

/// All Ferrers shapes with at most max_cells cells (normalized words), smallest first.
inline std::vector<FerrersShape> ferrers_shapes_up_to(int max_cells) {
    std::vector<FerrersShape> out;
    for (const auto& p : partitions_up_to(max_cells))
        out.push_back(FerrersShape::from_rows(p));
    return out;
}

/// Bottom-justified columns whose heights weakly increase, then weakly decrease.
class StackPolyomino {
public:
    StackPolyomino() = default;

    explicit StackPolyomino(std::vector<int> heights) : heights_(std::move(heights)) {
        std::size_t i = 0;
        for (int h : heights_)
            if (h < 1)
                throw precondition_error("stack polyomino column heights must be positive");
        while (i + 1 < heights_.size() && heights_[i] <= heights_[i + 1])
            ++i;
        while (i + 1 < heights_.size() && heights_[i] >= heights_[i + 1])
            ++i;
        if (i + 1 < heights_.size())
            throw precondition_error("stack polyomino column heights are not unimodal");
    }

    static StackPolyomino from_ferrers(const FerrersShape& f) {
        auto h = f.col_heights().parts();
        return StackPolyomino(std::vector<int>(h.begin(), h.end()));
    }

    const std::vector<int>& heights() const { return heights_; }
    int cols() const { return static_cast<int>(heights_.size()); }
    int rows() const { return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end()); }
    int col_height(int c) const { return (c >= 1 && c <= cols()) ? heights_[c - 1] : 0; }

    int num_cells() const {
        int s = 0;
        for (int h : heights_)
            s += h;
        return s;
    }

    bool has_cell(int c, int r) const { return r >= 1 && r <= col_height(c); }
    bool has_cell(Cell cell) const { return has_cell(cell.col, cell.row); }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int c = 1; c <= cols(); ++c)
            for (int r = 1; r <= heights_[c - 1]; ++r)
                out.push_back({c, r});
        return out;
    }

    bool contains_rectangle(int c1, int r1, int c2, int r2) const {
        if (c1 < 1 || r1 < 1 || c1 > c2 || r1 > r2 || c2 > cols())
            return false;
        for (int c = c1; c <= c2; ++c)
            if (heights_[c - 1] < r2)
                return false;
        return true;
    }

    bool is_ferrers() const { return std::is_sorted(heights_.rbegin(), heights_.rend()); }

    bool operator==(const StackPolyomino&) const = default;

private:
    std::vector<int> heights_;
};

/// Columns reordered from the longest to the shortest.
inline FerrersShape sort_columns(const StackPolyomino& s) {
    std::vector<int> h = s.heights();
    std::sort(h.begin(), h.end(), std::greater<>());
    return FerrersShape::from_rows(conjugate(Partition(std::move(h))));
}

/// Every stack polyomino with exactly n cells.
inline std::vector<StackPolyomino> stack_polyominoes_of(int n) {
    std::vector<StackPolyomino> out;
    std::vector<int> cur;
    // phase 0: still rising, phase 1: falling
    auto rec = [&](auto& self, int remaining, int phase) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int h = 1; h <= remaining; ++h) {
            int next_phase = phase;
            if (!cur.empty()) {
                if (phase == 0 && h < cur.back())
                    next_phase = 1;
                else if (phase == 1 && h > cur.back())
                    continue;
            }
            cur.push_back(h);
            self(self, remaining - h, next_phase);
            cur.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

inline std::string to_string(const StackPolyomino& s) {
    std::string out;
    for (std::size_t i = 0; i < s.heights().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.heights()[i]);
    }
    return out;
}

inline StackPolyomino parse_stack(std::string_view text) {
    std::vector<int> h;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw parse_error("empty column height in '" + std::string(text) + "'");
        for (char ch : cur)
            if (ch < '0' || ch > '9')
                throw parse_error("bad column height in '" + std::string(text) + "'");
        h.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            flush();
        else if (ch != ' ')
            cur += ch;
    }
    if (!cur.empty() || !h.empty())
        flush();
    try {
        return StackPolyomino(std::move(h));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace growth
