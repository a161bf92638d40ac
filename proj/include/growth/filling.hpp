#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "shape.hpp"

namespace growth {

enum class FillingClass { PartialPermutation, ZeroOne, Arbitrary };

inline const char* to_string(FillingClass c) {
    switch (c) {
    case FillingClass::PartialPermutation: return "partial_permutation";
    case FillingClass::ZeroOne: return "zero_one";
    case FillingClass::Arbitrary: return "arbitrary";
    }
    return "?";
}

inline FillingClass parse_filling_class(std::string_view s) {
    if (s == "partial_permutation" || s == "pp")
        return FillingClass::PartialPermutation;
    if (s == "zero_one" || s == "01")
        return FillingClass::ZeroOne;
    if (s == "arbitrary")
        return FillingClass::Arbitrary;
    throw parse_error("unknown filling class '" + std::string(s) + "'");
}

/// `a` is at least as restrictive as `b`.
inline bool is_within(FillingClass a, FillingClass b) { return static_cast<int>(a) <= static_cast<int>(b); }

/// Sparse filling of a region with positive integers; absent cells hold 0.
template <class Region>
class basic_filling {
public:
    using region_type = Region;
    using entry_map = std::map<Cell, int>;

    basic_filling() = default;
    explicit basic_filling(Region shape) : shape_(std::move(shape)) {}

    const Region& shape() const { return shape_; }
    const entry_map& entries() const { return entries_; }

    int at(int c, int r) const {
        auto it = entries_.find({c, r});
        return it == entries_.end() ? 0 : it->second;
    }
    int at(Cell cell) const { return at(cell.col, cell.row); }

    void set(int c, int r, int v) {
        if (!shape_.has_cell(c, r))
            throw precondition_error("cell (" + std::to_string(c) + "," + std::to_string(r) +
                                     ") is not in the shape");
        if (v < 0)
            throw precondition_error("filling entries must be nonnegative");
        if (v == 0)
            entries_.erase({c, r});
        else
            entries_[{c, r}] = v;
    }
    void set(Cell cell, int v) { set(cell.col, cell.row, v); }

    int total() const {
        int s = 0;
        for (const auto& [cell, v] : entries_)
            s += v;
        return s;
    }

    int row_sum(int r) const {
        int s = 0;
        for (const auto& [cell, v] : entries_)
            if (cell.row == r)
                s += v;
        return s;
    }

    int col_sum(int c) const {
        int s = 0;
        for (const auto& [cell, v] : entries_)
            if (cell.col == c)
                s += v;
        return s;
    }

    bool empty() const { return entries_.empty(); }

    bool operator==(const basic_filling& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_;
    }

private:
    Region shape_;
    entry_map entries_;
};

using Filling = basic_filling<FerrersShape>;
using StackFilling = basic_filling<StackPolyomino>;

/// The strictest class the filling belongs to.
template <class Region>
FillingClass classify(const basic_filling<Region>& f) {
    std::map<int, int> per_row, per_col;
    bool zero_one = true, single = true;
    for (const auto& [cell, v] : f.entries()) {
        if (v != 1)
            zero_one = false;
        if (++per_row[cell.row] > 1 || ++per_col[cell.col] > 1)
            single = false;
    }
    if (!zero_one)
        return FillingClass::Arbitrary;
    return single ? FillingClass::PartialPermutation : FillingClass::ZeroOne;
}

inline Filling transpose_filling(const Filling& f) {
    Filling out(reflect(f.shape()));
    for (const auto& [cell, v] : f.entries())
        out.set(cell.row, cell.col, v);
    return out;
}

/// Same entries on the shape with pending edges removed.
inline Filling normalized(const Filling& f) {
    Filling out(f.shape().normalized());
    for (const auto& [cell, v] : f.entries())
        out.set(cell, v);
    return out;
}

// Chains ---------------------------------------------------------------------

enum class Vertical { weak_up, strict_up, weak_down, strict_down };
enum class Horizontal { weak_right, strict_right };

/// How a chain is measured: number of cells, sum of entries, or (for
/// collections of chains) entries as capacities.
enum class LengthMode { count, entry_sum, multiplicity };

/// A chain flavor: first letter vertical (N above, S below), second letter
/// horizontal (E right). Capital letter means weak, lowercase means strict.
struct ChainSpec {
    Vertical vertical = Vertical::weak_up;
    Horizontal horizontal = Horizontal::weak_right;
    LengthMode mode = LengthMode::count;
    bool require_rectangle = true;

    bool upward() const { return vertical == Vertical::weak_up || vertical == Vertical::strict_up; }

    /// b may follow a in a chain (a to the left of b).
    bool follows(Cell a, Cell b) const {
        if (a == b)
            return false;
        bool h = horizontal == Horizontal::weak_right ? b.col >= a.col : b.col > a.col;
        switch (vertical) {
        case Vertical::weak_up: return h && b.row >= a.row;
        case Vertical::strict_up: return h && b.row > a.row;
        case Vertical::weak_down: return h && b.row <= a.row;
        case Vertical::strict_down: return h && b.row < a.row;
        }
        return false;
    }

    std::string code() const {
        std::string s;
        switch (vertical) {
        case Vertical::weak_up: s = "N"; break;
        case Vertical::strict_up: s = "n"; break;
        case Vertical::weak_down: s = "S"; break;
        case Vertical::strict_down: s = "s"; break;
        }
        s += horizontal == Horizontal::weak_right ? "E" : "e";
        return s;
    }

    static ChainSpec parse(std::string_view code, LengthMode mode = LengthMode::count) {
        if (code.size() != 2)
            throw parse_error("chain code must have two letters: '" + std::string(code) + "'");
        ChainSpec s;
        switch (code[0]) {
        case 'N': s.vertical = Vertical::weak_up; break;
        case 'n': s.vertical = Vertical::strict_up; break;
        case 'S': s.vertical = Vertical::weak_down; break;
        case 's': s.vertical = Vertical::strict_down; break;
        default: throw parse_error("bad vertical letter in chain code '" + std::string(code) + "'");
        }
        switch (code[1]) {
        case 'E': s.horizontal = Horizontal::weak_right; break;
        case 'e': s.horizontal = Horizontal::strict_right; break;
        default: throw parse_error("bad horizontal letter in chain code '" + std::string(code) + "'");
        }
        s.mode = mode;
        return s;
    }
};

namespace detail {
    // Nonzero cells sorted so that every chain is a subsequence.
    template <class Region>
    std::vector<std::pair<Cell, int>> chain_order(const basic_filling<Region>& f, const ChainSpec& spec) {
        std::vector<std::pair<Cell, int>> v(f.entries().begin(), f.entries().end());
        bool up = spec.upward();
        std::sort(v.begin(), v.end(), [up](const auto& a, const auto& b) {
            if (a.first.col != b.first.col)
                return a.first.col < b.first.col;
            return up ? a.first.row < b.first.row : a.first.row > b.first.row;
        });
        return v;
    }
}

/// Length of the longest chain of the given flavor. A collection-only
/// multiplicity mode counts cells, as a single chain uses each cell once.
template <class Region>
int longest_chain(const basic_filling<Region>& f, const ChainSpec& spec) {
    auto v = detail::chain_order(f, spec);
    const int n = static_cast<int>(v.size());
    auto weight = [&](int i) { return spec.mode == LengthMode::entry_sum ? v[i].second : 1; };
    int best = 0;
    std::vector<int> dp(n);
    for (int s = 0; s < n; ++s) {
        // longest chain starting at s, for each possible last element
        std::fill(dp.begin(), dp.end(), -1);
        dp[s] = weight(s);
        for (int j = s + 1; j < n; ++j) {
            if (!spec.follows(v[s].first, v[j].first))
                continue;
            int m = -1;
            for (int i = s; i < j; ++i)
                if (dp[i] >= 0 && (i == s || spec.follows(v[i].first, v[j].first)))
                    m = std::max(m, dp[i]);
            if (m >= 0)
                dp[j] = m + weight(j);
        }
        for (int e = s; e < n; ++e) {
            if (dp[e] < 0)
                continue;
            if (spec.require_rectangle) {
                Cell a = v[s].first, b = v[e].first;
                if (!f.shape().contains_rectangle(a.col, std::min(a.row, b.row), b.col,
                                                  std::max(a.row, b.row)))
                    continue;
            }
            best = std::max(best, dp[e]);
        }
    }
    return best;
}

} // namespace growth
