#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "tableau.hpp"

namespace growth {

enum class BiwordOrder { bottom_weakly_increasing, bottom_decreasing };

/// Pairs (top, bottom); tops weakly increase, ties ordered by `order`.
/// Repeated pairs come from entries above 1 and are allowed in both orders.
struct TwoRowedArray {
    std::vector<std::pair<int, int>> pairs;
    BiwordOrder order = BiwordOrder::bottom_weakly_increasing;
    bool operator==(const TwoRowedArray&) const = default;

    bool is_sorted() const {
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            auto [t0, b0] = pairs[k - 1];
            auto [t1, b1] = pairs[k];
            if (t1 < t0)
                return false;
            if (t1 == t0 && (order == BiwordOrder::bottom_weakly_increasing ? b1 < b0 : b1 > b0))
                return false;
        }
        return true;
    }
};

/// Entry m in column j and row i contributes m pairs (j over i).
inline TwoRowedArray filling_to_biword(const Filling& f, BiwordOrder order) {
    const FerrersShape& s = f.shape();
    detail::require(s.normalized() == FerrersShape::rectangle(s.cols(), s.rows()).normalized(),
                    "two-rowed arrays are read from rectangular shapes");
    TwoRowedArray a;
    a.order = order;
    for (const auto& [cell, m] : f.entries())
        for (int k = 0; k < m; ++k)
            a.pairs.emplace_back(cell.col, cell.row);
    std::stable_sort(a.pairs.begin(), a.pairs.end(), [order](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first < y.first;
        return order == BiwordOrder::bottom_weakly_increasing ? x.second < y.second : x.second > y.second;
    });
    return a;
}

/// Position of a square: 0-based row and column in English order.
struct Square {
    int row = 0;
    int col = 0;
    bool operator==(const Square&) const = default;
};

/// x bumps the first entry in a row that is strictly larger.
inline Square row_insert(Tableau& t, int x) {
    for (int r = 0;; ++r) {
        if (r == static_cast<int>(t.rows.size())) {
            t.rows.push_back({x});
            return {r, 0};
        }
        auto& row = t.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {r, static_cast<int>(row.size()) - 1};
        }
        std::swap(x, *it);
    }
}

/// Undo a row insertion that ended at the outer corner `sq`; returns the inserted value.
inline int row_uninsert(Tableau& t, Square sq) {
    detail::require(sq.row < static_cast<int>(t.rows.size()) &&
                        sq.col == static_cast<int>(t.rows[sq.row].size()) - 1 &&
                        (sq.row + 1 == static_cast<int>(t.rows.size()) ||
                         static_cast<int>(t.rows[sq.row + 1].size()) <= sq.col),
                    "row_uninsert needs an outer corner");
    int y = t.rows[sq.row].back();
    t.rows[sq.row].pop_back();
    if (t.rows[sq.row].empty())
        t.rows.pop_back();
    for (int r = sq.row - 1; r >= 0; --r) {
        auto& row = t.rows[r];
        // last entry strictly smaller than y
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(y, *it);
    }
    return y;
}

/// x bumps the first entry in a column that is larger than or equal to x.
inline Square col_insert(Tableau& t, int x) {
    for (int c = 0;; ++c) {
        int r = 0;
        while (r < static_cast<int>(t.rows.size()) && c < static_cast<int>(t.rows[r].size()) &&
               t.rows[r][c] < x)
            ++r;
        bool in_column = r < static_cast<int>(t.rows.size()) && c < static_cast<int>(t.rows[r].size());
        if (!in_column) {
            if (r == static_cast<int>(t.rows.size()))
                t.rows.push_back({});
            t.rows[r].push_back(x);
            return {r, c};
        }
        std::swap(x, t.rows[r][c]);
    }
}

/// Insertion tableau P and recording tableau Q, both in the orientation read
/// off the growth diagram: for the dual variants P^t and Q^t are the tableaux
/// column insertion builds.
struct InsertionPair {
    Tableau P;
    Tableau Q;
    bool operator==(const InsertionPair&) const = default;
};

namespace detail {
    inline InsertionPair insert_all(const TwoRowedArray& a, bool by_columns) {
        InsertionPair out;
        for (auto [top, bottom] : a.pairs) {
            Square sq = by_columns ? col_insert(out.P, bottom) : row_insert(out.P, bottom);
            if (static_cast<int>(out.Q.rows.size()) <= sq.row)
                out.Q.rows.resize(sq.row + 1);
            out.Q.rows[sq.row].push_back(top);
        }
        if (by_columns) {
            out.P = transpose(out.P);
            out.Q = transpose(out.Q);
        }
        return out;
    }

    inline void require_order(const TwoRowedArray& a, BiwordOrder want, const char* who) {
        if (a.order != want || !a.is_sorted())
            throw precondition_error(std::string(who) + ": two-rowed array has the wrong ordering");
    }
}

inline InsertionPair rsk_insert(const TwoRowedArray& a) {
    detail::require_order(a, BiwordOrder::bottom_weakly_increasing, "rsk_insert");
    return detail::insert_all(a, false);
}

inline InsertionPair dual_rsk_insert(const TwoRowedArray& a) {
    detail::require_order(a, BiwordOrder::bottom_weakly_increasing, "dual_rsk_insert");
    return detail::insert_all(a, true);
}

inline InsertionPair rskp_insert(const TwoRowedArray& a) {
    detail::require_order(a, BiwordOrder::bottom_decreasing, "rskp_insert");
    return detail::insert_all(a, false);
}

inline InsertionPair dual_rskp_insert(const TwoRowedArray& a) {
    detail::require_order(a, BiwordOrder::bottom_decreasing, "dual_rskp_insert");
    return detail::insert_all(a, true);
}

inline BiwordOrder biword_order_for(Variant v) {
    return (v == Variant::rsk_prime || v == Variant::dual_rsk_prime) ? BiwordOrder::bottom_decreasing
                                                                      : BiwordOrder::bottom_weakly_increasing;
}

/// Run the insertion algorithm matching a growth variant on a rectangular filling.
inline InsertionPair insert_filling(const Filling& f, Variant v) {
    TwoRowedArray a = filling_to_biword(f, biword_order_for(v));
    switch (v) {
    case Variant::standard:
    case Variant::rsk: return rsk_insert(a);
    case Variant::dual_rsk: return dual_rsk_insert(a);
    case Variant::rsk_prime: return rskp_insert(a);
    case Variant::dual_rsk_prime: return dual_rskp_insert(a);
    }
    return {};
}

/// (P,Q) from the border of a labelled rectangle: entry j fills
/// label(j,top)/label(j-1,top), entry i fills label(right,i)/label(right,i-1).
inline InsertionPair border_pq(const GrowthDiagram& d) {
    const int q = d.shape().cols(), p = d.shape().rows();
    auto build = [](auto label_at, int steps) {
        Tableau t;
        for (int k = 1; k <= steps; ++k) {
            const Partition& prev = label_at(k - 1);
            const Partition& cur = label_at(k);
            for (int r = 1; r <= cur.length(); ++r) {
                if (static_cast<int>(t.rows.size()) < r)
                    t.rows.resize(r);
                for (int c = prev.row(r); c < cur.row(r); ++c)
                    t.rows[r - 1].push_back(k);
            }
        }
        return t;
    };
    InsertionPair out;
    out.Q = build([&](int j) -> const Partition& { return d.label(j, p); }, q);
    out.P = build([&](int i) -> const Partition& { return d.label(q, i); }, p);
    return out;
}

inline std::string to_string(const TwoRowedArray& a) {
    std::string top, bottom;
    for (std::size_t k = 0; k < a.pairs.size(); ++k) {
        if (k) {
            top += " ";
            bottom += " ";
        }
        top += std::to_string(a.pairs[k].first);
        bottom += std::to_string(a.pairs[k].second);
    }
    return top + "\n" + bottom;
}

} // namespace growth
