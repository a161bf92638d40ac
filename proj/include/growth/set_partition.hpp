#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "tableau.hpp"

namespace growth {

using ArcPair = std::pair<int, int>;

/// Set partition of {1..n}. Blocks are kept sorted, and ordered by their minima.
class SetPartition {
public:
    SetPartition() = default;

    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        std::vector<int> seen(n_ + 1, 0);
        for (auto& b : blocks_) {
            if (b.empty())
                throw precondition_error("set partition has an empty block");
            std::sort(b.begin(), b.end());
            for (int x : b) {
                if (x < 1 || x > n_)
                    throw precondition_error("set partition element out of range");
                if (seen[x]++)
                    throw precondition_error("set partition blocks overlap");
            }
        }
        for (int x = 1; x <= n_; ++x)
            if (!seen[x])
                throw precondition_error("set partition does not cover " + std::to_string(x));
        std::sort(blocks_.begin(), blocks_.end());
    }

    /// Ground set inferred as {1..max element}.
    explicit SetPartition(std::vector<std::vector<int>> blocks)
        : SetPartition(max_element_of(blocks), blocks) {}

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    bool operator==(const SetPartition&) const = default;
    auto operator<=>(const SetPartition&) const = default;

    /// Build from arcs (i,j), i<j, where each element has at most one arc to
    /// the right and one to the left.
    static SetPartition from_arcs(int n, const std::vector<ArcPair>& arcs) {
        std::vector<int> next(n + 1, 0), prev(n + 1, 0);
        for (auto [i, j] : arcs) {
            if (!(1 <= i && i < j && j <= n))
                throw precondition_error("arc out of range");
            if (next[i] || prev[j])
                throw precondition_error("element with two arcs on the same side");
            next[i] = j;
            prev[j] = i;
        }
        std::vector<std::vector<int>> blocks;
        for (int x = 1; x <= n; ++x) {
            if (prev[x])
                continue;
            std::vector<int> b;
            for (int y = x; y; y = next[y])
                b.push_back(y);
            blocks.push_back(std::move(b));
        }
        return SetPartition(n, std::move(blocks));
    }

private:
    static int max_element_of(const std::vector<std::vector<int>>& blocks) {
        int m = 0;
        for (const auto& b : blocks)
            for (int x : b)
                m = std::max(m, x);
        return m;
    }

    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Perfect matching of {1..2n}, pairs stored as (i,j) with i<j, sorted.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<ArcPair> pairs) : pairs_(std::move(pairs)) {
        for (auto& [i, j] : pairs_)
            if (i > j)
                std::swap(i, j);
        std::sort(pairs_.begin(), pairs_.end());
        const int m = 2 * static_cast<int>(pairs_.size());
        std::vector<int> seen(m + 1, 0);
        for (auto [i, j] : pairs_) {
            if (i < 1 || j > m || i == j || seen[i]++ || seen[j]++)
                throw precondition_error("not a perfect matching of {1..2n}");
        }
    }

    int n() const { return static_cast<int>(pairs_.size()); }
    const std::vector<ArcPair>& pairs() const { return pairs_; }
    bool operator==(const Matching&) const = default;

    SetPartition as_set_partition() const {
        std::vector<std::vector<int>> blocks;
        for (auto [i, j] : pairs_)
            blocks.push_back({i, j});
        return SetPartition(2 * n(), std::move(blocks));
    }

private:
    std::vector<ArcPair> pairs_;
};

// Representations and statistics ---------------------------------------------

inline std::vector<ArcPair> standard_representation(const SetPartition& p) {
    std::vector<ArcPair> out;
    for (const auto& b : p.blocks())
        for (std::size_t k = 1; k < b.size(); ++k)
            out.emplace_back(b[k - 1], b[k]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Standard representation plus (i,i) for each singleton block {i}.
inline std::vector<ArcPair> enhanced_representation(const SetPartition& p) {
    auto out = standard_representation(p);
    for (const auto& b : p.blocks())
        if (b.size() == 1)
            out.emplace_back(b[0], b[0]);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
    // Largest set of arcs that pairwise satisfy `related` (a before b in i order).
    inline int max_clique(std::vector<ArcPair> arcs, const std::function<bool(ArcPair, ArcPair)>& related) {
        std::sort(arcs.begin(), arcs.end());
        const int n = static_cast<int>(arcs.size());
        int best = 0;
        std::vector<int> chosen;
        std::function<void(int)> rec = [&](int from) {
            best = std::max(best, static_cast<int>(chosen.size()));
            if (static_cast<int>(chosen.size()) + (n - from) <= best)
                return;
            for (int i = from; i < n; ++i) {
                bool ok = std::all_of(chosen.begin(), chosen.end(),
                                      [&](int c) { return related(arcs[c], arcs[i]); });
                if (!ok)
                    continue;
                chosen.push_back(i);
                rec(i + 1);
                chosen.pop_back();
            }
        };
        rec(0);
        return best;
    }
}

// a=(i1,j1) precedes b=(i2,j2) in i order
inline int cross(const SetPartition& p) {
    return detail::max_clique(standard_representation(p), [](ArcPair a, ArcPair b) {
        return a.first < b.first && b.first < a.second && a.second < b.second;
    });
}

inline int nest(const SetPartition& p) {
    return detail::max_clique(standard_representation(p), [](ArcPair a, ArcPair b) {
        return a.first < b.first && b.second < a.second;
    });
}

inline int enhanced_cross(const SetPartition& p) {
    return detail::max_clique(enhanced_representation(p), [](ArcPair a, ArcPair b) {
        return a.first < b.first && b.first <= a.second && a.second < b.second;
    });
}

inline int enhanced_nest(const SetPartition& p) {
    return detail::max_clique(enhanced_representation(p), [](ArcPair a, ArcPair b) {
        return a.first < b.first && b.first <= b.second && b.second < a.second;
    });
}

struct MinMax {
    std::set<int> mins;
    std::set<int> maxs;
    bool operator==(const MinMax&) const = default;
    auto operator<=>(const MinMax&) const = default;
};

inline MinMax min_max_blocks(const SetPartition& p) {
    MinMax out;
    for (const auto& b : p.blocks()) {
        out.mins.insert(b.front());
        out.maxs.insert(b.back());
    }
    return out;
}

/// Block minima and maxima read off a vacillating tableau: i is a minimum when
/// the step at row i leaves the label unchanged, a maximum when the step at
/// column i does.
inline MinMax min_max_from_tableau(const OscillatingTableau& t) {
    detail::require(t.seq.size() % 2 == 1, "tableau must have an even number of steps");
    const int n = static_cast<int>(t.seq.size() / 2);
    MinMax out;
    for (int i = 1; i <= n; ++i) {
        if (t.seq[2 * i - 2] == t.seq[2 * i - 1])
            out.mins.insert(i);
        if (t.seq[2 * i - 1] == t.seq[2 * i])
            out.maxs.insert(i);
    }
    return out;
}

// Set partitions and triangular fillings ----------------------------------------

/// Arc (i,j) becomes a 1 in column i and the j-th row from above of the staircase.
inline Filling setpartition_to_filling(const SetPartition& p) {
    const int n = p.n();
    Filling f(FerrersShape::staircase(std::max(n, 1)));
    for (auto [i, j] : standard_representation(p))
        f.set(i, n + 1 - j, 1);
    return f;
}

inline SetPartition filling_to_setpartition(const Filling& f) {
    const int n = f.shape().rows();
    detail::require(f.shape() == FerrersShape::staircase(std::max(n, 1)),
                    "filling must live on a staircase with pending edges");
    if (classify(f) != FillingClass::PartialPermutation)
        throw class_mismatch("set partition fillings have at most one 1 per row and column");
    std::vector<ArcPair> arcs;
    for (const auto& [cell, v] : f.entries())
        arcs.emplace_back(cell.col, n + 1 - cell.row);
    return SetPartition::from_arcs(n, arcs);
}

inline OscillatingTableau setpartition_to_vacillating(const SetPartition& p) {
    if (p.n() == 0)
        return {"", {Partition{}}, Variant::standard};
    return border_tableau(label_diagram(setpartition_to_filling(p), Variant::standard));
}

/// Vacillating: even steps add at most one square, odd steps remove at most one.
inline bool is_vacillating(const std::vector<Partition>& seq) {
    if (seq.size() % 2 == 0 || !seq.front().empty() || !seq.back().empty())
        return false;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const Partition& a = seq[i - 1];
        const Partition& b = seq[i];
        bool odd = i % 2 == 1;
        const Partition& big = odd ? a : b;
        const Partition& small = odd ? b : a;
        if (!contains(big, small) || big.size() - small.size() > 1)
            return false;
    }
    return true;
}

inline SetPartition vacillating_to_setpartition(const OscillatingTableau& t) {
    if (!is_vacillating(t.seq))
        throw precondition_error("not a vacillating tableau");
    const int n = static_cast<int>(t.seq.size() / 2);
    if (n == 0)
        return {};
    FerrersShape s = FerrersShape::staircase(n);
    Reconstruction r = reconstruct(s, {s.word(), t.seq, Variant::standard});
    return filling_to_setpartition(r.filling);
}

// Pairs of a set partition with a partial standard tableau ------------------------

/// Bottom side of the staircase labelled by the growth chain of T.
inline OscillatingTableau pair_to_vacillating(const SetPartition& p, const Tableau& t) {
    const int n = p.n();
    detail::require(n >= 1, "empty ground set");
    detail::require(t.is_standard_partial(), "T must be a partial standard tableau");
    MinMax mm = min_max_blocks(p);
    for (const auto& row : t.rows)
        for (int x : row)
            detail::require(mm.maxs.count(x) == 1, "entries of T must be block maxima");
    Boundary b;
    b.left.assign(n + 1, Partition{});
    for (int l = 0; l <= n; ++l) {
        std::vector<int> shape;
        for (const auto& row : t.rows) {
            int len = static_cast<int>(std::count_if(row.begin(), row.end(), [l](int x) { return x <= l; }));
            if (len)
                shape.push_back(len);
        }
        b.bottom.push_back(Partition(std::move(shape)));
    }
    return border_tableau(label_diagram(setpartition_to_filling(p), Variant::standard, b));
}

inline std::pair<SetPartition, Tableau> vacillating_to_pair(const OscillatingTableau& t) {
    detail::require(t.seq.size() % 2 == 1 && t.seq.size() >= 3, "bad tableau length");
    const int n = static_cast<int>(t.seq.size() / 2);
    FerrersShape s = FerrersShape::staircase(n);
    GrowthDiagram d = reconstruct_diagram(s, {s.word(), t.seq, Variant::standard});
    for (int y = 0; y <= s.rows(); ++y)
        detail::require(d.label(0, y).empty(), "left side labels must be empty");
    Tableau tab;
    for (int l = 1; l <= n; ++l) {
        const Partition& prev = d.label(l - 1, 0);
        const Partition& cur = d.label(l, 0);
        if (prev == cur)
            continue;
        int row = diff_row(cur, prev);
        if (static_cast<int>(tab.rows.size()) < row)
            tab.rows.resize(row);
        tab.rows[row - 1].push_back(l);
    }
    return {filling_to_setpartition(d.filling()), tab};
}

// Hesitating tableaux -------------------------------------------------------------

namespace detail {
    // j-th row from above gets an extra cell in column j when j is a singleton
    // or a middle element of its block.
    inline std::vector<bool> hesitating_extras(const SetPartition& p) {
        std::vector<bool> extra(p.n() + 1, false);
        for (const auto& b : p.blocks()) {
            if (b.size() == 1)
                extra[b[0]] = true;
            for (std::size_t k = 1; k + 1 < b.size(); ++k)
                extra[b[k]] = true;
        }
        return extra;
    }

    inline FerrersShape hesitating_shape(int n, const std::vector<bool>& extra) {
        std::string w;
        int x = 0;
        for (int j = 1; j <= n; ++j) {
            for (int len = j - 1 + (extra[j] ? 1 : 0); x < len; ++x)
                w += 'R';
            w += 'D';
        }
        for (; x < n; ++x)
            w += 'R';
        return FerrersShape(w);
    }
}

inline Filling setpartition_to_hesitating_filling(const SetPartition& p) {
    const int n = p.n();
    auto extra = detail::hesitating_extras(p);
    Filling f(detail::hesitating_shape(n, extra));
    for (auto [i, j] : enhanced_representation(p))
        f.set(i, n + 1 - j, 1);
    return f;
}

inline OscillatingTableau setpartition_to_hesitating(const SetPartition& p) {
    if (p.n() == 0)
        return {"", {Partition{}}, Variant::standard};
    return border_tableau(label_diagram(setpartition_to_hesitating_filling(p), Variant::standard));
}

/// Hesitating: for each i, either (=, add), (remove, =) or (add, remove).
inline bool is_hesitating(const std::vector<Partition>& seq) {
    if (seq.size() % 2 == 0 || !seq.front().empty() || !seq.back().empty())
        return false;
    auto adds = [](const Partition& a, const Partition& b) {
        return contains(b, a) && b.size() == a.size() + 1;
    };
    for (std::size_t i = 1; 2 * i < seq.size(); ++i) {
        const Partition& a = seq[2 * i - 2];
        const Partition& b = seq[2 * i - 1];
        const Partition& c = seq[2 * i];
        bool t1 = a == b && adds(b, c);
        bool t2 = adds(b, a) && b == c;
        bool t3 = adds(a, b) && adds(c, b);
        if (!(t1 || t2 || t3))
            return false;
    }
    return true;
}

inline SetPartition hesitating_to_setpartition(const OscillatingTableau& t) {
    if (!is_hesitating(t.seq))
        throw precondition_error("not a hesitating tableau");
    const int n = static_cast<int>(t.seq.size() / 2);
    if (n == 0)
        return {};
    std::vector<bool> extra(n + 1, false);
    for (int i = 1; i <= n; ++i)
        extra[i] = t.seq[2 * i - 1].size() > t.seq[2 * i - 2].size();
    FerrersShape s = detail::hesitating_shape(n, extra);
    Reconstruction r = reconstruct(s, {s.word(), t.seq, Variant::standard});
    detail::require(r.boundary.trivial(), "hesitating tableau does not close up");
    std::vector<ArcPair> arcs;
    for (const auto& [cell, v] : r.filling.entries()) {
        int j = n + 1 - cell.row;
        if (cell.col == j) {
            detail::require(extra[j], "diagonal cross outside an added cell");
            continue;
        }
        arcs.emplace_back(cell.col, j);
    }
    SetPartition p = SetPartition::from_arcs(n, arcs);
    detail::require(setpartition_to_hesitating_filling(p) == r.filling,
                    "hesitating tableau does not come from a set partition");
    return p;
}

// Matchings -----------------------------------------------------------------------

/// Growth on the staircase for {1..2n}, keeping only the even-indexed labels.
/// The word records R for a step that adds a square and D for one that removes.
inline OscillatingTableau matching_to_oscillating(const Matching& m) {
    OscillatingTableau out;
    out.variant = Variant::standard;
    out.seq.push_back(Partition{});
    if (m.n() == 0)
        return out;
    OscillatingTableau vac = setpartition_to_vacillating(m.as_set_partition());
    for (std::size_t i = 2; i < vac.seq.size(); i += 2) {
        const Partition& prev = out.seq.back();
        const Partition& cur = vac.seq[i];
        out.word += cur.size() > prev.size() ? 'R' : 'D';
        out.seq.push_back(cur);
    }
    return out;
}

inline Matching oscillating_to_matching(const OscillatingTableau& t) {
    const auto& seq = t.seq;
    detail::require(!seq.empty() && seq.front().empty() && seq.back().empty(),
                    "oscillating tableau must start and end empty");
    std::vector<Partition> vac{seq[0]};
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const Partition& a = seq[i - 1];
        const Partition& b = seq[i];
        bool grow = contains(b, a) && b.size() == a.size() + 1;
        bool shrink = contains(a, b) && a.size() == b.size() + 1;
        detail::require(grow || shrink, "oscillating steps must change exactly one square");
        vac.push_back(grow ? a : b);
        vac.push_back(b);
    }
    if (seq.size() == 1)
        return {};
    SetPartition p = vacillating_to_setpartition({"", vac, Variant::standard});
    std::vector<ArcPair> pairs;
    for (const auto& b : p.blocks()) {
        detail::require(b.size() == 2, "tableau does not encode a matching");
        pairs.emplace_back(b[0], b[1]);
    }
    return Matching(std::move(pairs));
}

inline int cross(const Matching& m) { return cross(m.as_set_partition()); }
inline int nest(const Matching& m) { return nest(m.as_set_partition()); }

// Statistic-swapping maps -----------------------------------------------------------

/// Set partition with cross and nest exchanged; block minima and maxima kept.
inline SetPartition theorem4_map(const SetPartition& p) {
    if (p.n() == 0)
        return p;
    return vacillating_to_setpartition(conjugate_tableau(setpartition_to_vacillating(p)));
}

/// Same with the enhanced statistics, through hesitating tableaux.
inline SetPartition theorem6_map(const SetPartition& p) {
    if (p.n() == 0)
        return p;
    return hesitating_to_setpartition(conjugate_tableau(setpartition_to_hesitating(p)));
}

// Enumeration helpers -----------------------------------------------------------------

/// Every set partition of {1..n} in restricted-growth order.
inline std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int x) {
        if (x > n) {
            out.emplace_back(n, blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(x);
            rec(x + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({x});
        rec(x + 1);
        blocks.pop_back();
    };
    rec(1);
    return out;
}

/// Every perfect matching of {1..2n}.
inline std::vector<Matching> all_matchings(int n) {
    std::vector<Matching> out;
    std::vector<ArcPair> pairs;
    std::vector<bool> used(2 * n + 1, false);
    std::function<void()> rec = [&] {
        int first = 1;
        while (first <= 2 * n && used[first])
            ++first;
        if (first > 2 * n) {
            out.emplace_back(pairs);
            return;
        }
        used[first] = true;
        for (int j = first + 1; j <= 2 * n; ++j) {
            if (used[j])
                continue;
            used[j] = true;
            pairs.emplace_back(first, j);
            rec();
            pairs.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec();
    return out;
}

// Text forms -------------------------------------------------------------------------

/// "1 4 5 7 | 2 6 | 3"
inline std::string to_string(const SetPartition& p) {
    std::string s;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b)
            s += " | ";
        for (std::size_t k = 0; k < p.blocks()[b].size(); ++k) {
            if (k)
                s += " ";
            s += std::to_string(p.blocks()[b][k]);
        }
    }
    return s;
}

inline SetPartition parse_set_partition(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::string chunk;
    std::istringstream in{std::string(text)};
    while (std::getline(in, chunk, '|')) {
        std::istringstream items(chunk);
        std::vector<int> b;
        std::string tok;
        while (items >> tok) {
            if (!std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw parse_error("bad set partition element '" + tok + "'");
            b.push_back(std::stoi(tok));
        }
        if (b.empty())
            throw parse_error("empty block in set partition '" + std::string(text) + "'");
        blocks.push_back(std::move(b));
    }
    try {
        return SetPartition(std::move(blocks));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

/// "1-4 2-6 3-5"
inline std::string to_string(const Matching& m) {
    std::string s;
    for (std::size_t k = 0; k < m.pairs().size(); ++k) {
        if (k)
            s += " ";
        s += std::to_string(m.pairs()[k].first) + "-" + std::to_string(m.pairs()[k].second);
    }
    return s;
}

inline Matching parse_matching(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<ArcPair> pairs;
    while (in >> tok) {
        auto dash = tok.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
            throw parse_error("bad matching pair '" + tok + "'");
        std::string a = tok.substr(0, dash), b = tok.substr(dash + 1);
        if (!std::all_of(a.begin(), a.end(), ::isdigit) || !std::all_of(b.begin(), b.end(), ::isdigit))
            throw parse_error("bad matching pair '" + tok + "'");
        pairs.emplace_back(std::stoi(a), std::stoi(b));
    }
    try {
        return Matching(std::move(pairs));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace growth
