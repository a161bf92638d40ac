#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bijection.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "filling.hpp"
#include "set_partition.hpp"
#include "shape.hpp"

namespace growth {

/// Enumeration limits. Override with GROWTH_BUDGET="cells=N,sum=N,fillings=N".
struct Budget {
    int max_cells = 12;               // 0-1 fillings; partial permutations only hit the fillings wall
    int max_sum = 5;                  // arbitrary fillings
    long long max_fillings = 10'000'000;

    static Budget from_env() {
        Budget b;
        const char* env = std::getenv("GROWTH_BUDGET");
        if (!env)
            return b;
        std::istringstream in(env);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw parse_error("GROWTH_BUDGET entries look like key=value");
            std::string key = item.substr(0, eq);
            long long val = 0;
            try {
                val = std::stoll(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw parse_error("GROWTH_BUDGET value for '" + key + "' is not a number");
            }
            if (key == "cells")
                b.max_cells = static_cast<int>(val);
            else if (key == "sum")
                b.max_sum = static_cast<int>(val);
            else if (key == "fillings")
                b.max_fillings = std::min<long long>(val, 10'000'000);
            else
                throw parse_error("unknown GROWTH_BUDGET key '" + key + "'");
        }
        return b;
    }
};

/// Which fillings to generate. The total is the number of 1's or the entry sum.
struct FillingConstraint {
    FillingClass cls = FillingClass::PartialPermutation;
    int min_total = 0;
    std::optional<int> max_total;   // required for arbitrary fillings
    std::optional<int> max_entry;
    bool symmetric_only = false;    // entries invariant under transposition

    static FillingConstraint exactly(FillingClass c, int n) { return {c, n, n, std::nullopt, false}; }
    static FillingConstraint at_most(FillingClass c, int n) { return {c, 0, n, std::nullopt, false}; }
    static FillingConstraint any(FillingClass c) { return {c, 0, std::nullopt, std::nullopt, false}; }
};

/// Visit every filling satisfying the constraint exactly once, in
/// lexicographic order over the column-major cell list with ascending values.
/// The visitor returns false to stop early.
template <class Region, class Visitor>
long long generate_fillings(const Region& shape, const FillingConstraint& k, Visitor&& visit,
                            const Budget& budget = Budget::from_env()) {
    const std::vector<Cell> cells = shape.cells();
    const int n = static_cast<int>(cells.size());
    const bool zero_one = k.cls != FillingClass::Arbitrary;
    if (k.cls == FillingClass::ZeroOne && n > budget.max_cells)
        throw budget_exceeded("shape has " + std::to_string(n) + " cells, budget is " +
                              std::to_string(budget.max_cells));
    if (!zero_one && (!k.max_total || *k.max_total > budget.max_sum))
        throw budget_exceeded("arbitrary fillings need an entry-sum bound within the budget (" +
                              std::to_string(budget.max_sum) + ")");
    const int cap = zero_one ? 1 : k.max_entry.value_or(*k.max_total);
    const int max_total = k.max_total.value_or(n);

    basic_filling<Region> f(shape);
    std::map<int, int> used_rows, used_cols;
    long long produced = 0;
    bool stop = false;

    std::function<void(int, int)> rec = [&](int idx, int total) {
        if (stop)
            return;
        if (idx == n) {
            if (total < k.min_total)
                return;
            if (k.symmetric_only) {
                for (const auto& [cell, v] : f.entries())
                    if (!shape.has_cell(cell.row, cell.col) || f.at(cell.row, cell.col) != v)
                        return;
            }
            if (++produced > budget.max_fillings)
                throw budget_exceeded("more than " + std::to_string(budget.max_fillings) + " fillings");
            if (!visit(static_cast<const basic_filling<Region>&>(f)))
                stop = true;
            return;
        }
        const Cell c = cells[idx];
        for (int v = 0; v <= cap && total + v <= max_total; ++v) {
            if (v > 0 && k.cls == FillingClass::PartialPermutation &&
                (used_rows[c.row] || used_cols[c.col]))
                break;
            if (v > 0) {
                f.set(c, v);
                ++used_rows[c.row];
                ++used_cols[c.col];
            }
            rec(idx + 1, total + v);
            if (v > 0) {
                f.set(c, 0);
                --used_rows[c.row];
                --used_cols[c.col];
            }
            if (stop)
                return;
        }
    };
    rec(0, 0);
    return produced;
}

template <class Region>
std::vector<basic_filling<Region>> all_fillings(const Region& shape, const FillingConstraint& k,
                                                const Budget& budget = Budget::from_env()) {
    std::vector<basic_filling<Region>> out;
    generate_fillings(shape, k, [&](const auto& f) {
        out.push_back(f);
        return true;
    }, budget);
    return out;
}

/// Rectangle-bound longest chain statistics (n, s, t) -> number of fillings.
struct CountTable {
    std::string shape;
    FillingClass cls = FillingClass::PartialPermutation;
    std::string x, y;
    std::map<std::tuple<int, int, int>, long long> counts;

    long long at(int n, int s, int t) const {
        auto it = counts.find({n, s, t});
        return it == counts.end() ? 0 : it->second;
    }

    long long total() const {
        long long s = 0;
        for (const auto& [key, c] : counts)
            s += c;
        return s;
    }

    /// CSV rows (shape, class, n, s, t, count).
    std::string to_csv(bool header = true) const {
        std::string out = header ? "shape,class,n," + x + "," + y + ",count\n" : "";
        for (const auto& [key, c] : counts) {
            auto [n, s, t] = key;
            out += shape + "," + to_string(cls) + "," + std::to_string(n) + "," + std::to_string(s) + "," +
                   std::to_string(t) + "," + std::to_string(c) + "\n";
        }
        return out;
    }
};

namespace detail {
    template <class Region>
    std::string region_id(const Region& r) {
        if constexpr (std::is_same_v<Region, FerrersShape>)
            return r.word().empty() ? "e" : r.word();
        else
            return to_string(r);
    }
}

template <class Region>
CountTable count_table(const Region& shape, const FillingConstraint& k, const ChainSpec& x, const ChainSpec& y,
                       const Budget& budget = Budget::from_env()) {
    CountTable t;
    t.shape = detail::region_id(shape);
    t.cls = k.cls;
    t.x = x.code();
    t.y = y.code();
    generate_fillings(shape, k, [&](const auto& f) {
        ++t.counts[{f.total(), longest_chain(f, x), longest_chain(f, y)}];
        return true;
    }, budget);
    return t;
}

// Verification reports -----------------------------------------------------------

struct VerificationReport {
    std::string theorem;
    std::string instance;
    bool pass = true;
    long long checked = 0;
    std::string detail;
    std::string witness;   // filling or set partition text on failure

    void fail(std::string why, std::string w) {
        if (pass) {
            pass = false;
            detail = std::move(why);
            witness = std::move(w);
        }
    }

    void merge(const VerificationReport& o) {
        checked += o.checked;
        if (pass && !o.pass) {
            pass = false;
            detail = o.instance + ": " + o.detail;
            witness = o.witness;
        }
    }
};

inline std::string filling_text(const Filling& f) {
    std::string s = "{\"shape\":\"" + f.shape().word() + "\",\"entries\":[";
    bool first = true;
    for (const auto& [cell, v] : f.entries()) {
        if (!first)
            s += ",";
        first = false;
        s += "[" + std::to_string(cell.col) + "," + std::to_string(cell.row) + "," + std::to_string(v) + "]";
    }
    return s + "]}";
}

namespace detail {
    // The table keyed (n, s, t) under flavors (a, b) must equal the table
    // keyed (n, t, s) under flavors (c, d).
    inline void compare_swapped(VerificationReport& rep, const CountTable& left, const CountTable& right) {
        for (const auto& [key, c] : left.counts) {
            auto [n, s, t] = key;
            if (right.at(n, t, s) != c) {
                rep.fail("count mismatch at n=" + std::to_string(n) + " (" + left.x + "=" + std::to_string(s) +
                             "," + left.y + "=" + std::to_string(t) + "): " + std::to_string(c) + " vs " +
                             std::to_string(right.at(n, t, s)),
                         "");
                return;
            }
        }
        if (left.total() != right.total())
            rep.fail("table totals differ", "");
    }

    inline bool same_entries_transposed(const Filling& f) {
        for (const auto& [cell, v] : f.entries())
            if (f.at(cell.row, cell.col) != v)
                return false;
        return true;
    }

    inline bool is_reversal(const OscillatingTableau& a, const OscillatingTableau& b) {
        if (a.seq.size() != b.seq.size())
            return false;
        for (std::size_t i = 0; i < a.seq.size(); ++i)
            if (a.seq[i] != b.seq[b.seq.size() - 1 - i])
                return false;
        return true;
    }
}

/// A statistic-swapping bijection on one shape: flavors (a,b) on the source,
/// (c,d) on the target, with target c = source b and target d = source a.
struct SwapSpec {
    std::string name;
    Variant from;
    ChainSpec a, b, c, d;
    FillingClass cls;
};

inline SwapSpec swap_spec_t2() {
    return {"T2", Variant::standard, ChainSpec::parse("NE"), ChainSpec::parse("SE"), ChainSpec::parse("NE"),
            ChainSpec::parse("SE"), FillingClass::PartialPermutation};
}

// N*(NE=s, se=t) = N*(ne=t, SE=s)
inline SwapSpec swap_spec_nes1() {
    return {"T2a-NES1", Variant::rsk, ChainSpec::parse("NE", LengthMode::entry_sum), ChainSpec::parse("se"),
            ChainSpec::parse("ne"), ChainSpec::parse("SE", LengthMode::entry_sum), FillingClass::Arbitrary};
}

// N01(nE=s, Se=t) = N01(Ne=t, sE=s)
inline SwapSpec swap_spec_nes2() {
    return {"T2a-NES2", Variant::dual_rsk, ChainSpec::parse("nE"), ChainSpec::parse("Se"), ChainSpec::parse("Ne"),
            ChainSpec::parse("sE"), FillingClass::ZeroOne};
}

/// Count equality plus a pointwise certificate for the conjugation map on
/// every filling of `shape` with total at most max_total.
inline VerificationReport verify_swap(const SwapSpec& sp, const FerrersShape& shape, int max_total,
                                      bool symmetric_only = false, const Budget& budget = Budget::from_env()) {
    VerificationReport rep;
    rep.theorem = symmetric_only ? sp.name + "sym" : sp.name;
    rep.instance = "shape=" + (shape.word().empty() ? std::string("e") : shape.word()) +
                   " max_total=" + std::to_string(max_total);
    FillingConstraint k = FillingConstraint::at_most(sp.cls, max_total);
    k.symmetric_only = symmetric_only;

    CountTable left = count_table(shape, k, sp.a, sp.b, budget);
    CountTable right = count_table(shape, k, sp.c, sp.d, budget);
    detail::compare_swapped(rep, left, right);

    const Variant to = conjugate_variant(sp.from);
    generate_fillings(shape, k, [&](const Filling& f) {
        ++rep.checked;
        Filling g = conjugation_map(f, sp.from);
        Filling back = conjugation_map(g, to);
        if (back != f) {
            rep.fail("map is not inverted by the reverse map", filling_text(f));
            return false;
        }
        if (!is_within(classify(g), sp.cls) || g.total() != f.total()) {
            rep.fail("image leaves the filling class or changes the total", filling_text(f));
            return false;
        }
        if (longest_chain(g, sp.c) != longest_chain(f, sp.b) || longest_chain(g, sp.d) != longest_chain(f, sp.a)) {
            rep.fail("statistics are not exchanged", filling_text(f));
            return false;
        }
        if (symmetric_only) {
            if (!detail::same_entries_transposed(g)) {
                rep.fail("image of a symmetric filling is not symmetric", filling_text(f));
                return false;
            }
            // reflecting the diagram reverses the tableau and swaps dual RSK with RSK'
            OscillatingTableau t = border_tableau(label_diagram(f, sp.from));
            OscillatingTableau r = border_tableau(label_diagram(transpose_filling(f), reflect_variant(sp.from)));
            if (!detail::is_reversal(t, r)) {
                rep.fail("tableau of a symmetric filling is not the reversal of its reflection", filling_text(f));
                return false;
            }
        }
        return true;
    }, budget);
    return rep;
}

// Set partition theorems -----------------------------------------------------------

/// Openers (minima that are not maxima) and closers (maxima that are not minima).
inline MinMax openers_closers(const SetPartition& p) {
    MinMax mm = min_max_blocks(p), out;
    for (int x : mm.mins)
        if (!mm.maxs.count(x))
            out.mins.insert(x);
    for (int x : mm.maxs)
        if (!mm.mins.count(x))
            out.maxs.insert(x);
    return out;
}

enum class PartitionRefinement { none, min_max, openers_closers };

/// Table of (refinement, s, t) counts for a pair of set partition statistics.
template <class StatA, class StatB>
std::map<std::tuple<MinMax, int, int>, long long> partition_table(int n, StatA a, StatB b, PartitionRefinement r) {
    std::map<std::tuple<MinMax, int, int>, long long> t;
    for (const auto& p : all_set_partitions(n)) {
        MinMax key;
        if (r == PartitionRefinement::min_max)
            key = min_max_blocks(p);
        else if (r == PartitionRefinement::openers_closers)
            key = openers_closers(p);
        ++t[{key, a(p), b(p)}];
    }
    return t;
}

template <class Table>
bool table_symmetric(const Table& t, std::string* why = nullptr) {
    for (const auto& [key, c] : t) {
        auto [m, s, u] = key;
        auto it = t.find({m, u, s});
        long long other = it == t.end() ? 0 : it->second;
        if (other != c) {
            if (why)
                *why = "s=" + std::to_string(s) + ", t=" + std::to_string(u) + ": " + std::to_string(c) +
                       " vs " + std::to_string(other);
            return false;
        }
    }
    return true;
}

/// Crossings and nestings for one n: (cross, nest) symmetric after refining by
/// (min, max), and the conjugation map is an involution exchanging them.
inline VerificationReport verify_crossings(int n, bool refine) {
    VerificationReport rep;
    rep.theorem = refine ? "T5" : "T4";
    rep.instance = "n=" + std::to_string(n);
    auto tbl = partition_table(n, [](const SetPartition& p) { return cross(p); },
                               [](const SetPartition& p) { return nest(p); },
                               refine ? PartitionRefinement::min_max : PartitionRefinement::none);
    std::string why;
    if (!table_symmetric(tbl, &why))
        rep.fail("count table not symmetric: " + why, "");
    for (const auto& p : all_set_partitions(n)) {
        ++rep.checked;
        SetPartition q = theorem4_map(p);
        if (theorem4_map(q) != p)
            rep.fail("map is not an involution", to_string(p));
        else if (cross(q) != nest(p) || nest(q) != cross(p))
            rep.fail("cross and nest not exchanged", to_string(p));
        else if (min_max_blocks(q) != min_max_blocks(p))
            rep.fail("block minima or maxima changed", to_string(p));
        else if (n > 0 && min_max_from_tableau(setpartition_to_vacillating(p)) != min_max_blocks(p))
            rep.fail("minima and maxima not detected from the tableau", to_string(p));
        if (!rep.pass)
            break;
    }
    return rep;
}

/// Enhanced crossings and nestings through hesitating tableaux. The map keeps
/// openers and closers; singletons and middle elements look alike to it.
inline VerificationReport verify_enhanced(int n, PartitionRefinement r) {
    VerificationReport rep;
    rep.theorem = "T6";
    rep.instance = "n=" + std::to_string(n) +
                   (r == PartitionRefinement::min_max ? " refined by min/max"
                    : r == PartitionRefinement::openers_closers ? " refined by openers/closers" : "");
    auto tbl = partition_table(n, [](const SetPartition& p) { return enhanced_cross(p); },
                               [](const SetPartition& p) { return enhanced_nest(p); }, r);
    std::string why;
    if (!table_symmetric(tbl, &why)) {
        // name a smallest offending partition
        std::string w;
        for (const auto& p : all_set_partitions(n)) {
            MinMax key = r == PartitionRefinement::min_max ? min_max_blocks(p)
                         : r == PartitionRefinement::openers_closers ? openers_closers(p) : MinMax{};
            auto it = tbl.find({key, enhanced_nest(p), enhanced_cross(p)});
            if (it == tbl.end()) {
                w = to_string(p);
                break;
            }
        }
        rep.fail("count table not symmetric: " + why, w);
    }
    for (const auto& p : all_set_partitions(n)) {
        ++rep.checked;
        SetPartition q = theorem6_map(p);
        if (theorem6_map(q) != p)
            rep.fail("map is not an involution", to_string(p));
        else if (enhanced_cross(q) != enhanced_nest(p) || enhanced_nest(q) != enhanced_cross(p))
            rep.fail("enhanced statistics not exchanged", to_string(p));
        else if (openers_closers(q) != openers_closers(p))
            rep.fail("openers or closers changed", to_string(p));
        if (!rep.pass)
            break;
    }
    return rep;
}

// Stack polyominoes ----------------------------------------------------------------

struct JonssonReport {
    std::string shape, sorted;
    int s = 0;
    int n_max = -1, n_max_sorted = -1;
    long long count = 0, count_sorted = 0;          // ne <= s at n_max
    long long count_eq = 0, count_eq_sorted = 0;    // ne == s at n_max
    bool pass = false;
};

namespace detail {
    template <class Region>
    void jonsson_side(const Region& r, int s, int& n_max, long long& le, long long& eq, const Budget& budget) {
        const ChainSpec ne = ChainSpec::parse("ne");
        std::map<int, std::pair<long long, long long>> by_n;
        generate_fillings(r, FillingConstraint::any(FillingClass::ZeroOne), [&](const auto& f) {
            int len = longest_chain(f, ne);
            if (len <= s) {
                auto& e = by_n[f.total()];
                ++e.first;
                if (len == s)
                    ++e.second;
            }
            return true;
        }, budget);
        n_max = by_n.empty() ? -1 : by_n.rbegin()->first;
        le = by_n.empty() ? 0 : by_n.rbegin()->second.first;
        eq = by_n.empty() ? 0 : by_n.rbegin()->second.second;
    }
}

/// Number of 0-1 fillings with the largest possible number of 1's whose
/// ne-chains have length at most s, on F and on F with sorted columns.
inline JonssonReport jonsson_check(const StackPolyomino& f, int s, const Budget& budget = Budget::from_env()) {
    JonssonReport rep;
    FerrersShape sorted = sort_columns(f);
    rep.shape = to_string(f);
    rep.sorted = to_string(StackPolyomino::from_ferrers(sorted));
    rep.s = s;
    detail::jonsson_side(f, s, rep.n_max, rep.count, rep.count_eq, budget);
    detail::jonsson_side(sorted, s, rep.n_max_sorted, rep.count_sorted, rep.count_eq_sorted, budget);
    rep.pass = rep.n_max == rep.n_max_sorted && rep.count == rep.count_sorted && rep.count_eq == rep.count_eq_sorted;
    return rep;
}

/// Evidence on whether the (ne, se) table of 0-1 fillings is symmetric.
/// This is an open question; the result is reported, never asserted.
struct Evidence {
    std::string shape;
    bool symmetric = true;
    std::string first_asymmetry;
    CountTable table;
};

template <class Region>
Evidence explore_ne_se(const Region& r, const Budget& budget = Budget::from_env()) {
    Evidence e;
    e.shape = detail::region_id(r);
    e.table = count_table(r, FillingConstraint::any(FillingClass::ZeroOne), ChainSpec::parse("ne"),
                          ChainSpec::parse("se"), budget);
    for (const auto& [key, c] : e.table.counts) {
        auto [n, s, t] = key;
        if (e.table.at(n, t, s) != c) {
            e.symmetric = false;
            e.first_asymmetry = "n=" + std::to_string(n) + " ne=" + std::to_string(s) + " se=" +
                                std::to_string(t) + ": " + std::to_string(c) + " vs " +
                                std::to_string(e.table.at(n, t, s));
            break;
        }
    }
    return e;
}

} // namespace growth
