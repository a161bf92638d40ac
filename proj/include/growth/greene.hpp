#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "filling.hpp"

namespace growth {

/// Limits for the exhaustive chain-collection search.
struct GreeneBudget {
    int max_cells = 16;   // cells of the shape
    int max_items = 8;    // cells or unit tokens inside the region
    int max_k = 3;
};

/// Greatest size of a union of k chains of the given flavor inside the
/// rectangle left of and below corner c. Sizes follow spec.mode: cells
/// (count), entry sums (entry_sum) or unit tokens where an entry e may serve
/// at most e chains (multiplicity).
///
/// Brute force: every subset of items is scored by its minimum chain cover,
/// which is found by dynamic programming over submasks.
template <class Region>
int greene_oracle(const basic_filling<Region>& f, const ChainSpec& spec, int k, Corner c,
                  const GreeneBudget& budget = {}) {
    if (k < 1)
        throw precondition_error("k must be positive");
    if (!f.shape().has_corner(c.x, c.y))
        throw precondition_error("corner is not in the shape");
    if (k > budget.max_k || f.shape().num_cells() > budget.max_cells)
        throw budget_exceeded("greene oracle instance too large");

    struct Item {
        Cell cell;
        int weight;
    };
    std::vector<Item> items;
    for (const auto& [cell, v] : f.entries()) {
        if (cell.col > c.x || cell.row > c.y)
            continue;
        if (spec.mode == LengthMode::multiplicity) {
            for (int t = 0; t < v; ++t)
                items.push_back({cell, 1});
        } else {
            items.push_back({cell, spec.mode == LengthMode::entry_sum ? v : 1});
        }
    }
    const int n = static_cast<int>(items.size());
    if (n > budget.max_items)
        throw budget_exceeded("greene oracle: too many items in region");
    if (n == 0)
        return 0;

    std::vector<std::uint32_t> comparable(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (spec.follows(items[i].cell, items[j].cell) ||
                           spec.follows(items[j].cell, items[i].cell)))
                comparable[i] |= 1u << j;

    const std::uint32_t full = (1u << n) - 1;
    std::vector<char> is_chain(full + 1, 0);
    is_chain[0] = 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
        int low = __builtin_ctz(m);
        std::uint32_t rest = m & (m - 1);
        is_chain[m] = is_chain[rest] && (rest & ~comparable[low]) == 0;
    }

    // cover[m]: fewest chains whose union is m
    std::vector<int> cover(full + 1, 0);
    std::vector<int> weight(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        int low = __builtin_ctz(m);
        weight[m] = weight[m & (m - 1)] + items[low].weight;
        std::uint32_t lowbit = 1u << low;
        std::uint32_t rest = m ^ lowbit;
        int best = n + 1;
        // chains through the lowest item
        for (std::uint32_t s = rest;; s = (s - 1) & rest) {
            std::uint32_t chain = s | lowbit;
            if (is_chain[chain])
                best = std::min(best, 1 + cover[m ^ chain]);
            if (s == 0)
                break;
        }
        cover[m] = best;
    }

    int best = 0;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (cover[m] <= k)
            best = std::max(best, weight[m]);
    return best;
}

} // namespace growth
