#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "partition.hpp"

namespace growth {

/// Rows of positive integers in English order: row 0 is the longest.
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;

    bool empty() const { return rows.empty(); }

    int size() const {
        int s = 0;
        for (const auto& r : rows)
            s += static_cast<int>(r.size());
        return s;
    }

    Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows)
            p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }

    // rows weakly increasing, columns strictly increasing
    bool is_semistandard() const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty())
                return false;
            if (i > 0 && rows[i].size() > rows[i - 1].size())
                return false;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j > 0 && rows[i][j] < rows[i][j - 1])
                    return false;
                if (i > 0 && rows[i][j] <= rows[i - 1][j])
                    return false;
            }
        }
        return true;
    }

    /// Rows and columns strictly increasing, all entries distinct.
    bool is_standard_partial() const {
        if (!is_semistandard())
            return false;
        std::vector<int> all;
        for (const auto& r : rows) {
            for (std::size_t j = 1; j < r.size(); ++j)
                if (r[j] == r[j - 1])
                    return false;
            all.insert(all.end(), r.begin(), r.end());
        }
        std::sort(all.begin(), all.end());
        return std::adjacent_find(all.begin(), all.end()) == all.end();
    }
};

inline Tableau transpose(const Tableau& t) {
    Tableau out;
    if (t.rows.empty())
        return out;
    for (std::size_t j = 0; j < t.rows[0].size(); ++j) {
        std::vector<int> col;
        for (const auto& r : t.rows)
            if (j < r.size())
                col.push_back(r[j]);
        out.rows.push_back(std::move(col));
    }
    return out;
}

/// "[1,1,2],[3,4]"; the empty tableau prints as "[]".
inline std::string to_string(const Tableau& t) {
    if (t.rows.empty())
        return "[]";
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i)
            s += ",";
        s += "[";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j)
                s += ",";
            s += std::to_string(t.rows[i][j]);
        }
        s += "]";
    }
    return s;
}

} // namespace growth
