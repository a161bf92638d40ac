#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace growth {

/// An integer partition, stored without trailing zeros.
///
/// Rows are addressed 1-based through row(); any row beyond length() reads
/// as 0, so a partition behaves like its infinite zero-padded sequence.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw precondition_error("partition part is negative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw precondition_error("partition parts are not weakly decreasing");
        }
    }

    int row(int k) const {
        return (k >= 1 && static_cast<std::size_t>(k) <= parts_.size()) ? parts_[k - 1] : 0;
    }

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;

    // Display order: by size, then lexicographically on the parts.
    std::strong_ordering operator<=>(const Partition& o) const {
        if (auto c = size() <=> o.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                      o.parts_.begin(), o.parts_.end());
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.row(1), 0);
    for (int j = 1; j <= lambda.row(1); ++j) {
        int len = 0;
        while (lambda.row(len + 1) >= j)
            ++len;
        cols[j - 1] = len;
    }
    return Partition(std::move(cols));
}

inline Partition partition_union(const Partition& mu, const Partition& nu) {
    std::vector<int> p(std::max(mu.length(), nu.length()));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::max(mu.row(i), nu.row(i));
    return Partition(std::move(p));
}

inline Partition intersect(const Partition& mu, const Partition& nu) {
    std::vector<int> p(std::min(mu.length(), nu.length()));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::min(mu.row(i), nu.row(i));
    return Partition(std::move(p));
}

/// True iff the diagram of `inner` lies inside the diagram of `outer`.
inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.row(i) > outer.row(i))
            return false;
    return true;
}

/// outer/inner has at most one square per column: outer_i >= inner_i >= outer_{i+1}.
inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner))
        return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (inner.row(i) < outer.row(i + 1))
            return false;
    return true;
}

/// outer/inner has at most one square per row.
inline bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner))
        return false;
    for (int i = 1; i <= outer.length(); ++i)
        if (outer.row(i) - inner.row(i) > 1)
            return false;
    return true;
}

inline Partition add_square_in_row(const Partition& lambda, int k) {
    if (k < 1)
        throw precondition_error("row index must be positive");
    if (k > 1 && lambda.row(k - 1) <= lambda.row(k))
        throw precondition_error("adding a square in row " + std::to_string(k) +
                                 " breaks weak decrease");
    std::vector<int> p = lambda.parts();
    if (static_cast<int>(p.size()) < k)
        p.resize(k, 0);
    ++p[k - 1];
    return Partition(std::move(p));
}

inline Partition remove_square_in_row(const Partition& lambda, int k) {
    if (k < 1 || lambda.row(k) == 0)
        throw precondition_error("no square to remove in row " + std::to_string(k));
    if (lambda.row(k) <= lambda.row(k + 1))
        throw precondition_error("removing a square in row " + std::to_string(k) +
                                 " breaks weak decrease");
    std::vector<int> p = lambda.parts();
    --p[k - 1];
    return Partition(std::move(p));
}

/// The unique row in which `bigger` exceeds `smaller`; they must differ by one square.
inline int diff_row(const Partition& bigger, const Partition& smaller) {
    if (bigger.size() != smaller.size() + 1 || !contains(bigger, smaller))
        throw precondition_error("partitions do not differ by exactly one square");
    for (int i = 1; i <= bigger.length(); ++i)
        if (bigger.row(i) != smaller.row(i))
            return i;
    throw precondition_error("partitions do not differ by exactly one square");
}

/// Every partition of n, largest part first, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (auto& p : partitions_of(n))
            out.push_back(std::move(p));
    return out;
}

// Text forms: compact "21" (empty prints "e") and bracketed "[2,1]".

inline std::string to_compact(const Partition& p) {
    if (p.empty())
        return "e";
    std::string s;
    for (int x : p.parts()) {
        if (x >= 10)
            s += "(" + std::to_string(x) + ")";
        else
            s += static_cast<char>('0' + x);
    }
    return s;
}

inline std::string to_bracketed(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

/// Accepts "e", "[]", "[2,1]", compact "21", or "(12)3" for parts above 9.
inline Partition parse_partition(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty() || t == "e" || t == "[]" || t == "0")
        return {};
    std::vector<int> parts;
    try {
        if (t.front() == '[') {
            if (t.back() != ']')
                throw parse_error("unterminated partition: " + std::string(text));
            std::size_t pos = 1;
            while (pos < t.size() - 1) {
                std::size_t next = t.find(',', pos);
                if (next == std::string::npos)
                    next = t.size() - 1;
                std::string num = t.substr(pos, next - pos);
                if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
                    throw parse_error("bad partition part in " + std::string(text));
                parts.push_back(std::stoi(num));
                pos = next + 1;
            }
        } else {
            // single digits, or "(12)" for parts above 9
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == '(') {
                    std::size_t close = t.find(')', i);
                    std::string num = close == std::string::npos ? "" : t.substr(i + 1, close - i - 1);
                    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
                        throw parse_error("bad compact partition: " + std::string(text));
                    parts.push_back(std::stoi(num));
                    i = close;
                } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
                    parts.push_back(t[i] - '0');
                } else {
                    throw parse_error("bad compact partition: " + std::string(text));
                }
            }
        }
        return Partition(std::move(parts));
    } catch (const precondition_error& e) {
        throw parse_error(std::string(e.what()) + ": " + std::string(text));
    }
}

} // namespace growth
