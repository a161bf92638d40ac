#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace growth {

/// Result of a backward rule: the bottom-left label and the cell entry.
struct CellPreimage {
    Partition rho;
    int m = 0;
    bool operator==(const CellPreimage&) const = default;
};

namespace detail {
    inline bool covers_at_most_one(const Partition& big, const Partition& small) {
        return contains(big, small) && big.size() - small.size() <= 1;
    }

    inline std::string frame_text(const Partition& a, const Partition& b, const Partition& c) {
        return to_compact(a) + "," + to_compact(b) + "," + to_compact(c);
    }
}

// Standard rules --------------------------------------------------------------

inline Partition forward_std(const Partition& rho, const Partition& mu, const Partition& nu, bool cross) {
    detail::require(detail::covers_at_most_one(mu, rho) && detail::covers_at_most_one(nu, rho),
                    "forward_std: mu and nu must contain rho and exceed it by at most one square (" +
                        detail::frame_text(rho, mu, nu) + ")");
    detail::require(!cross || (rho == mu && rho == nu),
                    "forward_std: a cross needs rho = mu = nu");

    const bool f1 = rho == mu && mu == nu && !cross;
    const bool f2 = rho == mu && mu != nu;
    const bool f3 = rho == nu && nu != mu;
    const bool f4 = rho != mu && rho != nu && mu != nu;
    const bool f5 = rho != mu && mu == nu;
    const bool f6 = rho == mu && mu == nu && cross;
    // the six cases partition the valid frames
    if (f1 + f2 + f3 + f4 + f5 + f6 != 1)
        throw precondition_error("forward_std: case analysis is not exclusive");

    if (f1)
        return rho;
    if (f2)
        return nu;
    if (f3)
        return mu;
    if (f4)
        return partition_union(mu, nu);
    if (f5)
        return add_square_in_row(mu, diff_row(mu, rho) + 1);
    return add_square_in_row(rho, 1);
}

inline CellPreimage backward_std(const Partition& mu, const Partition& nu, const Partition& lambda) {
    detail::require(detail::covers_at_most_one(lambda, mu) && detail::covers_at_most_one(lambda, nu),
                    "backward_std: lambda must contain mu and nu and exceed each by at most one square (" +
                        detail::frame_text(mu, nu, lambda) + ")");
    if (lambda == mu && mu == nu)
        return {lambda, 0};
    if (lambda == mu)
        return {nu, 0};
    if (lambda == nu)
        return {mu, 0};
    if (mu != nu)
        return {intersect(mu, nu), 0};
    int k = diff_row(lambda, mu);
    if (k == 1)
        return {mu, 1};
    return {remove_square_in_row(mu, k - 1), 0};
}

// RSK -------------------------------------------------------------------------

inline Partition forward_rsk(const Partition& rho, const Partition& mu, const Partition& nu, int m) {
    detail::require(m >= 0, "forward_rsk: negative entry");
    detail::require(is_horizontal_strip(mu, rho) && is_horizontal_strip(nu, rho),
                    "forward_rsk: mu/rho and nu/rho must be horizontal strips (" +
                        detail::frame_text(rho, mu, nu) + ")");
    std::vector<int> lam;
    int carry = m;
    for (int i = 1;; ++i) {
        int li = std::max(mu.row(i), nu.row(i)) + carry;
        if (li == 0)
            break;
        lam.push_back(li);
        carry = std::min(mu.row(i), nu.row(i)) - rho.row(i);
    }
    return Partition(std::move(lam));
}

inline CellPreimage backward_rsk(const Partition& mu, const Partition& nu, const Partition& lambda) {
    detail::require(is_horizontal_strip(lambda, mu) && is_horizontal_strip(lambda, nu),
                    "backward_rsk: lambda/mu and lambda/nu must be horizontal strips (" +
                        detail::frame_text(mu, nu, lambda) + ")");
    std::vector<int> rho(lambda.length(), 0);
    int carry = 0;
    for (int i = lambda.length(); i >= 1; --i) {
        rho[i - 1] = std::min(mu.row(i), nu.row(i)) - carry;
        carry = lambda.row(i) - std::max(mu.row(i), nu.row(i));
    }
    return {Partition(std::move(rho)), carry};
}

// Dual RSK --------------------------------------------------------------------

inline Partition forward_dualrsk(const Partition& rho, const Partition& mu, const Partition& nu, int m) {
    detail::require(m == 0 || m == 1, "forward_dualrsk: entry must be 0 or 1");
    detail::require(is_horizontal_strip(mu, rho) && is_vertical_strip(nu, rho),
                    "forward_dualrsk: mu/rho must be a horizontal strip and nu/rho a vertical strip (" +
                        detail::frame_text(rho, mu, nu) + ")");
    std::vector<int> lam;
    int carry = m;
    for (int i = 1;; ++i) {
        int li = std::max(mu.row(i) + carry, nu.row(i));
        if (li == 0)
            break;
        lam.push_back(li);
        carry = std::min(mu.row(i) + carry, nu.row(i)) - rho.row(i);
    }
    return Partition(std::move(lam));
}

inline CellPreimage backward_dualrsk(const Partition& mu, const Partition& nu, const Partition& lambda) {
    detail::require(is_vertical_strip(lambda, mu) && is_horizontal_strip(lambda, nu),
                    "backward_dualrsk: lambda/mu must be a vertical strip and lambda/nu a horizontal strip (" +
                        detail::frame_text(mu, nu, lambda) + ")");
    std::vector<int> rho(lambda.length(), 0);
    int carry = 0;
    for (int i = lambda.length(); i >= 1; --i) {
        rho[i - 1] = std::min(mu.row(i), nu.row(i) - carry);
        carry = lambda.row(i) - std::max(mu.row(i), nu.row(i) - carry);
    }
    return {Partition(std::move(rho)), carry};
}

// RSK' is dual RSK reflected in the diagonal: mu and nu trade places.

inline Partition forward_rskp(const Partition& rho, const Partition& mu, const Partition& nu, int m) {
    return forward_dualrsk(rho, nu, mu, m);
}

inline CellPreimage backward_rskp(const Partition& mu, const Partition& nu, const Partition& lambda) {
    return backward_dualrsk(nu, mu, lambda);
}

// Dual RSK' -------------------------------------------------------------------

inline Partition forward_dualrskp(const Partition& rho, const Partition& mu, const Partition& nu, int m) {
    detail::require(m >= 0, "forward_dualrskp: negative entry");
    detail::require(is_vertical_strip(mu, rho) && is_vertical_strip(nu, rho),
                    "forward_dualrskp: mu/rho and nu/rho must be vertical strips (" +
                        detail::frame_text(rho, mu, nu) + ")");
    std::vector<int> lam;
    int carry = m;
    for (int i = 1;; ++i) {
        int chi = (rho.row(i) == mu.row(i) && mu.row(i) == nu.row(i)) ? 1 : 0;
        int step = std::min(chi, carry);
        int li = std::max(mu.row(i), nu.row(i)) + step;
        if (li == 0)
            break;
        lam.push_back(li);
        carry = carry - step + std::min(mu.row(i), nu.row(i)) - rho.row(i);
    }
    return Partition(std::move(lam));
}

// The carry update tests mu_i = nu_i = lambda_i, the same condition used for
// rho_i; testing rho_i = mu_i = nu_i there does not invert the forward rule.
inline CellPreimage backward_dualrskp(const Partition& mu, const Partition& nu, const Partition& lambda) {
    detail::require(is_vertical_strip(lambda, mu) && is_vertical_strip(lambda, nu),
                    "backward_dualrskp: lambda/mu and lambda/nu must be vertical strips (" +
                        detail::frame_text(mu, nu, lambda) + ")");
    std::vector<int> rho(lambda.length(), 0);
    int carry = 0;
    for (int i = lambda.length(); i >= 1; --i) {
        int chi = (mu.row(i) == nu.row(i) && nu.row(i) == lambda.row(i)) ? 1 : 0;
        int step = std::min(chi, carry);
        rho[i - 1] = std::min(mu.row(i), nu.row(i)) - step;
        carry = carry - step + lambda.row(i) - std::max(mu.row(i), nu.row(i));
    }
    return {Partition(std::move(rho)), carry};
}

} // namespace growth
