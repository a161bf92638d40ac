#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "filling.hpp"
#include "local_rules.hpp"
#include "partition.hpp"
#include "shape.hpp"

namespace growth {

enum class Variant { standard, rsk, dual_rsk, rsk_prime, dual_rsk_prime };

inline constexpr Variant all_variants[] = {Variant::standard, Variant::rsk, Variant::dual_rsk,
                                           Variant::rsk_prime, Variant::dual_rsk_prime};

inline const char* to_string(Variant v) {
    switch (v) {
    case Variant::standard: return "standard";
    case Variant::rsk: return "rsk";
    case Variant::dual_rsk: return "dualrsk";
    case Variant::rsk_prime: return "rskp";
    case Variant::dual_rsk_prime: return "dualrskp";
    }
    return "?";
}

inline Variant parse_variant(std::string_view s) {
    for (Variant v : all_variants)
        if (s == to_string(v))
            return v;
    throw parse_error("unknown variant '" + std::string(s) + "'");
}

/// Loosest filling class each variant accepts.
inline FillingClass filling_class_for(Variant v) {
    switch (v) {
    case Variant::standard: return FillingClass::PartialPermutation;
    case Variant::dual_rsk:
    case Variant::rsk_prime: return FillingClass::ZeroOne;
    case Variant::rsk:
    case Variant::dual_rsk_prime: return FillingClass::Arbitrary;
    }
    return FillingClass::Arbitrary;
}

inline Partition forward(Variant v, const Partition& rho, const Partition& mu, const Partition& nu, int m) {
    switch (v) {
    case Variant::standard:
        detail::require(m == 0 || m == 1, "standard rules take entries 0 or 1");
        return forward_std(rho, mu, nu, m == 1);
    case Variant::rsk: return forward_rsk(rho, mu, nu, m);
    case Variant::dual_rsk: return forward_dualrsk(rho, mu, nu, m);
    case Variant::rsk_prime: return forward_rskp(rho, mu, nu, m);
    case Variant::dual_rsk_prime: return forward_dualrskp(rho, mu, nu, m);
    }
    throw precondition_error("unknown variant");
}

inline CellPreimage backward(Variant v, const Partition& mu, const Partition& nu, const Partition& lambda) {
    switch (v) {
    case Variant::standard: return backward_std(mu, nu, lambda);
    case Variant::rsk: return backward_rsk(mu, nu, lambda);
    case Variant::dual_rsk: return backward_dualrsk(mu, nu, lambda);
    case Variant::rsk_prime: return backward_rskp(mu, nu, lambda);
    case Variant::dual_rsk_prime: return backward_dualrskp(mu, nu, lambda);
    }
    throw precondition_error("unknown variant");
}

/// Is `next` a legal successor of `prev` along a border step?
/// An R step grows (next contains prev), a D step shrinks.
inline bool valid_step(Variant v, char letter, const Partition& prev, const Partition& next) {
    const bool grow = letter == 'R';
    const Partition& big = grow ? next : prev;
    const Partition& small = grow ? prev : next;
    switch (v) {
    case Variant::standard:
        return contains(big, small) && big.size() - small.size() <= 1;
    case Variant::rsk:
        return is_horizontal_strip(big, small);
    case Variant::dual_rsk:
        return grow ? is_horizontal_strip(big, small) : is_vertical_strip(big, small);
    case Variant::rsk_prime:
        return grow ? is_vertical_strip(big, small) : is_horizontal_strip(big, small);
    case Variant::dual_rsk_prime:
        return is_vertical_strip(big, small);
    }
    return false;
}

/// Partition sequence along a border word.
struct OscillatingTableau {
    std::string word;
    std::vector<Partition> seq;
    Variant variant = Variant::standard;
    bool operator==(const OscillatingTableau&) const = default;
};

/// Empty string when valid, otherwise a description of the first bad step.
inline std::string check_tableau(const OscillatingTableau& t) {
    if (t.seq.size() != t.word.size() + 1)
        return "sequence length " + std::to_string(t.seq.size()) + " does not match word length " +
               std::to_string(t.word.size());
    for (std::size_t i = 0; i < t.word.size(); ++i) {
        char w = t.word[i];
        if (w != 'R' && w != 'D')
            return "bad letter in word";
        if (!valid_step(t.variant, w, t.seq[i], t.seq[i + 1]))
            return "step " + std::to_string(i + 1) + " (" + w + ") from " + to_compact(t.seq[i]) +
                   " to " + to_compact(t.seq[i + 1]) + " is not allowed for " + to_string(t.variant);
    }
    return {};
}

inline bool is_valid(const OscillatingTableau& t) { return check_tableau(t).empty(); }

/// Labels on the left side (corners (0,y), y = 0..rows) and bottom side
/// (corners (x,0), x = 0..cols). Empty vectors mean all labels are empty.
struct Boundary {
    std::vector<Partition> left;
    std::vector<Partition> bottom;
    bool operator==(const Boundary&) const = default;

    bool trivial() const {
        auto empty = [](const std::vector<Partition>& v) {
            return std::all_of(v.begin(), v.end(), [](const Partition& p) { return p.empty(); });
        };
        return empty(left) && empty(bottom);
    }
};

enum class SweepOrder { column_major, row_major };

/// A shape with its filling and every corner labelled.
class GrowthDiagram {
public:
    GrowthDiagram() = default;
    GrowthDiagram(Filling f, Variant v)
        : filling_(std::move(f)), variant_(v),
          labels_(filling_.shape().cols() + 1, std::vector<Partition>(filling_.shape().rows() + 1)) {}

    const FerrersShape& shape() const { return filling_.shape(); }
    const Filling& filling() const { return filling_; }
    Filling& filling() { return filling_; }
    Variant variant() const { return variant_; }

    const Partition& label(int x, int y) const {
        detail::require(shape().has_corner(x, y), "no corner (" + std::to_string(x) + "," +
                                                      std::to_string(y) + ") in the shape");
        return labels_[x][y];
    }
    const Partition& label(Corner c) const { return label(c.x, c.y); }
    void set_label(int x, int y, Partition p) { labels_[x][y] = std::move(p); }

    Boundary boundary() const {
        Boundary b;
        for (int y = 0; y <= shape().rows(); ++y)
            b.left.push_back(labels_[0][y]);
        for (int x = 0; x <= shape().cols(); ++x)
            b.bottom.push_back(labels_[x][0]);
        return b;
    }

    bool operator==(const GrowthDiagram& o) const {
        return filling_ == o.filling_ && variant_ == o.variant_ && labels_ == o.labels_;
    }

private:
    Filling filling_;
    Variant variant_ = Variant::standard;
    std::vector<std::vector<Partition>> labels_;
};

namespace detail {
    inline void check_boundary(const FerrersShape& s, const Filling& f, const Boundary& b) {
        auto check_side = [&](const std::vector<Partition>& side, int count, bool bottom) {
            if (side.empty())
                return;
            require(static_cast<int>(side.size()) == count + 1,
                    std::string("boundary ") + (bottom ? "bottom" : "left") + " side has the wrong length");
            for (int i = 1; i <= count; ++i) {
                const Partition& a = side[i - 1];
                const Partition& c = side[i];
                require(contains(c, a) && c.size() - a.size() <= 1,
                        "neighbouring boundary labels must grow by at most one square");
                if (a != c) {
                    int line = bottom ? f.col_sum(i) : f.row_sum(i);
                    require(line == 0, std::string("boundary labels change next to a ") +
                                           (bottom ? "column" : "row") + " containing a 1");
                }
            }
        };
        check_side(b.bottom, s.cols(), true);
        check_side(b.left, s.rows(), false);
        if (!b.bottom.empty() && !b.left.empty())
            require(b.bottom[0] == b.left[0], "boundary sides disagree at the origin");
    }

    inline void check_class(const Filling& f, Variant v) {
        FillingClass got = classify(f);
        if (!is_within(got, filling_class_for(v)))
            throw class_mismatch(std::string("filling of class ") + to_string(got) +
                                 " cannot be used with the " + to_string(v) + " variant");
    }
}

/// Label every corner by sweeping the forward rules from the left and bottom sides.
inline GrowthDiagram label_diagram(const Filling& f, Variant v, const Boundary& boundary = {},
                                   SweepOrder order = SweepOrder::column_major) {
    detail::check_class(f, v);
    const FerrersShape& s = f.shape();
    if (!boundary.trivial()) {
        detail::require(v == Variant::standard, "nonempty boundary labels are only supported for the standard rules");
        detail::check_boundary(s, f, boundary);
    }
    GrowthDiagram d(f, v);
    for (int y = 0; y <= s.rows() && !boundary.left.empty(); ++y)
        d.set_label(0, y, boundary.left[y]);
    for (int x = 0; x <= s.cols() && !boundary.bottom.empty(); ++x)
        d.set_label(x, 0, boundary.bottom[x]);

    auto step = [&](int c, int r) {
        d.set_label(c, r,
                    forward(v, d.label(c - 1, r - 1), d.label(c, r - 1), d.label(c - 1, r), f.at(c, r)));
    };
    if (order == SweepOrder::column_major) {
        for (int c = 1; c <= s.cols(); ++c)
            for (int r = 1; r <= s.col_height(c); ++r)
                step(c, r);
    } else {
        for (int r = 1; r <= s.rows(); ++r)
            for (int c = 1; c <= s.row_length(r); ++c)
                step(c, r);
    }
    return d;
}

/// Labels along the right/up border, top-left to bottom-right.
inline OscillatingTableau border_tableau(const GrowthDiagram& d) {
    OscillatingTableau t{d.shape().word(), {}, d.variant()};
    for (Corner c : d.shape().border_corners())
        t.seq.push_back(d.label(c));
    return t;
}

/// Run the backward rules from the border towards the left and bottom sides.
inline GrowthDiagram reconstruct_diagram(const FerrersShape& s, const OscillatingTableau& t) {
    detail::require(t.word == s.word(), "tableau word '" + t.word + "' differs from the shape word '" +
                                            s.word() + "'");
    if (auto why = check_tableau(t); !why.empty())
        throw precondition_error("invalid tableau: " + why);
    GrowthDiagram d(Filling(s), t.variant);
    auto border = s.border_corners();
    for (std::size_t i = 0; i < border.size(); ++i)
        d.set_label(border[i].x, border[i].y, t.seq[i]);
    for (int c = s.cols(); c >= 1; --c) {
        for (int r = s.col_height(c); r >= 1; --r) {
            CellPreimage pre = backward(t.variant, d.label(c, r - 1), d.label(c - 1, r), d.label(c, r));
            d.set_label(c - 1, r - 1, std::move(pre.rho));
            if (pre.m)
                d.filling().set(c, r, pre.m);
        }
    }
    return d;
}

struct Reconstruction {
    Filling filling;
    Boundary boundary;
};

inline Reconstruction reconstruct(const FerrersShape& s, const OscillatingTableau& t) {
    GrowthDiagram d = reconstruct_diagram(s, t);
    return {d.filling(), d.boundary()};
}

// Blow-up ---------------------------------------------------------------------

/// A 0-1 filling with at most one 1 per line, refining a coarser filling.
/// Coarse column c spans refined columns col_end[c-1]+1 .. col_end[c]; rows likewise.
struct BlowUp {
    Filling refined;
    std::vector<int> col_end;
    std::vector<int> row_end;
};

/// Replace each entry m by a chain of m crosses and separate crosses sharing a
/// row or column, in the directions the variant prescribes.
inline BlowUp blow_up(const Filling& f, Variant v) {
    detail::check_class(f, v);
    const FerrersShape& s = f.shape();
    struct Token {
        int col, row, j;
        int x = 0, y = 0;
    };
    std::vector<Token> tokens;
    for (const auto& [cell, m] : f.entries())
        for (int j = 1; j <= m; ++j)
            tokens.push_back({cell.col, cell.row, j});

    BlowUp out;
    out.col_end.assign(s.cols() + 1, 0);
    out.row_end.assign(s.rows() + 1, 0);
    for (int c = 1; c <= s.cols(); ++c)
        out.col_end[c] = out.col_end[c - 1] + std::max(1, f.col_sum(c));
    for (int r = 1; r <= s.rows(); ++r)
        out.row_end[r] = out.row_end[r - 1] + std::max(1, f.row_sum(r));

    // columns: crosses run bottom-left to top-right for RSK and dual RSK,
    // top-left to bottom-right for the primed variants
    const bool col_descending = v == Variant::rsk_prime || v == Variant::dual_rsk_prime;
    // rows: bottom-to-top for RSK and RSK', top-to-bottom for the dual variants
    const bool row_downward = v == Variant::dual_rsk || v == Variant::dual_rsk_prime;

    for (int c = 1; c <= s.cols(); ++c) {
        std::vector<Token*> col;
        for (auto& t : tokens)
            if (t.col == c)
                col.push_back(&t);
        std::sort(col.begin(), col.end(), [&](const Token* a, const Token* b) {
            if (a->row != b->row)
                return col_descending ? a->row > b->row : a->row < b->row;
            return a->j < b->j;
        });
        for (std::size_t i = 0; i < col.size(); ++i)
            col[i]->x = out.col_end[c - 1] + 1 + static_cast<int>(i);
    }
    for (int r = 1; r <= s.rows(); ++r) {
        std::vector<Token*> row;
        for (auto& t : tokens)
            if (t.row == r)
                row.push_back(&t);
        std::sort(row.begin(), row.end(), [](const Token* a, const Token* b) {
            if (a->col != b->col)
                return a->col < b->col;
            return a->j < b->j;
        });
        const int n = static_cast<int>(row.size());
        for (int i = 0; i < n; ++i)
            row[i]->y = out.row_end[r - 1] + 1 + (row_downward ? n - 1 - i : i);
    }

    std::string word;
    int x = 0, y = s.rows();
    for (char ch : s.word()) {
        if (ch == 'R') {
            ++x;
            word.append(out.col_end[x] - out.col_end[x - 1], 'R');
        } else {
            word.append(out.row_end[y] - out.row_end[y - 1], 'D');
            --y;
        }
    }
    out.refined = Filling(FerrersShape(word));
    for (const auto& t : tokens)
        out.refined.set(t.x, t.y, 1);
    return out;
}

/// Keep the labels at the corners where thick lines meet.
inline GrowthDiagram shrink_back(const GrowthDiagram& refined, const BlowUp& b, const Filling& coarse, Variant v) {
    GrowthDiagram d(coarse, v);
    const FerrersShape& s = coarse.shape();
    for (int x = 0; x <= s.cols(); ++x)
        for (int y = 0; y <= s.rows(); ++y)
            if (s.has_corner(x, y))
                d.set_label(x, y, refined.label(b.col_end[x], b.row_end[y]));
    return d;
}

/// Label a diagram by blowing it up, running the standard rules and shrinking back.
inline GrowthDiagram label_via_blow_up(const Filling& f, Variant v) {
    BlowUp b = blow_up(f, v);
    GrowthDiagram fine = label_diagram(b.refined, Variant::standard);
    return shrink_back(fine, b, f, v);
}

/// Corner labels as CSV rows "x,y,label" in column-major order.
inline std::string labels_csv(const GrowthDiagram& d) {
    std::string out = "x,y,label\n";
    const FerrersShape& s = d.shape();
    for (int x = 0; x <= s.cols(); ++x)
        for (int y = 0; y <= s.rows(); ++y)
            if (s.has_corner(x, y))
                out += std::to_string(x) + "," + std::to_string(y) + "," + to_compact(d.label(x, y)) + "\n";
    return out;
}

} // namespace growth
