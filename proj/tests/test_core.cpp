#include <gtest/gtest.h>

#include <random>
#include <set>

#include "growth/growth.hpp"
#include "oracles.hpp"

using namespace growth;

namespace growth {
inline void PrintTo(const Partition& p, std::ostream* os) { *os << to_compact(p); }
} // namespace growth

namespace {

std::vector<Variant> carry_variants() {
    return {Variant::rsk, Variant::dual_rsk, Variant::rsk_prime, Variant::dual_rsk_prime};
}

FillingConstraint constraint_for(Variant v, int max_total) {
    return FillingConstraint::at_most(filling_class_for(v), max_total);
}

} // namespace

// partitions ---------------------------------------------------------------------

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(conjugate({3, 2}), Partition({2, 2, 1}));
    EXPECT_EQ(conjugate({}), Partition{});
    EXPECT_EQ(conjugate({2, 1, 1, 1}), Partition({4, 1}));
}

TEST(Partition, ConjugateIsInvolution) {
    for (int n = 0; n <= 20; ++n)
        for (const auto& p : partitions_of(n))
            ASSERT_EQ(conjugate(conjugate(p)), p) << to_compact(p);
}

TEST(Partition, CountsMatchRecursion) {
    for (int n = 0; n <= 15; ++n)
        EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), oracle::partition_count(n)) << n;
}

TEST(Partition, UnionAndIntersection) {
    EXPECT_EQ(partition_union({2, 1}, {1, 1, 1}), Partition({2, 1, 1}));
    EXPECT_EQ(partition_union({}, {3}), Partition({3}));
    EXPECT_EQ(partition_union({2}, {1, 1}), Partition({2, 1}));
    EXPECT_EQ(intersect({2, 1}, {1, 1, 1}), Partition({1, 1}));
    EXPECT_EQ(intersect({}, {3}), Partition{});
    EXPECT_EQ(intersect({2}, {1, 1}), Partition({1}));
}

TEST(Partition, ConjugationCommutesWithUnionAndIntersection) {
    auto ps = partitions_up_to(8);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            ASSERT_EQ(conjugate(partition_union(a, b)), partition_union(conjugate(a), conjugate(b)));
            ASSERT_EQ(conjugate(intersect(a, b)), intersect(conjugate(a), conjugate(b)));
        }
}

TEST(Partition, ContainmentIsPartialOrder) {
    EXPECT_TRUE(contains({2, 1}, {1, 1}));
    EXPECT_FALSE(contains({2}, {1, 1}));
    auto ps = partitions_up_to(6);
    for (const auto& a : ps) {
        ASSERT_TRUE(contains(a, {}));
        ASSERT_TRUE(contains(a, a));
        for (const auto& b : ps) {
            if (contains(a, b) && contains(b, a))
                ASSERT_EQ(a, b);
            for (const auto& c : ps)
                if (contains(a, b) && contains(b, c))
                    ASSERT_TRUE(contains(a, c));
        }
    }
}

TEST(Partition, Strips) {
    EXPECT_TRUE(is_horizontal_strip({3, 1}, {2, 1}));
    EXPECT_FALSE(is_horizontal_strip({2, 2}, {1, 1}));
    EXPECT_TRUE(is_horizontal_strip({2, 1}, {2, 1}));
    EXPECT_TRUE(is_vertical_strip({2, 2}, {2, 1}));
    EXPECT_FALSE(is_vertical_strip({3, 1}, {1, 1}));
    EXPECT_FALSE(is_horizontal_strip({1}, {2}));
    auto ps = partitions_up_to(7);
    for (const auto& a : ps)
        for (const auto& b : ps)
            ASSERT_EQ(is_vertical_strip(a, b), is_horizontal_strip(conjugate(a), conjugate(b)));
}

TEST(Partition, StripsAgainstDiagramDifference) {
    // count squares of outer/inner per column and per row directly
    auto ps = partitions_up_to(7);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            if (!contains(a, b)) {
                ASSERT_FALSE(is_horizontal_strip(a, b));
                continue;
            }
            bool one_per_col = true, one_per_row = true;
            for (int c = 1; c <= a.row(1); ++c) {
                int n = 0;
                for (int r = 1; r <= a.length(); ++r)
                    n += (a.row(r) >= c && b.row(r) < c);
                one_per_col = one_per_col && n <= 1;
            }
            for (int r = 1; r <= a.length(); ++r)
                one_per_row = one_per_row && a.row(r) - b.row(r) <= 1;
            ASSERT_EQ(is_horizontal_strip(a, b), one_per_col);
            ASSERT_EQ(is_vertical_strip(a, b), one_per_row);
        }
}

TEST(Partition, AddSquareAndDiffRow) {
    EXPECT_EQ(add_square_in_row({2, 1}, 2), Partition({2, 2}));
    EXPECT_THROW(add_square_in_row({2, 2}, 2), precondition_error);
    EXPECT_EQ(diff_row({2, 1}, {1, 1}), 1);
    EXPECT_THROW(diff_row({2, 1}, {1}), precondition_error);
    EXPECT_EQ(add_square_in_row({}, 1), Partition({1}));
}

TEST(Partition, RejectsIncreasingParts) {
    EXPECT_THROW(Partition({1, 2}), precondition_error);
    EXPECT_EQ(Partition(std::vector<int>{2, 1, 0, 0}), Partition({2, 1}));
}

TEST(Partition, TextForms) {
    EXPECT_EQ(to_compact({}), "e");
    EXPECT_EQ(to_compact({2, 1}), "21");
    EXPECT_EQ(to_bracketed({}), "[]");
    EXPECT_EQ(to_bracketed({2, 1}), "[2,1]");
    EXPECT_EQ(parse_partition("21"), Partition({2, 1}));
    EXPECT_EQ(parse_partition("[12,3]"), Partition({12, 3}));
    EXPECT_EQ(parse_partition("e"), Partition{});
    EXPECT_THROW(parse_partition("12"), parse_error);
    EXPECT_THROW(parse_partition("[2,x]"), parse_error);
    EXPECT_EQ(to_compact({12, 3}), "(12)3");
    EXPECT_EQ(parse_partition("(12)3"), Partition({12, 3}));
    EXPECT_THROW(parse_partition("(12"), parse_error);
    for (const auto& p : partitions_of(12))
        ASSERT_EQ(parse_partition(to_compact(p)), p);
}

TEST(Partition, DisplayOrderBySizeThenLex) {
    std::vector<Partition> v{{2}, {1, 1}, {1}, {}, {3}, {2, 1}};
    std::sort(v.begin(), v.end());
    std::vector<Partition> want{{}, {1}, {1, 1}, {2}, {2, 1}, {3}};
    EXPECT_EQ(v, want);
}

// shapes --------------------------------------------------------------------------

TEST(Shape, WordEncoding) {
    FerrersShape s("RDRDDRDDRRD");
    EXPECT_EQ(s.rows(), 6);
    EXPECT_EQ(s.cols(), 5);
    EXPECT_EQ(s.row_lengths(), Partition({5, 3, 3, 2, 2, 1}));
    EXPECT_EQ(s.num_cells(), 16);
    EXPECT_EQ(FerrersShape("RD").num_cells(), 1);
    EXPECT_EQ(FerrersShape("").num_cells(), 0);
    EXPECT_THROW(FerrersShape("RXD"), parse_error);
}

TEST(Shape, WordRoundTrip) {
    for (const auto& s : ferrers_shapes_up_to(12)) {
        ASSERT_EQ(FerrersShape(s.word()), s);
        ASSERT_EQ(FerrersShape::from_rows(s.row_lengths()), s);
        ASSERT_EQ(s.col_heights(), conjugate(s.row_lengths()));
    }
}

TEST(Shape, Staircase) {
    EXPECT_EQ(FerrersShape::staircase(7).num_cells(), 21);
    EXPECT_EQ(FerrersShape::staircase(1).num_cells(), 0);
    EXPECT_EQ(FerrersShape::staircase(2).num_cells(), 1);
    EXPECT_EQ(FerrersShape::staircase(4).row_lengths(), Partition({3, 2, 1}));
    EXPECT_THROW(FerrersShape::staircase(0), precondition_error);
}

TEST(Shape, ReflectAndSymmetry) {
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(reflect(FerrersShape::staircase(n)), FerrersShape::staircase(n));
        EXPECT_TRUE(is_symmetric(FerrersShape::staircase(n)));
    }
    EXPECT_EQ(reflect(FerrersShape("RRD")), FerrersShape("RDD"));
    EXPECT_FALSE(is_symmetric(FerrersShape::rectangle(2, 3)));
    for (const auto& s : ferrers_shapes_up_to(10)) {
        ASSERT_EQ(reflect(reflect(s)), s);
        if (is_symmetric(s))
            ASSERT_EQ(s.row_lengths(), s.col_heights());
    }
}

TEST(Shape, RectangleInShape) {
    FerrersShape s = FerrersShape::staircase(4);
    EXPECT_TRUE(s.contains_rectangle(1, 1, 3, 1));
    EXPECT_FALSE(s.contains_rectangle(1, 3, 3, 3));
    for (Cell c : s.cells())
        EXPECT_TRUE(s.contains_rectangle(c.col, c.row, c.col, c.row));
}

TEST(Shape, LeftBottomJustified) {
    for (const auto& s : ferrers_shapes_up_to(9))
        for (Cell a : s.cells())
            for (int c = 1; c <= a.col; ++c)
                for (int r = 1; r <= a.row; ++r)
                    ASSERT_TRUE(s.has_cell(c, r));
}

TEST(Shape, BorderCornersFollowWord) {
    FerrersShape s("RDRDDRDDRRD");
    auto b = s.border_corners();
    ASSERT_EQ(b.size(), s.word().size() + 1);
    EXPECT_EQ(b.front(), (Corner{0, 6}));
    EXPECT_EQ(b.back(), (Corner{5, 0}));
}

TEST(Shape, StackPolyominoes) {
    EXPECT_EQ(sort_columns(StackPolyomino({2, 3, 3, 1})).col_heights(), Partition({3, 3, 2, 1}));
    EXPECT_EQ(sort_columns(StackPolyomino({1, 5, 1})).col_heights(), Partition({5, 1, 1}));
    FerrersShape f = FerrersShape::staircase(4).normalized();
    EXPECT_EQ(sort_columns(StackPolyomino::from_ferrers(f)), f);
    EXPECT_THROW(StackPolyomino({2, 1, 2}), precondition_error);
    EXPECT_EQ(to_string(parse_stack("1,3,2")), "1,3,2");
    EXPECT_THROW(parse_stack("1,,2"), parse_error);
    // every unimodal composition of n appears once
    for (int n = 1; n <= 8; ++n) {
        auto v = stack_polyominoes_of(n);
        std::set<std::vector<int>> seen;
        for (const auto& p : v) {
            ASSERT_EQ(p.num_cells(), n);
            ASSERT_TRUE(seen.insert(p.heights()).second);
        }
    }
    EXPECT_EQ(stack_polyominoes_of(3).size(), 4u);  // 3, 12, 21, 111
}

// fillings and chains ----------------------------------------------------------------

TEST(Filling, Classification) {
    EXPECT_EQ(classify(figures::fig0_filling()), FillingClass::PartialPermutation);
    EXPECT_EQ(classify(figures::rectangle_filling()), FillingClass::ZeroOne);
    EXPECT_EQ(classify(figures::blow_up_filling()), FillingClass::Arbitrary);
    Filling f(FerrersShape("RD"));
    EXPECT_THROW(f.set(2, 1, 1), precondition_error);
    EXPECT_THROW(f.set(1, 1, -1), precondition_error);
}

TEST(Filling, TransposeIsInvolution) {
    for (const auto& f : all_fillings(FerrersShape::staircase(4), FillingConstraint::any(FillingClass::PartialPermutation))) {
        Filling t = transpose_filling(f);
        ASSERT_EQ(transpose_filling(t), f);
        // NE stays NE, SE reverses direction; both lengths survive
        ASSERT_EQ(longest_chain(t, ChainSpec::parse("NE")), longest_chain(f, ChainSpec::parse("NE")));
        ASSERT_EQ(longest_chain(t, ChainSpec::parse("SE")), longest_chain(f, ChainSpec::parse("SE")));
    }
}

TEST(Filling, SymmetricStaircaseFillingIsFixed) {
    Filling f(FerrersShape::staircase(4));
    f.set(1, 2, 1);
    f.set(2, 1, 1);
    EXPECT_EQ(transpose_filling(f), f);
}

TEST(Chains, CrossingAndNestingOfThreeBlockPartition) {
    Filling f = setpartition_to_filling(figures::three_block_partition());
    EXPECT_EQ(longest_chain(f, ChainSpec::parse("NE")), 2);
    EXPECT_EQ(longest_chain(f, ChainSpec::parse("SE")), 2);
    Filling empty(FerrersShape::staircase(5));
    for (const char* code : {"NE", "ne", "nE", "Ne", "SE", "se", "sE", "Se"})
        EXPECT_EQ(longest_chain(empty, ChainSpec::parse(code)), 0);
}

TEST(Chains, AgreeWithSubsetOracle) {
    const char* codes[] = {"NE", "ne", "nE", "Ne", "SE", "se", "sE", "Se"};
    for (const auto& s : ferrers_shapes_up_to(7)) {
        for (const auto& f : all_fillings(s, FillingConstraint::any(FillingClass::ZeroOne))) {
            for (const char* code : codes) {
                ChainSpec spec = ChainSpec::parse(code);
                ASSERT_EQ(longest_chain(f, spec), oracle::longest_chain(f, code, false, true))
                    << code << " " << filling_text(f);
            }
        }
        for (const auto& f : all_fillings(s, FillingConstraint::at_most(FillingClass::Arbitrary, 3)))
            for (const char* code : {"NE", "SE"})
                ASSERT_EQ(longest_chain(f, ChainSpec::parse(code, LengthMode::entry_sum)),
                          oracle::longest_chain(f, code, true, true));
    }
}

TEST(Chains, OnStackPolyominoes) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : stack_polyominoes_of(n))
            for (const auto& f : all_fillings(p, FillingConstraint::any(FillingClass::ZeroOne)))
                for (const char* code : {"ne", "se", "NE", "SE"})
                    ASSERT_EQ(longest_chain(f, ChainSpec::parse(code)), oracle::longest_chain(f, code, false, true));
}

TEST(Chains, WeakAndStrictCoincideOnPartialPermutations) {
    for (const auto& f : all_fillings(FerrersShape::staircase(5), FillingConstraint::any(FillingClass::PartialPermutation))) {
        int ne = longest_chain(f, ChainSpec::parse("NE"));
        for (const char* c : {"ne", "nE", "Ne"})
            ASSERT_EQ(longest_chain(f, ChainSpec::parse(c)), ne);
        int se = longest_chain(f, ChainSpec::parse("SE"));
        for (const char* c : {"se", "sE", "Se"})
            ASSERT_EQ(longest_chain(f, ChainSpec::parse(c)), se);
    }
}

TEST(Chains, UpwardRectanglesAreAutomaticInFerrersShapes) {
    for (const auto& s : ferrers_shapes_up_to(7))
        for (const auto& f : all_fillings(s, FillingConstraint::any(FillingClass::ZeroOne)))
            for (const char* code : {"NE", "ne", "nE", "Ne"}) {
                ChainSpec a = ChainSpec::parse(code), b = a;
                b.require_rectangle = false;
                ASSERT_EQ(longest_chain(f, a), longest_chain(f, b));
            }
}

TEST(Chains, CodeRoundTrip) {
    for (const char* code : {"NE", "ne", "nE", "Ne", "SE", "se", "sE", "Se"})
        EXPECT_EQ(ChainSpec::parse(code).code(), code);
    EXPECT_THROW(ChainSpec::parse("NW"), parse_error);
    EXPECT_THROW(ChainSpec::parse("N"), parse_error);
}

// greene oracle ----------------------------------------------------------------------

TEST(Greene, FigureExamples) {
    Filling f0 = figures::fig0_filling();
    // the region below and left of corner (2,4) holds the crosses at (2,2) and (1,4)
    EXPECT_EQ(greene_oracle(f0, ChainSpec::parse("SE"), 1, {2, 4}), 2);
    EXPECT_EQ(label_diagram(f0, Variant::standard).label(2, 4), Partition({1, 1}));
    Filling h = figures::blow_up_filling();
    EXPECT_EQ(greene_oracle(h, ChainSpec::parse("NE", LengthMode::entry_sum), 1, {2, 2}), 3);
    EXPECT_EQ(greene_oracle(h, ChainSpec::parse("se", LengthMode::multiplicity), 2, {2, 2}), 4);
}

TEST(Greene, AgreesWithChainCollectionSearch) {
    struct Flavor {
        const char* code;
        LengthMode mode;
    };
    const Flavor flavors[] = {{"NE", LengthMode::count},        {"SE", LengthMode::count},
                              {"nE", LengthMode::count},        {"Se", LengthMode::count},
                              {"NE", LengthMode::entry_sum},    {"se", LengthMode::multiplicity},
                              {"ne", LengthMode::multiplicity}, {"SE", LengthMode::entry_sum}};
    std::mt19937 rng(7);
    auto shapes = ferrers_shapes_up_to(6);
    for (int trial = 0; trial < 60; ++trial) {
        const FerrersShape& s = shapes[rng() % shapes.size()];
        auto fs = all_fillings(s, FillingConstraint::at_most(FillingClass::Arbitrary, 4));
        const Filling& f = fs[rng() % fs.size()];
        for (const auto& fl : flavors) {
            ChainSpec spec = ChainSpec::parse(fl.code, fl.mode);
            for (int k = 1; k <= 3; ++k)
                ASSERT_EQ(greene_oracle(f, spec, k, {s.cols(), s.row_length(1) ? 1 : 0}),
                          oracle::k_chain_union(f, fl.code, k, s.cols(), 1, fl.mode == LengthMode::entry_sum,
                                                fl.mode == LengthMode::multiplicity));
            Corner top{s.row_length(s.rows()), s.rows()};
            for (int k = 1; k <= 3; ++k)
                ASSERT_EQ(greene_oracle(f, spec, k, top),
                          oracle::k_chain_union(f, fl.code, k, top.x, top.y, fl.mode == LengthMode::entry_sum,
                                                fl.mode == LengthMode::multiplicity))
                    << fl.code << " k=" << k << " " << filling_text(f);
        }
    }
}

TEST(Greene, MonotoneInKAndRegion) {
    for (const auto& f : all_fillings(FerrersShape::rectangle(3, 3), FillingConstraint::exactly(FillingClass::ZeroOne, 4))) {
        ChainSpec spec = ChainSpec::parse("NE");
        for (int x = 0; x <= 3; ++x)
            for (int y = 0; y <= 3; ++y)
                for (int k = 1; k <= 3; ++k) {
                    int v = greene_oracle(f, spec, k, {x, y});
                    if (k > 1)
                        ASSERT_LE(greene_oracle(f, spec, k - 1, {x, y}), v);
                    if (x > 0)
                        ASSERT_LE(greene_oracle(f, spec, k, {x - 1, y}), v);
                    if (y > 0)
                        ASSERT_LE(greene_oracle(f, spec, k, {x, y - 1}), v);
                }
    }
}

TEST(Greene, BudgetAndPreconditions) {
    Filling f(FerrersShape::rectangle(3, 3));
    EXPECT_THROW(greene_oracle(f, ChainSpec::parse("NE"), 0, {1, 1}), precondition_error);
    EXPECT_THROW(greene_oracle(f, ChainSpec::parse("NE"), 4, {1, 1}), budget_exceeded);
    EXPECT_THROW(greene_oracle(f, ChainSpec::parse("NE"), 1, {4, 1}), precondition_error);
    Filling big(FerrersShape::rectangle(3, 3));
    big.set(1, 1, 9);
    EXPECT_THROW(greene_oracle(big, ChainSpec::parse("se", LengthMode::multiplicity), 1, {3, 3}), budget_exceeded);
}

// local rules ------------------------------------------------------------------------

TEST(LocalRules, StandardExamples) {
    EXPECT_EQ(forward_std({}, {}, {}, true), Partition({1}));
    EXPECT_EQ(forward_std({1}, {2}, {2}, false), Partition({2, 1}));
    EXPECT_EQ(forward_std({1}, {2}, {1, 1}, false), Partition({2, 1}));
    EXPECT_EQ(backward_std({1}, {1}, {2}), (CellPreimage{{1}, 1}));
    EXPECT_EQ(backward_std({2, 1}, {2, 1}, {2, 2}), (CellPreimage{{1, 1}, 0}));
    EXPECT_EQ(forward_std({1, 1}, {2, 1}, {2, 1}, false), Partition({2, 2}));
    EXPECT_EQ(backward_std({2}, {1, 1}, {2, 1}), (CellPreimage{{1}, 0}));
    EXPECT_THROW(forward_std({}, {1}, {}, true), precondition_error);
    EXPECT_THROW(forward_std({}, {2}, {}, false), precondition_error);
}

TEST(LocalRules, CarryExamples) {
    EXPECT_EQ(forward_rsk({}, {}, {}, 2), Partition({2}));
    EXPECT_EQ(forward_rsk({1}, {3}, {3}, 0), Partition({3, 2}));
    EXPECT_EQ(forward_rsk({}, {}, {1}, 2), Partition({3}));
    EXPECT_EQ(backward_rsk({3}, {3}, {3, 2}), (CellPreimage{{1}, 0}));
    EXPECT_EQ(backward_rsk({}, {}, {}), (CellPreimage{{}, 0}));
    EXPECT_EQ(backward_rsk({}, {1}, {3}), (CellPreimage{{}, 2}));

    EXPECT_EQ(forward_dualrsk({}, {}, {1}, 1), Partition({1, 1}));
    EXPECT_EQ(forward_dualrsk({2, 1}, {2, 1}, {2, 1}, 0), Partition({2, 1}));
    EXPECT_EQ(forward_dualrsk({}, {}, {}, 1), Partition({1}));
    EXPECT_EQ(backward_dualrsk({}, {1}, {1, 1}), (CellPreimage{{}, 1}));
    EXPECT_THROW(forward_dualrsk({}, {}, {}, 2), precondition_error);

    EXPECT_EQ(forward_dualrskp({}, {}, {1}, 1), Partition({1, 1}));
    EXPECT_EQ(forward_dualrskp({}, {}, {}, 3), Partition({1, 1, 1}));
    EXPECT_EQ(forward_dualrskp({2, 1}, {2, 1}, {2, 1}, 0), Partition({2, 1}));

    EXPECT_EQ(forward_rskp({}, {1}, {}, 1), Partition({1, 1}));
    EXPECT_EQ(forward_rskp({1}, {1}, {1}, 0), Partition({1}));
    EXPECT_THROW(forward_rskp({}, {}, {}, 2), precondition_error);
}

namespace {

// strip type of mu/rho and nu/rho (forward) per variant: true = horizontal
std::pair<bool, bool> strip_kinds(Variant v) {
    switch (v) {
    case Variant::rsk: return {true, true};
    case Variant::dual_rsk: return {true, false};
    case Variant::rsk_prime: return {false, true};
    case Variant::dual_rsk_prime: return {false, false};
    default: return {true, true};
    }
}

bool strip(bool horizontal, const Partition& outer, const Partition& inner) {
    return horizontal ? is_horizontal_strip(outer, inner) : is_vertical_strip(outer, inner);
}

} // namespace

TEST(LocalRules, CarryRulesRoundTripOnAllSmallFrames) {
    auto ps = partitions_up_to(4);
    for (Variant v : carry_variants()) {
        auto [mu_h, nu_h] = strip_kinds(v);
        const int max_m = filling_class_for(v) == FillingClass::Arbitrary ? 3 : 1;
        long long frames = 0;
        for (const auto& rho : ps)
            for (const auto& mu : ps)
                for (const auto& nu : ps) {
                    if (!strip(mu_h, mu, rho) || !strip(nu_h, nu, rho))
                        continue;
                    for (int m = 0; m <= max_m; ++m) {
                        Partition lam = forward(v, rho, mu, nu, m);
                        // the output strips are the transposed pattern
                        ASSERT_TRUE(strip(nu_h, lam, mu)) << to_string(v);
                        ASSERT_TRUE(strip(mu_h, lam, nu)) << to_string(v);
                        ASSERT_EQ(lam.size(), mu.size() + nu.size() - rho.size() + m);
                        CellPreimage back = backward(v, mu, nu, lam);
                        ASSERT_EQ(back, (CellPreimage{rho, m}))
                            << to_string(v) << " " << to_compact(rho) << "," << to_compact(mu) << ","
                            << to_compact(nu) << " m=" << m;
                        ++frames;
                    }
                }
        EXPECT_GT(frames, 300) << to_string(v);
    }
}

TEST(LocalRules, BackwardThenForwardIsIdentity) {
    auto ps = partitions_up_to(5);
    for (Variant v : carry_variants()) {
        auto [mu_h, nu_h] = strip_kinds(v);
        for (const auto& lam : ps)
            for (const auto& mu : ps) {
                if (!contains(lam, mu) || !strip(nu_h, lam, mu))
                    continue;
                for (const auto& nu : ps) {
                    if (!contains(lam, nu) || !strip(mu_h, lam, nu))
                        continue;
                    CellPreimage pre;
                    try {
                        pre = backward(v, mu, nu, lam);
                    } catch (const precondition_error&) {
                        continue;  // no preimage with admissible strips
                    }
                    ASSERT_EQ(forward(v, pre.rho, mu, nu, pre.m), lam) << to_string(v);
                }
            }
    }
}

TEST(LocalRules, StandardRoundTripAndAgreementWithRsk) {
    auto ps = partitions_up_to(5);
    int checked = 0;
    for (const auto& rho : ps)
        for (const auto& mu : ps)
            for (const auto& nu : ps) {
                if (!contains(mu, rho) || !contains(nu, rho) || mu.size() - rho.size() > 1 ||
                    nu.size() - rho.size() > 1)
                    continue;
                for (bool cross : {false, true}) {
                    if (cross && !(rho == mu && rho == nu))
                        continue;
                    Partition lam = forward_std(rho, mu, nu, cross);
                    ASSERT_EQ(backward_std(mu, nu, lam), (CellPreimage{rho, cross ? 1 : 0}));
                    ASSERT_EQ(forward_rsk(rho, mu, nu, cross ? 1 : 0), lam);
                    ++checked;
                }
            }
    EXPECT_GT(checked, 100);
}

TEST(LocalRules, ReflectedVariantSwapsArguments) {
    auto ps = partitions_up_to(4);
    for (const auto& rho : ps)
        for (const auto& mu : ps)
            for (const auto& nu : ps)
                for (int m = 0; m <= 1; ++m) {
                    if (!is_horizontal_strip(mu, rho) || !is_vertical_strip(nu, rho))
                        continue;
                    ASSERT_EQ(forward_rskp(rho, nu, mu, m), forward_dualrsk(rho, mu, nu, m));
                }
}

TEST(LocalRules, RejectBadFrames) {
    EXPECT_THROW(forward_rsk({}, {1, 1}, {}, 0), precondition_error);
    EXPECT_THROW(forward_dualrskp({}, {2}, {}, 0), precondition_error);
    EXPECT_THROW(backward_rsk({2}, {}, {1}), precondition_error);
    EXPECT_THROW(forward_rsk({}, {}, {}, -1), precondition_error);
}

// growth diagrams --------------------------------------------------------------------

TEST(Growth, FirstFigureTableauAndInverse) {
    Filling f = figures::fig0_filling();
    GrowthDiagram d = label_diagram(f, Variant::standard);
    OscillatingTableau t = border_tableau(d);
    EXPECT_EQ(seq_text(t.seq), "e 1 1 11 11 1 1 1 e e 1 e");
    EXPECT_TRUE(is_valid(t));
    Reconstruction r = reconstruct(f.shape(), t);
    EXPECT_EQ(r.filling, f);
    EXPECT_TRUE(r.boundary.trivial());
}

TEST(Growth, EmptyFillingHasEmptyLabels) {
    for (Variant v : all_variants) {
        GrowthDiagram d = label_diagram(Filling(FerrersShape::staircase(5)), v);
        for (const auto& p : border_tableau(d).seq)
            EXPECT_TRUE(p.empty());
        Reconstruction r = reconstruct(FerrersShape::staircase(5), border_tableau(d));
        EXPECT_TRUE(r.filling.empty());
    }
}

TEST(Growth, SweepOrderDoesNotMatter) {
    for (const auto& s : ferrers_shapes_up_to(6))
        for (Variant v : all_variants)
            for (const auto& f : all_fillings(s, constraint_for(v, 3)))
                ASSERT_EQ(label_diagram(f, v, {}, SweepOrder::column_major),
                          label_diagram(f, v, {}, SweepOrder::row_major));
}

TEST(Growth, ClassMismatchIsRejected) {
    EXPECT_THROW(label_diagram(figures::rectangle_filling(), Variant::standard), class_mismatch);
    EXPECT_THROW(label_diagram(figures::blow_up_filling(), Variant::dual_rsk), class_mismatch);
    EXPECT_THROW(label_diagram(figures::blow_up_filling(), Variant::rsk_prime), class_mismatch);
    EXPECT_NO_THROW(label_diagram(figures::blow_up_filling(), Variant::dual_rsk_prime));
}

TEST(Growth, TableauStepRulesHoldOnEveryDiagram) {
    for (const auto& s : ferrers_shapes_up_to(7))
        for (Variant v : all_variants)
            for (const auto& f : all_fillings(s, constraint_for(v, 3))) {
                OscillatingTableau t = border_tableau(label_diagram(f, v));
                ASSERT_TRUE(is_valid(t)) << check_tableau(t);
                ASSERT_TRUE(t.seq.front().empty() && t.seq.back().empty());
            }
}

TEST(Growth, ReconstructRejectsInvalidTableaux) {
    FerrersShape s("RRDD");
    OscillatingTableau bad{"RRDD", {{}, {1}, {3}, {1}, {}}, Variant::standard};
    EXPECT_THROW(reconstruct(s, bad), precondition_error);
    OscillatingTableau short_one{"RRDD", {{}, {1}}, Variant::standard};
    EXPECT_THROW(reconstruct(s, short_one), precondition_error);
    OscillatingTableau wrong_word{"RDRD", {{}, {}, {}, {}, {}}, Variant::standard};
    EXPECT_THROW(reconstruct(s, wrong_word), precondition_error);
}

TEST(Growth, EveryValidTableauIsReached) {
    // all sequences on a small shape: the valid ones reconstruct and map back
    FerrersShape s("RRDRDD");
    auto ps = partitions_up_to(3);
    for (Variant v : all_variants) {
        int valid = 0;
        std::vector<Partition> seq(s.word().size() + 1);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == seq.size() - 1) {
                seq[i] = {};
                OscillatingTableau t{s.word(), seq, v};
                if (!is_valid(t))
                    return;
                GrowthDiagram d = reconstruct_diagram(s, t);
                bool boundary_empty = d.boundary().trivial();
                if (!boundary_empty)
                    return;
                ++valid;
                ASSERT_EQ(border_tableau(label_diagram(d.filling(), v)), t);
                return;
            }
            for (const auto& p : ps) {
                seq[i] = p;
                OscillatingTableau prefix{s.word().substr(0, i), {seq.begin(), seq.begin() + i + 1}, v};
                if (i == 0 ? p.empty() : is_valid(prefix))
                    rec(i + 1);
            }
        };
        rec(0);
        EXPECT_GT(valid, 0) << to_string(v);
    }
}

TEST(Growth, ReflectionRelatesDualRskAndRskPrime) {
    for (const auto& s : ferrers_shapes_up_to(7))
        for (const auto& f : all_fillings(s, FillingConstraint::any(FillingClass::ZeroOne))) {
            GrowthDiagram a = label_diagram(f, Variant::dual_rsk);
            GrowthDiagram b = label_diagram(transpose_filling(f), Variant::rsk_prime);
            for (int x = 0; x <= s.cols(); ++x)
                for (int y = 0; y <= s.rows(); ++y)
                    if (s.has_corner(x, y))
                        ASSERT_EQ(a.label(x, y), b.label(y, x));
        }
}

TEST(Growth, GreeneOnStaircaseExample) {
    Filling f = setpartition_to_filling(SetPartition(5, {{1, 4}, {2, 5}, {3}}));
    GrowthDiagram d = label_diagram(f, Variant::standard);
    const FerrersShape& s = f.shape();
    for (Corner c : s.border_corners()) {
        const Partition& lab = d.label(c);
        if (c.x == 0 || c.y == 0)
            continue;
        EXPECT_EQ(lab.row(1), greene_oracle(f, ChainSpec::parse("NE"), 1, c));
        EXPECT_EQ(conjugate(lab).row(1), greene_oracle(f, ChainSpec::parse("SE"), 1, c));
    }
}

TEST(Growth, BlowUpOfRectangleFigures) {
    Filling g = figures::rectangle_filling();
    auto rows_of = [](const BlowUp& b) {
        std::string s;
        for (int x = 1; x <= b.refined.shape().cols(); ++x)
            for (int y = 1; y <= b.refined.shape().rows(); ++y)
                if (b.refined.at(x, y))
                    s += std::to_string(y);
        return s;
    };
    EXPECT_EQ(rows_of(blow_up(g, Variant::rsk)), "14523");
    EXPECT_EQ(rows_of(blow_up(g, Variant::dual_rsk)), "24513");
    EXPECT_EQ(rows_of(blow_up(g, Variant::rsk_prime)), "54132");
    EXPECT_EQ(rows_of(blow_up(g, Variant::dual_rsk_prime)), "54231");
    EXPECT_EQ(rows_of(blow_up(figures::blow_up_filling(), Variant::rsk)), "14523");

    // right side of the refined dual RSK diagram, bottom to top
    BlowUp b = blow_up(g, Variant::dual_rsk);
    GrowthDiagram fine = label_diagram(b.refined, Variant::standard);
    std::string right;
    for (int y = 0; y <= b.refined.shape().rows(); ++y)
        right += to_compact(fine.label(b.refined.shape().cols(), y)) + " ";
    EXPECT_EQ(right, "e 1 11 21 22 32 ");
}

TEST(Growth, BlowUpOfPartialPermutationIsItself) {
    for (const auto& f : all_fillings(FerrersShape::staircase(4), FillingConstraint::any(FillingClass::PartialPermutation))) {
        // refined copy of the partial permutation differs only by empty lines
        BlowUp b = blow_up(f, Variant::rsk);
        ASSERT_EQ(b.refined.total(), f.total());
        ASSERT_EQ(label_via_blow_up(f, Variant::rsk), label_diagram(f, Variant::rsk));
        ASSERT_EQ(label_diagram(f, Variant::rsk).label(f.shape().border_corners()[2]),
                  label_diagram(f, Variant::standard).label(f.shape().border_corners()[2]));
    }
}

TEST(Growth, BlowUpAgreesOnSmallShapes) {
    for (const auto& s : ferrers_shapes_up_to(6))
        for (Variant v : carry_variants())
            for (const auto& f : all_fillings(s, constraint_for(v, 3)))
                ASSERT_EQ(label_via_blow_up(f, v), label_diagram(f, v)) << to_string(v) << " " << filling_text(f);
}

TEST(Growth, NontrivialBoundaryOnlyForStandard) {
    FerrersShape s = FerrersShape::staircase(3);
    Filling f(s);
    Boundary b;
    b.left.assign(s.rows() + 1, Partition{});
    b.bottom.assign(s.cols() + 1, Partition{1});
    b.bottom[0] = {};
    EXPECT_NO_THROW(label_diagram(f, Variant::standard, b));
    EXPECT_THROW(label_diagram(f, Variant::rsk, b), precondition_error);
}

TEST(Growth, LabelsCsv) {
    std::string csv = labels_csv(label_diagram(figures::blow_up_filling(), Variant::rsk));
    EXPECT_EQ(csv, "x,y,label\n0,0,e\n0,1,e\n0,2,e\n1,0,e\n1,1,1\n1,2,3\n2,0,e\n2,1,3\n2,2,32\n");
}
