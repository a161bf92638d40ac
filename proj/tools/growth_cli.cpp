// growth_cli: growth diagram bijections, verifiers and count tables.
//
// exit codes: 0 success / PASS, 1 FAIL or counterexample, 2 usage error

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "growth/growth.hpp"

using namespace growth;

namespace {

enum class Format { text, json, csv };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "csv")
        return Format::csv;
    throw usage_error("unknown format '" + s + "'");
}

Filling load_filling(const std::string& arg, const std::string& shape_word) {
    json j = parse_json_arg(arg);
    if (!j.is_object())
        throw parse_error("filling must be a JSON object");
    if (!j.contains("shape")) {
        if (shape_word.empty())
            throw usage_error("filling has no shape; pass --shape");
        j["shape"] = shape_word;
    } else if (!shape_word.empty() && FerrersShape(shape_word) != FerrersShape(j["shape"].get<std::string>())) {
        throw usage_error("--shape differs from the filling's shape");
    }
    return filling_from_json(j);
}

std::vector<Partition> parse_seq(const std::string& text) {
    std::vector<Partition> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok)
        out.push_back(parse_partition(tok));
    return out;
}

std::string entries_csv(const Filling& f) {
    std::string s = "col,row,value\n";
    for (const auto& [cell, v] : f.entries())
        s += std::to_string(cell.col) + "," + std::to_string(cell.row) + "," + std::to_string(v) + "\n";
    return s;
}

// one line per report
std::string report_line(const VerificationReport& r) {
    std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.theorem + " " + r.instance +
                    " checked=" + std::to_string(r.checked);
    if (!r.pass) {
        s += " : " + r.detail;
        if (!r.witness.empty())
            s += " witness " + r.witness;
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// map ---------------------------------------------------------------------------

struct MapOpts {
    std::string variant = "standard", shape, filling;
    bool pq = false;
};

int run_map(const MapOpts& o, Format fmt) {
    Variant v = parse_variant(o.variant);
    Filling f = load_filling(o.filling, o.shape);
    GrowthDiagram d = label_diagram(f, v);
    OscillatingTableau t = border_tableau(d);
    std::optional<InsertionPair> pq;
    if (o.pq) {
        const FerrersShape& s = f.shape();
        if (s.normalized() != FerrersShape::rectangle(s.cols(), s.rows()).normalized())
            throw usage_error("--pq needs a rectangular shape");
        pq = border_pq(d);
    }
    switch (fmt) {
    case Format::json: {
        json j = to_json(t);
        if (pq) {
            j["P"] = to_json(pq->P);
            j["Q"] = to_json(pq->Q);
        }
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << labels_csv(d);
        break;
    case Format::text:
        std::cout << seq_text(t.seq) << "\n";
        if (pq)
            std::cout << "P\n" << to_lines(pq->P) << "Q\n" << to_lines(pq->Q);
        break;
    }
    return 0;
}

// inverse -----------------------------------------------------------------------

struct InverseOpts {
    std::string variant = "standard", shape, tableau, seq;
};

int run_inverse(const InverseOpts& o, Format fmt) {
    OscillatingTableau t;
    if (!o.tableau.empty()) {
        t = tableau_from_json(parse_json_arg(o.tableau));
        if (!o.shape.empty() && o.shape != t.word)
            throw usage_error("--shape differs from the tableau word");
    } else {
        if (o.shape.empty() || o.seq.empty())
            throw usage_error("inverse needs --tableau, or --shape with --seq");
        t = {FerrersShape(o.shape).word(), parse_seq(o.seq), parse_variant(o.variant)};
    }
    Reconstruction r = reconstruct(FerrersShape(t.word), t);
    switch (fmt) {
    case Format::json: {
        json j = to_json(r.filling);
        if (!r.boundary.trivial()) {
            json left = json::array(), bottom = json::array();
            for (const auto& p : r.boundary.left)
                left.push_back(to_json(p));
            for (const auto& p : r.boundary.bottom)
                bottom.push_back(to_json(p));
            j["left"] = left;
            j["bottom"] = bottom;
        }
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << entries_csv(r.filling);
        break;
    case Format::text:
        std::cout << filling_text(r.filling) << "\n";
        if (!r.boundary.trivial())
            std::cout << "left " << seq_text(r.boundary.left) << "\nbottom " << seq_text(r.boundary.bottom) << "\n";
        break;
    }
    return 0;
}

// demo --------------------------------------------------------------------------

int run_demo(const std::string& figure, Format fmt) {
    std::vector<std::string> ids = figure == "all" ? figures::ids() : std::vector<std::string>{figure};
    if (fmt == Format::csv)
        throw usage_error("demo prints text or json");
    json all = json::object();
    for (const auto& id : ids) {
        figures::Rendered r = figures::render(id);
        if (fmt == Format::json)
            all[id] = r.data;
        else
            std::cout << (ids.size() > 1 ? "# figure " + id + "\n" : "") << r.text;
    }
    if (fmt == Format::json)
        std::cout << (ids.size() == 1 ? all[ids[0]] : all).dump() << "\n";
    return 0;
}

// verify ------------------------------------------------------------------------

struct VerifyOpts {
    std::string theorem, family, refine = "default";
    std::vector<std::string> shapes;
    int max_n = 4;
    std::optional<int> max_total;
};

std::vector<FerrersShape> shape_family(const VerifyOpts& o) {
    std::vector<FerrersShape> out;
    for (const auto& w : o.shapes)
        out.emplace_back(w);
    if (o.family.empty()) {
        if (out.empty())
            throw usage_error("verify needs --shape or --shape-family");
        return out;
    }
    if (o.family == "staircase") {
        for (int n = 1; n <= o.max_n; ++n)
            out.push_back(FerrersShape::staircase(n));
    } else if (o.family == "all" || o.family == "symmetric") {
        for (const auto& s : ferrers_shapes_up_to(o.max_n))
            if (o.family == "all" || is_symmetric(s))
                out.push_back(s);
    } else if (o.family == "rectangle") {
        for (int a = 1; a <= o.max_n; ++a)
            for (int b = 1; a * b <= o.max_n; ++b)
                out.push_back(FerrersShape::rectangle(a, b));
    } else {
        throw usage_error("unknown shape family '" + o.family + "'");
    }
    return out;
}

int run_verify(const VerifyOpts& o, Format fmt) {
    std::vector<VerificationReport> reps;
    const std::string& th = o.theorem;
    if (th == "T4" || th == "T5" || th == "T6") {
        PartitionRefinement ref = PartitionRefinement::none;
        if (o.refine == "minmax" || (o.refine == "default" && th == "T5"))
            ref = PartitionRefinement::min_max;
        else if (o.refine == "openers" || (o.refine == "default" && th == "T6"))
            ref = PartitionRefinement::openers_closers;
        else if (o.refine != "none" && o.refine != "default")
            throw usage_error("unknown refinement '" + o.refine + "'");
        if (th != "T6" && ref == PartitionRefinement::openers_closers)
            throw usage_error("T4/T5 refine by none or minmax");
        for (int n = 0; n <= o.max_n; ++n)
            reps.push_back(th == "T6" ? verify_enhanced(n, ref)
                                      : verify_crossings(n, ref == PartitionRefinement::min_max));
    } else {
        std::vector<std::pair<SwapSpec, bool>> specs;
        if (th == "T2")
            specs = {{swap_spec_t2(), false}};
        else if (th == "T2a-NES1")
            specs = {{swap_spec_nes1(), false}};
        else if (th == "T2a-NES2")
            specs = {{swap_spec_nes2(), false}};
        else if (th == "T2sym")
            specs = {{swap_spec_t2(), true}};
        else if (th == "T2asym")
            specs = {{swap_spec_nes1(), true}, {swap_spec_nes2(), true}};
        else
            throw usage_error("unknown theorem '" + th + "'");
        for (const auto& s : shape_family(o)) {
            if (specs[0].second && !is_symmetric(s))
                throw usage_error("symmetric theorems need symmetric shapes; " + s.word() + " is not");
            for (const auto& [sp, sym] : specs) {
                int total = o.max_total.value_or(sp.cls == FillingClass::Arbitrary ? 4 : s.num_cells());
                reps.push_back(verify_swap(sp, s, total, sym));
            }
        }
    }
    bool pass = true;
    for (const auto& r : reps)
        pass = pass && r.pass;
    switch (fmt) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : reps)
            arr.push_back(to_json(r));
        std::cout << json{{"result", pass ? "PASS" : "FAIL"}, {"reports", arr}}.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "theorem,instance,result,checked,detail,witness\n";
        for (const auto& r : reps)
            std::cout << csv_field(r.theorem) << "," << csv_field(r.instance) << "," << (r.pass ? "PASS" : "FAIL")
                      << "," << r.checked << "," << csv_field(r.detail) << "," << csv_field(r.witness) << "\n";
        break;
    case Format::text:
        for (const auto& r : reps)
            std::cout << report_line(r) << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
        break;
    }
    return pass ? 0 : 1;
}

// count -------------------------------------------------------------------------

struct CountOpts {
    std::string shape, stack, cls = "pp", x = "NE", y = "SE";
    std::optional<int> max_total;
    bool symmetric = false;
};

// "NE", "NE:sum" or "se:mult"
ChainSpec parse_chain_arg(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        return ChainSpec::parse(s);
    std::string mode = s.substr(colon + 1);
    LengthMode m = mode == "sum" ? LengthMode::entry_sum
                   : mode == "mult" ? LengthMode::multiplicity
                   : mode == "count" ? LengthMode::count
                                     : throw usage_error("chain mode is sum, mult or count");
    return ChainSpec::parse(s.substr(0, colon), m);
}

int run_count(const CountOpts& o, Format fmt) {
    if (o.shape.empty() == o.stack.empty())
        throw usage_error("count needs exactly one of --shape and --stack");
    FillingConstraint k;
    k.cls = parse_filling_class(o.cls);
    k.max_total = o.max_total;
    if (k.cls == FillingClass::Arbitrary && !k.max_total)
        k.max_total = 4;
    k.symmetric_only = o.symmetric;
    ChainSpec x = parse_chain_arg(o.x), y = parse_chain_arg(o.y);
    CountTable t = o.shape.empty() ? count_table(parse_stack(o.stack), k, x, y)
                                   : count_table(FerrersShape(o.shape), k, x, y);
    if (fmt == Format::json)
        std::cout << to_json(t).dump() << "\n";
    else
        std::cout << t.to_csv();
    return 0;
}

// greene ------------------------------------------------------------------------

struct GreeneOpts {
    std::string variant = "standard", shape, filling, corner;
    std::vector<int> ks{1, 2, 3};
};

int run_greene(const GreeneOpts& o, Format fmt) {
    Variant v = parse_variant(o.variant);
    Filling f = load_filling(o.filling, o.shape);
    GrowthDiagram d = label_diagram(f, v);
    GreeneFlavors fl = greene_flavors(v);
    std::vector<Corner> corners;
    if (!o.corner.empty()) {
        int x = 0, y = 0;
        char comma = 0;
        std::istringstream in(o.corner);
        if (!(in >> x >> comma >> y) || comma != ',' || !f.shape().has_corner(x, y))
            throw usage_error("--corner is x,y naming a corner of the shape");
        corners.push_back({x, y});
    } else {
        for (int x = 0; x <= f.shape().cols(); ++x)
            for (int y = 0; y <= f.shape().rows(); ++y)
                if (f.shape().has_corner(x, y))
                    corners.push_back({x, y});
    }
    bool pass = true;
    json rows = json::array();
    std::string text = "x,y,k,label,rows,oracle_rows,columns,oracle_columns\n";
    for (Corner c : corners) {
        const Partition& lab = d.label(c);
        Partition conj = conjugate(lab);
        for (int k : o.ks) {
            int a = 0, b = 0;
            for (int i = 1; i <= k; ++i) {
                a += lab.row(i);
                b += conj.row(i);
            }
            int oa = greene_oracle(f, fl.rows, k, c), ob = greene_oracle(f, fl.columns, k, c);
            pass = pass && a == oa && b == ob;
            rows.push_back({{"x", c.x}, {"y", c.y}, {"k", k}, {"label", to_compact(lab)}, {"rows", a},
                            {"oracle_rows", oa}, {"columns", b}, {"oracle_columns", ob}});
            text += std::to_string(c.x) + "," + std::to_string(c.y) + "," + std::to_string(k) + "," +
                    to_compact(lab) + "," + std::to_string(a) + "," + std::to_string(oa) + "," +
                    std::to_string(b) + "," + std::to_string(ob) + "\n";
        }
    }
    if (fmt == Format::json)
        std::cout << json{{"variant", to_string(v)}, {"rows_flavor", fl.rows.code()},
                          {"columns_flavor", fl.columns.code()}, {"result", pass ? "PASS" : "FAIL"},
                          {"corners", rows}}.dump() << "\n";
    else
        std::cout << text << (fmt == Format::text ? std::string(pass ? "PASS\n" : "FAIL\n") : "");
    return pass ? 0 : 1;
}

// explore -----------------------------------------------------------------------

struct ExploreOpts {
    std::vector<std::string> stacks;
    int max_cells = 0;
    std::vector<int> s{1, 2};
    bool evidence = true;
};

int run_explore(const ExploreOpts& o, Format fmt) {
    std::vector<StackPolyomino> polys;
    for (const auto& h : o.stacks)
        polys.push_back(parse_stack(h));
    for (int n = 1; n <= o.max_cells; ++n)
        for (auto& p : stack_polyominoes_of(n))
            polys.push_back(p);
    if (polys.empty())
        throw usage_error("explore needs --stack or --max-cells");
    bool pass = true;
    json jr = json::array(), ev = json::array();
    std::string text, csv = "kind,shape,sorted,s,n_max,count,count_sorted,count_eq,count_eq_sorted,result\n";
    for (const auto& p : polys) {
        for (int s : o.s) {
            JonssonReport r = jonsson_check(p, s);
            pass = pass && r.pass;
            std::string res = r.pass ? "PASS" : "FAIL";
            jr.push_back({{"shape", r.shape}, {"sorted", r.sorted}, {"s", s}, {"n_max", r.n_max},
                          {"n_max_sorted", r.n_max_sorted}, {"count", r.count}, {"count_sorted", r.count_sorted},
                          {"count_eq", r.count_eq}, {"count_eq_sorted", r.count_eq_sorted}, {"result", res}});
            text += res + " jonsson " + r.shape + " vs " + r.sorted + " s=" + std::to_string(s) +
                    " n_max=" + std::to_string(r.n_max) + " ne<=s: " + std::to_string(r.count) + " vs " +
                    std::to_string(r.count_sorted) + ", ne=s: " + std::to_string(r.count_eq) + " vs " +
                    std::to_string(r.count_eq_sorted) + "\n";
            csv += "jonsson," + r.shape + "," + r.sorted + "," + std::to_string(s) + "," + std::to_string(r.n_max) +
                   "," + std::to_string(r.count) + "," + std::to_string(r.count_sorted) + "," +
                   std::to_string(r.count_eq) + "," + std::to_string(r.count_eq_sorted) + "," + res + "\n";
        }
        if (o.evidence) {
            Evidence e = explore_ne_se(p);
            std::string what = e.symmetric ? "(ne,se) table symmetric" : "(ne,se) table asymmetric at " + e.first_asymmetry;
            ev.push_back({{"shape", e.shape}, {"symmetric", e.symmetric}, {"first_asymmetry", e.first_asymmetry}});
            text += "EVIDENCE " + e.shape + " " + what + "\n";
            csv += "evidence," + e.shape + ",,,,,,,," + (e.symmetric ? "symmetric" : "asymmetric") + "\n";
        }
    }
    switch (fmt) {
    case Format::json:
        std::cout << json{{"result", pass ? "PASS" : "FAIL"}, {"jonsson", jr}, {"evidence", ev}}.dump() << "\n";
        break;
    case Format::csv:
        std::cout << csv;
        break;
    case Format::text:
        std::cout << text << (pass ? "PASS" : "FAIL") << "\n";
        break;
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth diagrams on Ferrers shapes: bijections, chain statistics and verifiers"};
    app.require_subcommand(1, 1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "text";
    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    const std::vector<std::string> variants{"standard", "rsk", "dualrsk", "rskp", "dualrskp"};

    MapOpts mo;
    auto* map = app.add_subcommand("map", "label a filling and print its border tableau");
    map->add_option("--variant", mo.variant)->check(CLI::IsMember(variants));
    map->add_option("--shape", mo.shape, "D/R boundary word");
    map->add_option("--filling", mo.filling, "filling JSON, inline or a file")->required();
    map->add_flag("--pq", mo.pq, "also print (P,Q) for a rectangle");

    InverseOpts io;
    auto* inv = app.add_subcommand("inverse", "rebuild a filling from a border tableau");
    inv->add_option("--variant", io.variant)->check(CLI::IsMember(variants));
    inv->add_option("--shape", io.shape);
    inv->add_option("--tableau", io.tableau, "tableau JSON, inline or a file");
    inv->add_option("--seq", io.seq, "partitions in compact form, e.g. \"e 1 11 1 e\"");

    std::string figure = "all";
    auto* demo = app.add_subcommand("demo", "reproduce a worked figure");
    demo->add_option("--figure", figure)->check(CLI::IsMember([] {
        auto v = figures::ids();
        v.push_back("all");
        return v;
    }()));

    VerifyOpts vo;
    auto* ver = app.add_subcommand("verify", "exhaustive count and bijection check of a theorem");
    ver->add_option("--theorem", vo.theorem)
        ->required()
        ->check(CLI::IsMember({"T2", "T2a-NES1", "T2a-NES2", "T2sym", "T2asym", "T4", "T5", "T6"}));
    ver->add_option("--shape", vo.shapes);
    ver->add_option("--shape-family", vo.family)->check(CLI::IsMember({"staircase", "all", "symmetric", "rectangle"}));
    ver->add_option("--max-n", vo.max_n, "staircase size, cell bound, or ground set size")->check(CLI::Range(0, 64));
    ver->add_option("--max-total", vo.max_total)->check(CLI::NonNegativeNumber);
    ver->add_option("--refine", vo.refine)->check(CLI::IsMember({"default", "none", "minmax", "openers"}));

    CountOpts co;
    auto* cnt = app.add_subcommand("count", "table of longest chain statistics");
    cnt->add_option("--shape", co.shape);
    cnt->add_option("--stack", co.stack, "stack polyomino column heights, e.g. 1,2,1");
    cnt->add_option("--class", co.cls, "pp, 01 or arbitrary");
    cnt->add_option("--x", co.x, "chain flavor, optionally :sum or :mult");
    cnt->add_option("--y", co.y);
    cnt->add_option("--max-total", co.max_total)->check(CLI::NonNegativeNumber);
    cnt->add_flag("--symmetric", co.symmetric);

    GreeneOpts go;
    auto* gre = app.add_subcommand("greene", "compare corner labels with brute-force chain unions");
    gre->add_option("--variant", go.variant)->check(CLI::IsMember(variants));
    gre->add_option("--shape", go.shape);
    gre->add_option("--filling", go.filling)->required();
    gre->add_option("--corner", go.corner, "x,y");
    gre->add_option("--k", go.ks)->check(CLI::Range(1, 3));

    ExploreOpts eo;
    auto* exp = app.add_subcommand("explore", "stack polyomino checks and open-problem evidence");
    exp->add_option("--stack", eo.stacks);
    exp->add_option("--max-cells", eo.max_cells)->check(CLI::Range(0, 12));
    exp->add_option("--s", eo.s)->check(CLI::PositiveNumber);
    exp->add_flag("!--no-evidence", eo.evidence);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Format fmt = parse_format(format);
        if (*map)
            return run_map(mo, fmt);
        if (*inv)
            return run_inverse(io, fmt);
        if (*demo)
            return run_demo(figure, fmt);
        if (*ver)
            return run_verify(vo, fmt);
        if (*cnt)
            return run_count(co, fmt);
        if (*gre)
            return run_greene(go, fmt);
        if (*exp)
            return run_explore(eo, fmt);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: budget exceeded: " << e.what() << " (raise GROWTH_BUDGET)\n";
        return 2;
    } catch (const class_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
