#pragma once

#include <string>
#include <vector>

#include "diagram.hpp"
#include "insertion.hpp"
#include "io.hpp"
#include "set_partition.hpp"

// The worked examples shipped with the CLI `demo` subcommand.
namespace growth::figures {

inline Filling fig0_filling() {
    Filling f(FerrersShape("RDRDDRDDRRD"));
    f.set(2, 2, 1);
    f.set(1, 4, 1);
    f.set(5, 1, 1);
    return f;
}

// 2x4 rectangle shared by the four RSK-variant figures
inline Filling rectangle_filling() {
    Filling f(FerrersShape::rectangle(2, 4));
    f.set(1, 1, 1);
    f.set(1, 3, 1);
    f.set(1, 4, 1);
    f.set(2, 1, 1);
    f.set(2, 2, 1);
    return f;
}

inline Filling blow_up_filling() {
    Filling f(FerrersShape::rectangle(2, 2));
    f.set(1, 1, 1);
    f.set(1, 2, 2);
    f.set(2, 1, 2);
    return f;
}

inline SetPartition three_block_partition() {
    return SetPartition(std::vector<std::vector<int>>{{1, 4, 5, 7}, {2, 6}, {3}});
}

inline SetPartition pair_partition() {
    return SetPartition(std::vector<std::vector<int>>{{1}, {2, 6}, {3}, {4, 7}, {5}});
}

inline Tableau pair_tableau() { return Tableau{{{1, 7}, {5}}}; }

inline Matching three_arc_matching() { return Matching({{1, 4}, {2, 6}, {3, 5}}); }

inline const std::vector<std::string>& ids() {
    static const std::vector<std::string> v{"0", "2", "3", "4", "5", "6", "6a", "7", "8", "9"};
    return v;
}

struct Rendered {
    std::string text;
    json data;
};

namespace detail {
    inline Rendered variant_figure(Variant v) {
        Filling f = rectangle_filling();
        GrowthDiagram d = label_diagram(f, v);
        InsertionPair pq = border_pq(d);
        TwoRowedArray a = filling_to_biword(f, biword_order_for(v));
        std::string t = std::string("variant ") + to_string(v) + "\nfilling " + filling_text(f) + "\nlabels\n" +
                        labels_csv(d) + "two-rowed array\n" + to_string(a) + "\nP\n" + to_lines(pq.P) + "Q\n" +
                        to_lines(pq.Q);
        json j = {{"variant", to_string(v)}, {"filling", to_json(f)}, {"tableau", to_json(border_tableau(d))},
                  {"P", to_json(pq.P)}, {"Q", to_json(pq.Q)}};
        if (v == Variant::dual_rsk || v == Variant::dual_rsk_prime) {
            // column insertion builds the transposes
            t += "P^t\n" + to_lines(transpose(pq.P)) + "Q^t\n" + to_lines(transpose(pq.Q));
            j["Pt"] = to_json(transpose(pq.P));
            j["Qt"] = to_json(transpose(pq.Q));
        }
        return {t, j};
    }

    inline Rendered partition_figure(const SetPartition& p, const OscillatingTableau& t, const char* kind) {
        std::string text = std::string("set partition ") + to_string(p) + "\n" + kind + " " + seq_text(t.seq) + "\n";
        return {text, {{"set_partition", to_string(p)}, {"kind", kind}, {"tableau", to_json(t)}}};
    }
}

/// Text and JSON for one figure id; throws precondition_error on unknown ids.
inline Rendered render(const std::string& id) {
    if (id == "0") {
        Filling f = fig0_filling();
        GrowthDiagram d = label_diagram(f, Variant::standard);
        OscillatingTableau t = border_tableau(d);
        return {"filling " + filling_text(f) + "\ntableau " + seq_text(t.seq) + "\n",
                {{"filling", to_json(f)}, {"tableau", to_json(t)}}};
    }
    if (id == "2") {
        OscillatingTableau t = pair_to_vacillating(pair_partition(), pair_tableau());
        return {"set partition " + to_string(pair_partition()) + "\nT " + to_string(pair_tableau()) +
                    "\nvacillating " + seq_text(t.seq) + "\n",
                {{"set_partition", to_string(pair_partition())}, {"T", to_json(pair_tableau())},
                 {"tableau", to_json(t)}}};
    }
    if (id == "3")
        return detail::partition_figure(three_block_partition(), setpartition_to_vacillating(three_block_partition()),
                                        "vacillating");
    if (id == "4")
        return detail::partition_figure(three_block_partition(), setpartition_to_hesitating(three_block_partition()),
                                        "hesitating");
    if (id == "5") {
        Matching m = three_arc_matching();
        OscillatingTableau t = matching_to_oscillating(m);
        return {"matching " + to_string(m) + "\noscillating " + seq_text(t.seq) + "\n",
                {{"matching", to_string(m)}, {"tableau", to_json(t)}}};
    }
    if (id == "6")
        return detail::variant_figure(Variant::rsk);
    if (id == "6a") {
        Filling f = blow_up_filling();
        BlowUp b = blow_up(f, Variant::rsk);
        GrowthDiagram d = label_diagram(f, Variant::rsk);
        GrowthDiagram via = label_via_blow_up(f, Variant::rsk);
        std::string text = "filling " + filling_text(f) + "\nblow-up " + filling_text(b.refined) + "\nlabels\n" +
                           labels_csv(d) + "blow-up agrees " + (d == via ? "yes" : "no") + "\n";
        return {text, {{"filling", to_json(f)}, {"blow_up", to_json(b.refined)},
                       {"corner", to_json(d.label(2, 2))}, {"blow_up_agrees", d == via}}};
    }
    if (id == "7")
        return detail::variant_figure(Variant::rsk_prime);
    if (id == "8")
        return detail::variant_figure(Variant::dual_rsk);
    if (id == "9")
        return detail::variant_figure(Variant::dual_rsk_prime);
    throw precondition_error("unknown figure '" + id + "'");
}

} // namespace growth::figures
