#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "diagram.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "filling.hpp"
#include "tableau.hpp"

namespace growth {

using json = nlohmann::json;

// Fillings: {"shape": word, "entries": [[col,row,value],...]} -------------------

inline json to_json(const Filling& f) {
    json entries = json::array();
    for (const auto& [cell, v] : f.entries())
        entries.push_back({cell.col, cell.row, v});
    return {{"shape", f.shape().word()}, {"entries", entries}};
}

inline Filling filling_from_json(const json& j) {
    try {
        FerrersShape s(j.at("shape").get<std::string>());
        Filling f(s);
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw parse_error("filling entries are [col,row,value] triples");
            int c = e[0].get<int>(), r = e[1].get<int>(), v = e[2].get<int>();
            if (v < 1)
                throw parse_error("filling values must be at least 1");
            if (f.at(c, r) != 0)
                throw parse_error("cell (" + std::to_string(c) + "," + std::to_string(r) + ") listed twice");
            f.set(c, r, v);
        }
        return f;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad filling JSON: ") + e.what());
    }
}

// Oscillating tableaux: {"word": ..., "seq": [[...],...], "variant": ...} --------

inline json to_json(const Partition& p) { return p.parts(); }

inline json to_json(const OscillatingTableau& t) {
    json seq = json::array();
    for (const auto& p : t.seq)
        seq.push_back(to_json(p));
    return {{"word", t.word}, {"seq", seq}, {"variant", to_string(t.variant)}};
}

inline OscillatingTableau tableau_from_json(const json& j) {
    try {
        OscillatingTableau t;
        t.word = j.at("word").get<std::string>();
        for (const auto& p : j.at("seq"))
            t.seq.push_back(Partition(p.get<std::vector<int>>()));
        t.variant = j.contains("variant") ? parse_variant(j.at("variant").get<std::string>()) : Variant::standard;
        return t;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad tableau JSON: ") + e.what());
    }
}

/// "e 1 1 11 ..." in compact partition notation.
inline std::string seq_text(const std::vector<Partition>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            s += " ";
        s += to_compact(seq[i]);
    }
    return s;
}

/// One row per line, entries separated by spaces. Empty tableau prints nothing.
inline std::string to_lines(const Tableau& t) {
    std::string s;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            s += (j ? " " : "") + std::to_string(row[j]);
        s += "\n";
    }
    return s;
}

inline json to_json(const Tableau& t) { return t.rows; }

inline json to_json(const VerificationReport& r) {
    json j = {{"theorem", r.theorem}, {"instance", r.instance}, {"result", r.pass ? "PASS" : "FAIL"},
              {"checked", r.checked}};
    if (!r.pass) {
        j["detail"] = r.detail;
        if (!r.witness.empty()) {
            json w = json::parse(r.witness, nullptr, false);
            j["witness"] = w.is_discarded() ? json(r.witness) : w;
        }
    }
    return j;
}

inline json to_json(const CountTable& t) {
    json rows = json::array();
    for (const auto& [key, c] : t.counts) {
        auto [n, s, u] = key;
        rows.push_back({{"n", n}, {t.x, s}, {t.y, u}, {"count", c}});
    }
    return {{"shape", t.shape}, {"class", to_string(t.cls)}, {"x", t.x}, {"y", t.y}, {"counts", rows}};
}

// Input helpers -------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline JSON if the text starts with '{', otherwise a path to a JSON file.
inline json parse_json_arg(const std::string& text) {
    std::string body = !text.empty() && text.front() == '{' ? text : read_file(text);
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded())
        throw parse_error("input is not valid JSON");
    return j;
}

} // namespace growth
