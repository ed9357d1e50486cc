/*
 * Copyright 2026 The scgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <set>

#include "json_util.hpp"
#include "scg/generalized.hpp"

namespace scg {

using detail::json;

namespace {

json open_document(std::string_view text, const char* type)
{
    json doc = detail::parse_json(text);
    if (!doc.is_object())
        throw ParseError("instance must be a JSON object");
    if (detail::field(doc, "type") != type)
        throw ParseError(std::string("field 'type': expected \"") + type + "\"");
    return doc;
}

int positive_int(const json& doc, const char* name)
{
    long long v = detail::int_field(doc, name);
    if (v < 1 || v > 1'000'000)
        throw ParseError(std::string("field '") + name + "' must be a positive integer");
    return static_cast<int>(v);
}

const json& array_field(const json& obj, const char* name, const std::string& where)
{
    const json& v = detail::field(obj, name);
    if (!v.is_array())
        throw ParseError("field '" + where + "' must be an array");
    return v;
}

int index_value(const json& v, const std::string& where, int lo, int hi)
{
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi)
        throw ParseError("field '" + where + "' must be an integer in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    return static_cast<int>(v.get<long long>());
}

// Model constructors throw ArgumentError; surface those as parse failures.
template <class F>
auto build(F&& f)
{
    try {
        return f();
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

} // namespace

GeneralizedGame parse_generalized(std::string_view text)
{
    json doc = open_document(text, "generalized");
    const int n = positive_int(doc, "n");
    const int m = positive_int(doc, "m");
    std::optional<Extended> r;
    if (doc.contains("r")) {
        const json& v = doc["r"];
        if (!v.is_string())
            throw ParseError("field 'r' must be a rational string or \"inf\"");
        try {
            r = parse_extended(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(std::string("field 'r': ") + e.what());
        }
    }
    const json& players = array_field(doc, "utilities", "utilities");
    if (static_cast<int>(players.size()) != n)
        throw ParseError("field 'utilities' must have one list per player");
    std::vector<UtilityEntry> entries;
    for (int i = 0; i < n; ++i) {
        const std::string at = "utilities[" + std::to_string(i) + "]";
        if (!players[i].is_array())
            throw ParseError("field '" + at + "' must be an array");
        for (std::size_t x = 0; x < players[i].size(); ++x) {
            const std::string here = at + "[" + std::to_string(x) + "]";
            const json& obj = players[i][x];
            UtilityEntry e;
            e.player = i;
            e.strategy = index_value(detail::field(obj, "strategy"), here + ".strategy", 1, m) - 1;
            const json& subset = array_field(obj, "subset", here + ".subset");
            for (std::size_t y = 0; y < subset.size(); ++y)
                e.subset.push_back(index_value(subset[y], here + ".subset", 0, n - 1));
            e.utility = detail::rational_value(detail::field(obj, "utility"), here + ".utility");
            entries.push_back(std::move(e));
        }
    }
    return build([&] { return GeneralizedGame(n, m, entries, r); });
}

std::string serialize_generalized(const GeneralizedGame& game)
{
    json doc;
    doc["type"] = "generalized";
    doc["n"] = game.players();
    doc["m"] = game.strategies();
    if (game.declared_r())
        doc["r"] = to_string(*game.declared_r());
    json players = json::array();
    for (int i = 0; i < game.players(); ++i)
        players.push_back(json::array());
    for (const auto& e : game.entries())
        players[e.player].push_back(
            {{"strategy", e.strategy + 1}, {"subset", e.subset}, {"utility", detail::rational_json(e.utility)}});
    doc["utilities"] = std::move(players);
    return doc.dump() + "\n";
}

HypergraphGame parse_hypergraph(std::string_view text)
{
    json doc = open_document(text, "hypergraph");
    const int n = positive_int(doc, "n");
    const int m = positive_int(doc, "m");
    const json& list = array_field(doc, "edges", "edges");
    std::vector<Hyperedge> edges;
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string at = "edges[" + std::to_string(e) + "]";
        const json& obj = list[e];
        Hyperedge h;
        const json& players = array_field(obj, "players", at + ".players");
        for (const auto& p : players)
            h.players.push_back(index_value(p, at + ".players", 0, n - 1));
        if (obj.contains("anchors")) {
            const json& anchors = array_field(obj, "anchors", at + ".anchors");
            for (const auto& k : anchors)
                h.anchors.push_back(index_value(k, at + ".anchors", 1, m) - 1);
        }
        h.weight = detail::rational_value(detail::field(obj, "w"), at + ".w");
        const json& shares = array_field(obj, "shares", at + ".shares");
        for (std::size_t x = 0; x < shares.size(); ++x)
            h.shares.push_back(detail::rational_value(shares[x], at + ".shares[" + std::to_string(x) + "]"));
        edges.push_back(std::move(h));
    }
    return build([&] { return HypergraphGame(n, m, std::move(edges)); });
}

std::string serialize_hypergraph(const HypergraphGame& game)
{
    json doc;
    doc["type"] = "hypergraph";
    doc["n"] = game.players();
    doc["m"] = game.strategies();
    json edges = json::array();
    for (const auto& h : game.edges()) {
        json anchors = json::array();
        for (int k : h.anchors)
            anchors.push_back(k + 1);
        json shares = json::array();
        for (const auto& x : h.shares)
            shares.push_back(detail::rational_json(x));
        edges.push_back({{"players", h.players},
                         {"anchors", std::move(anchors)},
                         {"w", detail::rational_json(h.weight)},
                         {"shares", std::move(shares)}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

OmegaGame parse_omega(std::string_view text)
{
    json doc = open_document(text, "omega");
    const int n = positive_int(doc, "n");
    const int m = positive_int(doc, "m");
    auto vec = [&](const char* name) {
        const json& v = array_field(doc, name, name);
        if (static_cast<int>(v.size()) != n)
            throw ParseError(std::string("field '") + name + "' must have n entries");
        std::vector<Rational> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(detail::rational_value(v[i], std::string(name) + "[" + std::to_string(i) + "]"));
        return out;
    };
    std::vector<Rational> a = vec("a");
    std::vector<Rational> b = vec("b");
    const json& rows = array_field(doc, "labels", "labels");
    if (static_cast<int>(rows.size()) != n)
        throw ParseError("field 'labels' must have n rows");
    std::vector<std::vector<PairLabel>> labels(n);
    for (int i = 0; i < n; ++i) {
        const std::string at = "labels[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw ParseError("field '" + at + "' must have n entries");
        for (int j = 0; j < n; ++j) {
            const json& v = rows[i][j];
            if (v == "zero")
                labels[i].push_back(PairLabel::zero);
            else if (v == "one")
                labels[i].push_back(PairLabel::one);
            else if (v == "conflict")
                labels[i].push_back(PairLabel::conflict);
            else
                throw ParseError("field '" + at + "[" + std::to_string(j) + "]' must be zero, one or conflict");
        }
    }
    Rational omega = detail::rational_value(detail::field(doc, "omega"), "omega");
    return build([&] { return OmegaGame(m, std::move(a), std::move(b), std::move(labels), std::move(omega)); });
}

std::string serialize_omega(const OmegaGame& game)
{
    json doc;
    doc["type"] = "omega";
    doc["n"] = game.players();
    doc["m"] = game.strategies();
    json a = json::array(), b = json::array(), labels = json::array();
    for (int i = 0; i < game.players(); ++i) {
        a.push_back(detail::rational_json(game.a(i)));
        b.push_back(detail::rational_json(game.b(i)));
        json row = json::array();
        for (int j = 0; j < game.players(); ++j)
            row.push_back(to_string(game.label(i, j)));
        labels.push_back(std::move(row));
    }
    doc["a"] = std::move(a);
    doc["b"] = std::move(b);
    doc["labels"] = std::move(labels);
    doc["omega"] = detail::rational_json(game.omega());
    return doc.dump() + "\n";
}

} // namespace scg
