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

#include "scg/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace scg {

using detail::json;

Game parse_instance(std::string_view text)
{
    json doc = detail::parse_json(text);
    if (!doc.is_object())
        throw ParseError("instance must be a JSON object");
    if (doc.contains("type") && doc["type"] != "scg")
        throw ParseError("field 'type': expected \"scg\"");

    const long long n = detail::int_field(doc, "n");
    const long long m = detail::int_field(doc, "m");
    if (n < 1)
        throw ParseError("field 'n' must be positive");
    if (m < 1)
        throw ParseError("field 'm' must be positive");

    const json& rows = detail::field(doc, "intrinsic");
    if (!rows.is_array() || static_cast<long long>(rows.size()) != n)
        throw ParseError("field 'intrinsic' must have n rows");
    std::vector<std::vector<Rational>> intrinsic(n);
    for (long long i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<long long>(rows[i].size()) != m)
            throw ParseError("field 'intrinsic[" + std::to_string(i) + "]' must have m entries");
        for (long long k = 0; k < m; ++k) {
            std::string where = "intrinsic[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            Rational w = detail::rational_value(rows[i][k], where);
            if (w < 0)
                throw ParseError("field '" + where + "': negative intrinsic preference");
            intrinsic[i].push_back(std::move(w));
        }
    }

    std::vector<Edge> edges;
    std::set<std::pair<long long, long long>> seen;
    const json& list = detail::field(doc, "edges");
    if (!list.is_array())
        throw ParseError("field 'edges' must be an array");
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string at = "edges[" + std::to_string(e) + "]";
        const json& obj = list[e];
        if (!obj.is_object())
            throw ParseError("field '" + at + "' must be an object");
        long long i = detail::int_field(obj, "i");
        long long j = detail::int_field(obj, "j");
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw ParseError("field '" + at + "': endpoint out of range");
        if (i == j)
            throw ParseError("field '" + at + "': self edge");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
            throw ParseError("field '" + at + "': duplicate edge");
        Rational w = detail::rational_value(detail::field(obj, "w"), at + ".w");
        if (w < 0)
            throw ParseError("field '" + at + ".w': negative weight");
        Rational share = detail::rational_value(detail::field(obj, "share_ij"), at + ".share_ij");
        if (share < 0 || share > 1)
            throw ParseError("field '" + at + ".share_ij': share out of range");
        edges.push_back({static_cast<int>(i), static_cast<int>(j), std::move(w), std::move(share)});
    }
    return Game(static_cast<int>(m), std::move(intrinsic), std::move(edges));
}

std::string serialize_instance(const Game& game)
{
    json doc;
    doc["n"] = game.players();
    doc["m"] = game.strategies();
    json rows = json::array();
    for (const auto& row : game.intrinsic_matrix()) {
        json r = json::array();
        for (const auto& w : row)
            r.push_back(detail::rational_json(w));
        rows.push_back(std::move(r));
    }
    doc["intrinsic"] = std::move(rows);
    json edges = json::array();
    for (const auto& e : game.edges())
        edges.push_back({{"i", e.i}, {"j", e.j}, {"w", detail::rational_json(e.weight)},
                         {"share_ij", detail::rational_json(e.share_ij)}});
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

std::string load_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ArgumentError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ArgumentError("cannot write '" + path + "'");
    out << text;
}

std::string instance_type(std::string_view text)
{
    json doc = detail::parse_json(text);
    if (!doc.is_object())
        throw ParseError("instance must be a JSON object");
    if (!doc.contains("type"))
        return "scg";
    if (!doc["type"].is_string())
        throw ParseError("field 'type' must be a string");
    return doc["type"].get<std::string>();
}

Game load_instance(const std::string& path)
{
    return parse_instance(load_text(path));
}

} // namespace scg
