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

#pragma once

#include <string>

#include "json.hpp"

#include "scg/error.hpp"
#include "scg/rational.hpp"

namespace scg::detail {

using json = nlohmann::ordered_json;

inline json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline const json& field(const json& obj, const char* name)
{
    if (!obj.is_object() || !obj.contains(name))
        throw ParseError(std::string("missing field '") + name + "'");
    return obj.at(name);
}

inline long long int_field(const json& obj, const char* name)
{
    const json& v = field(obj, name);
    if (!v.is_number_integer())
        throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<long long>();
}

inline Rational rational_value(const json& v, const std::string& where)
{
    try {
        if (v.is_string())
            return parse_rational(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(mpz_class(std::to_string(v.get<long long>())));
    } catch (const ParseError& e) {
        throw ParseError("field '" + where + "': " + e.what());
    }
    throw ParseError("field '" + where + "' must be a rational string");
}

inline json rational_json(const Rational& r)
{
    return to_string(r);
}

} // namespace scg::detail
