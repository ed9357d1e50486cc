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
#include <string_view>

#include "scg/game.hpp"

namespace scg {

/// Reads the instance schema
///   {"n": int, "m": int, "intrinsic": [[rational]], "edges": [{"i","j","w","share_ij"}]}
/// with 0-based player indices and rationals as "p/q" or integer strings.
/// Throws ParseError naming the offending field.
Game parse_instance(std::string_view text);

/// Newline-terminated JSON in the same schema. parse(serialize(g)) == g.
std::string serialize_instance(const Game& game);

/// The document's "type" field ("scg" when absent). Throws ParseError on malformed JSON.
std::string instance_type(std::string_view text);

Game load_instance(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

} // namespace scg
