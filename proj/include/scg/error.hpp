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

#include <stdexcept>
#include <string>

namespace scg {

/// Bad parameter or precondition violation on a public operation.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed instance or report text. The message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration requested on an instance beyond the size guard.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance admits no feasible state (e.g. every state co-locates a conflict pair).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not defined for this instance (e.g. unbounded supermodularity).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scg
