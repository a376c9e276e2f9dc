/*
 * Copyright 2025-2026 The lcspg authors
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

#ifndef LCSPG_ERRORS_HPP
#define LCSPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcspg {

struct NotClosableError : std::runtime_error {
    explicit NotClosableError(const std::string& what) : std::runtime_error(what) {}
};

struct HasRandomStatesError : std::runtime_error {
    explicit HasRandomStatesError(const std::string& what) : std::runtime_error(what) {}
};

struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct TooLongError : std::runtime_error {
    explicit TooLongError(const std::string& what) : std::runtime_error(what) {}
};

struct PhaseMismatchError : std::logic_error {
    explicit PhaseMismatchError(const std::string& what) : std::logic_error(what) {}
};

struct SignatureMismatchError : std::logic_error {
    explicit SignatureMismatchError(const std::string& what) : std::logic_error(what) {}
};

struct NotATrapError : std::runtime_error {
    explicit NotATrapError(const std::string& what) : std::runtime_error(what) {}
};

struct CeilingExceededError : std::runtime_error {
    explicit CeilingExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lcspg

#endif // LCSPG_ERRORS_HPP
