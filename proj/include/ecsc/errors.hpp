/*
 * Copyright (C) 2026 The ecsc Authors
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

namespace ecsc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// API or command-line misuse (bad arguments, wrong field, missing file).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// Inversion of zero in a prime field.
class DivisionByZeroError : public UsageError {
public:
    explicit DivisionByZeroError(const std::string& msg) : UsageError(msg) {}
};

/// Malformed or corrupted input: bad encodings, off-curve points,
/// out-of-range scalars, degenerate derived values.
class MalformedError : public Error {
public:
    explicit MalformedError(const std::string& msg) : Error(msg) {}
};

/// A well-formed signcryption that fails the verification equation.
/// Deliberately distinct from MalformedError so protocol-level forgery
/// attempts are distinguishable from transmission corruption.
class RejectionError : public Error {
public:
    explicit RejectionError(const std::string& msg) : Error(msg) {}
};

/// Certificate validation failure; the message names the failed sub-check.
class CertificateError : public Error {
public:
    explicit CertificateError(const std::string& msg) : Error(msg) {}
};

} // namespace ecsc
