/*
 * Copyright (c) 2026, The wflag Authors.
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

namespace wflag {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown group type, wrong vector length, bad file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (non-positive embedding weight,
/// non-dominant highest weight, wrong vanishing order, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (monomial count, candidate count) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_internal(const std::string& what);

}  // namespace wflag
