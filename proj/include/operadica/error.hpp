/*
 *   Copyright 2026 the operadica authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace operadica {

//! Raised when a value lies outside the carrier of a monoid, when two
//! objects over different monoids are combined, or when an operation is
//! asked of a family that does not support it.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Raised when a grafting position or letter index is out of range.
class IndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Raised when an enumeration would exceed the configured element budget.
//! Carries the arity at which the budget was hit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int arity_reached)
      : std::runtime_error(what), arity_reached_(arity_reached) {}

  int arity_reached() const noexcept { return arity_reached_; }

 private:
  int arity_reached_;
};

//! Raised for malformed command-line input: unknown names, bad word or
//! permutation syntax, missing flags.  The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace operadica
