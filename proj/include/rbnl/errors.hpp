// Copyright 2026 The rbnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rbnl {

/**
 * Raised when an input violates a mathematical invariant (non-Hermitian
 * matrix, trace off one, parameter out of range, ...).
 *
 * invariant() names the violated property so front ends can report it
 * without parsing the message.
 */
class DomainError : public std::domain_error {
 public:
  DomainError(std::string invariant, const std::string& what)
      : std::domain_error(invariant + ": " + what),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/** File system or stream failure. */
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbnl
