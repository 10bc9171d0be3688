// Copyright 2026 The iterdep Authors
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

#ifndef ITERDEP_ERRORS_HPP
#define ITERDEP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iterdep {

// Caller supplied something outside an operation's contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A computation was declined: a cutoff, a size guard, or an invariant that
// could not be decided with the information at hand.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proven identity failed to hold. Never expected; treat as a defect.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iterdep

#endif  // ITERDEP_ERRORS_HPP
