// Copyright 2026 The Retrodictor Authors
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

namespace retro {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on different algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// An element that was required to be a faithful state is not one.
class NotFaithful : public Error {
 public:
  using Error::Error;
};

/// A channel that was required to be CPTP fails the check.
class NotCptp : public Error {
 public:
  using Error::Error;
};

/// A strategy or operation does not apply to the given instance
/// (e.g. a classical-only map on a non-commutative algebra).
class Inapplicable : public Error {
 public:
  using Error::Error;
};

/// A constraint set has no solution, or the solution is degenerate.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Input data could not be parsed or is out of range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace retro
