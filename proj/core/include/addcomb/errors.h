// Copyright 2026 The addcomb Authors
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

#ifndef ADDCOMB_ERRORS_H_
#define ADDCOMB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace addcomb {

// Base class for every error raised by the library. Verdicts (a set failing
// a B-check, an UNSAT search) are never reported through exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pointwise digit sum left [-2, 2].
class DigitOverflow : public Error {
 public:
  using Error::Error;
};

// A constructed object failed its own post-construction check.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

class NoPrimeFound : public Error {
 public:
  using Error::Error;
};

class SingularSubmatrix : public Error {
 public:
  using Error::Error;
};

// The lattice has no point with every coordinate <= n.
class EmptyConstruction : public Error {
 public:
  using Error::Error;
};

// An enumeration or materialization would exceed a configured budget.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace addcomb

#endif  // ADDCOMB_ERRORS_H_
