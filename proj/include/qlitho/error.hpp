// Copyright 2026 The qlitho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qlitho {

// Base for every error raised by the library. Derived types let callers
// (and the CLI exit-code mapping) distinguish failure classes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All amplitudes vanish, so the state cannot be normalized.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// An occupation or operator power exceeds the Fock-space cutoff.
class CutoffError : public Error {
 public:
  using Error::Error;
};

class UnitarityError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Mismatched lengths or grids.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class AliasingError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlitho
