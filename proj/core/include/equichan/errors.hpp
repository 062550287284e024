// Copyright 2026 the equichan authors
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

#ifndef EQUICHAN_ERRORS_HPP
#define EQUICHAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equichan {

/// Base class of every validation error thrown by the library. The CLI maps
/// these to exit code 2; anything else is an internal error (exit 1).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

// Kadison-gap evaluation produced a non-Hermitian M_Phi(X); signals a channel
// that is not Hermiticity-preserving.
class NotHermitianIntermediate : public Error {
 public:
  using Error::Error;
};

class NotUnital : public Error {
 public:
  using Error::Error;
};

class NonRealParameter : public Error {
 public:
  using Error::Error;
};

class StructurallyInvalid : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensions : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class SpecInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace equichan

#endif  // EQUICHAN_ERRORS_HPP
