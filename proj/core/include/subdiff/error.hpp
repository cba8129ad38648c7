// Copyright 2026 The subdiff Authors
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

#ifndef SUBDIFF_ERROR_HPP_
#define SUBDIFF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace subdiff {

// Base for every error raised by the library. The CLI maps any of these to a
// non-zero exit code and prints what() to stderr.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (bad edge endpoints, empty datasets,
// parse failures).
class InputError : public Error {
 public:
  using Error::Error;
};

// A size bound of an exact algorithm was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A caller violated a documented precondition (missing marks, unnormalized
// histogram, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Noise level too small for the score to be numerically meaningful.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Truncated Taylor series is outside the regime where it approximates the
// score. Carries the diagnostic ratio alpha * max|<T, W>| / beta^2.
class SeriesDivergenceError : public Error {
 public:
  SeriesDivergenceError(const std::string& what, double ratio)
      : Error(what), ratio_(ratio) {}
  double ratio() const { return ratio_; }

 private:
  double ratio_;
};

// Rejection sampling ran out of retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace subdiff

#endif  // SUBDIFF_ERROR_HPP_
