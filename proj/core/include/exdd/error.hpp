// Copyright 2026 The exdd Authors
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

namespace exdd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (files, command-line values).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The switching-time or interval solver failed to converge.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual_norm, int iterations)
      : Error(what + " (residual norm " + std::to_string(residual_norm) + " after " +
              std::to_string(iterations) + " iterations)"),
        residual_norm_(residual_norm),
        iterations_(iterations) {}

  double residual_norm() const noexcept { return residual_norm_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_norm_;
  int iterations_;
};

/// The constraint system does not determine the unknowns.
class UnderdeterminedError : public SolverError {
 public:
  UnderdeterminedError(const std::string& what, int rank, int unknowns)
      : SolverError(what + ": Jacobian rank " + std::to_string(rank) + " < " +
                        std::to_string(unknowns) + " unknowns (underdetermined)",
                    0.0, 0),
        rank_(rank) {}

  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

}  // namespace exdd
