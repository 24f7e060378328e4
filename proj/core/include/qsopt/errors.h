// Copyright 2026 The qsopt Authors.
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

#ifndef QSOPT_ERRORS_H_
#define QSOPT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qsopt {

// Raised when an algorithm detects a state its correctness argument rules
// out, e.g. an empty working lattice in the maximizer. On a quasi-submodular
// input this is always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

// An exhaustive routine was asked to enumerate more than its configured cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

// Malformed spec / config input.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsopt

#endif  // QSOPT_ERRORS_H_
