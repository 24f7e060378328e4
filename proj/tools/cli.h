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

#ifndef QSOPT_TOOLS_CLI_H_
#define QSOPT_TOOLS_CLI_H_

#include <ostream>

namespace qsopt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInvariant = 3;

// Entry point of the qsopt tool, kept out of main() so tests can drive it.
int RunQsopt(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace qsopt

#endif  // QSOPT_TOOLS_CLI_H_
