/* Copyright 2026 The plactic Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef PLACTIC_TOOLS_CLI_HPP
#define PLACTIC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace plactic::cli {

inline constexpr int kExitOk    = 0;
inline constexpr int kExitFalse = 1;  // false verdict or failed verification
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(std::vector<std::string> const& args,
        std::ostream&                   out,
        std::ostream&                   err);

}  // namespace plactic::cli

#endif  // PLACTIC_TOOLS_CLI_HPP
