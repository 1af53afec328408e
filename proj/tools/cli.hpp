/*
   Copyright 2026 The multiset-codes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace msc::cli {

/// Exit statuses partition the outcomes: 0 success, 1 usage or input
/// error, 2 negative verdict (e.g. "not a B_h set"), 3 budget exhausted.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;
inline constexpr int kBudget = 3;

/// Runs one command line (without the program name). Results are written
/// as a JSON bundle to --out when given, otherwise to `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msc::cli
