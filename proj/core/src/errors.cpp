// Copyright 2026 The hqsa Authors
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

#include "hqsa/errors.hpp"

#include <sstream>

namespace hqsa {

namespace {

std::string describe_cycle(const std::vector<int>& cycle) {
  std::ostringstream os;
  os << "interaction graph is not two-colourable; odd cycle:";
  for (int v : cycle) os << ' ' << v;
  return os.str();
}

}  // namespace

NotTwoColourable::NotTwoColourable(std::vector<int> odd_cycle)
    : ValidationError(describe_cycle(odd_cycle)), odd_cycle_(std::move(odd_cycle)) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : message + " at line " + std::to_string(line) +
                                         ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

}  // namespace hqsa
