// Copyright 2026 The sesqui Authors.
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

// Line-oriented rule files.
//
//   # comment
//   2 3            block lengths
//   00 010         one rule per line: input word, output word
//   code 00 a      optional coding lines: factor word, letter
//
// Symbols are single characters; the alphabet is every symbol that appears
// in a rule or as a coding letter, in character order.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sesqui/blocksub.hpp"

namespace sesqui {

struct RuleFile {
  BlockSubstitution substitution;
  /// (factor word, letter) pairs in file order.
  std::vector<std::pair<std::string, std::string>> codes;
};

/// Throws RuleFileError with the 1-based line number on malformed input.
RuleFile parse_rule_file(std::istream& in);
RuleFile read_rule_file(const std::string& path);

/// Writes `comments` as "# " lines, then the header, rules and codes.
/// Throws std::invalid_argument if a symbol name is not a single character.
std::string format_rule_file(const BlockSubstitution& sub,
                             const std::vector<std::pair<std::string, std::string>>& codes = {},
                             const std::vector<std::string>& comments = {});

}  // namespace sesqui
