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

#include "sesqui/rulefile.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sesqui/errors.hpp"

namespace sesqui {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::size_t parse_length(const std::string& text, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0)
    throw RuleFileError(line, "expected a positive block length, got '" + text + "'");
  return v;
}

}  // namespace

RuleFile parse_rule_file(std::istream& in) {
  struct Entry {
    std::size_t line;
    std::string input;
    std::string output;
  };
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<Entry> rules;
  std::vector<std::pair<std::string, std::string>> codes;
  std::set<char> symbols;

  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto t = tokens(raw);
    if (t.empty()) continue;
    if (p == 0) {
      if (t.size() != 2) throw RuleFileError(line, "expected the header 'p q'");
      p = parse_length(t[0], line);
      q = parse_length(t[1], line);
      continue;
    }
    if (t.size() == 3 && t[0] == "code") {
      if (t[2].size() != 1) throw RuleFileError(line, "coding letters must be single characters");
      codes.emplace_back(t[1], t[2]);
      symbols.insert(t[2][0]);
      continue;
    }
    if (t.size() != 2) throw RuleFileError(line, "expected '<input-word> <output-word>'");
    if (t[0].size() != p)
      throw RuleFileError(line, "input '" + t[0] + "' does not have length " + std::to_string(p));
    if (t[1].size() != q)
      throw RuleFileError(line, "output '" + t[1] + "' does not have length " + std::to_string(q));
    for (char c : t[0] + t[1]) symbols.insert(c);
    rules.push_back({line, t[0], t[1]});
  }
  if (p == 0) throw RuleFileError(1, "missing the header 'p q'");
  if (rules.empty()) throw RuleFileError(1, "no rules");

  std::vector<std::string> names;
  for (char c : symbols) names.emplace_back(1, c);
  BlockSubstitution sub(p, q, Alphabet(std::move(names)));
  for (const auto& r : rules) {
    const Word input = sub.alphabet().parse(r.input);
    if (sub.has_rule(input)) throw RuleFileError(r.line, "duplicate rule for '" + r.input + "'");
    sub.set_rule(input, sub.alphabet().parse(r.output));
  }
  return {std::move(sub), std::move(codes)};
}

RuleFile read_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file '" + path + "'");
  return parse_rule_file(in);
}

std::string format_rule_file(const BlockSubstitution& sub,
                             const std::vector<std::pair<std::string, std::string>>& codes,
                             const std::vector<std::string>& comments) {
  if (!sub.alphabet().single_char())
    throw std::invalid_argument("rule files need single-character symbol names");
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::to_string(sub.input_length()) + " " + std::to_string(sub.output_length()) + "\n";
  for (const auto& rule : sub.rules())
    out += sub.alphabet().format(rule.input) + " " + sub.alphabet().format(rule.output) + "\n";
  for (const auto& [word, letter] : codes) out += "code " + word + " " + letter + "\n";
  return out;
}

}  // namespace sesqui
