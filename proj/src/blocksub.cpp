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

#include "sesqui/blocksub.hpp"

#include <stdexcept>

namespace sesqui {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  by_char_.fill(-1);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw std::invalid_argument("empty symbol name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw std::invalid_argument("duplicate symbol '" + n + "'");
    if (n.size() == 1)
      by_char_[static_cast<unsigned char>(n[0])] = static_cast<std::int32_t>(i);
    else
      single_char_ = false;
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::digits(std::size_t size) {
  if (size > 10) throw std::invalid_argument("digit alphabets have at most 10 symbols");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('0' + i));
  return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  if (name.size() == 1) {
    const auto i = by_char_[static_cast<unsigned char>(name[0])];
    if (i >= 0) return static_cast<Symbol>(i);
    return std::nullopt;
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

Word Alphabet::parse(std::string_view text) const {
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    const auto i = by_char_[static_cast<unsigned char>(c)];
    if (i < 0) throw std::invalid_argument("unknown symbol '" + std::string(1, c) + "'");
    word.push_back(static_cast<Symbol>(i));
  }
  return word;
}

std::string Alphabet::format(std::span<const Symbol> word) const {
  std::string out;
  out.reserve(word.size());
  for (auto s : word) out += names_.at(s);
  return out;
}

std::size_t minimal_growing_length(std::size_t input_length, std::size_t output_length) {
  if (output_length <= input_length) throw NoGrowth("output blocks are not longer than input blocks");
  // m = k p + j grows iff k (q - p) > j; the worst case is j = p - 1.
  const std::size_t k = (input_length - 1) / (output_length - input_length) + 1;
  return k * input_length;
}

BlockSubstitution::BlockSubstitution(std::size_t input_length, std::size_t output_length,
                                     Alphabet alphabet)
    : p_(input_length), q_(output_length), alphabet_(std::move(alphabet)) {
  if (p_ == 0 || q_ == 0) throw std::invalid_argument("block lengths must be positive");
  if (alphabet_.size() == 0) throw std::invalid_argument("empty alphabet");
  std::size_t size = 1;
  for (std::size_t i = 0; i < p_; ++i) {
    if (size > kMaxTableSize / alphabet_.size())
      throw std::length_error("rule table for " + std::to_string(alphabet_.size()) + "^" +
                              std::to_string(p_) + " blocks is too large");
    size *= alphabet_.size();
  }
  defined_.assign(size, 0);
  outputs_.assign(size * q_, 0);
}

std::size_t BlockSubstitution::code(std::span<const Symbol> input) const {
  if (input.size() != p_)
    throw std::invalid_argument("rule input must have length " + std::to_string(p_));
  std::size_t c = 0;
  for (auto s : input) {
    if (s >= alphabet_.size()) throw std::invalid_argument("symbol outside the alphabet");
    c = c * alphabet_.size() + s;
  }
  return c;
}

void BlockSubstitution::set_rule(std::span<const Symbol> input, std::span<const Symbol> output) {
  const std::size_t c = code(input);
  if (output.size() != q_)
    throw std::invalid_argument("rule output must have length " + std::to_string(q_));
  for (auto s : output)
    if (s >= alphabet_.size()) throw std::invalid_argument("symbol outside the alphabet");
  std::copy(output.begin(), output.end(), outputs_.begin() + static_cast<std::ptrdiff_t>(c * q_));
  if (!defined_[c]) {
    defined_[c] = 1;
    ++rule_count_;
  }
}

void BlockSubstitution::set_rule(std::string_view input, std::string_view output) {
  set_rule(alphabet_.parse(input), alphabet_.parse(output));
}

std::optional<std::span<const Symbol>> BlockSubstitution::rule(
    std::span<const Symbol> input) const {
  const std::size_t c = code(input);
  if (!defined_[c]) return std::nullopt;
  return std::span<const Symbol>(outputs_).subspan(c * q_, q_);
}

std::vector<BlockSubstitution::Rule> BlockSubstitution::rules() const {
  std::vector<Rule> out;
  out.reserve(rule_count_);
  for (std::size_t c = 0; c < defined_.size(); ++c) {
    if (!defined_[c]) continue;
    Word input(p_);
    std::size_t rest = c;
    for (std::size_t i = p_; i-- > 0;) {
      input[i] = static_cast<Symbol>(rest % alphabet_.size());
      rest /= alphabet_.size();
    }
    auto first = outputs_.begin() + static_cast<std::ptrdiff_t>(c * q_);
    out.push_back({std::move(input), Word(first, first + static_cast<std::ptrdiff_t>(q_))});
  }
  return out;
}

void BlockSubstitution::apply_block(std::span<const Symbol> input,
                                    std::span<Symbol> output) const {
  std::size_t c = 0;
  bool known = input.size() == p_;
  for (auto s : input) {
    known = known && s < alphabet_.size();
    c = c * alphabet_.size() + s;
  }
  if (!known) throw MissingRule("block contains a symbol outside the alphabet");
  if (!defined_[c])
    throw MissingRule("no rule for block '" + alphabet_.format(input) + "'");
  const auto* src = outputs_.data() + c * q_;
  std::copy(src, src + q_, output.begin());
}

std::optional<Word> find_seed(const BlockSubstitution& sub) {
  const std::size_t p = sub.input_length();
  const std::size_t q = sub.output_length();
  if (q <= p) return std::nullopt;
  const std::size_t length = minimal_growing_length(p, q);
  const std::size_t sigma = sub.alphabet().size();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (candidates > (std::size_t{1} << 22) / sigma)
      throw std::length_error("too many seed candidates; give a seed explicitly");
    candidates *= sigma;
  }
  Word word(length, 0);
  Word image;
  for (std::size_t c = 0; c < candidates; ++c) {
    std::size_t rest = c;
    for (std::size_t i = length; i-- > 0;) {
      word[i] = static_cast<Symbol>(rest % sigma);
      rest /= sigma;
    }
    bool defined = true;
    image.clear();
    for (std::size_t k = 0; k + p <= length && defined; k += p) {
      auto r = sub.rule(std::span<const Symbol>(word).subspan(k, p));
      if (r)
        image.insert(image.end(), r->begin(), r->end());
      else
        defined = false;
    }
    if (defined && std::equal(word.begin(), word.end(), image.begin())) return word;
  }
  return std::nullopt;
}

bool operator==(const BlockSubstitution& a, const BlockSubstitution& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_ || !(a.alphabet_ == b.alphabet_) ||
      a.defined_ != b.defined_)
    return false;
  for (std::size_t c = 0; c < a.defined_.size(); ++c)
    if (a.defined_[c] &&
        !std::equal(a.outputs_.begin() + static_cast<std::ptrdiff_t>(c * a.q_),
                    a.outputs_.begin() + static_cast<std::ptrdiff_t>((c + 1) * a.q_),
                    b.outputs_.begin() + static_cast<std::ptrdiff_t>(c * b.q_)))
      return false;
  return true;
}

}  // namespace sesqui
