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

// Block substitutions: maps that replace consecutive length-p blocks of a
// word by length-q words. Finite-alphabet substitutions keep a dense rule
// table; infinite-alphabet ones are closed-form functions.

#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sesqui/errors.hpp"

namespace sesqui {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Ordered set of named symbols. Symbol i is the i-th name.
class Alphabet {
 public:
  Alphabet() { by_char_.fill(-1); }
  explicit Alphabet(std::vector<std::string> names);

  /// {"0", "1"}.
  static Alphabet binary();
  /// {"0", ..., "<size-1>"} for size <= 10.
  static Alphabet digits(std::size_t size);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> find(std::string_view name) const;

  /// True when every name is a single character.
  bool single_char() const noexcept { return single_char_; }

  /// Reads a word written with single-character names.
  Word parse(std::string_view text) const;
  /// Concatenates the names of the symbols.
  std::string format(std::span<const Symbol> word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::array<std::int32_t, 256> by_char_{};
  bool single_char_ = true;
};

template <class S>
concept BlockMap = requires(const S& s, std::span<const typename S::symbol_type> in,
                            std::span<typename S::symbol_type> out) {
  { s.input_length() } -> std::convertible_to<std::size_t>;
  { s.output_length() } -> std::convertible_to<std::size_t>;
  s.apply_block(in, out);
};

/// A p-q block substitution over a finite alphabet. The rule table may be
/// partial; applying it to a block without a rule throws MissingRule.
class BlockSubstitution {
 public:
  using symbol_type = Symbol;

  struct Rule {
    Word input;
    Word output;
    friend bool operator==(const Rule&, const Rule&) = default;
  };

  BlockSubstitution(std::size_t input_length, std::size_t output_length, Alphabet alphabet);

  std::size_t input_length() const noexcept { return p_; }
  std::size_t output_length() const noexcept { return q_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// Throws std::invalid_argument on wrong lengths or unknown symbols.
  void set_rule(std::span<const Symbol> input, std::span<const Symbol> output);
  void set_rule(std::string_view input, std::string_view output);

  std::optional<std::span<const Symbol>> rule(std::span<const Symbol> input) const;
  bool has_rule(std::span<const Symbol> input) const { return rule(input).has_value(); }

  std::size_t rule_count() const noexcept { return rule_count_; }
  bool is_total() const noexcept { return rule_count_ == defined_.size(); }

  /// Defined rules, ordered lexicographically by input.
  std::vector<Rule> rules() const;

  void apply_block(std::span<const Symbol> input, std::span<Symbol> output) const;

  friend bool operator==(const BlockSubstitution& a, const BlockSubstitution& b);

 private:
  std::size_t code(std::span<const Symbol> input) const;

  std::size_t p_;
  std::size_t q_;
  Alphabet alphabet_;
  std::vector<Symbol> outputs_;
  std::vector<char> defined_;
  std::size_t rule_count_ = 0;
};

/// A p-q block substitution on the naturals given by a closed-form rule.
class RuleSubstitution {
 public:
  using symbol_type = std::uint64_t;
  using Function = std::function<void(std::span<const symbol_type>, std::span<symbol_type>)>;

  RuleSubstitution(std::size_t input_length, std::size_t output_length, Function rule)
      : p_(input_length), q_(output_length), rule_(std::move(rule)) {}

  std::size_t input_length() const noexcept { return p_; }
  std::size_t output_length() const noexcept { return q_; }

  void apply_block(std::span<const symbol_type> input, std::span<symbol_type> output) const {
    rule_(input, output);
  }

 private:
  std::size_t p_;
  std::size_t q_;
  Function rule_;
};

/// Blockwise image of `word`; its length must be a multiple of p.
template <BlockMap S>
std::vector<typename S::symbol_type> apply(const S& sub,
                                           std::span<const typename S::symbol_type> word) {
  const std::size_t p = sub.input_length();
  const std::size_t q = sub.output_length();
  if (p == 0 || word.size() % p != 0) throw LengthNotMultiple(word.size(), p);
  std::vector<typename S::symbol_type> out(word.size() / p * q);
  for (std::size_t k = 0; k < word.size() / p; ++k)
    sub.apply_block(word.subspan(k * p, p), std::span(out).subspan(k * q, q));
  return out;
}

/// Image of `word` with its trailing incomplete block dropped.
template <BlockMap S>
std::vector<typename S::symbol_type> apply_padded(
    const S& sub, std::span<const typename S::symbol_type> word) {
  const std::size_t p = sub.input_length();
  if (word.size() < p)
    throw TooShort("word of length " + std::to_string(word.size()) +
                   " is shorter than the block length " + std::to_string(p));
  return sesqui::apply(sub, word.first(word.size() - word.size() % p));
}

/// Shortest length L such that one padded application strictly lengthens
/// every word of length >= L.
std::size_t minimal_growing_length(std::size_t input_length, std::size_t output_length);

/// Lexicographically smallest word of length minimal_growing_length(p, q)
/// that is a prefix of its own padded image, if any. Searches at most 2^22
/// candidates.
std::optional<Word> find_seed(const BlockSubstitution& sub);

/// First n letters of the fixed point of `sub` that starts with `seed`,
/// obtained by iterating apply_padded from the seed.
///
/// Throws NotFixed when the seed is not a prefix of its own image, and
/// NoGrowth when an iteration step does not lengthen the word.
template <BlockMap S>
std::vector<typename S::symbol_type> fixed_point_prefix(
    const S& sub, std::span<const typename S::symbol_type> seed, std::size_t n) {
  using T = typename S::symbol_type;
  const std::size_t p = sub.input_length();
  const std::size_t q = sub.output_length();
  if (q <= p)
    throw NoGrowth("a " + std::to_string(p) + "-" + std::to_string(q) +
                   " block substitution never lengthens a word");
  if (seed.size() < p)
    throw TooShort("seed of length " + std::to_string(seed.size()) +
                   " is shorter than the block length " + std::to_string(p));

  std::vector<T> word = apply_padded(sub, seed);
  const std::size_t overlap = std::min(word.size(), seed.size());
  if (!std::equal(seed.begin(), seed.begin() + overlap, word.begin()))
    throw NotFixed("seed is not a prefix of its image");
  if (word.size() <= seed.size()) {
    if (n <= seed.size()) return {seed.begin(), seed.begin() + n};
    throw NoGrowth("seed of length " + std::to_string(seed.size()) + " does not grow");
  }

  while (word.size() < n) {
    // Only the blocks whose images fall inside the first n letters are needed.
    const std::size_t blocks = std::min(word.size() / p, (n + q - 1) / q);
    std::vector<T> next = sesqui::apply(sub, std::span<const T>(word).first(blocks * p));
    if (next.size() <= word.size())
      throw NoGrowth("iteration stalled at length " + std::to_string(word.size()));
    word = std::move(next);
  }
  word.resize(n);
  return word;
}

}  // namespace sesqui
