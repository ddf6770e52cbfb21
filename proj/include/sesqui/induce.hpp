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

// Subsequences of block-substitution fixed points along a stride.
//
// If x is a fixed point of a p-q block substitution, then (x(rN)) is a
// letter-to-letter coding of the fixed point of another p-q substitution.
// That substitution lives on the length-r factors of x: regroup x into
// length-r letters, blow the original rule up to pr-qr blocks, and read
// each blown-up rule as a rule on p letters producing q letters. The
// coding sends each length-r letter to its first symbol.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sesqui/blocksub.hpp"

namespace sesqui {

/// A letter-to-letter map into `target`.
struct Coding {
  Alphabet target;
  std::vector<Symbol> image;

  Word apply(std::span<const Symbol> word) const;
  Symbol operator()(Symbol s) const { return image.at(s); }
};

/// Parses groups like "ab=0,cd=1": every source symbol must be covered exactly once.
Coding parse_coding(std::string_view text, const Alphabet& source);

/// Image of every rule under the coding. Throws InconsistentCoding when two
/// rules with the same coded input disagree on the coded output.
BlockSubstitution code_substitution(const BlockSubstitution& sub, const Coding& coding);

/// The pr-qr substitution that applies `sub` to r consecutive blocks. Its
/// domain is every length-pr word whose p-blocks all have rules.
BlockSubstitution blow_up(const BlockSubstitution& sub, std::size_t stride);

enum class FactorOrder {
  sorted,            // lexicographic in the original alphabet order
  first_occurrence,  // order of first appearance in the prefix
};

struct InducedSystem {
  BlockSubstitution original;
  std::size_t stride;
  /// Length of the fixed-point prefix the system was read from.
  std::size_t witness_length;
  /// factors[s] is the length-r word behind induced letter s.
  std::vector<Word> factors;
  /// The blow-up restricted to the length-pr words at aligned positions.
  BlockSubstitution aligned_blow_up;
  BlockSubstitution induced;
  Coding first_letter;
  std::optional<Coding> extra;
  /// Prefix of the regrouped fixed point, long enough for iteration to grow.
  Word seed;

  /// first_letter followed by extra, when present.
  Coding full_coding() const;
};

/// Builds the induced system from the first `prefix_len` letters of a fixed
/// point of `sub`. Letters are labelled a, b, c, ... in `order`; at stride 1
/// they keep the original names.
///
/// Throws IncompleteAlphabet when a rule produces a length-r word that never
/// occurs in the prefix, and MissingRule when an aligned block has no rule.
InducedSystem induce(const BlockSubstitution& sub, std::size_t stride,
                     std::span<const Symbol> x_prefix, std::size_t prefix_len = 10000,
                     FactorOrder order = FactorOrder::sorted);

/// x cut into consecutive length-r words, as letters of the system.
Word regroup(const InducedSystem& sys, std::span<const Symbol> x);

struct SubsequenceReport {
  std::size_t checked = 0;
  std::size_t mismatch_count = 0;
  /// First mismatching indices, at most 64.
  std::vector<std::size_t> mismatches;

  bool equal() const noexcept { return mismatch_count == 0; }
};

/// Compares the first-letter coding of the induced fixed point with
/// x(0), x(r), x(2r), ... for N < n. Needs |x_prefix| > r (n - 1).
SubsequenceReport verify_subsequence(const InducedSystem& sys, std::span<const Symbol> x_prefix,
                                     std::size_t n);

}  // namespace sesqui
