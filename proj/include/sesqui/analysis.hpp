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

// Empirical statistics over a finite prefix of an infinite word: factor
// sets, closure under complement and reversal, frequencies, recurrence gaps
// and maximal repetitions.
//
// Results about closure, recurrence and frequencies only ever say "no
// violation up to n"; none of them settles a statement about the infinite
// word.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "sesqui/blocksub.hpp"

namespace sesqui {

/// The length-m factors of a prefix, sorted, with first-occurrence positions.
struct FactorSet {
  std::size_t length = 0;
  std::size_t prefix_length = 0;
  std::vector<Word> words;
  std::vector<std::size_t> first_position;

  std::size_t size() const noexcept { return words.size(); }
  bool contains(std::span<const Symbol> w) const;
};

FactorSet factors(std::span<const Symbol> x, std::size_t m);

/// 0 <-> 1 on a binary word; throws std::invalid_argument on other symbols.
Word complement(std::span<const Symbol> w);
Word reversal(std::span<const Symbol> w);

enum class ClosureKind { complement, reversal };
std::string_view to_string(ClosureKind kind);

struct ClosureViolation {
  Word word;
  std::size_t first_position = 0;
};

struct ClosureLevel {
  std::size_t length = 0;
  std::size_t factor_count = 0;
  /// Factors whose partner was not seen in the prefix.
  std::vector<ClosureViolation> unconfirmed;

  bool closed() const noexcept { return unconfirmed.empty(); }
};

struct ClosureReport {
  ClosureKind kind = ClosureKind::complement;
  std::size_t prefix_length = 0;
  std::vector<ClosureLevel> levels;  // lengths 1..m_max

  bool closed() const noexcept;
  std::size_t unconfirmed_count() const noexcept;
};

ClosureReport check_complement_closure(std::span<const Symbol> x, std::size_t m_max);
ClosureReport check_reversal_closure(std::span<const Symbol> x, std::size_t m_max);

/// Keeps only the unconfirmed words whose partner is still absent from
/// `longer`, which must extend the prefix the report was computed on.
ClosureReport recheck_closure(const ClosureReport& report, std::span<const Symbol> longer);

struct FrequencyReport {
  Word word;
  std::size_t prefix_length = 0;
  std::uint64_t count = 0;    // overlapping occurrences
  std::uint64_t windows = 0;  // n - |w| + 1

  double estimate() const noexcept {
    return windows == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(windows);
  }
};

std::uint64_t count_occurrences(std::span<const Symbol> x, std::span<const Symbol> w);
std::vector<FrequencyReport> frequencies(std::span<const Symbol> x, const std::vector<Word>& words);

/// Frequency of w next to those of its complement and its reversal.
struct PairedFrequency {
  FrequencyReport word;
  FrequencyReport complement;
  FrequencyReport reversal;

  double complement_delta() const noexcept;
  double reversal_delta() const noexcept;
};

std::vector<PairedFrequency> paired_frequencies(std::span<const Symbol> x,
                                                const std::vector<Word>& words);

struct GapReport {
  Word word;
  std::vector<std::size_t> positions;
  /// Largest distance between consecutive occurrences; empty for a single one.
  std::optional<std::size_t> max_gap;

  std::size_t count() const noexcept { return positions.size(); }
};

/// Throws WordAbsent if w does not occur in x.
GapReport gaps(std::span<const Symbol> x, std::span<const Symbol> w);

struct FactorGap {
  Word word;
  std::size_t count = 0;
  std::optional<std::size_t> max_gap;
};

/// Max gaps of every length-m factor, in one pass; sorted by word.
std::vector<FactorGap> factor_gaps(std::span<const Symbol> x, std::size_t m);

using Exponent = boost::rational<std::int64_t>;

/// A factor x[start, start + length) with least period `period`.
struct Run {
  std::size_t start = 0;
  std::size_t period = 0;
  std::size_t length = 0;

  Exponent exponent() const {
    return Exponent(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
  }
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// All maximal repetitions (runs) of x, sorted by (start, period, length).
/// Uses Lyndon roots under both letter orders and suffix-array extensions.
std::vector<Run> maximal_repetitions(std::span<const Symbol> x);

struct RepetitionReport {
  std::size_t prefix_length = 0;
  std::vector<Run> runs;
  /// Largest |f| / per(f) over the factors f of the prefix.
  Exponent max_exponent{1};
  /// A factor attaining max_exponent (earliest, then shortest period).
  Run witness;
};

/// Requires |x| >= 2.
RepetitionReport critical_exponent(std::span<const Symbol> x);

}  // namespace sesqui
