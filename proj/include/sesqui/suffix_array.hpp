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

// Suffix arrays and constant-ish time longest-common-extension queries.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sesqui/blocksub.hpp"

namespace sesqui {

/// Suffix array by prefix doubling with radix passes, O(n log n).
/// A proper prefix sorts before its extensions.
std::vector<std::int32_t> suffix_array(std::span<const Symbol> word);

/// lcp[k] = length of the longest common prefix of suffixes sa[k-1] and
/// sa[k]; lcp[0] = 0 (Kasai et al.).
std::vector<std::int32_t> lcp_array(std::span<const Symbol> word,
                                    std::span<const std::int32_t> sa);

/// Range minimum over a fixed array: sparse table over blocks of 32.
class RangeMin {
 public:
  explicit RangeMin(std::vector<std::int32_t> values);
  /// Minimum of values[lo..hi], inclusive; requires lo <= hi.
  std::int32_t operator()(std::size_t lo, std::size_t hi) const;

 private:
  static constexpr std::size_t kBlock = 32;
  std::vector<std::int32_t> values_;
  std::vector<std::vector<std::int32_t>> table_;
};

/// Length of the longest common prefix of the suffixes at i and j.
class LongestCommonExtension {
 public:
  explicit LongestCommonExtension(std::span<const Symbol> word);
  std::size_t operator()(std::size_t i, std::size_t j) const;
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<std::int32_t> rank_;
  RangeMin lcp_;
};

}  // namespace sesqui
