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

#include "sesqui/suffix_array.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sesqui {

std::vector<std::int32_t> suffix_array(std::span<const Symbol> word) {
  const std::size_t n = word.size();
  if (n > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
    throw std::length_error("word too long for a 32-bit suffix array");
  std::vector<std::int32_t> sa(n);
  if (n == 0) return sa;

  // Compact the alphabet so the first counting sort is over 0..sigma-1.
  std::vector<Symbol> letters(word.begin(), word.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  std::vector<std::int32_t> rank(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::int32_t>(
        std::lower_bound(letters.begin(), letters.end(), word[i]) - letters.begin());

  std::size_t classes = letters.size();
  std::vector<std::int32_t> count(std::max(classes, n) + 1);
  for (std::size_t i = 0; i < n; ++i) ++count[static_cast<std::size_t>(rank[i]) + 1];
  for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
  for (std::size_t i = 0; i < n; ++i)
    sa[static_cast<std::size_t>(count[static_cast<std::size_t>(rank[i])]++)] =
        static_cast<std::int32_t>(i);

  std::vector<std::int32_t> by_second(n);
  std::vector<std::int32_t> next_rank(n);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by the rank k positions ahead; suffixes shorter than k come first.
    std::size_t m = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) by_second[m++] = static_cast<std::int32_t>(i);
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<std::size_t>(sa[j]) >= k) by_second[m++] = sa[j] - static_cast<std::int32_t>(k);

    // Stable counting sort by the first rank.
    std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes) + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[static_cast<std::size_t>(rank[i]) + 1];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t j = 0; j < n; ++j) {
      const auto i = static_cast<std::size_t>(by_second[j]);
      sa[static_cast<std::size_t>(count[static_cast<std::size_t>(rank[i])]++)] =
          static_cast<std::int32_t>(i);
    }

    const auto second = [&](std::size_t i) {
      return i + k < n ? rank[i + k] : std::int32_t{-1};
    };
    next_rank[static_cast<std::size_t>(sa[0])] = 0;
    for (std::size_t j = 1; j < n; ++j) {
      const auto a = static_cast<std::size_t>(sa[j - 1]);
      const auto b = static_cast<std::size_t>(sa[j]);
      const bool same = rank[a] == rank[b] && second(a) == second(b);
      next_rank[b] = next_rank[a] + (same ? 0 : 1);
    }
    rank.swap(next_rank);
    classes = static_cast<std::size_t>(rank[static_cast<std::size_t>(sa[n - 1])]) + 1;
  }
  return sa;
}

std::vector<std::int32_t> lcp_array(std::span<const Symbol> word,
                                    std::span<const std::int32_t> sa) {
  const std::size_t n = word.size();
  std::vector<std::int32_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[static_cast<std::size_t>(sa[k])] = static_cast<std::int32_t>(k);
  std::vector<std::int32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(rank[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    const auto j = static_cast<std::size_t>(sa[r - 1]);
    while (i + h < n && j + h < n && word[i + h] == word[j + h]) ++h;
    lcp[r] = static_cast<std::int32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

RangeMin::RangeMin(std::vector<std::int32_t> values) : values_(std::move(values)) {
  const std::size_t blocks = (values_.size() + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  std::vector<std::int32_t> level(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto first = values_.begin() + static_cast<std::ptrdiff_t>(b * kBlock);
    const auto last = values_.begin() +
                      static_cast<std::ptrdiff_t>(std::min(values_.size(), (b + 1) * kBlock));
    level[b] = *std::min_element(first, last);
  }
  table_.push_back(std::move(level));
  for (std::size_t span = 1; 2 * span <= blocks; span <<= 1) {
    const auto& prev = table_.back();
    std::vector<std::int32_t> next(blocks - 2 * span + 1);
    for (std::size_t b = 0; b < next.size(); ++b) next[b] = std::min(prev[b], prev[b + span]);
    table_.push_back(std::move(next));
  }
}

std::int32_t RangeMin::operator()(std::size_t lo, std::size_t hi) const {
  const std::size_t first_block = lo / kBlock;
  const std::size_t last_block = hi / kBlock;
  const auto scan = [&](std::size_t a, std::size_t b) {
    return *std::min_element(values_.begin() + static_cast<std::ptrdiff_t>(a),
                             values_.begin() + static_cast<std::ptrdiff_t>(b) + 1);
  };
  if (last_block - first_block < 2) return scan(lo, hi);
  std::int32_t best = std::min(scan(lo, (first_block + 1) * kBlock - 1), scan(last_block * kBlock, hi));
  const std::size_t a = first_block + 1;
  const std::size_t count = last_block - a;
  const auto level = static_cast<std::size_t>(std::bit_width(count) - 1);
  const auto& row = table_[level];
  return std::min({best, row[a], row[last_block - (std::size_t{1} << level)]});
}

LongestCommonExtension::LongestCommonExtension(std::span<const Symbol> word)
    : n_(word.size()), rank_(word.size()), lcp_({}) {
  const auto sa = suffix_array(word);
  for (std::size_t k = 0; k < n_; ++k) rank_[static_cast<std::size_t>(sa[k])] = static_cast<std::int32_t>(k);
  lcp_ = RangeMin(lcp_array(word, sa));
}

std::size_t LongestCommonExtension::operator()(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return 0;
  if (i == j) return n_ - i;
  auto a = static_cast<std::size_t>(rank_[i]);
  auto b = static_cast<std::size_t>(rank_[j]);
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(lcp_(a + 1, b));
}

}  // namespace sesqui
