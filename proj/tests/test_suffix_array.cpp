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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sesqui/suffix_array.hpp"

using namespace sesqui;

namespace {

std::vector<std::int32_t> sorted_suffixes(const Word& w) {
  std::vector<std::int32_t> sa(w.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
    return std::lexicographical_compare(w.begin() + a, w.end(), w.begin() + b, w.end());
  });
  return sa;
}

std::size_t naive_lce(const Word& w, std::size_t i, std::size_t j) {
  std::size_t k = 0;
  while (i + k < w.size() && j + k < w.size() && w[i + k] == w[j + k]) ++k;
  return k;
}

Word random_word(std::mt19937_64& rng, std::size_t n, Symbol sigma) {
  std::uniform_int_distribution<Symbol> letter(0, sigma - 1);
  Word w(n);
  for (auto& s : w) s = letter(rng);
  return w;
}

}  // namespace

TEST_CASE("suffix array against sorting") {
  CHECK(suffix_array(Word{}).empty());
  CHECK(suffix_array(Word{5}) == std::vector<std::int32_t>{0});
  const Word banana{1, 0, 2, 0, 2, 0};
  CHECK(suffix_array(banana) == std::vector<std::int32_t>{5, 3, 1, 0, 4, 2});
  CHECK(lcp_array(banana, suffix_array(banana)) == std::vector<std::int32_t>{0, 1, 3, 0, 0, 2});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
    const Symbol sigma = static_cast<Symbol>(1 + trial % 5);
    const Word w = random_word(rng, n, sigma);
    const auto sa = suffix_array(w);
    REQUIRE(sa == sorted_suffixes(w));
    const auto lcp = lcp_array(w, sa);
    for (std::size_t k = 1; k < n; ++k)
      REQUIRE(static_cast<std::size_t>(lcp[k]) ==
              naive_lce(w, static_cast<std::size_t>(sa[k - 1]), static_cast<std::size_t>(sa[k])));
  }
}

TEST_CASE("range minimum") {
  std::mt19937_64 rng(11);
  std::vector<std::int32_t> v(1000);
  for (auto& x : v) x = std::uniform_int_distribution<std::int32_t>(0, 99)(rng);
  const RangeMin rmq(v);
  for (int trial = 0; trial < 5000; ++trial) {
    std::size_t lo = std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
    std::size_t hi = std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng);
    if (lo > hi) std::swap(lo, hi);
    REQUIRE(rmq(lo, hi) == *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                             v.begin() + static_cast<std::ptrdiff_t>(hi + 1)));
  }
}

TEST_CASE("longest common extension") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = random_word(rng, 200 + 37 * static_cast<std::size_t>(trial), 2);
    const LongestCommonExtension lce(w);
    CHECK(lce.size() == w.size());
    for (std::size_t i = 0; i < w.size(); i += 3)
      for (std::size_t j = 0; j < w.size(); j += 5) REQUIRE(lce(i, j) == naive_lce(w, i, j));
  }
  const Word w{0, 1, 0, 1, 0};
  const LongestCommonExtension lce(w);
  CHECK(lce(0, 2) == 3);
  CHECK(lce(3, 3) == 2);
  CHECK(lce(0, 5) == 0);
}
