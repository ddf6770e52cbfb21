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

// Slow reference implementations used only by the tests. None of them
// shares code with the library routines they check.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sesqui::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// sum d_i (p/q)^i (times 1/q for the AFS form), in exact rationals.
inline Rational evaluate(const std::vector<std::uint64_t>& msd_first, std::uint64_t p,
                         std::uint64_t q, bool afs) {
  Rational value = 0;
  Rational power = afs ? Rational(1, q) : Rational(1);
  for (std::size_t i = msd_first.size(); i-- > 0;) {
    value += power * msd_first[i];
    power *= Rational(p, q);
  }
  return value;
}

/// A representation of n found by exhaustive search over digit strings
/// without leading zeros, shortest first. Small n only.
inline std::vector<std::uint64_t> brute_representation(std::uint64_t n, std::uint64_t p,
                                                       std::uint64_t q, std::size_t max_len) {
  if (n == 0) return {0};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::uint64_t> d(len, 0);
    d[0] = 1;
    while (true) {
      if (evaluate(d, p, q, false) == Rational(n)) return d;
      std::size_t i = len;
      while (i > 0 && ++d[i - 1] == p) {
        d[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      if (d[0] == 0) break;
    }
  }
  return {};
}

struct BruteRun {
  std::size_t start;
  std::size_t period;
  std::size_t length;
  auto operator<=>(const BruteRun&) const = default;
};

/// Maximal repetitions by scanning every period: O(n^2).
template <class Seq>
std::vector<BruteRun> brute_runs(const Seq& x) {
  const std::size_t n = x.size();
  std::vector<BruteRun> out;
  const auto has_period = [&](std::size_t start, std::size_t length, std::size_t d) {
    for (std::size_t i = start; i + d < start + length; ++i)
      if (x[i] != x[i + d]) return false;
    return true;
  };
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    std::size_t i = 0;
    while (i + p < n) {
      if (x[i] != x[i + p]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + p < n && x[j] == x[j + p]) ++j;
      const std::size_t length = j - i + p;
      if (length >= 2 * p) {
        bool least = true;
        for (std::size_t d = 1; d < p && least; ++d)
          if (p % d == 0 && has_period(i, length, d)) least = false;
        if (least) out.push_back({i, p, length});
      }
      i = j + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// max over factors of length / least period, as (numerator, denominator)
/// in lowest terms, scanning every period: O(n^2).
template <class Seq>
std::pair<std::uint64_t, std::uint64_t> brute_critical_exponent(const Seq& x) {
  std::uint64_t best_num = 1;
  std::uint64_t best_den = 1;
  const std::size_t n = x.size();
  for (std::size_t p = 1; p < n; ++p) {
    std::size_t stretch = 0;
    std::size_t longest = 0;
    for (std::size_t i = 0; i + p < n; ++i) {
      stretch = x[i] == x[i + p] ? stretch + 1 : 0;
      if (stretch > longest) longest = stretch;
    }
    const std::uint64_t num = longest + p;
    if (num * best_den > best_num * p) {
      best_num = num;
      best_den = p;
    }
  }
  const std::uint64_t g = std::gcd(best_num, best_den);
  return {best_num / g, best_den / g};
}

/// All length-m substrings, by direct enumeration.
template <class Seq>
std::set<std::vector<typename Seq::value_type>> brute_factors(const Seq& x, std::size_t m) {
  std::set<std::vector<typename Seq::value_type>> out;
  for (std::size_t i = 0; i + m <= x.size(); ++i) out.emplace(x.begin() + i, x.begin() + i + m);
  return out;
}

}  // namespace sesqui::oracle
