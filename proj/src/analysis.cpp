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

#include "sesqui/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sesqui/errors.hpp"
#include "sesqui/suffix_array.hpp"

namespace sesqui {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

std::uint64_t alphabet_bound(std::span<const Symbol> x) {
  Symbol top = 0;
  for (auto s : x) top = std::max(top, s);
  return std::uint64_t{top} + 1;
}

/// sigma^m, or nothing when it does not fit in 64 bits.
std::optional<std::uint64_t> window_count(std::uint64_t sigma, std::size_t m) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / sigma) return std::nullopt;
    total *= sigma;
  }
  return total;
}

/// Calls visit(code, position) for every length-m window of x, where code is
/// the window read as a radix-sigma number. Requires sigma^m to fit.
template <class Visit>
void for_each_window(std::span<const Symbol> x, std::size_t m, std::uint64_t sigma, Visit visit) {
  if (m == 0 || x.size() < m) return;
  const std::uint64_t high = *window_count(sigma, m - 1);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    code = (code % high) * sigma + x[i];
    if (i + 1 >= m) visit(code, i + 1 - m);
  }
}

Word decode_window(std::uint64_t code, std::size_t m, std::uint64_t sigma) {
  Word w(m);
  for (std::size_t i = m; i-- > 0;) {
    w[i] = static_cast<Symbol>(code % sigma);
    code /= sigma;
  }
  return w;
}

Word partner(ClosureKind kind, std::span<const Symbol> w) {
  return kind == ClosureKind::complement ? complement(w) : reversal(w);
}

void require_binary(std::span<const Symbol> x) {
  for (auto s : x)
    if (s > 1) throw std::invalid_argument("complement is only defined on binary words");
}

ClosureReport check_closure(ClosureKind kind, std::span<const Symbol> x, std::size_t m_max) {
  if (m_max > x.size())
    throw std::invalid_argument("m_max " + std::to_string(m_max) + " exceeds the prefix length");
  if (kind == ClosureKind::complement) require_binary(x);
  ClosureReport report{kind, x.size(), {}};
  for (std::size_t m = 1; m <= m_max; ++m) {
    const FactorSet fs = factors(x, m);
    ClosureLevel level{m, fs.size(), {}};
    for (std::size_t k = 0; k < fs.size(); ++k)
      if (!fs.contains(partner(kind, fs.words[k])))
        level.unconfirmed.push_back({fs.words[k], fs.first_position[k]});
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace

bool FactorSet::contains(std::span<const Symbol> w) const {
  return std::binary_search(words.begin(), words.end(), Word(w.begin(), w.end()));
}

FactorSet factors(std::span<const Symbol> x, std::size_t m) {
  if (m > x.size())
    throw std::invalid_argument("factor length " + std::to_string(m) + " exceeds the prefix length");
  FactorSet fs{m, x.size(), {}, {}};
  if (m == 0) {
    fs.words.emplace_back();
    fs.first_position.push_back(0);
    return fs;
  }
  const std::uint64_t sigma = alphabet_bound(x);
  const auto total = window_count(sigma, m);

  if (total && *total <= kDenseLimit) {
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> first(static_cast<std::size_t>(*total), kUnseen);
    for_each_window(x, m, sigma, [&](std::uint64_t code, std::size_t pos) {
      if (first[code] == kUnseen) first[code] = pos;
    });
    for (std::uint64_t code = 0; code < *total; ++code) {
      if (first[code] == kUnseen) continue;
      fs.words.push_back(decode_window(code, m, sigma));
      fs.first_position.push_back(first[code]);
    }
    return fs;
  }

  if (total) {
    std::unordered_map<std::uint64_t, std::size_t> first;
    for_each_window(x, m, sigma,
                    [&](std::uint64_t code, std::size_t pos) { first.try_emplace(code, pos); });
    std::vector<std::pair<std::uint64_t, std::size_t>> sorted(first.begin(), first.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [code, pos] : sorted) {
      fs.words.push_back(decode_window(code, m, sigma));
      fs.first_position.push_back(pos);
    }
    return fs;
  }

  std::map<Word, std::size_t> first;
  for (std::size_t i = 0; i + m <= x.size(); ++i)
    first.try_emplace(Word(x.begin() + static_cast<std::ptrdiff_t>(i),
                           x.begin() + static_cast<std::ptrdiff_t>(i + m)),
                      i);
  for (const auto& [word, pos] : first) {
    fs.words.push_back(word);
    fs.first_position.push_back(pos);
  }
  return fs;
}

Word complement(std::span<const Symbol> w) {
  require_binary(w);
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = 1 - w[i];
  return out;
}

Word reversal(std::span<const Symbol> w) { return Word(w.rbegin(), w.rend()); }

std::string_view to_string(ClosureKind kind) {
  return kind == ClosureKind::complement ? "complement" : "reversal";
}

bool ClosureReport::closed() const noexcept { return unconfirmed_count() == 0; }

std::size_t ClosureReport::unconfirmed_count() const noexcept {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.unconfirmed.size();
  return total;
}

ClosureReport check_complement_closure(std::span<const Symbol> x, std::size_t m_max) {
  return check_closure(ClosureKind::complement, x, m_max);
}

ClosureReport check_reversal_closure(std::span<const Symbol> x, std::size_t m_max) {
  return check_closure(ClosureKind::reversal, x, m_max);
}

ClosureReport recheck_closure(const ClosureReport& report, std::span<const Symbol> longer) {
  if (longer.size() < report.prefix_length)
    throw std::invalid_argument("recheck needs a prefix at least as long as the original");
  ClosureReport out{report.kind, longer.size(), {}};
  for (const auto& level : report.levels) {
    ClosureLevel next{level.length, level.factor_count, {}};
    if (!level.unconfirmed.empty()) {
      const FactorSet fs = factors(longer, level.length);
      next.factor_count = fs.size();
      for (const auto& v : level.unconfirmed)
        if (!fs.contains(partner(report.kind, v.word))) next.unconfirmed.push_back(v);
    }
    out.levels.push_back(std::move(next));
  }
  return out;
}

std::uint64_t count_occurrences(std::span<const Symbol> x, std::span<const Symbol> w) {
  if (w.empty() || w.size() > x.size()) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + w.size() <= x.size(); ++i)
    if (std::equal(w.begin(), w.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) ++count;
  return count;
}

std::vector<FrequencyReport> frequencies(std::span<const Symbol> x, const std::vector<Word>& words) {
  std::vector<FrequencyReport> out;
  for (const auto& w : words) {
    if (w.empty() || w.size() > x.size())
      throw std::invalid_argument("frequency words must be nonempty and fit in the prefix");
    out.push_back({w, x.size(), count_occurrences(x, w), x.size() - w.size() + 1});
  }
  return out;
}

double PairedFrequency::complement_delta() const noexcept {
  const double d = word.estimate() - complement.estimate();
  return d < 0 ? -d : d;
}

double PairedFrequency::reversal_delta() const noexcept {
  const double d = word.estimate() - reversal.estimate();
  return d < 0 ? -d : d;
}

std::vector<PairedFrequency> paired_frequencies(std::span<const Symbol> x,
                                                const std::vector<Word>& words) {
  std::vector<PairedFrequency> out;
  for (const auto& w : words) {
    auto reports = frequencies(x, {w, complement(w), reversal(w)});
    out.push_back({std::move(reports[0]), std::move(reports[1]), std::move(reports[2])});
  }
  return out;
}

GapReport gaps(std::span<const Symbol> x, std::span<const Symbol> w) {
  GapReport report{Word(w.begin(), w.end()), {}, std::nullopt};
  if (!w.empty())
    for (std::size_t i = 0; i + w.size() <= x.size(); ++i)
      if (std::equal(w.begin(), w.end(), x.begin() + static_cast<std::ptrdiff_t>(i)))
        report.positions.push_back(i);
  if (report.positions.empty()) throw WordAbsent("word does not occur in the prefix");
  for (std::size_t k = 1; k < report.positions.size(); ++k) {
    const std::size_t gap = report.positions[k] - report.positions[k - 1];
    if (!report.max_gap || gap > *report.max_gap) report.max_gap = gap;
  }
  return report;
}

std::vector<FactorGap> factor_gaps(std::span<const Symbol> x, std::size_t m) {
  if (m == 0 || m > x.size()) throw std::invalid_argument("factor length must be in 1..|x|");
  const std::uint64_t sigma = alphabet_bound(x);
  const auto total = window_count(sigma, m);
  if (!total) throw std::length_error("factor length too large for gap statistics");

  struct State {
    std::size_t last = 0;
    std::size_t count = 0;
    std::size_t max_gap = 0;
  };
  std::map<std::uint64_t, State> states;
  std::vector<State> dense;
  const bool use_dense = *total <= kDenseLimit;
  if (use_dense) dense.resize(static_cast<std::size_t>(*total));
  for_each_window(x, m, sigma, [&](std::uint64_t code, std::size_t pos) {
    State& s = use_dense ? dense[code] : states[code];
    if (s.count > 0) s.max_gap = std::max(s.max_gap, pos - s.last);
    s.last = pos;
    ++s.count;
  });

  std::vector<FactorGap> out;
  const auto emit = [&](std::uint64_t code, const State& s) {
    if (s.count == 0) return;
    out.push_back({decode_window(code, m, sigma), s.count,
                   s.count > 1 ? std::optional<std::size_t>(s.max_gap) : std::nullopt});
  };
  if (use_dense)
    for (std::uint64_t code = 0; code < *total; ++code) emit(code, dense[code]);
  else
    for (const auto& [code, s] : states) emit(code, s);
  return out;
}

std::vector<Run> maximal_repetitions(std::span<const Symbol> x) {
  const std::size_t n = x.size();
  std::vector<Run> runs;
  if (n < 2) return runs;

  const LongestCommonExtension forward(x);
  const Word reversed(x.rbegin(), x.rend());
  const LongestCommonExtension backward(reversed);
  // Longest common suffix of x[0..a] and x[0..b].
  const auto common_suffix = [&](std::size_t a, std::size_t b) {
    return backward(n - 1 - a, n - 1 - b);
  };

  const Symbol top = static_cast<Symbol>(alphabet_bound(x) - 1);
  Word ordered(n);
  std::vector<std::int32_t> rank(n);
  std::vector<std::size_t> stack;
  for (int order = 0; order < 2; ++order) {
    for (std::size_t i = 0; i < n; ++i) ordered[i] = order == 0 ? x[i] : top - x[i];
    const auto sa = suffix_array(ordered);
    for (std::size_t k = 0; k < n; ++k) rank[static_cast<std::size_t>(sa[k])] = static_cast<std::int32_t>(k);

    // The longest Lyndon word starting at i ends where the next smaller suffix starts.
    stack.clear();
    for (std::size_t i = n; i-- > 0;) {
      while (!stack.empty() && rank[stack.back()] > rank[i]) stack.pop_back();
      const std::size_t next = stack.empty() ? n : stack.back();
      stack.push_back(i);

      const std::size_t period = next - i;
      if (next >= n) continue;
      const std::size_t right = forward(i, next);
      const std::size_t left = i > 0 ? common_suffix(i - 1, next - 1) : 0;
      const std::size_t length = left + period + right;
      if (length >= 2 * period) runs.push_back({i - left, period, length});
    }
  }
  std::sort(runs.begin(), runs.end());
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  return runs;
}

RepetitionReport critical_exponent(std::span<const Symbol> x) {
  if (x.size() < 2) throw std::invalid_argument("critical exponent needs a prefix of length >= 2");
  RepetitionReport report;
  report.prefix_length = x.size();
  report.runs = maximal_repetitions(x);

  bool found = false;
  for (const Run& r : report.runs) {
    if (!found || r.exponent() > report.max_exponent) {
      report.max_exponent = r.exponent();
      report.witness = r;
      found = true;
    }
  }
  if (found) return report;

  // Square-free: every exponent is below 2 and no run carries it, so scan
  // the maximal p-periodic stretches directly.
  report.max_exponent = Exponent(1);
  report.witness = {0, 1, 1};
  for (std::size_t p = 1; p < x.size(); ++p) {
    std::size_t stretch = 0;
    for (std::size_t i = 0; i + p < x.size(); ++i) {
      stretch = x[i] == x[i + p] ? stretch + 1 : 0;
      const Run candidate{i + 1 - stretch, p, stretch + p};
      if (stretch > 0 && candidate.exponent() > report.max_exponent) {
        report.max_exponent = candidate.exponent();
        report.witness = candidate;
      }
    }
  }
  return report;
}

}  // namespace sesqui
