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

#include "sesqui/induce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace sesqui {

namespace {

std::string label(std::size_t i, const Word& factor, const Alphabet& original) {
  if (factor.size() == 1) return original.name(factor.front());
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  if (i < 52) return std::string(1, static_cast<char>('A' + (i - 26)));
  return "<" + original.format(factor) + ">";
}

}  // namespace

Word Coding::apply(std::span<const Symbol> word) const {
  Word out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[i] = image.at(word[i]);
  return out;
}

Coding parse_coding(std::string_view text, const Alphabet& source) {
  std::vector<std::pair<std::string, std::string>> groups;
  std::set<std::string> targets;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto group = text.substr(start, comma - start);
    const auto eq = group.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == group.size())
      throw std::invalid_argument("coding group '" + std::string(group) +
                                  "' is not of the form letters=target");
    groups.emplace_back(std::string(group.substr(0, eq)), std::string(group.substr(eq + 1)));
    targets.insert(groups.back().second);
    start = comma + 1;
  }

  Coding coding{Alphabet(std::vector<std::string>(targets.begin(), targets.end())),
                std::vector<Symbol>(source.size(), 0)};
  std::vector<char> covered(source.size(), 0);
  for (const auto& [letters, target] : groups) {
    const Symbol t = *coding.target.find(target);
    for (Symbol s : source.parse(letters)) {
      if (covered[s])
        throw std::invalid_argument("symbol '" + source.name(s) + "' is coded twice");
      covered[s] = 1;
      coding.image[s] = t;
    }
  }
  for (std::size_t s = 0; s < source.size(); ++s)
    if (!covered[s])
      throw std::invalid_argument("symbol '" + source.name(static_cast<Symbol>(s)) +
                                  "' has no image");
  return coding;
}

BlockSubstitution code_substitution(const BlockSubstitution& sub, const Coding& coding) {
  BlockSubstitution out(sub.input_length(), sub.output_length(), coding.target);
  for (const auto& rule : sub.rules()) {
    const Word in = coding.apply(rule.input);
    const Word image = coding.apply(rule.output);
    if (auto existing = out.rule(in)) {
      if (!std::equal(existing->begin(), existing->end(), image.begin()))
        throw InconsistentCoding("coded block '" + coding.target.format(in) + "' maps to both '" +
                                 coding.target.format(*existing) + "' and '" +
                                 coding.target.format(image) + "'");
      continue;
    }
    out.set_rule(in, image);
  }
  return out;
}

BlockSubstitution blow_up(const BlockSubstitution& sub, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  const std::size_t p = sub.input_length();
  const std::size_t q = sub.output_length();
  const std::size_t sigma = sub.alphabet().size();
  BlockSubstitution out(p * stride, q * stride, sub.alphabet());

  Word word(p * stride, 0);
  Word image(q * stride);
  while (true) {
    bool defined = true;
    for (std::size_t k = 0; k < stride && defined; ++k) {
      auto r = sub.rule(std::span<const Symbol>(word).subspan(k * p, p));
      if (r)
        std::copy(r->begin(), r->end(), image.begin() + static_cast<std::ptrdiff_t>(k * q));
      else
        defined = false;
    }
    if (defined) out.set_rule(word, image);
    std::size_t i = word.size();
    while (i > 0 && ++word[i - 1] == sigma) word[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Coding InducedSystem::full_coding() const {
  if (!extra) return first_letter;
  Coding out{extra->target, {}};
  for (Symbol s : first_letter.image) out.image.push_back((*extra)(s));
  return out;
}

InducedSystem induce(const BlockSubstitution& sub, std::size_t stride,
                     std::span<const Symbol> x_prefix, std::size_t prefix_len,
                     FactorOrder order) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  if (prefix_len > x_prefix.size())
    throw std::invalid_argument("prefix length " + std::to_string(prefix_len) +
                                " exceeds the supplied prefix of length " +
                                std::to_string(x_prefix.size()));
  const std::size_t p = sub.input_length();
  const std::size_t q = sub.output_length();
  const auto x = x_prefix.first(prefix_len);
  const Alphabet& alpha = sub.alphabet();

  std::map<Word, std::size_t> first_seen;
  for (std::size_t i = 0; i + stride <= x.size(); ++i)
    first_seen.try_emplace(Word(x.begin() + static_cast<std::ptrdiff_t>(i),
                                x.begin() + static_cast<std::ptrdiff_t>(i + stride)),
                           i);
  std::vector<Word> factors;
  for (const auto& entry : first_seen) factors.push_back(entry.first);
  if (order == FactorOrder::first_occurrence)
    std::stable_sort(factors.begin(), factors.end(), [&](const Word& a, const Word& b) {
      return first_seen.at(a) < first_seen.at(b);
    });

  std::map<Word, Symbol> letter_of;
  std::vector<std::string> labels;
  Coding first_letter{alpha, {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    letter_of.emplace(factors[i], static_cast<Symbol>(i));
    labels.push_back(label(i, factors[i], alpha));
    first_letter.image.push_back(factors[i].front());
  }
  Alphabet letters(std::move(labels));

  const BlockSubstitution full = blow_up(sub, stride);
  BlockSubstitution aligned(p * stride, q * stride, alpha);
  BlockSubstitution induced(p, q, letters);

  const auto chunk_letter = [&](std::span<const Symbol> chunk) {
    auto it = letter_of.find(Word(chunk.begin(), chunk.end()));
    if (it == letter_of.end())
      throw IncompleteAlphabet("length-" + std::to_string(stride) + " word '" +
                               alpha.format(chunk) + "' never occurs in the first " +
                               std::to_string(prefix_len) +
                               " letters; use a longer prefix");
    return it->second;
  };

  const std::size_t block = p * stride;
  Word in_letters(p);
  Word out_letters(q);
  for (std::size_t k = 0; (k + 1) * block <= x.size(); ++k) {
    const auto w = x.subspan(k * block, block);
    auto image = full.rule(w);
    if (!image) throw MissingRule("no rule for the aligned block '" + alpha.format(w) + "'");
    aligned.set_rule(w, *image);
    for (std::size_t j = 0; j < p; ++j) in_letters[j] = chunk_letter(w.subspan(j * stride, stride));
    for (std::size_t j = 0; j < q; ++j)
      out_letters[j] = chunk_letter(image->subspan(j * stride, stride));
    induced.set_rule(in_letters, out_letters);
  }

  const std::size_t seed_len = minimal_growing_length(p, q);
  if (seed_len * stride > x.size())
    throw IncompleteAlphabet("prefix too short to seed the induced fixed point; use a longer prefix");
  Word seed(seed_len);
  for (std::size_t i = 0; i < seed_len; ++i) seed[i] = chunk_letter(x.subspan(i * stride, stride));

  return InducedSystem{sub,
                       stride,
                       prefix_len,
                       std::move(factors),
                       std::move(aligned),
                       std::move(induced),
                       std::move(first_letter),
                       std::nullopt,
                       std::move(seed)};
}

Word regroup(const InducedSystem& sys, std::span<const Symbol> x) {
  std::map<Word, Symbol> letter_of;
  for (std::size_t i = 0; i < sys.factors.size(); ++i)
    letter_of.emplace(sys.factors[i], static_cast<Symbol>(i));
  Word out;
  for (std::size_t i = 0; i + sys.stride <= x.size(); i += sys.stride) {
    auto it = letter_of.find(Word(x.begin() + static_cast<std::ptrdiff_t>(i),
                                  x.begin() + static_cast<std::ptrdiff_t>(i + sys.stride)));
    if (it == letter_of.end())
      throw IncompleteAlphabet("word at position " + std::to_string(i) +
                               " is not a letter of the induced system");
    out.push_back(it->second);
  }
  return out;
}

SubsequenceReport verify_subsequence(const InducedSystem& sys, std::span<const Symbol> x_prefix,
                                     std::size_t n) {
  if (n > 0 && x_prefix.size() <= sys.stride * (n - 1))
    throw std::invalid_argument("prefix of length " + std::to_string(x_prefix.size()) +
                                " is too short to read " + std::to_string(n) +
                                " terms at stride " + std::to_string(sys.stride));
  const Word letters = fixed_point_prefix(sys.induced, std::span<const Symbol>(sys.seed), n);
  SubsequenceReport report;
  report.checked = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.first_letter(letters[i]) != x_prefix[sys.stride * i]) {
      if (report.mismatches.size() < 64) report.mismatches.push_back(i);
      ++report.mismatch_count;
    }
  }
  return report;
}

}  // namespace sesqui
