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

#include "sesqui/sequences.hpp"

#include <stdexcept>
#include <string>

namespace sesqui {

std::optional<SequenceName> parse_sequence_name(std::string_view name) {
  if (name == "sq-digits") return SequenceName::sq_digits;
  if (name == "s32") return SequenceName::s32;
  if (name == "t32") return SequenceName::t32;
  if (name == "ttilde") return SequenceName::ttilde;
  return std::nullopt;
}

std::string_view to_string(SequenceName name) {
  switch (name) {
    case SequenceName::sq_digits: return "sq-digits";
    case SequenceName::s32: return "s32";
    case SequenceName::t32: return "t32";
    case SequenceName::ttilde: return "ttilde";
  }
  return "?";
}

BlockSubstitution kappa() {
  BlockSubstitution k(2, 3, Alphabet::binary());
  k.set_rule("00", "010");
  k.set_rule("01", "010");
  k.set_rule("10", "101");
  k.set_rule("11", "101");
  return k;
}

BlockSubstitution kappa_prime() {
  BlockSubstitution k(2, 3, Alphabet::binary());
  k.set_rule("00", "001");
  k.set_rule("01", "000");
  k.set_rule("10", "111");
  k.set_rule("11", "110");
  return k;
}

Word kappa_seed() { return {0, 1, 0, 0}; }
Word kappa_prime_seed() { return {0, 0, 1, 1}; }

RuleSubstitution digit_sum_substitution(const Base& base) {
  const auto p = static_cast<std::size_t>(base.p());
  return RuleSubstitution(static_cast<std::size_t>(base.q()), p,
                          [p](std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
                            for (std::size_t r = 0; r < p; ++r) out[r] = in[0] + r;
                          });
}

BlockSubstitution digit_sum_mod_substitution(const Base& base, std::uint32_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < modulus; ++i) names.push_back(std::to_string(i));
  const auto p = static_cast<std::size_t>(base.p());
  const auto q = static_cast<std::size_t>(base.q());
  BlockSubstitution sub(q, p, Alphabet(std::move(names)));

  // The rule only reads the first letter; enumerate all blocks in radix order.
  Word block(q, 0);
  Word image(p);
  while (true) {
    for (std::size_t r = 0; r < p; ++r) image[r] = static_cast<Symbol>((block[0] + r) % modulus);
    sub.set_rule(block, image);
    std::size_t i = q;
    while (i > 0 && ++block[i - 1] == modulus) block[--i] = 0;
    if (i == 0) break;
  }
  return sub;
}

std::vector<std::uint64_t> digit_sum_seed(const Base& base, std::size_t length) {
  const std::uint64_t p = base.p();
  const std::uint64_t q = base.q();
  std::vector<std::uint64_t> x(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    const std::uint64_t block = i / p;
    const std::uint64_t r = i % p;
    x[i] = block == 0 ? r : x[q * block] + r;
  }
  return x;
}

std::vector<std::uint64_t> direct_prefix(const SequenceSpec& spec, std::size_t n) {
  std::vector<std::uint64_t> out(n);
  switch (spec.name) {
    case SequenceName::s32:
      for (std::uint64_t i = 0; i < n; ++i) out[i] = digit_sum(i, spec.base);
      break;
    case SequenceName::t32:
      for (std::uint64_t i = 0; i < n; ++i) out[i] = digit_sum(i, spec.base, 2);
      break;
    case SequenceName::ttilde:
      for (std::uint64_t i = 0; i < n; ++i) out[i] = digit_sum_afs(i, spec.base, 2);
      break;
    case SequenceName::sq_digits:
      throw std::invalid_argument("sq-digits terms are digit strings, not machine integers");
  }
  return out;
}

namespace {

std::vector<std::uint64_t> widen(const Word& w) { return {w.begin(), w.end()}; }

}  // namespace

Word generated_word(const SequenceSpec& spec, std::size_t n) {
  const bool sesquinary = spec.base == Base::sesquinary();
  switch (spec.name) {
    case SequenceName::t32: {
      if (sesquinary) return fixed_point_prefix(kappa(), std::span<const Symbol>(kappa_seed()), n);
      const auto sub = digit_sum_mod_substitution(spec.base, 2);
      const auto seed_values =
          digit_sum_seed(spec.base, minimal_growing_length(sub.input_length(), sub.output_length()));
      Word seed;
      for (auto v : seed_values) seed.push_back(static_cast<Symbol>(v % 2));
      return fixed_point_prefix(sub, std::span<const Symbol>(seed), n);
    }
    case SequenceName::ttilde:
      if (!sesquinary)
        throw std::invalid_argument("the ttilde substitution is only known for base 3/2");
      return fixed_point_prefix(kappa_prime(), std::span<const Symbol>(kappa_prime_seed()), n);
    default:
      throw std::invalid_argument(std::string(to_string(spec.name)) + " is not a binary sequence");
  }
}

std::vector<std::uint64_t> generated_prefix(const SequenceSpec& spec, std::size_t n) {
  switch (spec.name) {
    case SequenceName::s32: {
      const auto sub = digit_sum_substitution(spec.base);
      const auto seed =
          digit_sum_seed(spec.base, minimal_growing_length(sub.input_length(), sub.output_length()));
      return fixed_point_prefix(sub, std::span<const std::uint64_t>(seed), n);
    }
    case SequenceName::t32:
    case SequenceName::ttilde:
      return widen(generated_word(spec, n));
    case SequenceName::sq_digits:
      break;
  }
  throw std::invalid_argument("sq-digits has no substitution generator");
}

}  // namespace sesqui
