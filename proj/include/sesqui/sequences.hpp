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

// The named sequences and the substitutions that generate them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sesqui/blocksub.hpp"
#include "sesqui/numeration.hpp"

namespace sesqui {

enum class SequenceName {
  sq_digits,  // plain digit strings read as decimal numerals (A024629)
  s32,        // digit sums (A244040)
  t32,        // digit sums mod 2 (A357448)
  ttilde,     // AFS digit sums mod 2
};

std::optional<SequenceName> parse_sequence_name(std::string_view name);
std::string_view to_string(SequenceName name);

struct SequenceSpec {
  SequenceName name = SequenceName::t32;
  Base base = Base::sesquinary();
};

/// 00 -> 010, 01 -> 010, 10 -> 101, 11 -> 101.
BlockSubstitution kappa();
/// 00 -> 001, 01 -> 000, 10 -> 111, 11 -> 110.
BlockSubstitution kappa_prime();
Word kappa_seed();        // 0100
Word kappa_prime_seed();  // 0011

/// The q-p rule (a, b, ...) -> (a, a+1, ..., a+p-1) on the naturals, whose
/// fixed point starting with 0 is the digit-sum sequence of base p/q.
RuleSubstitution digit_sum_substitution(const Base& base);

/// The same rule with letters reduced modulo `modulus`.
BlockSubstitution digit_sum_mod_substitution(const Base& base, std::uint32_t modulus);

/// First `length` terms of the digit-sum fixed point, built from x(r) = r
/// and x(pN + r) = x(qN) + r without evaluating any representation.
std::vector<std::uint64_t> digit_sum_seed(const Base& base, std::size_t length);

/// Terms 0..n-1 computed one by one from the numeration definitions.
/// Not defined for sq_digits (its terms outgrow 64 bits).
std::vector<std::uint64_t> direct_prefix(const SequenceSpec& spec, std::size_t n);

/// Terms 0..n-1 as a substitution fixed point. ttilde needs base 3/2.
std::vector<std::uint64_t> generated_prefix(const SequenceSpec& spec, std::size_t n);

/// generated_prefix for the binary sequences, as a word over {0, 1}.
Word generated_word(const SequenceSpec& spec, std::size_t n);

}  // namespace sesqui
