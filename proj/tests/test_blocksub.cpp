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

#include <cstdint>
#include <vector>

#include "sesqui/blocksub.hpp"
#include "sesqui/errors.hpp"
#include "sesqui/numeration.hpp"
#include "sesqui/sequences.hpp"

using namespace sesqui;

namespace {

const Alphabet kBinary = Alphabet::binary();

std::string run_apply(const BlockSubstitution& sub, std::string_view w) {
  const Word word = sub.alphabet().parse(w);
  return sub.alphabet().format(sesqui::apply(sub, std::span<const Symbol>(word)));
}

std::string run_padded(const BlockSubstitution& sub, std::string_view w) {
  const Word word = sub.alphabet().parse(w);
  return sub.alphabet().format(apply_padded(sub, std::span<const Symbol>(word)));
}

std::string grow(const BlockSubstitution& sub, std::string_view seed, std::size_t n) {
  const Word s = sub.alphabet().parse(seed);
  return sub.alphabet().format(fixed_point_prefix(sub, std::span<const Symbol>(s), n));
}

std::string digit_sum_mod2_text(std::size_t n) {
  std::string out;
  for (std::uint64_t i = 0; i < n; ++i)
    out.push_back(static_cast<char>('0' + digit_sum(i, Base::sesquinary(), 2)));
  return out;
}

}  // namespace

TEST_CASE("alphabet") {
  const Alphabet a({"a", "b", "c"});
  CHECK(a.size() == 3);
  CHECK(a.parse("cab") == Word{2, 0, 1});
  CHECK(a.format(Word{1, 1, 0}) == "bba");
  CHECK(a.find("b") == Symbol{1});
  CHECK_FALSE(a.find("z").has_value());
  CHECK_THROWS_AS(a.parse("abz"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_FALSE(Alphabet({"ab", "c"}).single_char());
  CHECK(Alphabet().parse("").empty());
}

TEST_CASE("rule table") {
  BlockSubstitution k = kappa();
  CHECK(k.is_total());
  CHECK(k.rule_count() == 4);
  const auto rules = k.rules();
  REQUIRE(rules.size() == 4);
  CHECK(rules[1].input == Word{0, 1});
  CHECK(rules[1].output == Word{0, 1, 0});

  BlockSubstitution partial(2, 3, kBinary);
  partial.set_rule("01", "010");
  CHECK_FALSE(partial.is_total());
  CHECK_FALSE(partial.has_rule(Word{1, 1}));
  CHECK_THROWS_AS(partial.set_rule("0", "010"), std::invalid_argument);
  CHECK_THROWS_AS(partial.set_rule("01", "01"), std::invalid_argument);
  CHECK_FALSE(partial == k);

  CHECK_THROWS_AS(BlockSubstitution(30, 31, kBinary), std::length_error);
}

TEST_CASE("apply") {
  const auto k = kappa();
  CHECK(run_apply(k, "01") == "010");
  CHECK(run_apply(k, "0100") == "010010");
  CHECK(run_apply(k, "") == "");
  CHECK_THROWS_AS(run_apply(k, "0"), LengthNotMultiple);

  BlockSubstitution partial(2, 3, kBinary);
  partial.set_rule("01", "010");
  CHECK_THROWS_AS(run_apply(partial, "0111"), MissingRule);

  const auto rule = digit_sum_substitution(Base::sesquinary());
  const std::vector<std::uint64_t> in{0, 1};
  CHECK(sesqui::apply(rule, std::span<const std::uint64_t>(in)) == std::vector<std::uint64_t>{0, 1, 2});
  const std::vector<std::uint64_t> in2{7, 3, 2, 9};
  CHECK(sesqui::apply(rule, std::span<const std::uint64_t>(in2)) ==
        std::vector<std::uint64_t>{7, 8, 9, 2, 3, 4});
}

TEST_CASE("apply_padded drops the incomplete block") {
  const auto k = kappa();
  CHECK(run_padded(k, "010") == "010");
  CHECK(run_padded(k, "0100") == "010010");
  CHECK(run_padded(k, "01001") == run_apply(k, "0100"));
  CHECK_THROWS_AS(run_padded(k, "0"), TooShort);
}

TEST_CASE("padded growth") {
  CHECK(minimal_growing_length(2, 3) == 4);
  const auto k = kappa();
  Word w = kappa_seed();
  for (std::size_t m = 4; m < 200; ++m) {
    w.resize(m, 0);
    const auto image = apply_padded(k, std::span<const Symbol>(w));
    CHECK(image.size() == 3 * (m / 2));
    CHECK(image.size() > m);
  }
  for (std::size_t p = 1; p <= 6; ++p)
    for (std::size_t q = p + 1; q <= 9; ++q) {
      const std::size_t len = minimal_growing_length(p, q);
      for (std::size_t m = len; m < len + 50; ++m) CHECK(q * (m / p) > m);
      if (len - 1 >= p) CHECK_FALSE(q * ((len - 1) / p) > len - 1);
    }
  CHECK_THROWS_AS(minimal_growing_length(3, 3), NoGrowth);
}

TEST_CASE("fixed_point_prefix") {
  const auto k = kappa();
  CHECK(grow(k, "0100", 9) == "010010101");
  CHECK(grow(k, "0100", 9) == digit_sum_mod2_text(9));
  CHECK(grow(k, "0100", 25) == "0100101011011010101011011");
  CHECK(grow(k, "0100", 2) == "01");
  CHECK(grow(k, "0100", 0) == "");

  SUBCASE("the digit-sum rule") {
    const auto rule = digit_sum_substitution(Base::sesquinary());
    const std::vector<std::uint64_t> seed{0, 1, 2, 2};
    CHECK(fixed_point_prefix(rule, std::span<const std::uint64_t>(seed), 17) ==
          std::vector<std::uint64_t>{0, 1, 2, 2, 3, 4, 3, 4, 5, 3, 4, 5, 5, 6, 7, 4, 5});
  }

  SUBCASE("seed errors") {
    const auto kp = kappa_prime();
    CHECK_THROWS_AS(grow(kp, "0010", 3), NotFixed);
    CHECK(grow(kp, "0011", 3) == "001");
    CHECK_THROWS_AS(grow(k, "010", 10), NoGrowth);
    CHECK(grow(k, "010", 3) == "010");
    CHECK_THROWS_AS(grow(k, "0", 10), TooShort);
    CHECK_THROWS_AS(grow(k, "1100", 10), NotFixed);

    BlockSubstitution shrink(3, 2, kBinary);
    CHECK_THROWS_AS(grow(shrink, "000", 5), NoGrowth);
  }

  SUBCASE("prefix stability") {
    const std::string longest = grow(k, "0100", 400);
    for (std::size_t n = 0; n < 400; n += 7) CHECK(grow(k, "0100", n) == longest.substr(0, n));
  }
}

TEST_CASE("fixed point property of kappa") {
  const auto k = kappa();
  const Word x = fixed_point_prefix(k, std::span<const Symbol>(kappa_seed()), 30000);
  for (std::size_t j = 0; 3 * j + 2 < x.size(); ++j) {
    const auto image = *k.rule(std::span<const Symbol>(x).subspan(2 * j, 2));
    REQUIRE(std::equal(image.begin(), image.end(), x.begin() + static_cast<std::ptrdiff_t>(3 * j)));
  }
}

TEST_CASE("kappa commutes with complement") {
  const auto k = kappa();
  for (std::string w : {"00", "01", "10", "11"}) {
    std::string c = w;
    for (auto& ch : c) ch = ch == '0' ? '1' : '0';
    std::string image = run_apply(k, w);
    for (auto& ch : image) ch = ch == '0' ? '1' : '0';
    CHECK(run_apply(k, c) == image);
  }
}

TEST_CASE("find_seed") {
  CHECK(find_seed(kappa()) == kappa_seed());
  CHECK(find_seed(kappa_prime()) == kappa_prime_seed());
  BlockSubstitution swap(2, 3, kBinary);
  for (auto [in, out] : {std::pair{"00", "111"}, {"01", "111"}, {"10", "000"}, {"11", "000"}})
    swap.set_rule(in, out);
  CHECK_FALSE(find_seed(swap).has_value());
}
