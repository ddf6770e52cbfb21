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

// Representations of the natural numbers in a rational base p/q.
//
// Two conventions are supported. The plain one writes N = sum d_i (p/q)^i;
// the "AFS" one writes N = sum d_i (1/q)(p/q)^i. Digits range over 0..p-1
// in both. The plain representation of zero is the one-digit string "0",
// the AFS representation of zero is the empty string.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sesqui {

using Natural = boost::multiprecision::cpp_int;

template <class Int>
concept NaturalLike = std::unsigned_integral<Int> || std::same_as<Int, Natural>;

/// A rational base p/q with gcd(p, q) = 1 and p > q >= 1.
class Base {
 public:
  /// Throws std::invalid_argument unless p > q >= 1 and gcd(p, q) = 1.
  Base(std::uint64_t p, std::uint64_t q);

  /// The base 3/2.
  static Base sesquinary() { return Base(3, 2); }

  /// Parses "p/q"; a bare "p" means p/1.
  static Base parse(std::string_view text);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }

  std::string to_string() const;

  friend bool operator==(const Base&, const Base&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

enum class Variant { sq, afs };

/// Digits most significant first.
struct DigitString {
  std::vector<std::uint64_t> digits;
  Base base = Base::sesquinary();
  Variant variant = Variant::sq;

  bool empty() const noexcept { return digits.empty(); }
  std::size_t size() const noexcept { return digits.size(); }

  /// Single characters when p <= 10, otherwise decimal digits joined by '.'.
  /// The empty string renders as "".
  std::string to_string() const;

  /// Inverse of to_string; "ε" is accepted for the empty string.
  /// Throws std::invalid_argument on malformed text or out-of-range digits.
  static DigitString parse(std::string_view text, const Base& base, Variant variant);

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Plain base-p/q representation of n; encode(0) is "0".
template <NaturalLike Int>
DigitString encode(Int n, const Base& base) {
  DigitString out{{}, base, Variant::sq};
  if (n == 0) {
    out.digits.push_back(0);
    return out;
  }
  const Int p = static_cast<Int>(base.p());
  const Int q = static_cast<Int>(base.q());
  while (n != 0) {
    const Int r = n % p;
    out.digits.push_back(static_cast<std::uint64_t>(r));
    n = ((n - r) / p) * q;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

/// AFS representation of n: the digits of encode(q*n) for n > 0, empty for 0.
template <NaturalLike Int>
DigitString encode_afs(const Int& n, const Base& base) {
  DigitString out{{}, base, Variant::afs};
  if (n == 0) return out;
  if constexpr (std::unsigned_integral<Int>) {
    if (n > std::numeric_limits<Int>::max() / base.q()) {
      out.digits = encode(Natural(n) * base.q(), base).digits;
      return out;
    }
    out.digits = encode(static_cast<Int>(n * base.q()), base).digits;
  } else {
    out.digits = encode(Natural(n * base.q()), base).digits;
  }
  return out;
}

struct DecodeOptions {
  /// Reject leading zeros (a lone "0" in the plain variant is still fine).
  bool strict = false;
};

/// Exact value of a digit string; throws NotNatural if it is not a natural
/// number and std::invalid_argument for out-of-range digits.
Natural decode(const DigitString& digits, DecodeOptions options = {});

/// Sum of the plain digits of n, optionally reduced modulo `modulus`.
/// The digit sum never exceeds n, so fixed-width types cannot overflow.
template <NaturalLike Int>
Int digit_sum(Int n, const Base& base, std::optional<std::uint64_t> modulus = std::nullopt) {
  const Int p = static_cast<Int>(base.p());
  const Int q = static_cast<Int>(base.q());
  Int sum = 0;
  while (n != 0) {
    const Int r = n % p;
    sum += r;
    n = ((n - r) / p) * q;
  }
  if (modulus) sum %= static_cast<Int>(*modulus);
  return sum;
}

/// Sum of the AFS digits of n; equals digit_sum(q*n) for n > 0.
template <NaturalLike Int>
Int digit_sum_afs(const Int& n, const Base& base,
                  std::optional<std::uint64_t> modulus = std::nullopt) {
  if (n == 0) return Int(0);
  if constexpr (std::unsigned_integral<Int>) {
    if (n > std::numeric_limits<Int>::max() / base.q())
      return static_cast<Int>(digit_sum(Natural(n) * base.q(), base, modulus));
    return digit_sum(static_cast<Int>(n * base.q()), base, modulus);
  } else {
    return digit_sum(Natural(n * base.q()), base, modulus);
  }
}

}  // namespace sesqui
