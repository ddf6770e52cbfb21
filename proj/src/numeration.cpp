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

#include "sesqui/numeration.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "sesqui/errors.hpp"

namespace sesqui {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

}  // namespace

Base::Base(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (q < 1 || p <= q)
    throw std::invalid_argument("base " + to_string() + " must satisfy p > q >= 1");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("base " + to_string() + " must have coprime p and q");
}

Base Base::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Base(parse_u64(text, "base"), 1);
  return Base(parse_u64(text.substr(0, slash), "base numerator"),
              parse_u64(text.substr(slash + 1), "base denominator"));
}

std::string Base::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::string DigitString::to_string() const {
  std::string out;
  if (base.p() <= 10) {
    out.reserve(digits.size());
    for (auto d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(digits[i]);
  }
  return out;
}

DigitString DigitString::parse(std::string_view text, const Base& base, Variant variant) {
  DigitString out{{}, base, variant};
  if (text.empty() || text == "ε") return out;
  if (base.p() <= 10 && text.find('.') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("invalid digit '" + std::string(1, c) + "'");
      out.digits.push_back(static_cast<std::uint64_t>(c - '0'));
    }
  } else {
    std::size_t start = 0;
    while (true) {
      const auto dot = text.find('.', start);
      out.digits.push_back(parse_u64(text.substr(start, dot - start), "digit"));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  for (auto d : out.digits)
    if (d >= base.p())
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  base.to_string());
  return out;
}

Natural decode(const DigitString& digits, DecodeOptions options) {
  const auto& ds = digits.digits;
  const Base& base = digits.base;
  for (auto d : ds)
    if (d >= base.p())
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  base.to_string());
  if (ds.empty()) return 0;
  if (options.strict && ds.front() == 0 && !(digits.variant == Variant::sq && ds.size() == 1))
    throw NonCanonical("representation '" + digits.to_string() + "' has a leading zero");

  // value * q^R = sum_i d_i p^i q^(R-i), accumulated most significant first.
  Natural numerator = 0;
  Natural q_power = 1;
  for (auto d : ds) {
    numerator = numerator * base.p() + Natural(d) * q_power;
    q_power *= base.q();
  }
  // q_power is now q^(R+1): the AFS denominator. The plain one is q^R.
  Natural denominator = digits.variant == Variant::afs ? q_power : Natural(q_power / base.q());

  if (numerator % denominator == 0) return numerator / denominator;
  const Natural g = boost::multiprecision::gcd(numerator, denominator);
  throw NotNatural(Natural(numerator / g).str(), Natural(denominator / g).str());
}

}  // namespace sesqui
