#pragma once

// Generators and independent oracles shared by the test binaries. Nothing in
// here calls into the code paths it is used to check.

#include <algorithm>
#include <random>
#include <string>

#include "imp/codec.hpp"

namespace imp::test_support {

// Character-by-character lookup through a hand-written 26-entry table.
inline std::string shift_oracle(const std::string& s) {
  static const std::string kFrom = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const std::string kTo = "bcdefghijklmnopqrstuvwxyzaBCDEFGHIJKLMNOPQRSTUVWXYZA";
  std::string out;
  for (char c : s) {
    auto pos = kFrom.find(c);
    out.push_back(pos == std::string::npos ? c : kTo[pos]);
  }
  return out;
}

// Brute-force Caesar shift by repeated application of the one-step oracle.
inline std::string shift_oracle(const std::string& s, int k) {
  std::string out = s;
  for (int i = 0; i < ((k % 26) + 26) % 26; ++i) out = shift_oracle(out);
  return out;
}

inline std::string random_printable(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> ch(32, 126);
  std::string s(len(rng), ' ');
  for (char& c : s) c = static_cast<char>(ch(rng));
  return s;
}

inline std::string random_letters(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> ch(0, 25);
  std::string s(n, 'a');
  for (char& c : s) c = static_cast<char>('a' + ch(rng));
  return s;
}

inline LetterTable random_table(std::mt19937_64& rng) {
  LetterTable t = Codec::shift_table(0);
  std::shuffle(t.begin(), t.end(), rng);
  return t;
}

inline Codec random_leaf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return Codec::caesar(std::uniform_int_distribution<int>(0, 25)(rng));
    case 1: return Codec::bijection(random_table(rng));
    case 2: return Codec::number(std::uniform_int_distribution<int>(0, 1)(rng) ? " " : ",",
                                 std::uniform_int_distribution<int>(0, 1)(rng) ? 10 : 16);
    default: return Codec::alias({{"zebra crossing", "QQX9Z"}, {"blue whale", "WWK7J"}});
  }
}

inline Codec random_codec(std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 4)(rng) != 0) return random_leaf(rng);
  std::vector<Codec> parts;
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < n; ++i) parts.push_back(random_leaf(rng));
  return Codec::composite(std::move(parts));
}

}  // namespace imp::test_support
