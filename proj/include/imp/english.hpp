#pragma once

// English-likeness statistics over the bundled tables: a space-aware
// quadgram model, a 10k-word dictionary and single-letter frequencies.

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "imp/data/quadgrams.hpp"
#include "imp/data/words.hpp"
#include "imp/text.hpp"

namespace imp {

// Returned by english_score for text without a single ASCII letter.
inline constexpr double kNoEnglishScore = -std::numeric_limits<double>::infinity();

namespace detail {

inline constexpr int kSymbols = 27;  // a-z plus word boundary

constexpr int symbol_index(char c) noexcept { return c == ' ' ? 26 : c - 'a'; }

class QuadgramTable {
 public:
  static const QuadgramTable& instance() {
    static const QuadgramTable table;
    return table;
  }

  double log_prob(const char* gram) const noexcept {
    int idx = 0;
    for (int i = 0; i < 4; ++i) idx = idx * kSymbols + symbol_index(gram[i]);
    return logp_[static_cast<std::size_t>(idx)];
  }

 private:
  QuadgramTable() : logp_(kSymbols * kSymbols * kSymbols * kSymbols, static_cast<float>(data::kQuadgramFloor)) {
    const std::size_t n = data::kQuadgramKeys.size() / 4;
    for (std::size_t i = 0; i < n; ++i) {
      const char* g = data::kQuadgramKeys.data() + 4 * i;
      int idx = 0;
      for (int k = 0; k < 4; ++k) idx = idx * kSymbols + symbol_index(g[k]);
      logp_[static_cast<std::size_t>(idx)] = static_cast<float>(data::kQuadgramLogProb[i]) / 100.0f;
    }
  }

  std::vector<float> logp_;
};

// Lowercase letters with every non-letter run collapsed to one space,
// padded by a space on both sides. Empty when the text has no letters.
inline std::string quadgram_stream(std::string_view s) {
  std::string out = " ";
  for (char c : s) {
    if (text::is_alpha(c)) {
      out.push_back(text::to_lower(c));
    } else if (out.back() != ' ') {
      out.push_back(' ');
    }
  }
  if (out.size() == 1) return {};
  if (out.back() != ' ') out.push_back(' ');
  return out;
}

}  // namespace detail

// Mean log10 probability per quadgram of the letter stream. Higher is more
// English-like; typical English sentences land around -3.5.
inline double english_score(std::string_view s) {
  const std::string stream = detail::quadgram_stream(s);
  if (stream.size() < 4) return kNoEnglishScore;
  const auto& table = detail::QuadgramTable::instance();
  double sum = 0.0;
  const std::size_t grams = stream.size() - 3;
  for (std::size_t i = 0; i < grams; ++i) sum += table.log_prob(stream.data() + i);
  return sum / static_cast<double>(grams);
}

class Dictionary {
 public:
  static const Dictionary& english() {
    static const Dictionary dict(data::kEnglishWords);
    return dict;
  }

  explicit Dictionary(std::string_view newline_separated) {
    for (auto w : text::split(newline_separated, "\n")) {
      if (!w.empty()) words_.insert(std::string(w));
    }
  }

  bool contains(std::string_view lowercase_word) const { return words_.count(std::string(lowercase_word)) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct WordStats {
  std::size_t words = 0;       // alphabetic words of length >= 2
  std::size_t dictionary = 0;  // of those, found in the dictionary
};

// Single-letter words are ignored: they match too easily by accident.
inline WordStats word_stats(std::string_view s, const Dictionary& dict = Dictionary::english()) {
  WordStats st;
  for (const auto& w : text::ascii_words(s)) {
    if (w.size() < 2) continue;
    ++st.words;
    if (dict.contains(w)) ++st.dictionary;
  }
  return st;
}

// Relative letter frequencies of English text, a..z.
inline constexpr std::array<double, 26> kEnglishLetterFrequency = {
    0.08167, 0.01492, 0.02782, 0.04253, 0.12702, 0.02228, 0.02015, 0.06094, 0.06966,
    0.00153, 0.00772, 0.04025, 0.02406, 0.06749, 0.07507, 0.01929, 0.00095, 0.05987,
    0.06327, 0.09056, 0.02758, 0.00978, 0.02360, 0.00150, 0.01974, 0.00074};

struct LetterDeviation {
  double distance = 0.0;  // total variation distance, in [0, 1]
  std::size_t letters = 0;
};

// How far the letter distribution of `s` is from English.
inline LetterDeviation letter_deviation(std::string_view s) {
  std::array<std::size_t, 26> counts{};
  LetterDeviation r;
  for (char c : s) {
    if (text::is_alpha(c)) {
      ++counts[static_cast<std::size_t>(text::to_lower(c) - 'a')];
      ++r.letters;
    }
  }
  if (r.letters == 0) return r;
  for (std::size_t i = 0; i < 26; ++i) {
    r.distance += std::abs(static_cast<double>(counts[i]) / static_cast<double>(r.letters) - kEnglishLetterFrequency[i]);
  }
  r.distance /= 2.0;
  return r;
}

}  // namespace imp
