// Measures English scores and detection signals on the bundled benign corpus,
// its Caesar encryptions and random letter strings, and prints suggested
// guard thresholds as JSON.
//
//   calibrate_guard [--seed N] [--random-samples N]

#include <algorithm>
#include <iostream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imp/corpus.hpp"
#include "imp/guard.hpp"

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> values;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    values.push_back(v);
  }
  double percentile(double p) const {
    std::vector<double> v = values;
    std::sort(v.begin(), v.end());
    return v[static_cast<std::size_t>(p * static_cast<double>(v.size() - 1))];
  }
  nlohmann::json json() const { return {{"min", lo}, {"p05", percentile(0.05)}, {"p95", percentile(0.95)}, {"max", hi}}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calibrate guard thresholds on the bundled corpus"};
  unsigned seed = 7;
  int samples = 500;
  app.add_option("--seed", seed, "RNG seed for random strings");
  app.add_option("--random-samples", samples, "number of random letter strings");
  CLI11_PARSE(app, argc, argv);

  using namespace imp;
  const auto& corpus = corpus::benign();

  Range english, wrong_shift, random_best, benign_freq, benign_nonword, cipher_freq, cipher_nonword;
  // Questions and reference answers both count as benign text.
  std::vector<std::string> benign_texts;
  for (const auto& e : corpus) {
    benign_texts.push_back(e.text);
    benign_texts.push_back(e.answer);
  }
  for (const auto& text : benign_texts) {
    english.add(english_score(text));
    const auto r = detect_encoding(text);
    benign_freq.add(r.signal("letter_frequency_deviation"));
    benign_nonword.add(r.signal("nonword_ratio"));
    for (int s = 1; s < 26; ++s) {
      const std::string cipher = encode(Codec::caesar(s), text);
      wrong_shift.add(english_score(cipher));
      const auto rc = detect_encoding(cipher);
      cipher_freq.add(rc.signal("letter_frequency_deviation"));
      cipher_nonword.add(rc.signal("nonword_ratio"));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(40, 80), letter(0, 25), space(0, 5);
  for (int i = 0; i < samples; ++i) {
    std::string s;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) s.push_back(space(rng) == 0 ? ' ' : static_cast<char>('a' + letter(rng)));
    double best = kNoEnglishScore;
    for (int sh = 0; sh < 26; ++sh) best = std::max(best, english_score(encode(Codec::caesar(sh), s)));
    random_best.add(best);
  }

  GuardThresholds suggested;
  const double reject_hi = std::max(wrong_shift.hi, random_best.hi);
  suggested.plaintext_acceptance = (english.lo + reject_hi) / 2.0;
  suggested.suspicious_segment = suggested.plaintext_acceptance;
  // Signal cutoffs sit halfway between the worst benign text and the 5th
  // percentile of ciphertexts, and always strictly above every benign text.
  auto cutoff = [](const Range& benign, const Range& cipher) {
    return std::max(benign.hi + 0.01, (benign.hi + cipher.percentile(0.05)) / 2.0);
  };
  suggested.letter_frequency_deviation = cutoff(benign_freq, cipher_freq);
  suggested.nonword_ratio = cutoff(benign_nonword, cipher_nonword);

  // Outcome with the suggested values.
  std::size_t false_positives = 0, flagged_answers = 0, recovered = 0, pairs = 0;
  for (const auto& e : corpus) {
    false_positives += detect_encoding(e.text, suggested).flagged;
    flagged_answers += detect_encoding(e.answer, suggested).flagged;
    for (int s = 1; s < 26; ++s) {
      const std::string cipher = encode(Codec::caesar(s), e.text);
      const auto cands = auto_decode(cipher, detect_encoding(cipher, suggested), suggested);
      recovered += !cands.empty() && cands.front().plaintext == e.text;
      ++pairs;
    }
  }

  nlohmann::json out = {
      {"measurements",
       {{"english_score_plaintext", english.json()},
        {"english_score_caesar_ciphertext", wrong_shift.json()},
        {"english_score_random_best_shift", random_best.json()},
        {"letter_frequency_deviation_benign", benign_freq.json()},
        {"letter_frequency_deviation_cipher", cipher_freq.json()},
        {"nonword_ratio_benign", benign_nonword.json()},
        {"nonword_ratio_cipher", cipher_nonword.json()}}},
      {"margin", english.lo - reject_hi},
      {"suggested", to_json(suggested)},
      {"outcome",
       {{"false_positive_rate", static_cast<double>(false_positives) / static_cast<double>(corpus.size())},
        {"flagged_answer_rate", static_cast<double>(flagged_answers) / static_cast<double>(corpus.size())},
        {"recovery_rate", static_cast<double>(recovered) / static_cast<double>(pairs)}}}};
  std::cout << out.dump(2) << "\n";
  return 0;
}
