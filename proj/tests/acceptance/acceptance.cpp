// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Offline; no secondary components involved.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../campaign_fixtures.hpp"
#include "../guard_fixtures.hpp"
#include "../judge_fixtures.hpp"
#include "../test_support.hpp"
#include "imp/campaign.hpp"
#include "imp/codec.hpp"
#include "imp/guard.hpp"
#include "imp/judge.hpp"

namespace {

using namespace imp;
using namespace imp::test_support;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome codec_round_trip() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::vector<Codec> codecs;
  for (int s = 0; s < 26; ++s) codecs.push_back(Codec::caesar(s));
  for (int i = 0; i < 20; ++i) codecs.push_back(Codec::bijection(random_table(rng)));
  codecs.push_back(Codec::number());
  codecs.push_back(Codec::composite({Codec::caesar(3), Codec::number()}));
  codecs.push_back(Codec::composite({Codec::bijection(random_table(rng)), Codec::caesar(11)}));
  codecs.push_back(Codec::composite({Codec::caesar(7), Codec::bijection(random_table(rng)), Codec::number(",", 16)}));
  std::size_t checked = 0, bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string x = random_printable(rng, 0, 80);
    for (const auto& c : codecs) {
      bad += decode(c, encode(c, x)) != x;
      ++checked;
    }
  }
  const double secs = elapsed(t0);
  return {bad == 0 && secs < 5.0,
          std::to_string(checked) + " pairs, " + std::to_string(bad) + " mismatches, limit 5s"};
}

Outcome caesar_laws() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> shift(0, 25);
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int a = shift(rng), b = shift(rng);
    const std::string x = random_printable(rng, 1, 60);
    const std::string composed = encode(Codec::caesar(b), encode(Codec::caesar(a), x));
    bad += composed != encode(Codec::caesar((a + b) % 26), x);
    bad += composed != shift_oracle(x, a + b);
    bad += !(invert(Codec::caesar(a)) == Codec::caesar((26 - a) % 26));
  }
  return {bad == 0, "200 trials, " + std::to_string(bad) + " violations"};
}

Outcome scheme_equivalence() {
  std::mt19937_64 rng(3);
  const Codec table = Codec::bijection(Codec::shift_table(1));
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    const std::string x = random_printable(rng, 1, 80);
    bad += encode(table, x) != encode(Codec::caesar(1), x);
    bad += encode(table, x) != shift_oracle(x);
  }
  return {bad == 0, "200 strings, " + std::to_string(bad) + " differences"};
}

Outcome judge_fixtures_check() {
  const auto fixtures = judge_fixtures();
  std::set<Label> covered;
  std::set<std::string> names;
  std::size_t bad = 0;
  std::string first_bad;
  for (const auto& f : fixtures) {
    const auto got = classify(reply_transcript(f.reply), f.codec, f.expectation, default_moderator());
    if (got.label != f.expected) {
      ++bad;
      if (first_bad.empty()) first_bad = " first mismatch: " + f.name;
    }
    covered.insert(f.expected);
    names.insert(f.name);
  }
  const bool named = names.count("sky-blue") && names.count("ww2-1945") && names.count("hello-world-repetition");
  return {bad == 0 && fixtures.size() >= 12 && covered.size() == kAllLabels.size() && named,
          std::to_string(fixtures.size()) + " fixtures, " + std::to_string(covered.size()) + " labels covered, " +
              std::to_string(bad) + " mismatches" + first_bad};
}

Outcome guard_recovery() {
  const auto t0 = Clock::now();
  const auto& corpus = corpus::benign();
  std::size_t recovered = 0, pairs = 0, false_positives = 0, short_texts = 0;
  for (const auto& e : corpus) {
    short_texts += e.text.size() < 40;
    false_positives += detect_encoding(e.text).flagged;
    for (int s = 1; s < 26; ++s) {
      const std::string cipher = shift_oracle(e.text, s);
      const auto cands = auto_decode(cipher, detect_encoding(cipher));
      recovered += !cands.empty() && cands.front().plaintext == e.text;
      ++pairs;
    }
  }
  const double rate = static_cast<double>(recovered) / static_cast<double>(pairs);
  const double fp = static_cast<double>(false_positives) / static_cast<double>(corpus.size());
  const double secs = elapsed(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu sentences, recovery %.4f (>= 0.95), false positives %.4f (<= 0.05), limit 60s",
                corpus.size(), rate, fp);
  return {corpus.size() == 50 && short_texts == 0 && rate >= 0.95 && fp <= 0.05 && secs < 60.0, buf};
}

Outcome guard_safety() {
  const ModerationHook mod = default_moderator();
  std::size_t constrained = 0, violations = 0;
  for (const auto& f : guard_fixtures(1000, 31337)) {
    bool flagged = mod(f.prompt).flagged || mod(f.response).flagged || mod(f.prompt_plain).flagged ||
                   mod(f.response_plain).flagged;
    for (const std::string* text : {&f.prompt, &f.response}) {
      for (const auto& c : auto_decode(*text, detect_encoding(*text))) flagged |= mod(c.plaintext).flagged;
    }
    if (!flagged) continue;
    ++constrained;
    violations += check(f.prompt, f.response, mod).verdict == Verdict::Pass;
  }
  return {constrained > 0 && violations == 0,
          std::to_string(constrained) + " constrained fixtures, " + std::to_string(violations) + " passed through"};
}

Outcome mock_campaign() {
  const auto t0 = Clock::now();
  CampaignRunOptions o;
  o.sleep = [](std::chrono::milliseconds) {};
  std::vector<CampaignReport> reports;
  std::size_t mismatched = 0;
  for (const auto& tier : tiers()) {
    reports.push_back(run_campaign(tier_config(tier, fresh_dir("acceptance")), o));
    mismatched += !matches_table(reports.back(), expected_tier_table(tier.behavior));
  }
  const auto summary = compare_scaling(reports);
  bool flags = false;
  for (const auto& t : summary.codecs) {
    if (t.codec == "caesar(1)") flags = t.not_parsable_decreasing && t.in_domain_unsafe_increasing;
  }
  const double secs = elapsed(t0);
  return {mismatched == 0 && flags && secs < 10.0,
          std::to_string(mismatched) + " tiers off the predicted table, trend flags " + (flags ? "set" : "missing") +
              ", limit 10s"};
}

}  // namespace

int main() {
  report("codec round-trip", codec_round_trip);
  report("caesar laws", caesar_laws);
  report("scheme equivalence", scheme_equivalence);
  report("judge fixtures", judge_fixtures_check);
  report("guard recovery", guard_recovery);
  report("guard safety contract", guard_safety);
  report("mock campaign", mock_campaign);
  return failures == 0 ? 0 : 1;
}
