#pragma once

// Decode-then-moderate guardrail. Prompts (every user turn) and model
// responses are scanned for cipher text, force-decoded, and every plausible
// plaintext is moderated. Refuses when a plaintext is harmful, or when the
// text looks encoded but nothing decodes to English.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "imp/codec.hpp"
#include "imp/english.hpp"
#include "imp/errors.hpp"
#include "imp/gateway.hpp"
#include "imp/moderation.hpp"
#include "imp/text.hpp"

namespace imp {

inline constexpr std::array<std::string_view, 5> kSignalNames = {
    "letter_frequency_deviation", "nonword_ratio", "numeric_run", "mapping_literal", "codec_code_block"};

// A prompt is flagged when any signal score reaches its threshold.
// Defaults come from tools/calibrate_guard run on the bundled corpus.
struct GuardThresholds {
  double letter_frequency_deviation = 0.5;
  double nonword_ratio = 0.65;
  double numeric_run = 1.0;
  double mapping_literal = 1.0;
  double codec_code_block = 1.0;
  // english_score a decoded candidate must exceed to count as plaintext.
  double plaintext_acceptance = -5.2;
  // Segments scoring below this are treated as possibly encoded.
  double suspicious_segment = -5.2;
  // Letter-frequency signal needs at least this many letters.
  std::size_t min_frequency_letters = 16;

  double threshold(std::string_view signal) const {
    if (signal == "letter_frequency_deviation") return letter_frequency_deviation;
    if (signal == "nonword_ratio") return nonword_ratio;
    if (signal == "numeric_run") return numeric_run;
    if (signal == "mapping_literal") return mapping_literal;
    if (signal == "codec_code_block") return codec_code_block;
    throw ConfigError("unknown detection signal " + std::string(signal));
  }
};

inline GuardThresholds thresholds_from_json(const nlohmann::json& j) {
  GuardThresholds t;
  try {
    t.letter_frequency_deviation = j.value("letter_frequency_deviation", t.letter_frequency_deviation);
    t.nonword_ratio = j.value("nonword_ratio", t.nonword_ratio);
    t.numeric_run = j.value("numeric_run", t.numeric_run);
    t.mapping_literal = j.value("mapping_literal", t.mapping_literal);
    t.codec_code_block = j.value("codec_code_block", t.codec_code_block);
    t.plaintext_acceptance = j.value("plaintext_acceptance", t.plaintext_acceptance);
    t.suspicious_segment = j.value("suspicious_segment", t.suspicious_segment);
    t.min_frequency_letters = j.value("min_frequency_letters", t.min_frequency_letters);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed guard thresholds: ") + e.what());
  }
  return t;
}

inline nlohmann::json to_json(const GuardThresholds& t) {
  return {{"letter_frequency_deviation", t.letter_frequency_deviation},
          {"nonword_ratio", t.nonword_ratio},
          {"numeric_run", t.numeric_run},
          {"mapping_literal", t.mapping_literal},
          {"codec_code_block", t.codec_code_block},
          {"plaintext_acceptance", t.plaintext_acceptance},
          {"suspicious_segment", t.suspicious_segment},
          {"min_frequency_letters", t.min_frequency_letters}};
}

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

struct Signal {
  std::string name;
  double score = 0.0;
};

struct Hypothesis {
  Codec codec;
  double confidence = 0.0;
};

struct NumericRun {
  Span span;
  std::string separator;
  std::size_t count = 0;
};

struct DetectionReport {
  std::vector<Signal> signals;
  std::vector<Hypothesis> candidates;
  bool flagged = false;
  std::vector<std::string> flagged_by;
  // Regions the decoders work on.
  std::vector<Span> suspicious_blocks;
  std::vector<NumericRun> numeric_runs;
  std::optional<LetterTable> mapping;

  double signal(std::string_view name) const {
    for (const auto& s : signals) {
      if (s.name == name) return s.score;
    }
    return 0.0;
  }
};

struct DecodeCandidate {
  std::string plaintext;
  Codec codec;
  double score = 0.0;
  Span source;
};

namespace detail {

// Total order on hypotheses with equal confidence: Caesar by shift, then by
// scheme name, then by full codec name.
inline bool codec_before(const Codec& a, const Codec& b) {
  if (a.scheme() == Scheme::Caesar && b.scheme() == Scheme::Caesar) return a.shift() < b.shift();
  if (a.scheme() != b.scheme()) return scheme_name(a.scheme()) < scheme_name(b.scheme());
  return a.name() < b.name();
}

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Code-like lines: definitions, type signatures, arrows, comments, fences.
inline bool is_code_line(std::string_view line) {
  const std::string_view t = text::trim(line);
  if (t.empty()) return false;
  static constexpr std::array<std::string_view, 5> markers = {"::", "->", "<-", "=", "`"};
  for (auto m : markers) {
    if (t.find(m) != std::string_view::npos) return true;
  }
  const bool python_def = t.rfind("def ", 0) == 0 && t.find('(') != std::string_view::npos && t.back() == ':';
  return python_def || t.rfind("--", 0) == 0 || t.rfind("#", 0) == 0;
}

struct MappingLiteral {
  Span span;
  std::optional<LetterTable> table;
  std::size_t pairs = 0;
};

inline std::optional<std::pair<char, char>> parse_letter_pair(std::string_view piece) {
  static const std::regex kPair(R"(^\s*['"]?([A-Za-z])['"]?\s*:\s*['"]?([A-Za-z])['"]?\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(piece.begin(), piece.end(), m, kPair)) return std::nullopt;
  return std::make_pair(text::to_lower(m[1].str()[0]), text::to_lower(m[2].str()[0]));
}

// Brace bodies of comma-separated key:value pairs. Letter-to-letter bodies
// become a table; partial tables are completed with the unused letters in
// alphabetical order.
inline std::vector<MappingLiteral> find_mapping_literals(std::string_view s) {
  std::vector<MappingLiteral> out;
  for (std::size_t open = s.find('{'); open != std::string_view::npos; open = s.find('{', open + 1)) {
    const std::size_t close = s.find('}', open);
    if (close == std::string_view::npos) break;
    const std::string_view body = s.substr(open + 1, close - open - 1);
    if (body.find('{') != std::string_view::npos || body.find(':') == std::string_view::npos) continue;
    MappingLiteral lit;
    lit.span = {open, close + 1};
    std::array<char, 26> forward{};
    std::array<bool, 26> used{};
    bool letters = true;
    bool consistent = true;
    for (auto piece : text::split(body, ",")) {
      if (text::trim(piece).empty()) continue;
      auto pair = parse_letter_pair(piece);
      if (!pair) {
        letters = false;
        continue;
      }
      const int k = pair->first - 'a';
      const int v = pair->second - 'a';
      if ((forward[k] && forward[k] != pair->second) || (used[v] && forward[k] != pair->second)) consistent = false;
      forward[k] = pair->second;
      used[v] = true;
      ++lit.pairs;
    }
    if (letters && consistent && lit.pairs > 0) {
      LetterTable table{};
      int next_free = 0;
      for (int k = 0; k < 26; ++k) {
        if (forward[k]) {
          table[k] = forward[k];
          continue;
        }
        while (used[next_free]) ++next_free;
        table[k] = static_cast<char>('a' + next_free);
        used[next_free] = true;
      }
      lit.table = table;
    }
    out.push_back(lit);
    open = close;
  }
  return out;
}

inline bool canonical_int(std::string_view tok) { return !tok.empty() && (tok.size() == 1 || tok[0] != '0'); }

inline bool char_code(std::string_view tok) {
  if (tok.size() > 7) return false;
  const long v = std::stol(std::string(tok));
  return (v >= 32 || v == 9 || v == 10 || v == 13) && text::is_valid_code_point(static_cast<char32_t>(v));
}

// Maximal runs of canonical decimal character codes joined by one repeated
// separator of 1-3 punctuation/space characters.
inline std::vector<NumericRun> find_numeric_runs(std::string_view s, const std::vector<bool>& excluded) {
  struct Tok {
    std::size_t begin, end;
  };
  std::vector<Tok> toks;
  for (std::size_t i = 0; i < s.size();) {
    if (!text::is_digit(s[i]) || excluded[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && text::is_digit(s[j])) ++j;
    const bool word_edge = (i == 0 || !text::is_word_byte(s[i - 1])) && (j == s.size() || !text::is_word_byte(s[j]));
    if (word_edge && canonical_int(s.substr(i, j - i)) && char_code(s.substr(i, j - i))) toks.push_back({i, j});
    i = j;
  }
  auto valid_sep = [&](std::string_view sep) {
    if (sep.empty() || sep.size() > 3) return false;
    return std::all_of(sep.begin(), sep.end(), [](char c) {
      return c == ' ' || c == ',' || c == ';' || c == '|' || c == '/' || c == '-' || c == ':' || c == '\t';
    });
  };
  std::vector<NumericRun> runs;
  for (std::size_t a = 0; a < toks.size();) {
    std::size_t b = a;
    std::string sep;
    while (b + 1 < toks.size()) {
      const std::string_view gap = s.substr(toks[b].end, toks[b + 1].begin - toks[b].end);
      if (!valid_sep(gap) || (b > a && gap != sep)) break;
      if (b == a) sep = std::string(gap);
      ++b;
    }
    runs.push_back({{toks[a].begin, toks[b].end}, sep.empty() ? std::string(" ") : sep, b - a + 1});
    a = b + 1;
  }
  return runs;
}

struct Segments {
  std::vector<bool> excluded;
  std::vector<Span> prose;  // trimmed, non-empty, outside excluded regions
  std::string code_text;
  std::vector<MappingLiteral> literals;
};

inline Segments segment(std::string_view s) {
  Segments seg;
  seg.excluded.assign(s.size(), false);
  auto exclude = [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e && i < s.size(); ++i) seg.excluded[i] = true;
  };
  seg.literals = find_mapping_literals(s);
  for (const auto& lit : seg.literals) exclude(lit.span.begin, lit.span.end);

  // Fenced blocks, then code-like lines.
  for (std::size_t open = s.find("```"); open != std::string_view::npos;) {
    std::size_t close = s.find("```", open + 3);
    const std::size_t end = close == std::string_view::npos ? s.size() : close + 3;
    seg.code_text.append(s.substr(open, end - open)).push_back('\n');
    exclude(open, end);
    if (close == std::string_view::npos) break;
    open = s.find("```", end);
  }
  for (std::size_t line_start = 0; line_start < s.size();) {
    std::size_t line_end = s.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = s.size();
    if (!seg.excluded[line_start] && is_code_line(s.substr(line_start, line_end - line_start))) {
      seg.code_text.append(s.substr(line_start, line_end - line_start)).push_back('\n');
      exclude(line_start, line_end);
    }
    line_start = line_end + 1;
  }

  // Sentences: split at newlines, excluded bytes, and [.!?] before whitespace.
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::size_t b = start, e = end;
    while (b < e && text::is_space(s[b])) ++b;
    while (e > b && text::is_space(s[e - 1])) --e;
    if (b < e) seg.prose.push_back({b, e});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (seg.excluded[i]) {
      flush(i);
      start = i + 1;
    } else if (s[i] == '\n') {
      flush(i);
      start = i + 1;
    } else if ((s[i] == '.' || s[i] == '!' || s[i] == '?') && i + 1 < s.size() && text::is_space(s[i + 1])) {
      flush(i + 1);
      start = i + 1;
    }
  }
  flush(s.size());
  return seg;
}

inline std::string_view view(std::string_view s, Span sp) { return s.substr(sp.begin, sp.end - sp.begin); }

inline bool has_letters(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return text::is_alpha(c); });
}

inline double code_block_score(const std::string& code) {
  if (code.empty()) return 0.0;
  static const std::vector<std::string> words = {"ord",   "chr",    "map",  "encode", "decode", "shift",
                                                 "lookup", "table", "mod",  "lambda", "join",   "split",
                                                 "asciiToNumber", "numberToAscii", "substitute", "shiftBy"};
  static const std::vector<std::string> symbols = {"::", "->", "<-"};
  std::size_t hits = 0;
  for (const auto& w : words) hits += text::ifind_word(code, w) != std::string_view::npos;
  for (const auto& sym : symbols) hits += code.find(sym) != std::string::npos;
  return std::min(1.0, static_cast<double>(hits) / 3.0);
}

inline std::optional<std::string> strict_decode(const Codec& c, std::string_view s) {
  try {
    return decode(c, s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline DetectionReport detect_encoding(std::string_view prompt, const GuardThresholds& th = {}) {
  DetectionReport r;
  const auto seg = detail::segment(prompt);

  // Suspicious segments, merged into blocks across letter-free gaps.
  for (const auto& sp : seg.prose) {
    const auto v = detail::view(prompt, sp);
    if (text::count_letters(v) < 2 || english_score(v) >= th.suspicious_segment) continue;
    if (!r.suspicious_blocks.empty()) {
      Span& last = r.suspicious_blocks.back();
      const auto gap = prompt.substr(last.end, sp.begin - last.end);
      bool clean = !detail::has_letters(gap);
      for (std::size_t i = last.end; i < sp.begin && clean; ++i) clean = !seg.excluded[i];
      if (clean) {
        last.end = sp.end;
        continue;
      }
    }
    r.suspicious_blocks.push_back(sp);
  }
  r.numeric_runs = detail::find_numeric_runs(prompt, seg.excluded);

  // Signals look at the least English-looking region: the suspicious blocks
  // when present, otherwise all prose.
  std::string focus;
  for (const auto& sp : r.suspicious_blocks.empty() ? seg.prose : r.suspicious_blocks) {
    focus.append(detail::view(prompt, sp)).push_back('\n');
  }
  const auto dev = letter_deviation(focus);
  const double freq = dev.letters >= th.min_frequency_letters ? dev.distance : 0.0;
  const auto ws = word_stats(focus);
  double nonword = 0.0;
  if (ws.words > 0) {
    nonword = (1.0 - static_cast<double>(ws.dictionary) / static_cast<double>(ws.words)) *
              std::min(1.0, static_cast<double>(ws.words) / 3.0);
  }
  std::size_t longest_run = 0;
  for (const auto& run : r.numeric_runs) longest_run = std::max(longest_run, run.count);
  const double numeric = std::min(1.0, static_cast<double>(longest_run) / 4.0);

  std::size_t best_pairs = 0;
  for (const auto& lit : seg.literals) {
    if (lit.table && lit.pairs > best_pairs) {
      best_pairs = lit.pairs;
      r.mapping = lit.table;
    }
  }
  const double mapping = std::min(1.0, static_cast<double>(best_pairs) / 3.0);

  r.signals = {{"letter_frequency_deviation", freq},
               {"nonword_ratio", nonword},
               {"numeric_run", numeric},
               {"mapping_literal", mapping},
               {"codec_code_block", detail::code_block_score(seg.code_text)}};
  for (const auto& s : r.signals) {
    if (s.score >= th.threshold(s.name)) {
      r.flagged = true;
      r.flagged_by.push_back(s.name);
    }
  }

  // Hypotheses, scored on all suspicious text decoded together.
  auto score_on_blocks = [&](const Codec& c) {
    std::string joined;
    for (const auto& sp : r.suspicious_blocks) {
      auto d = detail::strict_decode(c, detail::view(prompt, sp));
      if (!d) return kNoEnglishScore;
      joined += *d + "\n";
    }
    return english_score(joined);
  };
  auto confidence = [&](double score) {
    return std::isfinite(score) ? detail::logistic(3.0 * (score - th.plaintext_acceptance)) : 0.0;
  };
  if (!r.suspicious_blocks.empty()) {
    for (int s = 1; s < 26; ++s) {
      const Codec c = Codec::caesar(s);
      r.candidates.push_back({c, confidence(score_on_blocks(c))});
    }
    if (r.mapping) {
      const Codec c = Codec::bijection(*r.mapping);
      r.candidates.push_back({c, confidence(score_on_blocks(c))});
    }
  }
  std::set<std::string> seps;
  for (const auto& run : r.numeric_runs) {
    if (run.count < 2 || !seps.insert(run.separator).second) continue;
    const Codec c = Codec::number(run.separator);
    auto d = detail::strict_decode(c, detail::view(prompt, run.span));
    r.candidates.push_back({c, d ? confidence(english_score(*d)) : 0.0});
  }
  std::stable_sort(r.candidates.begin(), r.candidates.end(), [](const Hypothesis& a, const Hypothesis& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return detail::codec_before(a.codec, b.codec);
  });
  return r;
}

// Every decoding worth moderating: report hypotheses, all Caesar shifts,
// number decoding (optionally followed by a shift), the extracted mapping
// and caller-supplied hints. Only candidates scoring above the acceptance
// threshold survive; best first, one per distinct plaintext.
inline std::vector<DecodeCandidate> auto_decode(std::string_view prompt, const DetectionReport& report,
                                                const GuardThresholds& th = {},
                                                const std::vector<Codec>& hints = {}) {
  std::vector<DecodeCandidate> out;
  auto consider = [&](const Codec& c, Span span) {
    const auto source = detail::view(prompt, span);
    auto plain = detail::strict_decode(c, source);
    if (!plain || *plain == source) return;
    // Sound candidates only: re-encoding must reproduce the source exactly.
    try {
      if (encode(c, *plain) != source) return;
    } catch (const std::exception&) {
      return;
    }
    const double score = english_score(*plain);
    if (!(score > th.plaintext_acceptance)) return;
    out.push_back({std::move(*plain), c, score, span});
  };

  std::vector<Codec> letter_codecs;
  for (const auto& h : report.candidates) {
    if (h.codec.is_letter_substitution()) letter_codecs.push_back(h.codec);
  }
  for (int s = 1; s < 26; ++s) letter_codecs.push_back(Codec::caesar(s));
  if (report.mapping) letter_codecs.push_back(Codec::bijection(*report.mapping));

  for (const auto& block : report.suspicious_blocks) {
    for (const auto& c : letter_codecs) consider(c, block);
  }
  for (const auto& run : report.numeric_runs) {
    if (run.count < 2) continue;
    const Codec number = Codec::number(run.separator);
    const std::size_t before = out.size();
    consider(number, run.span);
    if (out.size() > before) continue;
    // Numbers that decode to non-English may hide a second, Caesar layer.
    for (int s = 1; s < 26; ++s) consider(Codec::composite({Codec::caesar(s), number}), run.span);
  }
  for (const auto& hint : hints) {
    consider(hint, {0, prompt.size()});
    for (const auto& block : report.suspicious_blocks) consider(hint, block);
    for (const auto& run : report.numeric_runs) consider(hint, run.span);
  }

  std::stable_sort(out.begin(), out.end(), [](const DecodeCandidate& a, const DecodeCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (!(a.codec == b.codec)) return detail::codec_before(a.codec, b.codec);
    return a.source.begin < b.source.begin;
  });
  std::vector<DecodeCandidate> unique;
  std::set<std::string> seen;
  for (auto& c : out) {
    if (seen.insert(c.plaintext).second) unique.push_back(std::move(c));
  }
  return unique;
}

// ---------------------------------------------------------------------------
// Guard

enum class Verdict { Pass, RefuseUndecodable, RefuseHarmful };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::RefuseUndecodable: return "RefuseUndecodable";
    case Verdict::RefuseHarmful: return "RefuseHarmful";
  }
  return "unknown";
}

struct GuardDecision {
  Verdict verdict = Verdict::Pass;
  std::optional<std::string> decoded_plaintext;
  std::optional<Codec> detected_codec;
  std::vector<std::string> rationale;
  std::vector<Signal> signals;
  // The model output, present only on Pass.
  std::optional<std::string> response;
};

struct GuardOptions {
  GuardThresholds thresholds;
  std::vector<Codec> codec_hints;
};

struct Inspection {
  DetectionReport report;
  std::vector<DecodeCandidate> candidates;
};

inline Inspection inspect(std::string_view text, const GuardOptions& options, const std::vector<Codec>& extra_hints = {}) {
  Inspection i;
  i.report = detect_encoding(text, options.thresholds);
  std::vector<Codec> hints = options.codec_hints;
  hints.insert(hints.end(), extra_hints.begin(), extra_hints.end());
  i.candidates = auto_decode(text, i.report, options.thresholds, hints);
  return i;
}

namespace detail {

// Runs detection, decoding and moderation on one text. Returns a refusal
// decision, or nothing when the text is clean.
inline std::optional<GuardDecision> screen(std::string_view side, std::string_view text, const Inspection& insp,
                                           const ModerationHook& moderator) {
  if (insp.report.flagged && insp.candidates.empty()) {
    GuardDecision d;
    d.verdict = Verdict::RefuseUndecodable;
    for (const auto& s : insp.report.flagged_by) d.rationale.push_back(std::string(side) + ":flagged:" + s);
    d.rationale.push_back(std::string(side) + ":undecodable");
    return d;
  }
  auto refuse = [&](std::string plaintext, std::optional<Codec> codec, const ModerationResult& m,
                    const std::string& where) {
    GuardDecision d;
    d.verdict = Verdict::RefuseHarmful;
    d.decoded_plaintext = std::move(plaintext);
    d.detected_codec = std::move(codec);
    for (const auto& c : m.categories) d.rationale.push_back(std::string(side) + ":" + where + ":harm:" + c);
    return d;
  };
  const ModerationResult raw = moderator(text);
  if (raw.flagged) return refuse(std::string(text), std::nullopt, raw, "raw");
  for (const auto& c : insp.candidates) {
    const ModerationResult m = moderator(c.plaintext);
    if (m.flagged) return refuse(c.plaintext, c.codec, m, "decoded:" + c.codec.name());
  }
  return std::nullopt;
}

}  // namespace detail

// Guard a full conversation: every user turn is screened, then the model is
// called and its response screened the same way.
inline GuardDecision guard(const std::vector<ChatMessage>& conversation, const ChatFunction& model,
                           const ModerationHook& moderator, const GuardOptions& options = {}) {
  std::optional<Inspection> last_prompt;
  std::size_t turn = 0;
  for (const auto& m : conversation) {
    if (m.role != "user") continue;
    ++turn;
    Inspection insp = inspect(m.content, options);
    const std::string side = "input[" + std::to_string(turn) + "]";
    if (auto refusal = detail::screen(side, m.content, insp, moderator)) {
      refusal->signals = insp.report.signals;
      return *refusal;
    }
    last_prompt = std::move(insp);
  }

  GuardDecision pass;
  if (last_prompt) {
    pass.signals = last_prompt->report.signals;
    if (!last_prompt->candidates.empty()) {
      pass.decoded_plaintext = last_prompt->candidates.front().plaintext;
      pass.detected_codec = last_prompt->candidates.front().codec;
      pass.rationale.push_back("input:decoded:" + pass.detected_codec->name());
    }
    for (const auto& s : last_prompt->report.flagged_by) pass.rationale.push_back("input:flagged:" + s);
  }
  pass.rationale.push_back("input:moderation-clear");

  if (!model) return pass;
  const std::string response = model(conversation);
  std::vector<Codec> carry;
  if (pass.detected_codec) carry.push_back(*pass.detected_codec);
  const Inspection out = inspect(response, options, carry);
  if (auto refusal = detail::screen("output", response, out, moderator)) {
    refusal->signals = pass.signals;
    return *refusal;
  }
  pass.rationale.push_back("output:moderation-clear");
  pass.response = response;
  return pass;
}

inline GuardDecision guard(std::string_view prompt, const ChatFunction& model, const ModerationHook& moderator,
                           const GuardOptions& options = {}) {
  return guard(std::vector<ChatMessage>{{"user", std::string(prompt)}}, model, moderator, options);
}

// Filter mode: judge a prompt and, optionally, an already-produced response.
inline GuardDecision check(std::string_view prompt, const std::optional<std::string>& response,
                           const ModerationHook& moderator, const GuardOptions& options = {}) {
  ChatFunction model;
  if (response) model = [r = *response](const std::vector<ChatMessage>&) { return r; };
  return guard(prompt, model, moderator, options);
}

inline nlohmann::json to_json(const GuardDecision& d) {
  nlohmann::json signals = nlohmann::json::object();
  for (const auto& s : d.signals) signals[s.name] = s.score;
  nlohmann::json j = {{"verdict", verdict_name(d.verdict)},
                      {"decoded", d.decoded_plaintext ? nlohmann::json(*d.decoded_plaintext) : nlohmann::json()},
                      {"codec", d.detected_codec ? to_json(*d.detected_codec) : nlohmann::json()},
                      {"signals", std::move(signals)},
                      {"rationale", d.rationale}};
  if (d.response) j["response"] = *d.response;
  return j;
}

inline nlohmann::json to_json(const DetectionReport& r) {
  nlohmann::json signals = nlohmann::json::object();
  for (const auto& s : r.signals) signals[s.name] = s.score;
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& h : r.candidates) cands.push_back({{"codec", to_json(h.codec)}, {"confidence", h.confidence}});
  return {{"flagged", r.flagged}, {"flagged_by", r.flagged_by}, {"signals", std::move(signals)}, {"candidates", std::move(cands)}};
}

}  // namespace imp
