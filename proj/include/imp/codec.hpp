#pragma once

// Invertible text transformations used to build encoding/bijection attacks:
// Caesar shifts, letter bijections, code-point number lists, word aliases and
// left-to-right compositions of those.
//
// Codec values are immutable after construction and every operation here is
// a pure function, so codecs can be shared freely between threads.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "imp/errors.hpp"
#include "imp/text.hpp"

namespace imp {

enum class Scheme { Caesar, Bijection, Number, Alias, Composite };

inline std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Caesar: return "caesar";
    case Scheme::Bijection: return "bijection";
    case Scheme::Number: return "number";
    case Scheme::Alias: return "alias";
    case Scheme::Composite: return "composite";
  }
  return "unknown";
}

// table[i] is the image of the letter 'a' + i, always lowercase.
using LetterTable = std::array<char, 26>;

struct AliasPair {
  std::string phrase;
  std::string alias;
  bool operator==(const AliasPair&) const = default;
};

class Codec;
inline Codec invert(const Codec& codec);

namespace detail {

struct CaesarParams {
  int shift = 0;
  bool operator==(const CaesarParams&) const = default;
};

struct BijectionParams {
  LetterTable table{};
  bool operator==(const BijectionParams&) const = default;
};

struct NumberParams {
  std::string separator = " ";
  int radix = 10;
  // Set on the inverse of a number codec: "encoding" parses number lists.
  bool inverse = false;
  bool operator==(const NumberParams&) const = default;
};

struct AliasParams {
  std::vector<AliasPair> word_map;
  bool operator==(const AliasParams&) const = default;
};

struct CompositeParams {
  std::vector<Codec> parts;
  bool operator==(const CompositeParams& other) const;
};

}  // namespace detail

class Codec {
 public:
  static constexpr int kMaxCompositeDepth = 8;

  static Codec caesar(int shift) {
    if (shift < 0 || shift > 25) {
      throw ConfigError("caesar shift must be in [0, 25], got " + std::to_string(shift));
    }
    return Codec(detail::CaesarParams{shift});
  }

  static Codec bijection(const LetterTable& table) {
    std::array<bool, 26> seen{};
    for (char c : table) {
      if (!text::is_lower(c)) throw ConfigError("bijection table values must be lowercase letters");
      if (seen[static_cast<std::size_t>(c - 'a')]) {
        throw ConfigError(std::string("bijection table is not a permutation: '") + c + "' repeated");
      }
      seen[static_cast<std::size_t>(c - 'a')] = true;
    }
    return Codec(detail::BijectionParams{table});
  }

  static Codec bijection(const std::map<char, char>& mapping) {
    if (mapping.size() != 26) throw ConfigError("bijection table must have exactly 26 entries");
    LetterTable table{};
    for (auto [k, v] : mapping) {
      if (!text::is_lower(k)) throw ConfigError("bijection table keys must be lowercase letters");
      table[static_cast<std::size_t>(k - 'a')] = v;
    }
    return bijection(table);
  }

  static Codec number(std::string separator = " ", int radix = 10) {
    return Codec(validated_number(std::move(separator), radix, false));
  }

  static Codec alias(std::vector<AliasPair> word_map) {
    if (word_map.empty()) throw ConfigError("alias map must not be empty");
    for (std::size_t i = 0; i < word_map.size(); ++i) {
      if (word_map[i].phrase.empty() || word_map[i].alias.empty()) {
        throw ConfigError("alias phrases and aliases must be non-empty");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (text::iequals(word_map[i].phrase, word_map[j].phrase)) {
          throw ConfigError("duplicate alias phrase: " + word_map[i].phrase);
        }
      }
    }
    return Codec(detail::AliasParams{std::move(word_map)});
  }

  static Codec composite(std::vector<Codec> parts);

  static LetterTable shift_table(int shift) {
    LetterTable t{};
    for (int i = 0; i < 26; ++i) t[static_cast<std::size_t>(i)] = static_cast<char>('a' + (i + shift % 26 + 26) % 26);
    return t;
  }

  Scheme scheme() const noexcept { return static_cast<Scheme>(params_.index()); }

  int shift() const { return get<detail::CaesarParams>("shift").shift; }
  const LetterTable& table() const { return get<detail::BijectionParams>("table").table; }
  const std::string& separator() const { return get<detail::NumberParams>("separator").separator; }
  int radix() const { return get<detail::NumberParams>("radix").radix; }
  bool parses_numbers() const { return get<detail::NumberParams>("inverse").inverse; }
  const std::vector<AliasPair>& word_map() const { return get<detail::AliasParams>("word_map").word_map; }
  const std::vector<Codec>& parts() const { return get<detail::CompositeParams>("parts").parts; }

  // Nesting depth: 0 for leaf schemes, 1 + deepest part for composites.
  int depth() const;

  // True for schemes that substitute ASCII letters one-for-one.
  bool is_letter_substitution() const;

  // Short label such as "caesar(1)" for reports and logs.
  std::string name() const;

  bool operator==(const Codec& other) const { return params_ == other.params_; }

 private:
  using Params = std::variant<detail::CaesarParams, detail::BijectionParams, detail::NumberParams,
                              detail::AliasParams, detail::CompositeParams>;

  explicit Codec(Params p) : params_(std::move(p)) {}

  static detail::NumberParams validated_number(std::string separator, int radix, bool inverse) {
    if (radix < 2 || radix > 16) throw ConfigError("number radix must be in [2, 16]");
    if (separator.empty()) throw ConfigError("number separator must not be empty");
    for (char c : separator) {
      if (text::is_alpha(c) || text::is_digit(c)) {
        throw ConfigError("number separator must not contain letters or digits");
      }
    }
    return {std::move(separator), radix, inverse};
  }

  template <typename P>
  const P& get(const char* field) const {
    if (const auto* p = std::get_if<P>(&params_)) return *p;
    throw ConfigError(std::string("codec field '") + field + "' not available for scheme " +
                      std::string(scheme_name(scheme())));
  }

  friend Codec invert(const Codec& codec);

  Params params_;
};

inline bool detail::CompositeParams::operator==(const CompositeParams& other) const {
  return parts == other.parts;
}

inline Codec Codec::composite(std::vector<Codec> parts) {
  if (parts.empty()) throw ConfigError("composite codec needs at least one part");
  Codec c(detail::CompositeParams{std::move(parts)});
  if (c.depth() > kMaxCompositeDepth) {
    throw ConfigError("composite nesting exceeds depth " + std::to_string(kMaxCompositeDepth));
  }
  return c;
}

inline int Codec::depth() const {
  if (scheme() != Scheme::Composite) return 0;
  int deepest = 0;
  for (const auto& p : parts()) deepest = std::max(deepest, p.depth());
  return deepest + 1;
}

inline bool Codec::is_letter_substitution() const {
  switch (scheme()) {
    case Scheme::Caesar:
    case Scheme::Bijection:
      return true;
    case Scheme::Composite:
      return std::all_of(parts().begin(), parts().end(),
                         [](const Codec& p) { return p.is_letter_substitution(); });
    default:
      return false;
  }
}

inline std::string Codec::name() const {
  switch (scheme()) {
    case Scheme::Caesar:
      return "caesar(" + std::to_string(shift()) + ")";
    case Scheme::Bijection:
      return "bijection(" + std::string(table().begin(), table().end()) + ")";
    case Scheme::Number:
      return std::string(parses_numbers() ? "number-inverse(" : "number(") + "radix " +
             std::to_string(radix()) + ")";
    case Scheme::Alias:
      return "alias(" + std::to_string(word_map().size()) + " phrases)";
    case Scheme::Composite: {
      std::string out = "composite[";
      for (std::size_t i = 0; i < parts().size(); ++i) {
        if (i) out += ",";
        out += parts()[i].name();
      }
      return out + "]";
    }
  }
  return "unknown";
}

namespace detail {

inline std::string substitute(std::string_view input, const LetterTable& table) {
  std::string out(input);
  for (char& c : out) {
    if (text::is_lower(c)) {
      c = table[static_cast<std::size_t>(c - 'a')];
    } else if (text::is_upper(c)) {
      c = static_cast<char>(table[static_cast<std::size_t>(c - 'A')] - 'a' + 'A');
    }
  }
  return out;
}

inline LetterTable inverse_table(const LetterTable& table) {
  LetterTable inv{};
  for (std::size_t i = 0; i < 26; ++i) inv[static_cast<std::size_t>(table[i] - 'a')] = static_cast<char>('a' + i);
  return inv;
}

inline std::string to_radix(std::uint32_t v, int radix) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(kDigits[v % static_cast<std::uint32_t>(radix)]);
    v /= static_cast<std::uint32_t>(radix);
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// Parses one number-list token. Returns false on malformed or out-of-range input.
inline bool parse_code_point(std::string_view token, int radix, char32_t& out) {
  if (token.empty() || token.size() > 24) return false;
  std::uint64_t v = 0;
  for (char c : token) {
    int d = -1;
    if (text::is_digit(c)) d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    if (d < 0 || d >= radix) return false;
    v = v * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(d);
    if (v > text::kMaxCodePoint) return false;
  }
  if (!text::is_valid_code_point(v)) return false;
  out = static_cast<char32_t>(v);
  return true;
}

inline std::string numbers_from_text(std::string_view input, const NumberParams& p) {
  std::string out;
  bool first = true;
  for (char32_t cp : text::to_code_points(input)) {
    if (!first) out += p.separator;
    out += to_radix(static_cast<std::uint32_t>(cp), p.radix);
    first = false;
  }
  return out;
}

struct NumberParse {
  std::string text;
  std::size_t bad_bytes = 0;
};

// Splits on the separator, tolerating whitespace around tokens. In strict mode
// the first malformed token throws; otherwise malformed tokens are dropped and
// counted.
inline NumberParse text_from_numbers(std::string_view input, const NumberParams& p, bool strict) {
  NumberParse result;
  if (text::trim(input).empty()) {
    result.bad_bytes = 0;
    return result;
  }
  std::size_t offset = 0;
  for (std::string_view raw : text::split(input, p.separator)) {
    std::string_view token = text::trim(raw);
    std::size_t token_offset = offset + static_cast<std::size_t>(token.data() - raw.data());
    char32_t cp = 0;
    if (parse_code_point(token, p.radix, cp)) {
      text::append_utf8(result.text, cp);
    } else if (strict) {
      throw DecodeError(token.empty() ? "empty number token" : "invalid code point token '" + std::string(token) + "'",
                        token_offset);
    } else {
      result.bad_bytes += raw.size();
    }
    offset += raw.size() + p.separator.size();
  }
  return result;
}

// Longest-phrase-first, case-insensitive, whole-word replacement.
inline std::string replace_phrases(std::string_view input,
                                   const std::vector<std::pair<std::string, std::string>>& rules) {
  std::vector<std::size_t> order(rules.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rules[a].first.size() > rules[b].first.size();
  });
  std::string out;
  out.reserve(input.size());
  std::size_t i = 0;
  while (i < input.size()) {
    bool replaced = false;
    for (std::size_t idx : order) {
      const auto& [from, to] = rules[idx];
      if (i + from.size() > input.size()) continue;
      if (!text::iequals(input.substr(i, from.size()), from)) continue;
      bool left_ok = i == 0 || !text::is_word_byte(input[i - 1]) || !text::is_word_byte(from.front());
      std::size_t end = i + from.size();
      bool right_ok = end == input.size() || !text::is_word_byte(input[end]) || !text::is_word_byte(from.back());
      if (!left_ok || !right_ok) continue;
      out += to;
      i = end;
      replaced = true;
      break;
    }
    if (!replaced) out.push_back(input[i++]);
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> alias_rules(const std::vector<AliasPair>& map,
                                                                    bool reverse) {
  std::vector<std::pair<std::string, std::string>> rules;
  rules.reserve(map.size());
  for (const auto& p : map) {
    if (reverse) rules.emplace_back(p.alias, p.phrase);
    else rules.emplace_back(p.phrase, p.alias);
  }
  return rules;
}

inline void require_injective_aliases(const std::vector<AliasPair>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (text::iequals(map[i].alias, map[j].alias)) {
        throw NonInvertibleError("alias '" + map[i].alias + "' is shared by '" + map[j].phrase + "' and '" +
                                 map[i].phrase + "'");
      }
    }
  }
}

}  // namespace detail

inline std::string encode(const Codec& codec, std::string_view input) {
  switch (codec.scheme()) {
    case Scheme::Caesar:
      return detail::substitute(input, Codec::shift_table(codec.shift()));
    case Scheme::Bijection:
      return detail::substitute(input, codec.table());
    case Scheme::Number: {
      detail::NumberParams p{codec.separator(), codec.radix(), codec.parses_numbers()};
      return p.inverse ? detail::text_from_numbers(input, p, true).text : detail::numbers_from_text(input, p);
    }
    case Scheme::Alias:
      return detail::replace_phrases(input, detail::alias_rules(codec.word_map(), false));
    case Scheme::Composite: {
      std::string cur(input);
      for (const auto& part : codec.parts()) cur = encode(part, cur);
      return cur;
    }
  }
  return std::string(input);
}

inline Codec invert(const Codec& codec) {
  switch (codec.scheme()) {
    case Scheme::Caesar:
      return Codec::caesar((26 - codec.shift()) % 26);
    case Scheme::Bijection:
      return Codec::bijection(detail::inverse_table(codec.table()));
    case Scheme::Number:
      return Codec(Codec::validated_number(codec.separator(), codec.radix(), !codec.parses_numbers()));
    case Scheme::Alias: {
      detail::require_injective_aliases(codec.word_map());
      std::vector<AliasPair> swapped;
      for (const auto& p : codec.word_map()) swapped.push_back({p.alias, p.phrase});
      return Codec::alias(std::move(swapped));
    }
    case Scheme::Composite: {
      std::vector<Codec> parts;
      for (auto it = codec.parts().rbegin(); it != codec.parts().rend(); ++it) parts.push_back(invert(*it));
      return Codec::composite(std::move(parts));
    }
  }
  return codec;
}

inline std::string decode(const Codec& codec, std::string_view input) {
  switch (codec.scheme()) {
    case Scheme::Caesar:
    case Scheme::Bijection:
    case Scheme::Number:
      return encode(invert(codec), input);
    case Scheme::Alias:
      detail::require_injective_aliases(codec.word_map());
      return detail::replace_phrases(input, detail::alias_rules(codec.word_map(), true));
    case Scheme::Composite: {
      std::string cur(input);
      for (auto it = codec.parts().rbegin(); it != codec.parts().rend(); ++it) cur = decode(*it, cur);
      return cur;
    }
  }
  return std::string(input);
}

struct LenientDecode {
  std::string text;
  // Fraction of input bytes that decoded without error, in [0, 1].
  double decoded_fraction = 1.0;
};

// Best-effort decode for model output: malformed number tokens are dropped
// instead of failing the whole text.
inline LenientDecode decode_lenient(const Codec& codec, std::string_view input) {
  switch (codec.scheme()) {
    case Scheme::Number: {
      detail::NumberParams p{codec.separator(), codec.radix(), codec.parses_numbers()};
      if (p.inverse) {
        if (!text::is_valid_utf8(input)) return {"", 0.0};
        return {detail::numbers_from_text(input, p), 1.0};
      }
      auto parsed = detail::text_from_numbers(input, p, false);
      double frac = input.empty() ? 1.0 : 1.0 - static_cast<double>(parsed.bad_bytes) / static_cast<double>(input.size());
      return {std::move(parsed.text), std::clamp(frac, 0.0, 1.0)};
    }
    case Scheme::Composite: {
      LenientDecode cur{std::string(input), 1.0};
      for (auto it = codec.parts().rbegin(); it != codec.parts().rend(); ++it) {
        auto step = decode_lenient(*it, cur.text);
        cur.text = std::move(step.text);
        cur.decoded_fraction = std::min(cur.decoded_fraction, step.decoded_fraction);
      }
      return cur;
    }
    default:
      try {
        return {decode(codec, input), 1.0};
      } catch (const std::exception&) {
        return {"", 0.0};
      }
  }
}

// ---------------------------------------------------------------------------
// JSON serialization: {"scheme": "...", params...}

inline nlohmann::json to_json(const Codec& codec) {
  using nlohmann::json;
  json j;
  j["scheme"] = scheme_name(codec.scheme());
  switch (codec.scheme()) {
    case Scheme::Caesar:
      j["shift"] = codec.shift();
      break;
    case Scheme::Bijection: {
      json table = json::object();
      for (std::size_t i = 0; i < 26; ++i) {
        table[std::string(1, static_cast<char>('a' + i))] = std::string(1, codec.table()[i]);
      }
      j["table"] = std::move(table);
      break;
    }
    case Scheme::Number:
      j["separator"] = codec.separator();
      j["radix"] = codec.radix();
      if (codec.parses_numbers()) j["inverse"] = true;
      break;
    case Scheme::Alias: {
      json map = json::array();
      for (const auto& p : codec.word_map()) map.push_back({{"phrase", p.phrase}, {"alias", p.alias}});
      j["word_map"] = std::move(map);
      break;
    }
    case Scheme::Composite: {
      json parts = json::array();
      for (const auto& p : codec.parts()) parts.push_back(to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
  }
  return j;
}

inline Codec codec_from_json(const nlohmann::json& j, int depth = 0) {
  if (!j.is_object() || !j.contains("scheme") || !j["scheme"].is_string()) {
    throw ConfigError("codec JSON must be an object with a string \"scheme\"");
  }
  if (depth > Codec::kMaxCompositeDepth) throw ConfigError("codec JSON nested too deeply");
  const std::string scheme = j["scheme"].get<std::string>();
  try {
    if (scheme == "caesar") {
      return Codec::caesar(j.at("shift").get<int>());
    }
    if (scheme == "bijection") {
      const auto& t = j.at("table");
      std::map<char, char> mapping;
      for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string v = it.value().get<std::string>();
        if (it.key().size() != 1 || v.size() != 1) throw ConfigError("bijection entries must be single letters");
        if (!mapping.emplace(it.key()[0], v[0]).second) throw ConfigError("duplicate bijection key");
      }
      return Codec::bijection(mapping);
    }
    if (scheme == "number") {
      Codec c = Codec::number(j.value("separator", std::string(" ")), j.value("radix", 10));
      return j.value("inverse", false) ? invert(c) : c;
    }
    if (scheme == "alias") {
      std::vector<AliasPair> pairs;
      for (const auto& e : j.at("word_map")) {
        if (e.is_array() && e.size() == 2) {
          pairs.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
        } else {
          pairs.push_back({e.at("phrase").get<std::string>(), e.at("alias").get<std::string>()});
        }
      }
      return Codec::alias(std::move(pairs));
    }
    if (scheme == "composite") {
      std::vector<Codec> parts;
      for (const auto& p : j.at("parts")) parts.push_back(codec_from_json(p, depth + 1));
      return Codec::composite(std::move(parts));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed " + scheme + " codec: " + e.what());
  }
  throw ConfigError("unknown codec scheme: " + scheme);
}

// Accepts inline JSON (first non-space character '{') or a path to a JSON file.
inline nlohmann::json load_json_arg(std::string_view file_or_json) {
  std::string_view trimmed = text::trim(file_or_json);
  std::string content;
  if (!trimmed.empty() && (trimmed.front() == '{' || trimmed.front() == '[')) {
    content = std::string(trimmed);
  } else {
    std::ifstream in{std::string(trimmed)};
    if (!in) throw ConfigError("cannot open " + std::string(trimmed));
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  try {
    return nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("invalid JSON in " + std::string(trimmed.substr(0, 64)) + ": " + e.what());
  }
}

inline Codec load_codec(std::string_view file_or_json) { return codec_from_json(load_json_arg(file_or_json)); }

}  // namespace imp
