#pragma once

// Sends conversation scripts to chat-completions endpoints (or the built-in
// mock) and records transcripts.
//
// Each conversation is sequential; run_scripts() fans independent scripts
// out over at most `max_in_flight` workers per endpoint.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "imp/attack.hpp"
#include "imp/codec.hpp"
#include "imp/errors.hpp"
#include "imp/text.hpp"

namespace imp {

struct ChatMessage {
  std::string role;
  std::string content;
};

using ChatFunction = std::function<std::string(const std::vector<ChatMessage>&)>;

// ---------------------------------------------------------------------------
// Mock model

// How the mock reacts to a prompt it can only read after decoding.
enum class EncodedBehavior {
  Garble,              // cannot decode: replies with ciphertext of nonsense
  DecodeThenModerate,  // decodes, refuses flagged content, answers the rest
  DecodeAndAnswer,     // decodes and answers everything
};

inline std::string_view behavior_name(EncodedBehavior b) {
  switch (b) {
    case EncodedBehavior::Garble: return "garble";
    case EncodedBehavior::DecodeThenModerate: return "decode_refuse";
    case EncodedBehavior::DecodeAndAnswer: return "decode_answer";
  }
  return "unknown";
}

inline EncodedBehavior parse_behavior(std::string_view s) {
  if (s == "garble") return EncodedBehavior::Garble;
  if (s == "decode_refuse") return EncodedBehavior::DecodeThenModerate;
  if (s == "decode_answer") return EncodedBehavior::DecodeAndAnswer;
  throw ConfigError("unknown mock encoded_behavior: " + std::string(s));
}

struct MockAnswer {
  std::string match;  // case-insensitive substring of the question
  std::string answer;
};

struct MockConfig {
  std::vector<std::string> refuse_patterns;
  std::vector<MockAnswer> answers;
  std::optional<Codec> codec;
  EncodedBehavior encoded_behavior = EncodedBehavior::DecodeAndAnswer;
  std::string refusal = "I can't assist with that.";
  std::string filler = "Hello, World!";
  std::string garble = "qzxv jkqw vvxq zqxj";
};

// Deterministic stand-in for a chat model: a pure function of the last user
// message.
class MockModel {
 public:
  explicit MockModel(MockConfig config) : config_(std::move(config)) {}

  std::string respond(const std::vector<ChatMessage>& messages) const {
    const std::string* last = nullptr;
    for (const auto& m : messages) {
      if (m.role == "user") last = &m.content;
    }
    if (!last) return config_.filler;
    if (matches_refusal(*last)) return config_.refusal;
    if (const auto* a = lookup(*last)) return a->answer;
    if (!config_.codec) return config_.filler;

    const Codec& codec = *config_.codec;
    if (config_.encoded_behavior == EncodedBehavior::Garble) return encode(codec, config_.garble);
    const std::string decoded = decode_lenient(codec, *last).text;
    if (config_.encoded_behavior == EncodedBehavior::DecodeThenModerate && matches_refusal(decoded)) {
      return config_.refusal;
    }
    const auto* a = lookup(decoded);
    return encode(codec, a ? a->answer : config_.filler);
  }

  const MockConfig& config() const { return config_; }

 private:
  bool matches_refusal(std::string_view s) const {
    for (const auto& p : config_.refuse_patterns) {
      if (text::ifind(s, p) != std::string_view::npos) return true;
    }
    return false;
  }

  const MockAnswer* lookup(std::string_view s) const {
    for (const auto& a : config_.answers) {
      if (text::ifind(s, a.match) != std::string_view::npos) return &a;
    }
    return nullptr;
  }

  MockConfig config_;
};

inline MockConfig mock_config_from_json(const nlohmann::json& j) {
  MockConfig m;
  try {
    m.refuse_patterns = j.value("refuse_patterns", std::vector<std::string>{});
    for (const auto& a : j.value("answers", nlohmann::json::array())) {
      m.answers.push_back({a.at("match").get<std::string>(), a.at("answer").get<std::string>()});
    }
    if (j.contains("codec")) m.codec = codec_from_json(j["codec"]);
    if (j.contains("encoded_behavior")) m.encoded_behavior = parse_behavior(j["encoded_behavior"].get<std::string>());
    m.refusal = j.value("refusal", m.refusal);
    m.filler = j.value("filler", m.filler);
    m.garble = j.value("garble", m.garble);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed mock config: ") + e.what());
  }
  return m;
}

inline nlohmann::json to_json(const MockConfig& m) {
  nlohmann::json answers = nlohmann::json::array();
  for (const auto& a : m.answers) answers.push_back({{"match", a.match}, {"answer", a.answer}});
  nlohmann::json j = {{"refuse_patterns", m.refuse_patterns},
                      {"answers", std::move(answers)},
                      {"encoded_behavior", behavior_name(m.encoded_behavior)},
                      {"refusal", m.refusal},
                      {"filler", m.filler},
                      {"garble", m.garble}};
  if (m.codec) j["codec"] = to_json(*m.codec);
  return j;
}

// ---------------------------------------------------------------------------
// Endpoints

struct ModelEndpoint {
  std::string name = "default";
  std::string base_url;
  std::string model_id;
  std::string key_env;
  double temperature = 0.1;
  double top_p = 0.1;
  int max_in_flight = 4;
  double timeout_s = 60.0;
  int max_retries = 3;
  int backoff_ms = 500;
  std::string system_prompt = "You are a helpful assistant";
  std::string path = "/chat/completions";
  nlohmann::json extra_body = nlohmann::json::object();
  std::optional<MockConfig> mock;

  bool is_mock() const { return base_url.rfind("mock://", 0) == 0; }

  void validate() const {
    static const std::regex kAbsolute(R"(^[A-Za-z][A-Za-z0-9+.-]*://[^/\s]+.*$)");
    if (name.empty()) throw ConfigError("endpoint name must not be empty");
    if (!std::regex_match(base_url, kAbsolute)) throw ConfigError("endpoint base_url must be absolute: " + base_url);
    if (!(temperature >= 0.0)) throw ConfigError("temperature must be >= 0");
    if (!(top_p > 0.0 && top_p <= 1.0)) throw ConfigError("top_p must be in (0, 1]");
    if (max_in_flight < 1) throw ConfigError("max_in_flight must be positive");
    if (!(timeout_s > 0.0)) throw ConfigError("timeout must be positive");
    if (max_retries < 0) throw ConfigError("max_retries must be >= 0");
    if (is_mock()) {
      if (!mock) throw ConfigError("mock endpoint " + name + " has no mock rules");
    } else if (key_env.empty()) {
      throw ConfigError("endpoint " + name + " needs key_env");
    }
  }
};

// Builds a local endpoint answering from a rule table.
inline ModelEndpoint mock_responder(MockConfig rules, std::string name = "mock") {
  ModelEndpoint e;
  e.name = name;
  e.base_url = "mock://" + name;
  e.model_id = "mock";
  e.mock = std::move(rules);
  e.backoff_ms = 0;
  return e;
}

inline ModelEndpoint endpoint_from_json(const nlohmann::json& j) {
  ModelEndpoint e;
  try {
    e.name = j.value("name", e.name);
    e.base_url = j.at("base_url").get<std::string>();
    e.model_id = j.value("model_id", e.model_id);
    e.key_env = j.value("key_env", e.key_env);
    e.temperature = j.value("temperature", e.temperature);
    e.top_p = j.value("top_p", e.top_p);
    e.max_in_flight = j.value("max_in_flight", e.max_in_flight);
    e.timeout_s = j.value("timeout_s", e.timeout_s);
    e.max_retries = j.value("max_retries", e.max_retries);
    e.backoff_ms = j.value("backoff_ms", e.backoff_ms);
    e.system_prompt = j.value("system_prompt", e.system_prompt);
    e.path = j.value("path", e.path);
    if (j.contains("extra_body")) e.extra_body = j["extra_body"];
    if (j.contains("mock")) e.mock = mock_config_from_json(j["mock"]);
  } catch (const nlohmann::json::exception& e2) {
    throw ConfigError(std::string("malformed endpoint config: ") + e2.what());
  }
  e.validate();
  return e;
}

inline nlohmann::json to_json(const ModelEndpoint& e) {
  nlohmann::json j = {{"name", e.name},           {"base_url", e.base_url},   {"model_id", e.model_id},
                      {"key_env", e.key_env},     {"temperature", e.temperature}, {"top_p", e.top_p},
                      {"max_in_flight", e.max_in_flight}, {"timeout_s", e.timeout_s},
                      {"max_retries", e.max_retries}, {"backoff_ms", e.backoff_ms},
                      {"system_prompt", e.system_prompt}, {"path", e.path}, {"extra_body", e.extra_body}};
  if (e.mock) j["mock"] = to_json(*e.mock);
  return j;
}

inline std::string resolve_credential(const ModelEndpoint& e) {
  if (e.is_mock()) return {};
  const char* v = std::getenv(e.key_env.c_str());
  if (!v || !*v) throw ConfigError("credential variable " + e.key_env + " is not set for endpoint " + e.name);
  return v;
}

// ---------------------------------------------------------------------------
// Backends

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  // Throws TransportError (or TimeoutError) on failure.
  virtual std::string complete(const std::vector<ChatMessage>& messages) = 0;
  // Secret values that must never reach transcripts or logs.
  virtual std::vector<std::string> secrets() const { return {}; }
};

class MockBackend : public ChatBackend {
 public:
  explicit MockBackend(MockConfig config) : model_(std::move(config)) {}
  std::string complete(const std::vector<ChatMessage>& messages) override { return model_.respond(messages); }

 private:
  MockModel model_;
};

// Adapts any callable, e.g. a test double or an in-process model.
class FunctionBackend : public ChatBackend {
 public:
  explicit FunctionBackend(ChatFunction fn) : fn_(std::move(fn)) {}
  std::string complete(const std::vector<ChatMessage>& messages) override { return fn_(messages); }

 private:
  ChatFunction fn_;
};

// OpenAI-style POST {base_url}/chat/completions.
class HttpChatBackend : public ChatBackend {
 public:
  HttpChatBackend(ModelEndpoint endpoint, std::string credential)
      : endpoint_(std::move(endpoint)), credential_(std::move(credential)) {
    static const std::regex kUrl(R"(^([A-Za-z][A-Za-z0-9+.-]*://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(endpoint_.base_url, m, kUrl)) throw ConfigError("bad base_url " + endpoint_.base_url);
    origin_ = m[1].str();
    std::string prefix = m[2].matched ? m[2].str() : "";
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    request_path_ = prefix + endpoint_.path;
  }

  static nlohmann::json request_body(const ModelEndpoint& e, const std::vector<ChatMessage>& messages) {
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
    nlohmann::json body = {{"model", e.model_id}, {"messages", std::move(msgs)},
                           {"temperature", e.temperature}, {"top_p", e.top_p}};
    if (e.extra_body.is_object()) body.update(e.extra_body);
    return body;
  }

  std::string complete(const std::vector<ChatMessage>& messages) override {
    httplib::Client client(origin_);
    const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::duration<double>(endpoint_.timeout_s));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (!credential_.empty()) headers.emplace("Authorization", "Bearer " + credential_);

    const auto started = std::chrono::steady_clock::now();
    auto res = client.Post(request_path_, headers, request_body(endpoint_, messages).dump(), "application/json");
    if (!res) {
      const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      if (res.error() == httplib::Error::ConnectionTimeout ||
          (res.error() == httplib::Error::Read && elapsed >= 0.9 * endpoint_.timeout_s)) {
        throw TimeoutError("request to " + endpoint_.name + " timed out");
      }
      throw TransportError("request to " + endpoint_.name + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status == 429 || res->status >= 500) {
      throw TransportError("endpoint " + endpoint_.name + " returned HTTP " + std::to_string(res->status));
    }
    if (res->status < 200 || res->status >= 300) {
      throw TransportError("endpoint " + endpoint_.name + " returned HTTP " + std::to_string(res->status), false);
    }
    try {
      auto j = nlohmann::json::parse(res->body);
      const auto& content = j.at("choices").at(0).at("message").at("content");
      return content.is_null() ? std::string() : content.get<std::string>();
    } catch (const nlohmann::json::exception&) {
      throw TransportError("endpoint " + endpoint_.name + " returned a malformed completion", false);
    }
  }

  std::vector<std::string> secrets() const override {
    return credential_.empty() ? std::vector<std::string>{} : std::vector<std::string>{credential_};
  }

 private:
  ModelEndpoint endpoint_;
  std::string credential_;
  std::string origin_;
  std::string request_path_;
};

// Resolves credentials eagerly: a missing key fails here, before any request.
inline std::unique_ptr<ChatBackend> make_backend(const ModelEndpoint& e) {
  e.validate();
  if (e.is_mock()) return std::make_unique<MockBackend>(*e.mock);
  return std::make_unique<HttpChatBackend>(e, resolve_credential(e));
}

// ---------------------------------------------------------------------------
// Transcripts

enum class TranscriptStatus { Complete, TransportError, Timeout };

inline std::string_view status_name(TranscriptStatus s) {
  switch (s) {
    case TranscriptStatus::Complete: return "complete";
    case TranscriptStatus::TransportError: return "transport_error";
    case TranscriptStatus::Timeout: return "timeout";
  }
  return "unknown";
}

inline TranscriptStatus parse_status(std::string_view s) {
  if (s == "complete") return TranscriptStatus::Complete;
  if (s == "transport_error") return TranscriptStatus::TransportError;
  if (s == "timeout") return TranscriptStatus::Timeout;
  throw ConfigError("unknown transcript status: " + std::string(s));
}

struct TranscriptTurn {
  std::string role;
  std::string raw_text;
  std::optional<std::string> decoded_text;
  std::string timestamp;
};

struct Transcript {
  std::string script_ref;
  std::string endpoint_ref;
  std::vector<TranscriptTurn> turns;
  TranscriptStatus status = TranscriptStatus::Complete;
  std::string error;

  const TranscriptTurn* last_assistant() const {
    for (auto it = turns.rbegin(); it != turns.rend(); ++it) {
      if (it->role == "assistant") return &*it;
    }
    return nullptr;
  }
};

inline std::string scrub(std::string s, const std::vector<std::string>& secrets) {
  for (const auto& secret : secrets) {
    if (secret.empty()) continue;
    for (auto pos = s.find(secret); pos != std::string::npos; pos = s.find(secret, pos)) {
      s.replace(pos, secret.size(), "[REDACTED]");
      pos += 10;
    }
  }
  return s;
}

inline nlohmann::json turn_line(const Transcript& t, std::size_t index, const std::vector<std::string>& secrets) {
  const auto& turn = t.turns[index];
  return {{"script_ref", t.script_ref},
          {"endpoint_ref", t.endpoint_ref},
          {"turn_index", index},
          {"role", turn.role},
          {"raw_text", scrub(turn.raw_text, secrets)},
          {"decoded_text", turn.decoded_text ? nlohmann::json(scrub(*turn.decoded_text, secrets)) : nlohmann::json()},
          {"ts", turn.timestamp},
          {"status", "complete"}};
}

// Closing line for a transcript; role "status" marks it as a non-turn record.
inline nlohmann::json status_line(const Transcript& t, const std::string& ts, const std::vector<std::string>& secrets) {
  return {{"script_ref", t.script_ref},
          {"endpoint_ref", t.endpoint_ref},
          {"turn_index", t.turns.size()},
          {"role", "status"},
          {"raw_text", scrub(t.error, secrets)},
          {"decoded_text", nlohmann::json()},
          {"ts", ts},
          {"status", status_name(t.status)}};
}

// Append-only JSONL sink, flushed after every line. One writer per file.
class TranscriptWriter {
 public:
  explicit TranscriptWriter(const std::string& path, std::vector<std::string> secrets = {})
      : out_(path, std::ios::app), secrets_(std::move(secrets)) {
    if (!out_) throw ConfigError("cannot open transcript file " + path);
  }

  void add_secrets(const std::vector<std::string>& more) {
    std::lock_guard<std::mutex> lock(mu_);
    secrets_.insert(secrets_.end(), more.begin(), more.end());
  }

  void write_turn(const Transcript& t, std::size_t index) { write(turn_line(t, index, secrets_)); }
  void write_status(const Transcript& t, const std::string& ts) { write(status_line(t, ts, secrets_)); }

  void write_all(const Transcript& t) {
    for (std::size_t i = 0; i < t.turns.size(); ++i) write_turn(t, i);
    write_status(t, t.turns.empty() ? std::string() : t.turns.back().timestamp);
  }

 private:
  void write(const nlohmann::json& line) {
    std::lock_guard<std::mutex> lock(mu_);
    out_ << line.dump() << '\n';
    out_.flush();
  }

  std::mutex mu_;
  std::ofstream out_;
  std::vector<std::string> secrets_;
};

// Reads transcripts back from JSONL; lines are grouped by (script_ref, endpoint_ref)
// in first-seen order. A transcript without a closing status line is incomplete.
inline std::vector<Transcript> load_transcripts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open transcript file " + path);
  std::vector<Transcript> out;
  std::vector<bool> closed;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": invalid JSON");
    }
    const std::string script = j.value("script_ref", "");
    const std::string endpoint = j.value("endpoint_ref", "");
    std::size_t idx = out.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].script_ref == script && out[i].endpoint_ref == endpoint) idx = i;
    }
    if (idx == out.size()) {
      out.push_back({script, endpoint, {}, TranscriptStatus::Complete, {}});
      closed.push_back(false);
    }
    Transcript& t = out[idx];
    if (j.value("role", "") == "status") {
      t.status = parse_status(j.value("status", "transport_error"));
      t.error = j.value("raw_text", "");
      closed[idx] = true;
      continue;
    }
    TranscriptTurn turn{j.value("role", ""), j.value("raw_text", ""), std::nullopt, j.value("ts", "")};
    if (j.contains("decoded_text") && j["decoded_text"].is_string()) turn.decoded_text = j["decoded_text"].get<std::string>();
    t.turns.push_back(std::move(turn));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!closed[i]) {
      out[i].status = TranscriptStatus::TransportError;
      out[i].error = "transcript truncated";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Running scripts

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::system_clock::to_time_t(now);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1,
                tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

struct RunOptions {
  std::function<std::string()> clock = utc_timestamp;
  std::function<void(std::chrono::milliseconds)> sleep = [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  TranscriptWriter* writer = nullptr;
};

inline std::optional<std::string> try_strict_decode(const Codec& codec, std::string_view s) {
  try {
    return decode(codec, s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Plays the script turn by turn. Transport failures are retried with
// exponential backoff; when retries run out the transcript keeps every
// completed turn and records the failure status.
inline Transcript run_script(const ModelEndpoint& endpoint, const ConversationScript& script, ChatBackend& backend,
                             const RunOptions& options = {}) {
  Transcript t{script.id, endpoint.name, {}, TranscriptStatus::Complete, {}};
  if (options.writer) options.writer->add_secrets(backend.secrets());
  std::vector<ChatMessage> messages;
  if (!endpoint.system_prompt.empty()) messages.push_back({"system", endpoint.system_prompt});

  for (const auto& turn : script.turns) {
    messages.push_back({"user", turn.body});
    std::optional<std::string> reply;
    for (int attempt = 0; attempt <= endpoint.max_retries && !reply; ++attempt) {
      if (attempt > 0) options.sleep(std::chrono::milliseconds(static_cast<long long>(endpoint.backoff_ms) << (attempt - 1)));
      try {
        reply = backend.complete(messages);
      } catch (const TimeoutError& e) {
        t.status = TranscriptStatus::Timeout;
        t.error = e.what();
      } catch (const TransportError& e) {
        t.status = TranscriptStatus::TransportError;
        t.error = e.what();
        if (!e.retryable()) break;
      }
    }
    if (!reply) break;
    t.status = TranscriptStatus::Complete;
    t.error.clear();

    t.turns.push_back({"user", turn.body, turn.encoded ? std::optional<std::string>(turn.plaintext) : std::nullopt,
                       options.clock()});
    if (options.writer) options.writer->write_turn(t, t.turns.size() - 1);
    t.turns.push_back({"assistant", *reply, try_strict_decode(script.codec, *reply), options.clock()});
    if (options.writer) options.writer->write_turn(t, t.turns.size() - 1);
    messages.push_back({"assistant", *reply});
  }
  t.error = scrub(t.error, backend.secrets());
  if (options.writer) options.writer->write_status(t, options.clock());
  return t;
}

inline Transcript run_script(const ModelEndpoint& endpoint, const ConversationScript& script,
                             const RunOptions& options = {}) {
  auto backend = make_backend(endpoint);
  return run_script(endpoint, script, *backend, options);
}

using BackendFactory = std::function<std::unique_ptr<ChatBackend>()>;
using WriterFactory = std::function<TranscriptWriter*(const ConversationScript&)>;

// Runs independent scripts on up to endpoint.max_in_flight worker threads.
// Results keep the order of `scripts`.
inline std::vector<Transcript> run_scripts(const ModelEndpoint& endpoint, const std::vector<ConversationScript>& scripts,
                                           const BackendFactory& factory, const RunOptions& options = {},
                                           const WriterFactory& writers = {}) {
  std::vector<Transcript> results(scripts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      auto backend = factory();
      for (std::size_t i = next++; i < scripts.size(); i = next++) {
        RunOptions local = options;
        if (writers) local.writer = writers(scripts[i]);
        results[i] = run_script(endpoint, scripts[i], *backend, local);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(endpoint.max_in_flight), scripts.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  if (n > 0) worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

inline std::vector<Transcript> run_scripts(const ModelEndpoint& endpoint, const std::vector<ConversationScript>& scripts,
                                           const RunOptions& options = {}, const WriterFactory& writers = {}) {
  (void)resolve_credential(endpoint);
  return run_scripts(endpoint, scripts, [&] { return make_backend(endpoint); }, options, writers);
}

}  // namespace imp
