#pragma once

// HTTP filter mode for proxy deployments: a single JSON endpoint
//
//   POST /v1/guard/check  {"prompt": "...", "response": "...", "codec_hints": [codec, ...]}
//
// answering with the verdict JSON. "response" and "codec_hints" are optional.

#include <string>
#include <utility>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "imp/guard.hpp"

namespace imp {

inline constexpr const char* kGuardCheckPath = "/v1/guard/check";

// Request handling without the transport; throws ConfigError on a bad request.
inline nlohmann::json handle_guard_request(const nlohmann::json& request, const ModerationHook& moderator,
                                           const GuardOptions& base) {
  if (!request.is_object() || !request.contains("prompt") || !request["prompt"].is_string()) {
    throw ConfigError("request needs a string field \"prompt\"");
  }
  std::optional<std::string> response;
  if (request.contains("response") && !request["response"].is_null()) {
    if (!request["response"].is_string()) throw ConfigError("\"response\" must be a string");
    response = request["response"].get<std::string>();
  }
  GuardOptions options = base;
  if (request.contains("codec_hints")) {
    if (!request["codec_hints"].is_array()) throw ConfigError("\"codec_hints\" must be an array");
    for (const auto& c : request["codec_hints"]) options.codec_hints.push_back(codec_from_json(c));
  }
  return to_json(check(request["prompt"].get<std::string>(), response, moderator, options));
}

class GuardServer {
 public:
  GuardServer(ModerationHook moderator, GuardOptions options)
      : moderator_(std::move(moderator)), options_(std::move(options)) {
    server_.Post(kGuardCheckPath, [this](const httplib::Request& req, httplib::Response& res) {
      nlohmann::json reply;
      try {
        reply = handle_guard_request(nlohmann::json::parse(req.body), moderator_, options_);
      } catch (const nlohmann::json::exception& e) {
        res.status = 400;
        reply = {{"error", std::string("invalid JSON: ") + e.what()}};
      } catch (const ConfigError& e) {
        res.status = 400;
        reply = {{"error", e.what()}};
      }
      res.set_content(reply.dump(), "application/json");
    });
    server_.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(R"({"status":"ok"})", "application/json");
    });
  }

  // Port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port) {
    if (port == 0) {
      port = server_.bind_to_any_port(host);
    } else if (!server_.bind_to_port(host, port)) {
      port = -1;
    }
    if (port < 0) throw ConfigError("cannot bind guard server to " + host);
    return port;
  }

  // Blocks until stop().
  void listen() { server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() { server_.wait_until_ready(); }

 private:
  ModerationHook moderator_;
  GuardOptions options_;
  httplib::Server server_;
};

}  // namespace imp
