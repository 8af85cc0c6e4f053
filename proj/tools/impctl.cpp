// Command-line front end.
//
//   impctl encode|decode --codec <file|json> [--text T]       (stdin otherwise)
//   impctl attack render --codec C --payload-file F [--template T] [--warmup W]... [--json]
//   impctl guard check --prompt-file F [--response-file F] [--codec-hints C]... [--thresholds T]
//   impctl guard serve [--host H] [--port P] [--thresholds T]
//   impctl campaign run --config F [--archive DIR]
//   impctl campaign report --archive DIR [--format csv|json]
//   impctl campaign compare --reports r1,r2,...
//
// Exit codes: 0 success, 1 configuration or input error, 2 transport-degraded campaign.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "imp/attack.hpp"
#include "imp/campaign.hpp"
#include "imp/codec.hpp"
#include "imp/guard.hpp"
#include "imp/guard_server.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfig = 1;
constexpr int kDegraded = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw imp::ConfigError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Reads all of stdin; one trailing newline is dropped so `echo hi | impctl encode` does what it looks like.
std::string read_stdin() {
  std::string s{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

imp::GuardOptions guard_options(const std::string& thresholds, const std::vector<std::string>& hints) {
  imp::GuardOptions o;
  if (!thresholds.empty()) o.thresholds = imp::thresholds_from_json(imp::load_json_arg(thresholds));
  for (const auto& h : hints) {
    const auto j = imp::load_json_arg(h);
    if (j.is_array()) {
      for (const auto& c : j) o.codec_hints.push_back(imp::codec_from_json(c));
    } else {
      o.codec_hints.push_back(imp::codec_from_json(j));
    }
  }
  return o;
}

imp::GuardServer* g_server = nullptr;

void stop_server(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encoding-attack toolkit: codecs, attack rendering, guard and campaigns"};
  app.require_subcommand(1);

  // codec
  std::string codec_arg, text_arg;
  auto* encode_cmd = app.add_subcommand("encode", "Encode text with a codec");
  auto* decode_cmd = app.add_subcommand("decode", "Decode text with a codec");
  for (auto* cmd : {encode_cmd, decode_cmd}) {
    cmd->add_option("--codec", codec_arg, "codec JSON file or inline JSON")->required();
    cmd->add_option("--text", text_arg, "input text (stdin when omitted)");
  }

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Attack scripts");
  attack_cmd->require_subcommand(1);
  auto* render_cmd = attack_cmd->add_subcommand("render", "Render an attack prompt");
  std::string template_arg, payload_file;
  std::vector<std::string> warmups;
  bool render_json = false;
  render_cmd->add_option("--codec", codec_arg, "codec JSON file or inline JSON")->required();
  render_cmd->add_option("--payload-file", payload_file, "file holding the payload")->required();
  render_cmd->add_option("--template", template_arg, "template JSON file or inline JSON");
  render_cmd->add_option("--warmup", warmups, "warm-up question (repeatable); renders a multi-turn script");
  render_cmd->add_flag("--json", render_json, "print the whole script as JSON");

  // guard
  auto* guard_cmd = app.add_subcommand("guard", "Decode-then-moderate guard");
  guard_cmd->require_subcommand(1);
  auto* check_cmd = guard_cmd->add_subcommand("check", "Check a prompt and optional response");
  std::string prompt_file, response_file, thresholds_arg;
  std::vector<std::string> hints;
  check_cmd->add_option("--prompt-file", prompt_file, "prompt text file")->required();
  check_cmd->add_option("--response-file", response_file, "model response text file");
  check_cmd->add_option("--codec-hints", hints, "extra codec to try (file or JSON, repeatable; arrays allowed)");
  check_cmd->add_option("--thresholds", thresholds_arg, "threshold JSON file or inline JSON");
  auto* serve_cmd = guard_cmd->add_subcommand("serve", "Serve the HTTP check endpoint");
  std::string host = "127.0.0.1";
  int port = 8088;
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port, 0 picks a free one");
  serve_cmd->add_option("--thresholds", thresholds_arg, "threshold JSON file or inline JSON");

  // campaign
  auto* campaign_cmd = app.add_subcommand("campaign", "Experiment campaigns");
  campaign_cmd->require_subcommand(1);
  auto* run_cmd = campaign_cmd->add_subcommand("run", "Run a campaign");
  std::string config_file, archive_dir, format = "json";
  std::vector<std::string> report_files;
  run_cmd->add_option("--config", config_file, "campaign JSON file")->required();
  run_cmd->add_option("--archive", archive_dir, "archive directory (overrides the config)");
  auto* report_cmd = campaign_cmd->add_subcommand("report", "Re-judge an archive and print its report");
  report_cmd->add_option("--archive", archive_dir, "archive directory")->required();
  report_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* compare_cmd = campaign_cmd->add_subcommand("compare", "Compare reports ordered by model capability");
  compare_cmd->add_option("--reports", report_files, "report JSON files, comma separated")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfig;
  }

  try {
    if (*encode_cmd || *decode_cmd) {
      const imp::Codec codec = imp::load_codec(codec_arg);
      const std::string input = encode_cmd->count("--text") || decode_cmd->count("--text") ? text_arg : read_stdin();
      std::cout << (*encode_cmd ? imp::encode(codec, input) : imp::decode(codec, input)) << "\n";
      return kOk;
    }

    if (*render_cmd) {
      const imp::Codec codec = imp::load_codec(codec_arg);
      const imp::AttackTemplate tmpl =
          template_arg.empty() ? imp::AttackTemplate{} : imp::template_from_json(imp::load_json_arg(template_arg));
      std::string payload = read_file(payload_file);
      while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r')) payload.pop_back();
      const auto script = warmups.empty() ? imp::render_attack(tmpl, codec, payload)
                                          : imp::render_warmup_script(codec, warmups, payload, tmpl);
      if (render_json) {
        std::cout << imp::to_json(script).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < script.turns.size(); ++i) {
          if (i) std::cout << "\n--- turn " << i + 1 << " ---\n";
          std::cout << script.turns[i].body << "\n";
        }
      }
      return kOk;
    }

    if (*check_cmd) {
      const auto options = guard_options(thresholds_arg, hints);
      std::optional<std::string> response;
      if (!response_file.empty()) response = read_file(response_file);
      const auto decision = imp::check(read_file(prompt_file), response, imp::default_moderator(), options);
      std::cout << imp::to_json(decision).dump(2) << "\n";
      return kOk;
    }

    if (*serve_cmd) {
      imp::GuardServer server(imp::default_moderator(), guard_options(thresholds_arg, {}));
      const int bound = server.bind(host, port);
      g_server = &server;
      std::signal(SIGINT, stop_server);
      std::signal(SIGTERM, stop_server);
      std::cout << "listening on " << host << ":" << bound << imp::kGuardCheckPath << std::endl;
      server.listen();
      return kOk;
    }

    if (*run_cmd) {
      imp::CampaignConfig config = imp::load_campaign_config(config_file);
      if (!archive_dir.empty()) config.archive_dir = archive_dir;
      const auto report = imp::run_campaign(config);
      std::cout << imp::report_json_text(report);
      std::cerr << "archive: " << config.archive_dir << "\n"
                << "cells attempted: " << report.totals.attempted()
                << ", availability failures: " << report.totals.availability_failures << "\n";
      return report.transport_degraded() ? kDegraded : kOk;
    }

    if (*report_cmd) {
      const auto report = imp::judge_archive(archive_dir, imp::default_moderator());
      std::cout << (format == "csv" ? imp::report_csv_text(report) : imp::report_json_text(report));
      return kOk;
    }

    if (*compare_cmd) {
      std::vector<imp::CampaignReport> reports;
      for (const auto& f : report_files) reports.push_back(imp::load_report(f));
      std::cout << imp::to_json(imp::compare_scaling(reports)).dump(2) << "\n";
      return kOk;
    }
  } catch (const imp::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
