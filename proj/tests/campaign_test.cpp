#include "imp/campaign.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "campaign_fixtures.hpp"
#include "test_support.hpp"

namespace imp {
namespace {

namespace fs = std::filesystem;
using namespace test_support;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CampaignRunOptions quiet() {
  CampaignRunOptions o;
  o.clock = fixed_clock;
  o.sleep = [](std::chrono::milliseconds) {};
  return o;
}

TEST(Campaign, MockTiersMatchAnalyticTable) {
  for (const auto& tier : tiers()) {
    const auto r = run_campaign(tier_config(tier, fresh_dir("tier")), quiet());
    EXPECT_TRUE(matches_table(r, expected_tier_table(tier.behavior))) << tier.name << "\n" << report_json_text(r);
  }
}

TEST(Campaign, CapableTierEncodedUnsafeArmIsAllSuccessfulImps) {
  const auto r = run_campaign(tier_config(tiers()[2], fresh_dir("tier3")), quiet());
  const auto* cell = r.find(r.endpoints[0], "caesar(1)", PromptClass::Unsafe);
  ASSERT_NE(cell, nullptr);
  EXPECT_EQ(cell->counts[Label::InDomainUnsafe], 10u);
  EXPECT_EQ(cell->counts.successful_imps, 10u);
  EXPECT_EQ(r.count(r.endpoints[0], "plain", PromptClass::Unsafe, Label::Blocked), 10u);
  EXPECT_EQ(r.totals.successful_imps, 10u);
}

TEST(Campaign, ArchiveLayoutAndJudgedLines) {
  const auto dir = fresh_dir("layout");
  const auto r = run_campaign(tier_config(tiers()[1], dir), quiet());
  for (const char* f : {"manifest.json", "transcripts.jsonl", "judged.jsonl", "report.json", "report.csv"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  std::istringstream judged(slurp(dir / "judged.jsonl"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(judged, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("prompt_id"));
    EXPECT_TRUE(j["label"].is_string());
    EXPECT_TRUE(j["evidence"].contains("rules"));
    ++n;
  }
  EXPECT_EQ(n, r.totals.attempted());
  EXPECT_EQ(n, 40u);
}

TEST(Campaign, ReplayReproducesReportByteForByte) {
  const auto dir = fresh_dir("replay");
  CampaignRunOptions o;  // real clock: timestamps must come back from the manifest
  o.sleep = [](std::chrono::milliseconds) {};
  run_campaign(tier_config(tiers()[2], dir), o);
  const auto replayed = judge_archive(dir.string(), default_moderator());
  EXPECT_EQ(report_json_text(replayed), slurp(dir / "report.json"));
  EXPECT_EQ(report_csv_text(replayed), slurp(dir / "report.csv"));
}

TEST(Campaign, CompletionOrderDoesNotMatter) {
  auto a = tier_config(tiers()[2], fresh_dir("order-a"));
  auto b = tier_config(tiers()[2], fresh_dir("order-b"));
  a.endpoints[0].max_in_flight = 1;
  b.endpoints[0].max_in_flight = 16;
  // Unequal max_in_flight changes the digest; compare the cells only.
  const auto ra = run_campaign(a, quiet());
  const auto rb = run_campaign(b, quiet());
  EXPECT_EQ(to_json(ra)["cells"], to_json(rb)["cells"]);
  EXPECT_EQ(slurp(fs::path(a.archive_dir) / "judged.jsonl"), slurp(fs::path(b.archive_dir) / "judged.jsonl"));
}

TEST(Campaign, ReportsHoldIdsNotPromptText) {
  const auto dir = fresh_dir("contain");
  run_campaign(tier_config(tiers()[2], dir), quiet());
  const std::string json = slurp(dir / "report.json");
  const std::string csv = slurp(dir / "report.csv");
  for (const auto& e : tier_corpus()) {
    EXPECT_EQ(json.find(e.text), std::string::npos) << e.prompt_id;
    EXPECT_EQ(csv.find(e.text), std::string::npos) << e.prompt_id;
    EXPECT_NE(json.find(e.prompt_id), std::string::npos);
  }
  // The transcripts do hold the text.
  EXPECT_NE(slurp(dir / "transcripts.jsonl").find(tier_corpus().back().text), std::string::npos);
}

TEST(Campaign, EmptyPromptSetGivesEmptyReport) {
  auto c = tier_config(tiers()[0], fresh_dir("empty"));
  c.prompts.entries.clear();
  const auto r = run_campaign(c, quiet());
  EXPECT_TRUE(r.cells.empty());
  EXPECT_EQ(r.totals.attempted(), 0u);
  EXPECT_FALSE(r.transport_degraded());
  EXPECT_EQ(report_csv_text(r), "endpoint,codec,class,label,count\n");
}

TEST(Campaign, TransportFailuresCountAsAvailability) {
  auto c = tier_config(tiers()[2], fresh_dir("degraded"));
  c.endpoints[0].max_retries = 1;
  CampaignRunOptions o = quiet();
  MockModel mock(*c.endpoints[0].mock);
  o.backend_factory = [mock](const ModelEndpoint&) -> std::unique_ptr<ChatBackend> {
    return std::make_unique<FunctionBackend>([mock](const std::vector<ChatMessage>& m) -> std::string {
      // Fail every question about the capital of a country.
      if (m.back().content.find("capital") != std::string::npos ||
          m.back().content.find(encode(Codec::caesar(1), "capital")) != std::string::npos) {
        throw TransportError("HTTP 503");
      }
      return mock.respond(m);
    });
  };
  const auto r = run_campaign(c, o);
  EXPECT_TRUE(r.transport_degraded());
  EXPECT_GT(r.totals.availability_failures, 0u);
  EXPECT_EQ(r.totals.attempted(), 40u);
  EXPECT_EQ(r.totals.judged() + r.totals.availability_failures, 40u);
}

TEST(Campaign, ConservationOverRandomMatrices) {
  std::mt19937_64 rng(404);
  const auto& benign = corpus::benign();
  for (int trial = 0; trial < 12; ++trial) {
    CampaignConfig c;
    c.name = "conservation";
    const std::size_t n_endpoints = 1 + rng() % 3, n_codecs = rng() % 3, n_prompts = rng() % 6;
    const double fail_rate = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    for (std::size_t i = 0; i < n_endpoints; ++i) {
      auto e = mock_responder(corpus::mock_rules(benign), "ep" + std::to_string(i));
      e.max_retries = 0;
      e.max_in_flight = 1 + static_cast<int>(rng() % 4);
      c.endpoints.push_back(e);
    }
    for (std::size_t k = 0; k < n_codecs; ++k) c.codecs.push_back(Codec::caesar(static_cast<int>(k) + 1));
    for (std::size_t p = 0; p < n_prompts; ++p) c.prompts.entries.push_back(corpus::to_expectation(benign[p * 7]));
    c.archive_dir = fresh_dir("conservation").string();

    CampaignRunOptions o = quiet();
    auto seed = std::make_shared<std::atomic<std::uint64_t>>(rng());
    o.backend_factory = [seed, fail_rate](const ModelEndpoint& e) -> std::unique_ptr<ChatBackend> {
      MockModel mock(*e.mock);
      return std::make_unique<FunctionBackend>([mock, seed, fail_rate](const std::vector<ChatMessage>& m) {
        std::mt19937_64 local(seed->fetch_add(1));
        if (std::uniform_real_distribution<double>(0.0, 1.0)(local) < fail_rate) throw TransportError("flaky");
        return mock.respond(m);
      });
    };
    const auto r = run_campaign(c, o);
    EXPECT_EQ(r.totals.attempted(), n_endpoints * (n_codecs + 1) * n_prompts) << "trial " << trial;
    for (const auto& cell : r.cells) {
      const std::size_t per_class = cell.prompt_class == PromptClass::Safe ? c.prompts.count(PromptClass::Safe)
                                                                           : c.prompts.count(PromptClass::Unsafe);
      EXPECT_EQ(cell.counts.attempted(), per_class);
    }
  }
}

TEST(Campaign, ExistingArchiveIsRejected) {
  const auto dir = fresh_dir("exists");
  run_campaign(tier_config(tiers()[0], dir), quiet());
  EXPECT_THROW(run_campaign(tier_config(tiers()[0], dir), quiet()), ConfigError);
}

TEST(Campaign, MissingCredentialFailsBeforeAnythingIsWritten) {
  const auto dir = fresh_dir("nocred");
  auto c = tier_config(tiers()[0], dir);
  ModelEndpoint live;
  live.name = "live";
  live.base_url = "http://127.0.0.1:1";
  live.key_env = "IMP_CAMPAIGN_TEST_UNSET_KEY";
  ::unsetenv(live.key_env.c_str());
  c.endpoints.push_back(live);
  EXPECT_THROW(run_campaign(c, quiet()), ConfigError);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(CampaignConfig, ValidationErrors) {
  auto c = tier_config(tiers()[0], fresh_dir("validate"));
  auto dup = c;
  dup.prompts.entries.push_back(dup.prompts.entries.front());
  EXPECT_THROW(dup.validate(), ConfigError);
  auto dup_codec = c;
  dup_codec.codecs.push_back(Codec::caesar(1));
  EXPECT_THROW(dup_codec.validate(), ConfigError);
  auto dup_endpoint = c;
  dup_endpoint.endpoints.push_back(c.endpoints.front());
  EXPECT_THROW(dup_endpoint.validate(), ConfigError);
  EXPECT_THROW(campaign_config_from_json(nlohmann::json::array()), ConfigError);
  EXPECT_THROW(campaign_config_from_json({{"prompt_sets", {"builtin:nope"}}}), ConfigError);
  EXPECT_THROW(campaign_config_from_json({{"codecs", {"no-such-file.json"}}}), ConfigError);
}

TEST(CampaignConfig, DigestStableUnderReserialization) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = tier_config(tiers()[rng() % 3], fresh_dir("digest"));
    c.codecs.push_back(Codec::caesar(2 + static_cast<int>(rng() % 20)));
    c.codecs.push_back(random_codec(rng));
    if (rng() % 2) c.warmups = {"What is two plus two?"};
    c.judge.min_decoded_fraction = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    std::shuffle(c.prompts.entries.begin(), c.prompts.entries.end(), rng);
    const auto text = canonical_json(c).dump(2);
    const auto again = campaign_config_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(config_digest(again), config_digest(c));
    EXPECT_EQ(canonical_json(again), canonical_json(c));
  }
}

TEST(CampaignConfig, DigestTracksContentNotLocation) {
  auto a = tier_config(tiers()[0], "/tmp/a");
  auto b = tier_config(tiers()[0], "/tmp/b");
  EXPECT_EQ(config_digest(a), config_digest(b));
  b.prompts.entries[0].text += " Please.";
  EXPECT_NE(config_digest(a), config_digest(b));
  auto c = tier_config(tiers()[0], "/tmp/c");
  std::reverse(c.prompts.entries.begin(), c.prompts.entries.end());
  EXPECT_EQ(config_digest(a), config_digest(c));
}

TEST(CampaignConfig, LoadsFilesRelativeToConfig) {
  const auto dir = fresh_dir("files");
  fs::create_directories(dir / "parts");
  std::ofstream(dir / "parts" / "endpoint.json")
      << R"({"name": "m", "base_url": "mock://m", "mock": {"rules": "builtin", "encoded_behavior": "decode_answer",
             "codec": {"scheme": "caesar", "shift": 1}}})";
  std::ofstream(dir / "parts" / "caesar1.json") << R"({"scheme": "caesar", "shift": 1})";
  std::ofstream(dir / "parts" / "template.json") << R"({"codec_block_style": "code_listing"})";
  {
    std::ofstream p(dir / "parts" / "prompts.jsonl");
    p << to_json(corpus::to_expectation(corpus::benign()[0])).dump() << "\n";
    p << to_json(corpus::to_expectation(corpus::unsafe_standins()[0])).dump() << "\n";
  }
  std::ofstream(dir / "campaign.json") << R"({"name": "files", "endpoints": ["parts/endpoint.json"],
      "codecs": ["parts/caesar1.json"], "prompt_sets": ["parts/prompts.jsonl", "builtin:benign"],
      "template": "parts/template.json", "archive": "out"})";
  EXPECT_THROW(load_campaign_config((dir / "campaign.json").string()), ConfigError);  // safe-01 twice

  std::ofstream(dir / "campaign.json", std::ios::trunc) << R"({"name": "files", "endpoints": ["parts/endpoint.json"],
      "codecs": ["parts/caesar1.json"], "prompt_sets": ["parts/prompts.jsonl"],
      "template": "parts/template.json", "archive": "out"})";
  const auto c = load_campaign_config((dir / "campaign.json").string());
  EXPECT_EQ(c.archive_dir, (dir / "out").string());
  EXPECT_EQ(c.attack_template.codec_block_style, CodecBlockStyle::CodeListing);
  ASSERT_TRUE(c.endpoints[0].mock.has_value());
  EXPECT_FALSE(c.endpoints[0].mock->refuse_patterns.empty());
  const auto r = run_campaign(c, quiet());
  EXPECT_EQ(r.count("m", "plain", PromptClass::Unsafe, Label::Blocked), 1u);
  EXPECT_EQ(r.count("m", "plain", PromptClass::Safe, Label::InDomainSafe), 1u);
}

TEST(CampaignReport, CsvHasOneRowPerCellLabel) {
  const auto r = run_campaign(tier_config(tiers()[1], fresh_dir("csv")), quiet());
  const std::string csv = report_csv_text(r);
  const auto rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
  EXPECT_EQ(rows, 1 + r.cells.size() * (kAllLabels.size() + 1));
  EXPECT_NE(csv.find("tier-2-decodes-refuses,caesar(1),unsafe,Blocked,10\n"), std::string::npos);
}

TEST(CampaignReport, CsvQuotesCodecNamesWithCommas) {
  CampaignReport r;
  r.cells.push_back({"e", "composite[caesar(1),number(radix 10)]", PromptClass::Safe, {}});
  EXPECT_NE(report_csv_text(r).find("e,\"composite[caesar(1),number(radix 10)]\",safe,"), std::string::npos);
}

TEST(CampaignReport, JsonRoundTrip) {
  const auto r = run_campaign(tier_config(tiers()[2], fresh_dir("rt")), quiet());
  EXPECT_EQ(report_json_text(report_from_json(to_json(r))), report_json_text(r));
}

std::vector<CampaignReport> tier_reports() {
  std::vector<CampaignReport> out;
  for (const auto& t : tiers()) out.push_back(run_campaign(tier_config(t, fresh_dir("scaling")), quiet()));
  return out;
}

TEST(CompareScaling, TiersShowInverseScaling) {
  const auto s = compare_scaling(tier_reports());
  ASSERT_EQ(s.codecs.size(), 2u);
  const auto& caesar = s.codecs[1];
  EXPECT_EQ(caesar.codec, "caesar(1)");
  EXPECT_EQ(caesar.not_parsable, (std::vector<double>{1.0, 0.0, 0.0}));
  EXPECT_EQ(caesar.in_domain_unsafe, (std::vector<double>{0.0, 0.0, 0.5}));
  EXPECT_TRUE(caesar.not_parsable_decreasing);
  EXPECT_TRUE(caesar.in_domain_unsafe_increasing);
  // Ties between adjacent tiers rule out strict monotonicity.
  EXPECT_FALSE(caesar.not_parsable_strictly_decreasing);
  EXPECT_FALSE(caesar.in_domain_unsafe_strictly_increasing);
  const auto& plain = s.codecs[0];
  EXPECT_FALSE(plain.not_parsable_decreasing);
  EXPECT_FALSE(plain.in_domain_unsafe_increasing);
}

TEST(CompareScaling, IdenticalReportsAreFlat) {
  const auto r = run_campaign(tier_config(tiers()[1], fresh_dir("flat")), quiet());
  const auto s = compare_scaling({r, r});
  for (const auto& t : s.codecs) {
    EXPECT_EQ(t.in_domain_unsafe[0], t.in_domain_unsafe[1]);
    EXPECT_FALSE(t.in_domain_unsafe_increasing);
    EXPECT_FALSE(t.not_parsable_decreasing);
    EXPECT_FALSE(t.in_domain_unsafe_strictly_increasing);
    EXPECT_FALSE(t.not_parsable_strictly_decreasing);
  }
}

TEST(CompareScaling, Preconditions) {
  const auto reports = tier_reports();
  EXPECT_THROW(compare_scaling({reports[0]}), ConfigError);
  EXPECT_THROW(compare_scaling({}), ConfigError);
  auto other_codecs = reports[1];
  other_codecs.codecs.push_back("caesar(2)");
  EXPECT_THROW(compare_scaling({reports[0], other_codecs}), ConfigError);
  auto other_prompts = reports[1];
  other_prompts.prompt_ids.pop_back();
  EXPECT_THROW(compare_scaling({reports[0], other_prompts}), ConfigError);
}

TEST(CompareScaling, StrictFlagsOnStrictSequences) {
  // Hand-built reports with rates 0, 0.5, 1 for InDomainUnsafe.
  std::vector<CampaignReport> rs(3);
  for (std::size_t i = 0; i < 3; ++i) {
    rs[i].name = "r" + std::to_string(i);
    rs[i].codecs = {"plain"};
    CellCounts c;
    c[Label::InDomainUnsafe] = i;
    c[Label::NotParsable] = 2 - i;
    rs[i].cells.push_back({"e", "plain", PromptClass::Unsafe, c});
  }
  const auto s = compare_scaling(rs);
  EXPECT_TRUE(s.codecs[0].in_domain_unsafe_strictly_increasing);
  EXPECT_TRUE(s.codecs[0].not_parsable_strictly_decreasing);
  EXPECT_EQ(to_json(s)["codecs"][0]["in_domain_unsafe"], nlohmann::json({0.0, 0.5, 1.0}));
}

}  // namespace
}  // namespace imp
