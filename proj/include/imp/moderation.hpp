#pragma once

// Pluggable harm check. The bundled default is a category lexicon; any
// reentrant callable with the same signature (for instance a client for an
// external moderation endpoint) can replace it.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "imp/text.hpp"

namespace imp {

struct ModerationResult {
  bool flagged = false;
  std::vector<std::string> categories;
};

using ModerationHook = std::function<ModerationResult(std::string_view)>;

struct LexiconCategory {
  std::string id;
  std::string name;
  std::vector<std::string> terms;
};

// Hazard categories S1-S14 with a small, conservative term list each. Terms
// match case-insensitively on word boundaries, optionally pluralized.
inline const std::vector<LexiconCategory>& default_lexicon() {
  static const std::vector<LexiconCategory> lexicon = {
      {"S1", "violent_crimes", {"murder", "kill someone", "assassinate", "torture", "kidnap", "mass shooting"}},
      {"S2", "non_violent_crimes",
       {"launder money", "money laundering", "embezzle", "shoplift", "counterfeit money", "hack into",
        "credit card fraud", "ransomware"}},
      {"S3", "sex_related_crimes", {"rape", "sexual assault", "human trafficking"}},
      {"S4", "child_sexual_exploitation", {"underage", "child abuse material"}},
      {"S5", "defamation", {"fabricated scandal", "defamatory"}},
      {"S6", "specialized_advice", {"lethal dose", "overdose on"}},
      {"S7", "privacy", {"home address of", "social security number", "doxx"}},
      {"S8", "intellectual_property", {"pirated", "pirate bay", "crack the license"}},
      {"S9", "indiscriminate_weapons",
       {"nuclear bomb", "pipe bomb", "bomb", "explosive", "nerve agent", "bioweapon", "chemical weapon", "sarin",
        "anthrax", "enriched uranium", "plutonium"}},
      {"S10", "hate", {"racial slur", "white supremacy", "inferior race", "ethnic cleansing"}},
      {"S11", "suicide_self_harm", {"suicide", "kill myself", "killing oneself", "self-harm", "self harm"}},
      {"S12", "sexual_content", {"pornography", "porn", "naked photos", "explicit sex"}},
      {"S13", "elections", {"rig the election", "voter suppression", "fake ballots"}},
      {"S14", "code_interpreter_abuse", {"fork bomb", "reverse shell", "escape the sandbox"}},
  };
  return lexicon;
}

class LexiconModerator {
 public:
  LexiconModerator() : lexicon_(default_lexicon()) {}
  explicit LexiconModerator(std::vector<LexiconCategory> lexicon) : lexicon_(std::move(lexicon)) {}

  ModerationResult operator()(std::string_view s) const {
    ModerationResult r;
    for (const auto& cat : lexicon_) {
      for (const auto& term : cat.terms) {
        if (matches(s, term)) {
          r.flagged = true;
          r.categories.push_back(cat.id + ":" + term);
          break;
        }
      }
    }
    return r;
  }

 private:
  static bool matches(std::string_view s, const std::string& term) {
    return text::ifind_word(s, term) != std::string_view::npos ||
           text::ifind_word(s, term + "s") != std::string_view::npos ||
           text::ifind_word(s, term + "es") != std::string_view::npos;
  }

  std::vector<LexiconCategory> lexicon_;
};

inline ModerationHook default_moderator() { return LexiconModerator{}; }

}  // namespace imp
