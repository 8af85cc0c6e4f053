#include "imp/codec.hpp"

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace imp {
namespace {

using test_support::random_printable;
using test_support::shift_oracle;

TEST(CodecEncode, CaesarZeroIsIdentity) {
  EXPECT_EQ(encode(Codec::caesar(0), "abc"), "abc");
}

TEST(CodecEncode, CaesarOneMatchesLookupOracle) {
  const std::string plain = "What is the capital of France?";
  // Frozen from the character-by-character lookup oracle.
  EXPECT_EQ(shift_oracle(plain), "Xibu jt uif dbqjubm pg Gsbodf?");
  EXPECT_EQ(encode(Codec::caesar(1), plain), "Xibu jt uif dbqjubm pg Gsbodf?");
}

TEST(CodecEncode, NumberSchemeEmitsCodePoints) {
  EXPECT_EQ(encode(Codec::number(","), "A"), "65");
  EXPECT_EQ(encode(Codec::number(), "Hi"), "72 105");
  EXPECT_EQ(encode(Codec::number(), ""), "");
  EXPECT_EQ(encode(Codec::number(", "), "\xC3\xA9!"), "233, 33");
  EXPECT_EQ(encode(Codec::number(" ", 16), "Hi"), "48 69");
}

TEST(CodecEncode, ShiftByOneBijectionMatchesCaesar) {
  const Codec bij = Codec::bijection(Codec::shift_table(1));
  EXPECT_EQ(encode(bij, "france"), "gsbodf");
  EXPECT_EQ(encode(bij, "france"), encode(Codec::caesar(1), "france"));
}

TEST(CodecEncode, AliasRewritesLongestPhraseCaseInsensitively) {
  const Codec alias = Codec::alias({{"the president", "AAA"}, {"the president of China", "BBB"}});
  EXPECT_EQ(encode(alias, "From now on we call The President of China BBB."), "From now on we call BBB BBB.");
  EXPECT_EQ(encode(alias, "the president said"), "AAA said");
  // Whole words only.
  EXPECT_EQ(encode(alias, "the presidential race"), "the presidential race");
}

TEST(CodecEncode, CompositeAppliesPartsLeftToRight) {
  const Codec c = Codec::composite({Codec::caesar(1), Codec::number()});
  EXPECT_EQ(encode(c, "ab"), "98 99");
  EXPECT_EQ(decode(c, "98 99"), "ab");
}

TEST(CodecDecode, WorkedExamples) {
  EXPECT_EQ(decode(Codec::caesar(1), "Qbsjt"), "Paris");
  EXPECT_EQ(decode(Codec::number(), ""), "");
  EXPECT_EQ(decode(Codec::number(","), "72,105"), "Hi");
  EXPECT_EQ(decode(Codec::number(","), "72, 105"), "Hi");
}

TEST(CodecDecode, NumberErrorsCarryByteOffset) {
  try {
    (void)decode(Codec::number(","), "72,x1,105");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  try {
    (void)decode(Codec::number(" "), "72 1114112");
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW((void)decode(Codec::number(), "55296"), DecodeError);  // surrogate
  EXPECT_THROW((void)decode(Codec::number(), "72  105"), DecodeError);
}

TEST(CodecDecode, LenientNumberDecodeReportsFraction) {
  auto r = decode_lenient(Codec::number(), "72 105 zz");
  EXPECT_EQ(r.text, "Hi");
  EXPECT_NEAR(r.decoded_fraction, 1.0 - 2.0 / 9.0, 1e-12);
  auto ok = decode_lenient(Codec::caesar(1), "Qbsjt");
  EXPECT_EQ(ok.text, "Paris");
  EXPECT_EQ(ok.decoded_fraction, 1.0);
}

TEST(CodecInvert, CaesarInverseShift) {
  EXPECT_EQ(invert(Codec::caesar(1)), Codec::caesar(25));
  EXPECT_EQ(invert(Codec::caesar(0)), Codec::caesar(0));
}

TEST(CodecInvert, BijectionSwapsKeysAndValues) {
  const Codec inv = invert(Codec::bijection(Codec::shift_table(1)));
  EXPECT_EQ(encode(inv, "gsbodf"), "france");
}

TEST(CodecInvert, AliasSharedAliasIsNotInvertible) {
  const Codec alias = Codec::alias({{"the president of China", "BBB"}, {"the president of USA", "BBB"}});
  EXPECT_THROW((void)invert(alias), NonInvertibleError);
  EXPECT_THROW((void)decode(alias, "BBB"), NonInvertibleError);
}

TEST(CodecInvert, InverseEncodeUndoesEncodeForEveryScheme) {
  std::mt19937_64 rng(11);
  const std::vector<Codec> codecs = {
      Codec::caesar(7), Codec::bijection(test_support::random_table(rng)), Codec::number(","),
      Codec::alias({{"zebra crossing", "QQX"}}),
      Codec::composite({Codec::caesar(3), Codec::composite({Codec::number(";", 16)})})};
  for (const auto& c : codecs) {
    for (int i = 0; i < 50; ++i) {
      const std::string x = random_printable(rng, 0, 40);
      EXPECT_EQ(encode(invert(c), encode(c, x)), x) << c.name();
      EXPECT_EQ(invert(invert(c)), c) << c.name();
    }
  }
}

TEST(CodecConfig, InvariantViolationsAreConfigErrors) {
  EXPECT_THROW((void)Codec::caesar(26), ConfigError);
  EXPECT_THROW((void)Codec::caesar(-1), ConfigError);
  LetterTable t = Codec::shift_table(1);
  t[0] = t[1];
  EXPECT_THROW((void)Codec::bijection(t), ConfigError);
  EXPECT_THROW((void)Codec::number(""), ConfigError);
  EXPECT_THROW((void)Codec::number("1"), ConfigError);
  EXPECT_THROW((void)Codec::number(" ", 1), ConfigError);
  EXPECT_THROW((void)Codec::composite({}), ConfigError);
  EXPECT_THROW((void)Codec::alias({}), ConfigError);
  EXPECT_THROW((void)Codec::alias({{"a b", "X"}, {"A B", "Y"}}), ConfigError);
}

TEST(CodecConfig, CompositeDepthIsCappedAtEight) {
  Codec c = Codec::caesar(1);
  for (int d = 1; d <= Codec::kMaxCompositeDepth; ++d) {
    c = Codec::composite({c});
    EXPECT_EQ(c.depth(), d);
  }
  EXPECT_THROW((void)Codec::composite({c}), ConfigError);
}

TEST(CodecJson, SerializesToSchemeObjects) {
  EXPECT_EQ(to_json(Codec::caesar(1)).dump(), R"({"scheme":"caesar","shift":1})");
  const auto bij = to_json(Codec::bijection(Codec::shift_table(1)));
  EXPECT_EQ(bij["table"].size(), 26u);
  EXPECT_EQ(bij["table"]["z"], "a");
  EXPECT_EQ(load_codec(R"({"scheme":"number","separator":","})"), Codec::number(","));
  EXPECT_EQ(load_codec(R"({"scheme":"alias","word_map":[["the president of China","BBB"]]})"),
            Codec::alias({{"the president of China", "BBB"}}));
  EXPECT_THROW((void)load_codec(R"({"scheme":"rot13"})"), ConfigError);
  EXPECT_THROW((void)load_codec(R"({"scheme":"caesar","shift":30})"), ConfigError);
  EXPECT_THROW((void)load_codec(R"({"scheme":"bijection","table":{"a":"b"}})"), ConfigError);
  EXPECT_THROW((void)load_codec("/nonexistent/codec.json"), ConfigError);
}

TEST(CodecJson, RoundTripPreservesCodec) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Codec c = test_support::random_codec(rng);
    EXPECT_EQ(codec_from_json(nlohmann::json::parse(to_json(c).dump())), c) << c.name();
  }
}

// Properties over random inputs.

TEST(CodecProperties, RoundTripAllSchemes) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Codec c = test_support::random_codec(rng);
    const std::string x = random_printable(rng, 0, 60);
    ASSERT_EQ(decode(c, encode(c, x)), x) << c.name() << " on " << x;
  }
}

TEST(CodecProperties, RoundTripUnicodeThroughNumberCodec) {
  const std::string x = "na\xC3\xAFve \xE2\x82\xAC 5 \xF0\x9F\x98\x80";
  EXPECT_EQ(decode(Codec::number(), encode(Codec::number(), x)), x);
  EXPECT_EQ(decode(Codec::caesar(9), encode(Codec::caesar(9), x)), x);
  EXPECT_THROW((void)encode(Codec::number(), "\xC3"), DecodeError);
}

TEST(CodecProperties, CaesarCompositionLaw) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> shift(0, 25);
  for (int i = 0; i < 200; ++i) {
    const int a = shift(rng), b = shift(rng);
    const std::string x = random_printable(rng, 0, 50);
    EXPECT_EQ(encode(Codec::caesar(b), encode(Codec::caesar(a), x)), encode(Codec::caesar((a + b) % 26), x));
  }
}

TEST(CodecProperties, NonLettersAreUntouched) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::string x = random_printable(rng, 1, 60);
    const Codec c = (i % 2) ? Codec::caesar(1 + i % 25) : Codec::bijection(test_support::random_table(rng));
    const std::string y = encode(c, x);
    ASSERT_EQ(y.size(), x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (!text::is_alpha(x[k])) {
        EXPECT_EQ(y[k], x[k]);
      } else {
        EXPECT_EQ(text::is_upper(y[k]), text::is_upper(x[k]));
      }
    }
  }
}

TEST(CodecProperties, ShiftByOneBijectionEqualsCaesarOne) {
  std::mt19937_64 rng(8);
  const Codec bij = Codec::bijection(Codec::shift_table(1));
  for (int i = 0; i < 200; ++i) {
    const std::string x = random_printable(rng, 0, 80);
    EXPECT_EQ(encode(bij, x), encode(Codec::caesar(1), x));
    EXPECT_EQ(encode(bij, x), shift_oracle(x));
  }
}

}  // namespace
}  // namespace imp
