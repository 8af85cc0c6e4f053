#!/usr/bin/env python3
"""Regenerates include/imp/data/{words,quadgrams}.hpp from wordfreq.

The quadgram table models English as a stream of independent words drawn
from the wordfreq unigram distribution, separated by single spaces. Counts
are computed exactly under that model (no sampling), so regeneration is
deterministic for a given wordfreq release.

    pip install wordfreq
    python3 tools/gen_english_tables.py include/imp/data
"""
import math
import re
import sys
from collections import defaultdict
from functools import lru_cache

from wordfreq import top_n_list, word_frequency

WORD_LIST_SIZE = 10000
MODEL_VOCAB = 50000
MIN_PROB = 2e-7


def alpha_words(n):
    out = []
    for w in top_n_list("en", n * 3):
        if re.fullmatch(r"[a-z]+", w):
            out.append(w)
            if len(out) == n:
                break
    return out


def main(outdir):
    words = alpha_words(WORD_LIST_SIZE)
    with open(f"{outdir}/words.hpp", "w") as f:
        f.write("// Generated by tools/gen_english_tables.py. Do not edit.\n")
        f.write("#pragma once\n\n#include <string_view>\n\n")
        f.write("namespace imp::data {\n\n")
        f.write(f"// {len(words)} most frequent alphabetic English words, newline separated.\n")
        f.write("inline constexpr std::string_view kEnglishWords =\n")
        for i in range(0, len(words), 12):
            f.write('    "' + "\\n".join(words[i:i + 12]) + '\\n"\n')
        f.write("    ;\n\n}  // namespace imp::data\n")

    vocab = alpha_words(MODEL_VOCAB)
    freqs = {w: word_frequency(w, "en") for w in vocab}
    z = sum(freqs.values())
    freqs = {w: f / z for w, f in freqs.items()}

    @lru_cache(maxsize=None)
    def continuation(r):
        # Distribution of the next r symbols of the stream right after a space.
        dist = defaultdict(float)
        for w, f in freqs.items():
            if len(w) >= r:
                dist[w[:r]] += f
            else:
                head = w + " "
                rest = r - len(head)
                if rest <= 0:
                    dist[head[:r]] += f
                else:
                    for s, q in continuation(rest).items():
                        dist[head + s] += f * q
        return dict(dist)

    counts = defaultdict(float)
    for w, f in freqs.items():
        t = " " + w + " "
        for p in range(len(w) + 1):
            if p + 4 <= len(t):
                counts[t[p:p + 4]] += f
            else:
                head = t[p:]
                for s, q in continuation(4 - len(head)).items():
                    counts[head + s] += f * q
    total = sum(counts.values())
    kept = sorted((g, c / total) for g, c in counts.items() if c / total >= MIN_PROB)
    floor = math.log10(MIN_PROB) - 1.0

    with open(f"{outdir}/quadgrams.hpp", "w") as f:
        f.write("// Generated by tools/gen_english_tables.py. Do not edit.\n")
        f.write("#pragma once\n\n#include <cstdint>\n#include <string_view>\n\n")
        f.write("namespace imp::data {\n\n")
        f.write("// Quadgrams over the alphabet [a-z ] (space = word boundary), sorted.\n")
        f.write("// kQuadgramLogProb[i] is round(100 * log10 p) for kQuadgramKeys[4i, 4i+4).\n")
        f.write(f"inline constexpr double kQuadgramFloor = {floor:.2f};\n\n")
        f.write("inline constexpr std::string_view kQuadgramKeys =\n")
        for i in range(0, len(kept), 24):
            f.write('    "' + "".join(g for g, _ in kept[i:i + 24]) + '"\n')
        f.write("    ;\n\n")
        f.write(f"inline constexpr std::int16_t kQuadgramLogProb[{len(kept)}] = {{\n")
        vals = [str(round(100 * math.log10(p))) for _, p in kept]
        for i in range(0, len(vals), 20):
            f.write("    " + ",".join(vals[i:i + 20]) + ",\n")
        f.write("};\n\n}  // namespace imp::data\n")
    print(f"words={len(words)} quadgrams={len(kept)} floor={floor:.2f}", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/imp/data")
