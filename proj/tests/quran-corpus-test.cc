// tests/quran-corpus-test.cc

// Copyright 2026  QPS project contributors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "qps/quran-corpus.h"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qps/base.h"
#include "qps/utf8.h"
#include "test-util.h"

namespace qps {

using testing::Uthmani;

TEST_CASE("load three lines of sura 112") {
  std::istringstream is(
      "# comment\n"
      "112|1|قُلۡ هُوَ ٱللَّهُ أَحَدٌ\n"
      "\n"
      "112|2|ٱللَّهُ ٱلصَّمَدُ\n"
      "112|3|لَمۡ يَلِدۡ وَلَمۡ يُولَدۡ\n");
  QuranCorpus c = LoadTanzil(is, ScriptKind::kUthmani);
  REQUIRE(c.verses().size() == 3);
  CHECK(c.verses()[2].sura == 112);
  CHECK(c.verses()[2].aya == 3);
  CHECK(c.NumSuraWords(112) == 4 + 2 + 4);
  CHECK(c.SuraWords(112)[5].aya == 2);
  CHECK(c.SuraWords(112)[5].word_in_aya == 1);
}

TEST_CASE("malformed tanzil lines") {
  auto load = [](const std::string &text) {
    std::istringstream is(text);
    return LoadTanzil(is, ScriptKind::kUthmani);
  };
  try {
    load("0|1|x\n");
    FAIL("no throw");
  } catch (const ParseError &e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("sura out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(load("1|1\n"), ParseError);
  CHECK_THROWS_AS(load("1|x|a\n"), ParseError);
  CHECK_THROWS_AS(load("115|1|a\n"), ParseError);
  CHECK_THROWS_AS(load("1|1|a\n1|1|b\n"), ParseError);
}

TEST_CASE("bundled text has 114 contiguous suras") {
  const QuranCorpus &c = Uthmani();
  CHECK(c.verses().size() == 6236);
  CHECK(c.NumSuras() == 114);
  for (int s = 1; s <= 114; s++) {
    std::vector<const Verse *> v = c.SuraVerses(s);
    REQUIRE(!v.empty());
    for (size_t i = 0; i < v.size(); i++) CHECK(v[i]->aya == int(i) + 1);
  }
}

TEST_CASE("word index round trips every aya") {
  const QuranCorpus &c = Uthmani();
  for (int s = 1; s <= 114; s++) {
    const std::vector<IndexedWord> &w = c.SuraWords(s);
    std::map<int, std::string> rebuilt;
    for (const IndexedWord &iw : w) {
      std::string &t = rebuilt[iw.aya];
      t += (t.empty() ? "" : " ") + iw.text;
    }
    for (const Verse *v : c.SuraVerses(s)) CHECK(rebuilt[v->aya] == v->text);
  }
}

// Independent strip-set oracle, written from the code point table plus the
// open tanween marks U+08F0-08F2 that the bundled text uses.
static bool OracleStripped(char32_t c) {
  return (c >= 0x064B && c <= 0x065F) || c == 0x0670 ||
         (c >= 0x08F0 && c <= 0x08F2) ||
         (c >= 0x06D6 && c <= 0x06ED) || c == 0x0640 || IsSpaceCodePoint(c);
}

static std::u32string OracleNormalize(const std::string &s) {
  std::u32string out;
  for (char32_t c : Utf8ToU32(s))
    if (!OracleStripped(c)) out.push_back(c == 0x0671 ? 0x0627 : c);
  return out;
}

TEST_CASE("normalize for matching") {
  CHECK(NormalizeForMatching("").value.empty());
  CHECK(NormalizeForMatching("كتب").value == U"كتب");
  NormalizedText n = NormalizeForMatching("بِسْمِ ٱللَّهِ");
  CHECK(n.value == U"بسمالله");
  CHECK(n.source_len_words == 2);
  for (char32_t c = 0x0600; c < 0x0900; c++)
    CHECK(IsStrippedForMatching(c) == OracleStripped(c));
}

TEST_CASE("normalization matches the oracle and is idempotent") {
  for (const Verse &v : Uthmani().verses()) {
    NormalizedText n = NormalizeForMatching(v.text);
    CHECK(n.value == OracleNormalize(v.text));
    CHECK(NormalizeForMatching(n.Utf8()).value == n.value);
  }
}

TEST_CASE("word window") {
  const QuranCorpus &c = Uthmani();
  int n = c.NumSuraWords(112);
  CHECK(WordWindow(c, 112, 0, 0) == "");
  std::string all;
  for (const Verse *v : c.SuraVerses(112))
    all += (all.empty() ? "" : " ") + v->text;
  CHECK(WordWindow(c, 112, 0, n) == all);
  CHECK(WordWindow(c, 112, -3, 5) == WordWindow(c, 112, 0, 5));
  CHECK(SplitWords(WordWindow(c, 112, -3, 5)).size() == 5);
  CHECK(WordWindow(c, 112, n - 2, 10) == WordWindow(c, 112, n - 2, 2));
  CHECK(WordWindow(c, 112, n + 4, 3) == "");
  // Normalizing a window equals concatenating the normalized words.
  std::u32string cat;
  for (const IndexedWord &w : c.SuraWords(36))
    cat += NormalizeForMatching(w.text).value;
  CHECK(NormalizeForMatching(WordWindow(c, 36, 0, 1 << 20)).value == cat);
}

TEST_CASE("align scripts") {
  std::vector<std::string> a = {"a", "b", "c"};
  std::vector<SpanPair> id = AlignScripts(a, a, {});
  REQUIRE(id.size() == 3);
  for (int i = 0; i < 3; i++)
    CHECK(id[i] == SpanPair{{i, i + 1}, {i, i + 1}});
  CHECK_THROWS_AS(AlignScripts({"a", "b", "c", "d"}, {"a", "b", "c", "d", "e"},
                               {}),
                  AlignmentError);
  CHECK_THROWS_AS(AlignScripts(a, a, {{{0, 2}, {0, 2}}, {{1, 3}, {1, 3}}}),
                  ValidationError);
  CHECK_THROWS_AS(AlignScripts(a, a, {{{0, 4}, {0, 1}}}), ValidationError);
}

TEST_CASE("align scripts on the yabnaumma misalignment") {
  // Imlaey writes three words where the Uthmani spelling joins them.
  std::vector<std::string> imlaey = {"قَالَ", "يَا", "ابْنَ", "أُمَّ", "لَا"};
  std::vector<std::string> uthmani = {"قَالَ", "يَبۡنَؤُمَّ", "لَا"};
  std::vector<SpanPair> m = AlignScripts(imlaey, uthmani, {{{1, 4}, {1, 2}}});
  REQUIRE(m.size() == 3);
  CHECK(m[0] == SpanPair{{0, 1}, {0, 1}});
  CHECK(m[1] == SpanPair{{1, 4}, {1, 2}});
  CHECK(m[2] == SpanPair{{4, 5}, {2, 3}});
  CHECK_THROWS_AS(AlignScripts(imlaey, uthmani, {}), AlignmentError);
}

TEST_CASE("align scripts partitions both sides") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; iter++) {
    // Build the two sides from random blocks so a valid override set exists.
    std::vector<std::string> a, b;
    std::vector<SpanPair> ov;
    int blocks = 1 + rng() % 8;
    for (int k = 0; k < blocks; k++) {
      int la = 1 + rng() % 3, lb = 1 + rng() % 3;
      if (rng() % 2) lb = la;
      if (la != lb || rng() % 4 == 0)
        ov.push_back({{int(a.size()), int(a.size()) + la},
                      {int(b.size()), int(b.size()) + lb}});
      for (int i = 0; i < la; i++) a.push_back("w");
      for (int i = 0; i < lb; i++) b.push_back("w");
    }
    std::vector<SpanPair> m = AlignScripts(a, b, ov);
    int ea = 0, eb = 0;
    for (const SpanPair &p : m) {
      CHECK(p.imlaey.begin == ea);
      CHECK(p.uthmani.begin == eb);
      CHECK(p.imlaey.end > p.imlaey.begin);
      CHECK(p.uthmani.end > p.uthmani.begin);
      ea = p.imlaey.end;
      eb = p.uthmani.end;
    }
    CHECK(ea == int(a.size()));
    CHECK(eb == int(b.size()));
  }
}

}  // namespace qps
