// src/quran-corpus.cc

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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "qps/base.h"
#include "qps/utf8.h"

namespace qps {

namespace {

bool ParseInt(const std::string &s, int *out) {
  if (s.empty()) return false;
  const char *b = s.data(), *e = s.data() + s.size();
  auto r = std::from_chars(b, e, *out);
  return r.ec == std::errc() && r.ptr == e;
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

QuranCorpus LoadTanzil(std::istream &is, ScriptKind kind) {
  QuranCorpus corpus;
  corpus.script_kind_ = kind;
  std::map<std::pair<int, int>, size_t> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    size_t p1 = line.find('|');
    size_t p2 = p1 == std::string::npos ? p1 : line.find('|', p1 + 1);
    if (p2 == std::string::npos)
      throw ParseError("expected sura|aya|text", line_no);
    std::string text = Trim(line.substr(p2 + 1));
    if (text.find('|') != std::string::npos)
      throw ParseError("too many fields", line_no);
    int sura, aya;
    if (!ParseInt(line.substr(0, p1), &sura))
      throw ParseError("sura is not an integer", line_no);
    if (!ParseInt(line.substr(p1 + 1, p2 - p1 - 1), &aya))
      throw ParseError("aya is not an integer", line_no);
    if (sura < 1 || sura > kNumSuras)
      throw ParseError("sura out of range", line_no);
    if (aya < 1) throw ParseError("aya out of range", line_no);
    if (text.empty()) throw ParseError("empty verse text", line_no);
    try {
      Utf8ToU32(text);
    } catch (const EncodingError &e) {
      throw ParseError(e.what(), line_no);
    }
    if (!seen.emplace(std::make_pair(sura, aya), 0).second)
      throw ParseError("duplicate verse " + std::to_string(sura) + ":" +
                       std::to_string(aya), line_no);
    corpus.verses_.push_back(Verse{sura, aya, text});
  }
  std::stable_sort(corpus.verses_.begin(), corpus.verses_.end(),
                   [](const Verse &a, const Verse &b) {
                     return a.sura != b.sura ? a.sura < b.sura : a.aya < b.aya;
                   });
  for (const Verse &v : corpus.verses_) {
    std::vector<std::string> words = SplitWords(v.text);
    for (size_t i = 0; i < words.size(); i++)
      corpus.words_[v.sura].push_back(
          IndexedWord{words[i], v.aya, static_cast<int>(i)});
  }
  return corpus;
}

QuranCorpus LoadTanzilFile(const std::string &path, ScriptKind kind) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path);
  return LoadTanzil(is, kind);
}

std::vector<const Verse *> QuranCorpus::SuraVerses(int sura) const {
  std::vector<const Verse *> out;
  auto it = std::lower_bound(
      verses_.begin(), verses_.end(), sura,
      [](const Verse &v, int s) { return v.sura < s; });
  for (; it != verses_.end() && it->sura == sura; ++it) out.push_back(&*it);
  return out;
}

const Verse *QuranCorpus::FindVerse(int sura, int aya) const {
  auto it = std::lower_bound(
      verses_.begin(), verses_.end(), std::make_pair(sura, aya),
      [](const Verse &v, const std::pair<int, int> &k) {
        return std::make_pair(v.sura, v.aya) < k;
      });
  if (it != verses_.end() && it->sura == sura && it->aya == aya) return &*it;
  return nullptr;
}

const std::vector<IndexedWord> &QuranCorpus::SuraWords(int sura) const {
  if (sura < 1 || sura > kNumSuras)
    throw InputError("sura " + std::to_string(sura) + " out of range");
  return words_[sura];
}

bool QuranCorpus::HasSura(int sura) const {
  return sura >= 1 && sura <= kNumSuras && !words_[sura].empty();
}

int QuranCorpus::NumSuras() const {
  int n = 0;
  for (int s = 1; s <= kNumSuras; s++) n += HasSura(s) ? 1 : 0;
  return n;
}

bool IsStrippedForMatching(char32_t c) {
  return (c >= 0x064B && c <= 0x065F) || c == 0x0670 ||
         (c >= 0x06D6 && c <= 0x06ED) || c == 0x0640 ||
         (c >= 0x08F0 && c <= 0x08F2) || IsSpaceCodePoint(c);
}

std::string NormalizedText::Utf8() const { return U32ToUtf8(value); }

NormalizedText NormalizeForMatching(const std::string &text) {
  NormalizedText out;
  std::u32string u = Utf8ToU32(text);
  bool in_word = false;
  for (char32_t c : u) {
    if (IsSpaceCodePoint(c)) {
      in_word = false;
      continue;
    }
    if (!in_word) out.source_len_words++;
    in_word = true;
    if (IsStrippedForMatching(c)) continue;
    out.value.push_back(c == 0x0671 ? U'ا' : c);
  }
  return out;
}

std::string WordWindow(const QuranCorpus &corpus, int sura, int start_word,
                       int width) {
  const std::vector<IndexedWord> &words = corpus.SuraWords(sura);
  long begin = std::max(0, start_word);
  long end = std::min<long>(begin + std::max(0, width),
                            static_cast<long>(words.size()));
  std::string out;
  for (long i = begin; i < end; i++) {
    if (i > begin) out.push_back(' ');
    out += words[i].text;
  }
  return out;
}

std::vector<SpanPair> AlignScripts(const std::vector<std::string> &imlaey_words,
                                   const std::vector<std::string> &uthmani_words,
                                   const std::vector<SpanPair> &overrides) {
  const int ni = static_cast<int>(imlaey_words.size());
  const int nu = static_cast<int>(uthmani_words.size());
  std::vector<SpanPair> ov = overrides;
  std::sort(ov.begin(), ov.end(), [](const SpanPair &a, const SpanPair &b) {
    return a.imlaey.begin < b.imlaey.begin;
  });
  for (size_t k = 0; k < ov.size(); k++) {
    const SpanPair &o = ov[k];
    if (o.imlaey.begin < 0 || o.imlaey.end > ni ||
        o.imlaey.begin >= o.imlaey.end || o.uthmani.begin < 0 ||
        o.uthmani.end > nu || o.uthmani.begin >= o.uthmani.end)
      throw ValidationError("override " + std::to_string(k) +
                            " is empty or out of bounds");
    if (k > 0 && (o.imlaey.begin < ov[k - 1].imlaey.end ||
                  o.uthmani.begin < ov[k - 1].uthmani.end))
      throw ValidationError("overrides overlap or cross");
  }
  std::vector<SpanPair> out;
  int i = 0, u = 0;
  auto emit_positional = [&](int i_end, int u_end) {
    if (i_end - i != u_end - u)
      throw AlignmentError("length mismatch between imlaey words [" +
                           std::to_string(i) + "," + std::to_string(i_end) +
                           ") and uthmani words [" + std::to_string(u) + "," +
                           std::to_string(u_end) + ")");
    for (; i < i_end; i++, u++)
      out.push_back(SpanPair{Span{i, i + 1}, Span{u, u + 1}});
  };
  for (const SpanPair &o : ov) {
    emit_positional(o.imlaey.begin, o.uthmani.begin);
    out.push_back(o);
    i = o.imlaey.end;
    u = o.uthmani.end;
  }
  emit_positional(ni, nu);
  return out;
}

}  // namespace qps
