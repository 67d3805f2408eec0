// include/qps/quran-corpus.h

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

#ifndef QPS_QURAN_CORPUS_H_
#define QPS_QURAN_CORPUS_H_

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace qps {

enum class ScriptKind { kUthmani, kImlaey };

struct Verse {
  int sura = 0;
  int aya = 0;
  std::string text;
};

// One entry of the per-sura flattened word list.
struct IndexedWord {
  std::string text;
  int aya = 0;            // aya number the word belongs to
  int word_in_aya = 0;    // 0-based position inside the aya
};

constexpr int kNumSuras = 114;

// Immutable store of one script of the Quran text in Tanzil layout.
class QuranCorpus {
 public:
  QuranCorpus() = default;

  ScriptKind script_kind() const { return script_kind_; }
  const std::vector<Verse> &verses() const { return verses_; }

  // Verses of one sura in aya order; empty if the sura was not loaded.
  std::vector<const Verse *> SuraVerses(int sura) const;
  const Verse *FindVerse(int sura, int aya) const;

  // Flattened word list of a sura.  Throws InputError when sura is outside
  // [1, 114]; returns an empty list for a sura absent from the file.
  const std::vector<IndexedWord> &SuraWords(int sura) const;
  int NumSuraWords(int sura) const {
    return static_cast<int>(SuraWords(sura).size());
  }
  bool HasSura(int sura) const;
  int NumSuras() const;  // suras with at least one verse

 private:
  friend QuranCorpus LoadTanzil(std::istream &is, ScriptKind kind);
  ScriptKind script_kind_ = ScriptKind::kUthmani;
  std::vector<Verse> verses_;
  std::vector<std::vector<IndexedWord>> words_ =
      std::vector<std::vector<IndexedWord>>(kNumSuras + 1);
};

// Reads "sura|aya|text" records.  Lines starting with '#' and blank lines
// are skipped.  Throws ParseError carrying the 1-based line number.
QuranCorpus LoadTanzil(std::istream &is, ScriptKind kind);
QuranCorpus LoadTanzilFile(const std::string &path, ScriptKind kind);

// Base letters only, with alif wasla folded to alif.
struct NormalizedText {
  std::u32string value;
  int source_len_words = 0;
  std::string Utf8() const;
};

// True for the code points removed by NormalizeForMatching.
bool IsStrippedForMatching(char32_t c);

NormalizedText NormalizeForMatching(const std::string &text);

// Space-joined slice [start_word, start_word + width) of the sura's word
// list, clamped to the sura.  A negative start is moved to 0 and keeps its
// width.
std::string WordWindow(const QuranCorpus &corpus, int sura, int start_word,
                       int width);

// Half-open word span.
struct Span {
  int begin = 0;
  int end = 0;
  bool operator==(const Span &o) const {
    return begin == o.begin && end == o.end;
  }
};

struct SpanPair {
  Span imlaey;
  Span uthmani;
  bool operator==(const SpanPair &o) const {
    return imlaey == o.imlaey && uthmani == o.uthmani;
  }
};

// Maps Imlaey words to Uthmani words: positional 1:1 except inside the
// override spans, each of which becomes one many-to-many pair.  Throws
// ValidationError for bad overrides and AlignmentError when the remaining
// stretches differ in length.
std::vector<SpanPair> AlignScripts(const std::vector<std::string> &imlaey_words,
                                   const std::vector<std::string> &uthmani_words,
                                   const std::vector<SpanPair> &overrides);

}  // namespace qps

#endif  // QPS_QURAN_CORPUS_H_
