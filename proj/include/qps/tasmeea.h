// include/qps/tasmeea.h

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

#ifndef QPS_TASMEEA_H_
#define QPS_TASMEEA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qps/quran-corpus.h"

namespace qps {

struct TasmeeaParams {
  int overlap_words = 6;
  int window_words = 30;
  double acceptance_ratio = 0.5;
  bool include_istiaatha = false;
  bool include_sadaka = false;

  // Throws ValidationError unless window_words > 10 and the ratio is in
  // [0, 1] and overlap_words >= 0.
  void Validate() const;
};

enum class SpecialPhrase { kNone, kIstiaatha, kSadaka };

extern const char kIstiaatha[];  // أعوذ بالله من الشيطان الرجيم
extern const char kSadaka[];     // صدق الله العظيم

struct Match {
  int sura = 0;
  int start_word = 0;  // 0-based index into the sura word list
  int word_count = 0;  // 0 for a special phrase
  std::string text;
};

struct MatchResult {
  std::optional<Match> matched;
  double ratio = 0.0;
  SpecialPhrase special = SpecialPhrase::kNone;
};

struct MatcherState {
  int aya_word_cursor = 0;
  int penalty = 0;
};

int64_t EditDistance(const NormalizedText &a, const NormalizedText &b);

// 1 - min(d, |segment|) / |segment|.  Throws InputError on an empty
// segment.
double SimilarityRatio(const NormalizedText &segment,
                       const NormalizedText &candidate);

// Best window for one segment.  offset is the start relative to the
// cursor before clamping; start/count are clamped to the sura.
struct Candidate {
  int offset = 0;
  int start = 0;
  int count = 0;
  double ratio = 0.0;
  bool found = false;
};

// Scores every (offset, width) pair of the search range.  words are the
// normalized sura words.  With naive set every candidate is scored by a
// separate edit distance; otherwise one prefix pass per offset scores all
// widths.  Both give the same result.  evaluations, if given, is increased
// by the number of (offset, width) pairs scored.
Candidate SearchCandidates(const std::vector<std::u32string> &words,
                           const std::u32string &segment, int cursor,
                           int penalty, const TasmeeaParams &params,
                           bool naive = false, int64_t *evaluations = nullptr);

// Stateful matcher over one sura; one call per segment in order.
class TasmeeaMatcher {
 public:
  TasmeeaMatcher(const QuranCorpus &corpus, int sura,
                 const TasmeeaParams &params);

  MatchResult Next(const std::string &segment, bool first, bool last);

  const MatcherState &state() const { return state_; }
  int64_t evaluations() const { return evaluations_; }

 private:
  const QuranCorpus &corpus_;
  int sura_;
  TasmeeaParams params_;
  std::vector<std::u32string> words_;
  MatcherState state_;
  int64_t evaluations_ = 0;
};

std::vector<MatchResult> MatchSegments(const std::vector<std::string> &segments,
                                       int sura, const TasmeeaParams &params,
                                       const QuranCorpus &corpus);

struct WordGap {
  int start_word = 0;
  int word_count = 0;
  bool operator==(const WordGap &o) const = default;
};

// Maximal runs of sura words covered by no accepted match.
std::vector<WordGap> MissingPortions(const std::vector<MatchResult> &results,
                                     const QuranCorpus &corpus, int sura);

}  // namespace qps

#endif  // QPS_TASMEEA_H_
