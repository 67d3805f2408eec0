// src/tasmeea.cc

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

#include "qps/tasmeea.h"

#include <algorithm>
#include <cstdlib>

#include "qps/base.h"
#include "qps/edit-distance.h"

namespace qps {

const char kIstiaatha[] = "أعوذ بالله من الشيطان الرجيم";
const char kSadaka[] = "صدق الله العظيم";

void TasmeeaParams::Validate() const {
  if (window_words <= 10)
    throw ValidationError("window_words must be greater than 10");
  if (overlap_words < 0)
    throw ValidationError("overlap_words must not be negative");
  if (!(acceptance_ratio >= 0.0 && acceptance_ratio <= 1.0))
    throw ValidationError("acceptance_ratio must be in [0, 1]");
}

int64_t EditDistance(const NormalizedText &a, const NormalizedText &b) {
  return LevenshteinDistance(a.value, b.value);
}

namespace {

double Ratio(int64_t dist, size_t len) {
  int64_t l = static_cast<int64_t>(len);
  return 1.0 - static_cast<double>(std::min(dist, l)) / static_cast<double>(l);
}

// Line 18: a strictly better ratio, or an equal one nearer the cursor.
bool Better(double ratio, int offset, const Candidate &best) {
  if (!best.found) return true;
  if (ratio > best.ratio) return true;
  return ratio == best.ratio && std::abs(offset) < std::abs(best.offset);
}

}  // namespace

double SimilarityRatio(const NormalizedText &segment,
                       const NormalizedText &candidate) {
  if (segment.value.empty()) throw InputError("empty segment");
  return Ratio(EditDistance(segment, candidate), segment.value.size());
}

Candidate SearchCandidates(const std::vector<std::u32string> &words,
                           const std::u32string &segment, int cursor,
                           int penalty, const TasmeeaParams &params,
                           bool naive, int64_t *evaluations) {
  Candidate best;
  if (segment.empty()) return best;
  const int n = static_cast<int>(words.size());
  const int min_win = params.window_words - 10;
  const int max_win = params.window_words + 10;
  const int lo = -(params.overlap_words + penalty);
  const int hi =
      params.overlap_words + std::max(params.window_words, max_win) + penalty;
  int64_t evals = 0;
  for (int p = lo; p <= hi; p++) {
    // Windows are clamped like WordWindow: a start before the sura moves
    // to 0 and keeps its width.
    const int start = std::max(0, cursor + p);
    if (start >= n) continue;
    // Text of the widest window and the character offset at which every
    // word of it ends.
    std::u32string text;
    std::vector<size_t> ends;
    for (int k = start; k < std::min(n, start + max_win); k++) {
      text += words[k];
      ends.push_back(text.size());
    }
    std::vector<int64_t> prefix;
    if (!naive) prefix = LevenshteinToPrefixes(segment, text);
    for (int w = min_win; w <= max_win; w++) {
      const int end = std::min(n, start + w);
      const size_t chars = ends[end - start - 1];
      const int64_t dist =
          naive ? LevenshteinDistance(segment, text.substr(0, chars))
                : prefix[chars];
      evals++;
      const double ratio = Ratio(dist, segment.size());
      if (Better(ratio, p, best)) {
        best.found = true;
        best.ratio = ratio;
        best.offset = p;
        best.start = start;
        best.count = end - start;
      }
    }
  }
  if (evaluations) *evaluations += evals;
  return best;
}

TasmeeaMatcher::TasmeeaMatcher(const QuranCorpus &corpus, int sura,
                               const TasmeeaParams &params)
    : corpus_(corpus), sura_(sura), params_(params) {
  params_.Validate();
  for (const IndexedWord &w : corpus.SuraWords(sura))
    words_.push_back(NormalizeForMatching(w.text).value);
}

MatchResult TasmeeaMatcher::Next(const std::string &segment, bool first,
                                 bool last) {
  MatchResult r;
  NormalizedText norm = NormalizeForMatching(segment);
  if (norm.value.empty()) return r;

  SpecialPhrase special = SpecialPhrase::kNone;
  if (first && params_.include_istiaatha)
    special = SpecialPhrase::kIstiaatha;
  else if (last && params_.include_sadaka)
    special = SpecialPhrase::kSadaka;
  if (special != SpecialPhrase::kNone) {
    const char *phrase =
        special == SpecialPhrase::kIstiaatha ? kIstiaatha : kSadaka;
    double ratio = SimilarityRatio(norm, NormalizeForMatching(phrase));
    if (ratio >= params_.acceptance_ratio) {
      // The phrase is not part of the sura: the cursor does not move.
      r.ratio = ratio;
      r.special = special;
      r.matched = Match{sura_, state_.aya_word_cursor, 0, phrase};
      return r;
    }
  }

  Candidate best = SearchCandidates(words_, norm.value, state_.aya_word_cursor,
                                    state_.penalty, params_, false,
                                    &evaluations_);
  r.ratio = best.found ? best.ratio : 0.0;
  if (!best.found || best.ratio < params_.acceptance_ratio) {
    state_.penalty = params_.window_words + 10;
    // Advance by the length of the aya under the cursor, clamped to the
    // sura end.
    const std::vector<IndexedWord> &w = corpus_.SuraWords(sura_);
    const int n = static_cast<int>(w.size());
    int c = state_.aya_word_cursor;
    if (c < n) {
      int len = 0;
      for (const IndexedWord &iw : w) len += iw.aya == w[c].aya;
      state_.aya_word_cursor = std::min(n, c + len);
    }
    return r;
  }
  r.matched = Match{sura_, best.start, best.count,
                    WordWindow(corpus_, sura_, best.start, best.count)};
  state_.aya_word_cursor = best.start + best.count;
  state_.penalty = 0;
  return r;
}

std::vector<MatchResult> MatchSegments(const std::vector<std::string> &segments,
                                       int sura, const TasmeeaParams &params,
                                       const QuranCorpus &corpus) {
  if (sura < 1 || sura > kNumSuras)
    throw InputError("sura must be in [1, 114], got " + std::to_string(sura));
  std::vector<MatchResult> out;
  if (segments.empty()) return out;
  TasmeeaMatcher m(corpus, sura, params);
  for (size_t i = 0; i < segments.size(); i++)
    out.push_back(m.Next(segments[i], i == 0, i + 1 == segments.size()));
  return out;
}

std::vector<WordGap> MissingPortions(const std::vector<MatchResult> &results,
                                     const QuranCorpus &corpus, int sura) {
  const int n = corpus.NumSuraWords(sura);
  std::vector<bool> covered(n, false);
  for (const MatchResult &r : results) {
    if (!r.matched || r.special != SpecialPhrase::kNone) continue;
    for (int k = r.matched->start_word;
         k < r.matched->start_word + r.matched->word_count && k < n; k++)
      if (k >= 0) covered[k] = true;
  }
  std::vector<WordGap> gaps;
  for (int k = 0; k < n;) {
    if (covered[k]) {
      k++;
      continue;
    }
    int j = k;
    while (j < n && !covered[j]) j++;
    gaps.push_back(WordGap{k, j - k});
    k = j;
  }
  return gaps;
}

}  // namespace qps
