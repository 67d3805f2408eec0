// include/qps/phonetizer.h

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

#ifndef QPS_PHONETIZER_H_
#define QPS_PHONETIZER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qps/alphabet.h"
#include "qps/moshaf-attributes.h"

namespace qps {

struct UtteranceContext {
  bool starts_utterance = true;
  bool ends_with_pause = true;  // waqf at the end of the text
};

// Text between pipeline stages, UTF-8 over the Uthmani code points plus the
// private-use markers listed in docs/alphabet.md.  Stage 0 is the
// canonicalized input.
struct IntermediateText {
  std::string value;
  int stage = 0;
};

struct PhonemeSequence {
  std::vector<Phoneme> phonemes;
  std::string source_text;
  uint64_t attrs_fingerprint = 0;
  // Index of the first phoneme of every word after the first.  Words are
  // not part of the phoneme stream; sifat rules use them for context.
  std::vector<int> word_starts;
  // Indices of phonemes that carry a ghunna without being a nasal, e.g.
  // the first of the two yaa of an idgham with ghunna.
  std::vector<int> ghunna_hints;

  size_t size() const { return phonemes.size(); }
};

constexpr int kNumOperations = 26;

// Name of operation op_id (1..26), e.g. "DisassembleHrofMoqatta".
const char *OperationName(int op_id);

// Stage 0.  Validates the code points (InputError with the code point
// offset on anything outside the Uthmani block and whitespace), collapses
// whitespace, strips pause and section marks, and puts each letter's marks
// in canonical order (shadda first).
IntermediateText PrepareInput(const std::string &uthmani);

// Runs operation op_id on text at stage op_id - 1.  Throws SequencingError
// on a stage mismatch.
IntermediateText ApplyOperation(int op_id, const IntermediateText &text,
                                const MoshafAttributes &attrs,
                                const UtteranceContext &ctx);

// Maps stage-26 text to phonemes.  Spaces become word_starts and U+E045
// becomes a ghunna hint on the preceding phoneme; any other character
// without a phoneme throws EncodingError with its code point offset.
PhonemeSequence EncodePhonemes(const IntermediateText &final_text);

PhonemeSequence Phonetize(const std::string &uthmani,
                          const MoshafAttributes &attrs,
                          const UtteranceContext &ctx);

// Same pipeline; returns the text after every stage (27 entries, stage 0
// first).
std::vector<IntermediateText> PhonetizeTrace(const std::string &uthmani,
                                             const MoshafAttributes &attrs,
                                             const UtteranceContext &ctx);

// Space-separated phoneme names.
std::string PhonemeNames(const std::vector<Phoneme> &phonemes);
// The phonemes in display glyphs, one glyph per phoneme, no separators.
std::string PhoneticScript(const std::vector<Phoneme> &phonemes);

}  // namespace qps

#endif  // QPS_PHONETIZER_H_
