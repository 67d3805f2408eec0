// src/phonetizer.cc

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

#include "qps/phonetizer.h"

#include <cstdio>
#include <optional>

#include "qps/base.h"
#include "qps/utf8.h"
#include "phonetizer-ops.h"

namespace qps {

namespace {

bool AllowedInput(char32_t c) {
  return (c >= 0x0621 && c <= 0x063A) || (c >= 0x0640 && c <= 0x0655) ||
         c == 0x0670 || c == 0x0671 || (c >= 0x06D6 && c <= 0x06ED) ||
         (c >= 0x08F0 && c <= 0x08F2);
}

// Pause signs, the end-of-aya and section signs, the sajda sign and the
// small high madda that marks a sajda in some encodings.
bool StrippedInput(char32_t c) {
  return (c >= 0x06D6 && c <= 0x06DB) || c == 0x06DD || c == 0x06DE ||
         c == 0x06E9 || c == 0x06E4;
}

void CheckStage(int op_id, const IntermediateText &text) {
  if (op_id < 1 || op_id > kNumOperations)
    throw SequencingError("no operation " + std::to_string(op_id));
  if (text.stage != op_id - 1)
    throw SequencingError(std::string(OperationName(op_id)) +
                          " expects stage " + std::to_string(op_id - 1) +
                          ", got " + std::to_string(text.stage));
}

}  // namespace

const char *OperationName(int op_id) {
  if (op_id < 1 || op_id > kNumOperations) return "";
  return internal::OperationNameInternal(op_id);
}

IntermediateText PrepareInput(const std::string &uthmani) {
  std::u32string in;
  try {
    in = Utf8ToU32(uthmani);
  } catch (const EncodingError &e) {
    throw InputError("invalid UTF-8", e.offset());
  }
  std::wstring out;
  bool pending_space = false;
  for (size_t i = 0; i < in.size(); i++) {
    char32_t c = in[i];
    if (IsSpaceCodePoint(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (!AllowedInput(c))
      throw InputError("code point U+" + [&] {
        char buf[8];
        snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(c));
        return std::string(buf);
      }() + " is not Uthmani script", static_cast<long>(i));
    if (StrippedInput(c)) continue;
    if (c == 0x0652) c = ch::kSukun;
    if (pending_space) out += L' ';
    pending_space = false;
    out += static_cast<wchar_t>(c);
  }
  internal::CanonicalizeMarks(&out);
  return IntermediateText{WideToUtf8(out), 0};
}

IntermediateText ApplyOperation(int op_id, const IntermediateText &text,
                                const MoshafAttributes &attrs,
                                const UtteranceContext &ctx) {
  CheckStage(op_id, text);
  std::wstring w = Utf8ToWide(text.value);
  try {
    internal::RunOperation(op_id, &w, attrs, ctx);
  } catch (const PipelineError &e) {
    throw PipelineError(std::string(OperationName(op_id)) + ": " + e.what());
  } catch (const std::runtime_error &e) {
    // boost::regex reports runaway matching this way.
    if (dynamic_cast<const Error *>(&e)) throw;
    throw PipelineError(std::string(OperationName(op_id)) + ": " + e.what());
  }
  return IntermediateText{WideToUtf8(w), op_id};
}

PhonemeSequence EncodePhonemes(const IntermediateText &final_text) {
  if (final_text.stage != kNumOperations)
    throw SequencingError("encoding expects stage 26, got " +
                          std::to_string(final_text.stage));
  PhonemeSequence seq;
  std::wstring w = Utf8ToWide(final_text.value);
  for (size_t i = 0; i < w.size(); i++) {
    wchar_t c = w[i];
    if (c == L' ') {
      if (!seq.phonemes.empty() &&
          (seq.word_starts.empty() ||
           seq.word_starts.back() != static_cast<int>(seq.phonemes.size())))
        seq.word_starts.push_back(static_cast<int>(seq.phonemes.size()));
      continue;
    }
    if (c == ch::kGhunnaHint) {
      if (seq.phonemes.empty())
        throw EncodingError("ghunna hint with no phoneme",
                            static_cast<long>(i));
      seq.ghunna_hints.push_back(static_cast<int>(seq.phonemes.size()) - 1);
      continue;
    }
    std::optional<Phoneme> p = PhonemeFromWorkingChar(c);
    if (!p) {
      char buf[8];
      snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(c));
      throw EncodingError(std::string("unmapped U+") + buf,
                          static_cast<long>(i));
    }
    seq.phonemes.push_back(*p);
  }
  if (!seq.word_starts.empty() &&
      seq.word_starts.back() == static_cast<int>(seq.phonemes.size()))
    seq.word_starts.pop_back();
  return seq;
}

std::vector<IntermediateText> PhonetizeTrace(const std::string &uthmani,
                                             const MoshafAttributes &attrs,
                                             const UtteranceContext &ctx) {
  std::vector<IntermediateText> trace;
  trace.push_back(PrepareInput(uthmani));
  for (int op = 1; op <= kNumOperations; op++)
    trace.push_back(ApplyOperation(op, trace.back(), attrs, ctx));
  return trace;
}

PhonemeSequence Phonetize(const std::string &uthmani,
                          const MoshafAttributes &attrs,
                          const UtteranceContext &ctx) {
  IntermediateText t = PrepareInput(uthmani);
  for (int op = 1; op <= kNumOperations; op++)
    t = ApplyOperation(op, t, attrs, ctx);
  PhonemeSequence seq = EncodePhonemes(t);
  seq.source_text = uthmani;
  seq.attrs_fingerprint = AttributesFingerprint(attrs);
  return seq;
}

std::string PhonemeNames(const std::vector<Phoneme> &phonemes) {
  std::string out;
  for (size_t i = 0; i < phonemes.size(); i++) {
    if (i) out += ' ';
    out += PhonemeName(phonemes[i]);
  }
  return out;
}

std::string PhoneticScript(const std::vector<Phoneme> &phonemes) {
  std::string out;
  for (Phoneme p : phonemes) out += PhonemeGlyph(p);
  return out;
}

}  // namespace qps
