// tests/test-util.h

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

#ifndef QPS_TESTS_TEST_UTIL_H_
#define QPS_TESTS_TEST_UTIL_H_

#include <string>
#include <vector>

#include "qps/moshaf-attributes.h"
#include "qps/phonetizer.h"
#include "qps/quran-corpus.h"

namespace qps {
namespace testing {

inline std::string DataPath(const std::string &name) {
  return std::string(QPS_DATA_DIR) + "/" + name;
}

inline std::string TestDataPath(const std::string &name) {
  return std::string(QPS_TEST_DATA_DIR) + "/" + name;
}

// The bundled Uthmani text, loaded once.
inline const QuranCorpus &Uthmani() {
  static const QuranCorpus corpus =
      LoadTanzilFile(DataPath("quran-uthmani.txt"), ScriptKind::kUthmani);
  return corpus;
}

// Required fields at 4 beats, everything else default.
inline MoshafAttributes TestAttributes() {
  return DefaultAttributes({{"madd_monfasel_len", "4"},
                            {"madd_mottasel_len", "4"},
                            {"madd_mottasel_waqf", "4"},
                            {"madd_aared_len", "4"}});
}

inline std::vector<std::string> Names(const PhonemeSequence &seq) {
  std::vector<std::string> out;
  for (Phoneme p : seq.phonemes) out.push_back(PhonemeName(p));
  return out;
}

inline std::string Join(const std::vector<std::string> &v) {
  std::string s;
  for (const std::string &x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

}  // namespace testing
}  // namespace qps

#endif  // QPS_TESTS_TEST_UTIL_H_
