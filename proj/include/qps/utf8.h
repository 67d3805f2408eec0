// include/qps/utf8.h

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

#ifndef QPS_UTF8_H_
#define QPS_UTF8_H_

#include <string>
#include <vector>

namespace qps {

static_assert(sizeof(wchar_t) == 4, "wchar_t must hold one code point");

// Decodes UTF-8; throws EncodingError with the byte offset of the first bad
// sequence.  Overlong forms and surrogates are rejected.
std::u32string Utf8ToU32(const std::string &s);
std::string U32ToUtf8(const std::u32string &s);

// The rewrite engine works on std::wstring, which is UTF-32 on the platforms
// we support.
std::wstring Utf8ToWide(const std::string &s);
std::string WideToUtf8(const std::wstring &s);

void AppendUtf8(char32_t c, std::string *out);

// Splits on runs of Unicode white space (ASCII space, tab, CR, LF, NBSP and
// the U+2000 block spaces).  Empty tokens are never produced.
std::vector<std::string> SplitWords(const std::string &s);

bool IsSpaceCodePoint(char32_t c);

std::string JoinWords(const std::vector<std::string> &words,
                      size_t begin, size_t end);

}  // namespace qps

#endif  // QPS_UTF8_H_
