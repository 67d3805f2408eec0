// src/utf8.cc

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

#include "qps/utf8.h"

#include "qps/base.h"

namespace qps {

std::u32string Utf8ToU32(const std::string &s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0, n = s.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp;
    int len;
    if (c < 0x80) {
      cp = c; len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F; len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F; len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07; len = 4;
    } else {
      throw EncodingError("invalid UTF-8 lead byte", static_cast<long>(i));
    }
    if (i + len > n)
      throw EncodingError("truncated UTF-8 sequence", static_cast<long>(i));
    for (int k = 1; k < len; k++) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80)
        throw EncodingError("invalid UTF-8 continuation byte",
                            static_cast<long>(i + k));
      cp = (cp << 6) | (cc & 0x3F);
    }
    static const char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw EncodingError("invalid UTF-8 code point", static_cast<long>(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

void AppendUtf8(char32_t c, std::string *out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string U32ToUtf8(const std::u32string &s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (char32_t c : s) AppendUtf8(c, &out);
  return out;
}

std::wstring Utf8ToWide(const std::string &s) {
  std::u32string u = Utf8ToU32(s);
  return std::wstring(u.begin(), u.end());
}

std::string WideToUtf8(const std::wstring &s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (wchar_t c : s) AppendUtf8(static_cast<char32_t>(c), &out);
  return out;
}

bool IsSpaceCodePoint(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
         c == 0x3000;
}

std::vector<std::string> SplitWords(const std::string &s) {
  std::vector<std::string> words;
  std::u32string u = Utf8ToU32(s);
  std::u32string cur;
  for (char32_t c : u) {
    if (IsSpaceCodePoint(c)) {
      if (!cur.empty()) {
        words.push_back(U32ToUtf8(cur));
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) words.push_back(U32ToUtf8(cur));
  return words;
}

std::string JoinWords(const std::vector<std::string> &words,
                      size_t begin, size_t end) {
  std::string out;
  for (size_t i = begin; i < end && i < words.size(); i++) {
    if (i > begin) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace qps
