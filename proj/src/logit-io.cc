// src/logit-io.cc

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

#include "qps/logit-io.h"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "qps/base.h"

namespace qps {

namespace {

class Reader {
 public:
  explicit Reader(std::istream &is) : is_(is) {}

  void Bytes(char *buf, size_t n, const char *what) {
    is_.read(buf, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(is_.gcount()) != n)
      throw InputError(std::string("truncated ") + what, offset_);
    offset_ += static_cast<long>(n);
  }
  uint8_t U8(const char *what) {
    char c;
    Bytes(&c, 1, what);
    return static_cast<uint8_t>(c);
  }
  uint32_t U32(const char *what) {
    unsigned char b[4];
    Bytes(reinterpret_cast<char *>(b), 4, what);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 |
           uint32_t(b[3]) << 24;
  }
  float F32(const char *what) {
    uint32_t u = U32(what);
    float f;
    std::memcpy(&f, &u, 4);
    return f;
  }
  long offset() const { return offset_; }

 private:
  std::istream &is_;
  long offset_ = 0;
};

void PutU32(std::ostream &os, uint32_t u) {
  char b[4] = {char(u & 0xff), char(u >> 8 & 0xff), char(u >> 16 & 0xff),
               char(u >> 24 & 0xff)};
  os.write(b, 4);
}

}  // namespace

MultiLevelLogits ReadLogits(std::istream &is, bool renormalize) {
  Reader r(is);
  char magic[4];
  r.Bytes(magic, 4, "magic");
  if (std::memcmp(magic, "QPSL", 4) != 0)
    throw InputError("bad magic, expected QPSL", 0);
  uint8_t version = r.U8("version");
  if (version != kQpslVersion)
    throw InputError("unsupported QPSL version " + std::to_string(version), 4);
  uint8_t levels = r.U8("level count");
  if (levels == 0) throw InputError("QPSL file has no levels", 5);
  MultiLevelLogits out;
  for (int l = 0; l < levels; l++) {
    uint8_t len = r.U8("level name length");
    std::string name(len, '\0');
    if (len > 0) r.Bytes(&name[0], len, "level name");
    long shape_at = r.offset();
    uint32_t t = r.U32("T"), v = r.U32("V");
    if (t < 1 || v < 2 || t > (1u << 24) || v > (1u << 16))
      throw InputError("level " + name + " has bad shape " +
                           std::to_string(t) + "x" + std::to_string(v),
                       shape_at);
    NamedLogits nl{name, LogProbMatrix(int(t), int(v))};
    for (double &x : nl.logits.values) x = r.F32("logit values");
    if (renormalize) nl.logits.Renormalize();
    try {
      nl.logits.Validate(1e-6);
    } catch (const ValidationError &e) {
      throw ValidationError("level " + name + ": " + e.what());
    }
    out.push_back(std::move(nl));
  }
  if (is.peek() != std::char_traits<char>::eof())
    throw InputError("trailing bytes after last level", r.offset());
  return out;
}

MultiLevelLogits ReadLogitsFile(const std::string &path, bool renormalize) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open " + path);
  return ReadLogits(is, renormalize);
}

void WriteLogits(const MultiLevelLogits &logits, std::ostream &os) {
  if (logits.empty() || logits.size() > 255)
    throw InputError("QPSL files hold 1 to 255 levels");
  os.write("QPSL", 4);
  os.put(static_cast<char>(kQpslVersion));
  os.put(static_cast<char>(logits.size()));
  for (const NamedLogits &l : logits) {
    if (l.name.size() > 255) throw InputError("level name too long: " + l.name);
    os.put(static_cast<char>(l.name.size()));
    os.write(l.name.data(), static_cast<std::streamsize>(l.name.size()));
    PutU32(os, static_cast<uint32_t>(l.logits.steps));
    PutU32(os, static_cast<uint32_t>(l.logits.vocab));
    for (double x : l.logits.values) {
      float f = static_cast<float>(x);
      uint32_t u;
      std::memcpy(&u, &f, 4);
      PutU32(os, u);
    }
  }
}

void WriteLogitsFile(const MultiLevelLogits &logits, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write " + path);
  WriteLogits(logits, os);
  if (!os) throw InputError("write failed for " + path);
}

}  // namespace qps
