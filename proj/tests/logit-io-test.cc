// tests/logit-io-test.cc

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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qps/base.h"

namespace qps {

namespace {

NamedLogits Level(const std::string &name, int t, int v) {
  NamedLogits l{name, LogProbMatrix(t, v)};
  for (int i = 0; i < t; i++)
    for (int j = 0; j < v; j++) l.logits.at(i, j) = -(i + 1.0) * (j + 1.0);
  l.logits.Renormalize();
  return l;
}

std::string Bytes(const MultiLevelLogits &m) {
  std::ostringstream os;
  WriteLogits(m, os);
  return os.str();
}

}  // namespace

TEST_CASE("byte layout of a one-level file") {
  NamedLogits l{"ab", LogProbMatrix(1, 2)};
  l.logits.at(0, 0) = std::log(0.5f);
  l.logits.at(0, 1) = std::log(0.5f);
  std::string b = Bytes({l});
  REQUIRE(b.size() == 4 + 1 + 1 + 1 + 2 + 4 + 4 + 8);
  CHECK(b.substr(0, 4) == "QPSL");
  CHECK(b[4] == 1);
  CHECK(b[5] == 1);
  CHECK(b[6] == 2);
  CHECK(b.substr(7, 2) == "ab");
  CHECK(b.substr(9, 4) == std::string("\x01\x00\x00\x00", 4));
  CHECK(b.substr(13, 4) == std::string("\x02\x00\x00\x00", 4));
  // log(0.5f) = -0.693147f = 0xBF317218, little-endian.
  CHECK(b.substr(17, 4) == std::string("\x18\x72\x31\xBF", 4));
}

TEST_CASE("round trip") {
  MultiLevelLogits m = {Level("phonemes", 5, 43), Level("qalqla", 5, 3)};
  std::istringstream is(Bytes(m));
  MultiLevelLogits back = ReadLogits(is);
  REQUIRE(back.size() == 2);
  CHECK(back[1].name == "qalqla");
  CHECK(back[0].logits.steps == 5);
  CHECK(back[0].logits.vocab == 43);
  for (size_t i = 0; i < m[0].logits.values.size(); i++)
    CHECK(back[0].logits.values[i] == float(m[0].logits.values[i]));
  CHECK(Bytes(back) == Bytes(m));
}

TEST_CASE("malformed files") {
  std::string good = Bytes({Level("x", 2, 3)});
  auto read = [](const std::string &s, bool renorm = false) {
    std::istringstream is(s);
    return ReadLogits(is, renorm);
  };
  CHECK_THROWS_AS(read("QPSX" + good.substr(4)), InputError);
  std::string v2 = good;
  v2[4] = 2;
  CHECK_THROWS_AS(read(v2), InputError);
  try {
    read(good.substr(0, good.size() - 1));
    FAIL("no throw");
  } catch (const InputError &e) {
    CHECK(e.offset() == long(good.size()) - 4);
  }
  CHECK_THROWS_AS(read(good + "z"), InputError);
  CHECK_THROWS_AS(read(""), InputError);
}

TEST_CASE("unnormalized rows") {
  MultiLevelLogits m = {Level("x", 2, 3)};
  m[0].logits.at(1, 1) += 0.5;
  std::string b = Bytes(m);
  std::istringstream a(b);
  CHECK_THROWS_AS(ReadLogits(a), ValidationError);
  std::istringstream c(b);
  MultiLevelLogits fixed = ReadLogits(c, true);
  CHECK_NOTHROW(fixed[0].logits.Validate(1e-9));
}

}  // namespace qps
