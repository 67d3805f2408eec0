// tests/ctc-test.cc

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

#include "qps/ctc.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "qps/base.h"

namespace qps {

namespace {

LogProbMatrix RandomLogits(int t, int v, std::mt19937 *rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  LogProbMatrix m(t, v);
  for (double &x : m.values) x = std::log(u(*rng));
  m.Renormalize();
  return m;
}

TokenSeq Collapse(const TokenSeq &path) {
  TokenSeq out;
  int prev = -1;
  for (int x : path) {
    if (x != prev && x != kCtcBlank) out.push_back(x);
    prev = x;
  }
  return out;
}

// Sum over all V^T paths that collapse to target.
double BruteForceLoss(const LogProbMatrix &m, const TokenSeq &target) {
  std::vector<int> path(m.steps, 0);
  double total = 0.0;
  while (true) {
    if (Collapse(path) == target) {
      double lp = 0.0;
      for (int t = 0; t < m.steps; t++) lp += m.at(t, path[t]);
      total += std::exp(lp);
    }
    int t = 0;
    while (t < m.steps && ++path[t] == m.vocab) path[t++] = 0;
    if (t == m.steps) break;
  }
  return total == 0.0 ? INFINITY : -std::log(total);
}

std::vector<TokenSeq> AllTargets(int v, int max_len) {
  std::vector<TokenSeq> out = {{}};
  for (size_t i = 0; i < out.size(); i++) {
    if (int(out[i].size()) == max_len) continue;
    for (int x = 1; x < v; x++) {
      TokenSeq t = out[i];
      t.push_back(x);
      out.push_back(t);
    }
  }
  return out;
}

LogProbMatrix Constant(int t, int v, double p_blank) {
  LogProbMatrix m(t, v);
  for (int i = 0; i < t; i++) {
    m.at(i, 0) = std::log(p_blank);
    for (int j = 1; j < v; j++) m.at(i, j) = std::log((1 - p_blank) / (v - 1));
  }
  return m;
}

}  // namespace

TEST_CASE("forward loss examples") {
  LogProbMatrix m(1, 2);
  m.at(0, 0) = std::log(0.5);
  m.at(0, 1) = std::log(0.5);
  CHECK(CtcForwardLoss(m, {1}) == doctest::Approx(0.693147).epsilon(1e-6));

  std::mt19937 rng(1);
  LogProbMatrix r = RandomLogits(4, 3, &rng);
  double blanks = 0.0;
  for (int t = 0; t < 4; t++) blanks -= r.at(t, 0);
  CHECK(CtcForwardLoss(r, {}) == doctest::Approx(blanks).epsilon(1e-12));

  LogProbMatrix r3 = RandomLogits(3, 3, &rng);
  CHECK(std::fabs(CtcForwardLoss(r3, {1, 2}) - BruteForceLoss(r3, {1, 2})) <
        1e-9);
}

TEST_CASE("infeasible targets and bad tokens") {
  std::mt19937 rng(2);
  LogProbMatrix m = RandomLogits(2, 3, &rng);
  CHECK(std::isinf(CtcForwardLoss(m, {1, 1})));  // needs a blank between
  CHECK(std::isinf(CtcForwardLoss(m, {1, 2, 1})));
  CHECK(std::isfinite(CtcForwardLoss(m, {1, 2})));
  CHECK_THROWS_AS(CtcForwardLoss(m, {0}), InputError);
  CHECK_THROWS_AS(CtcForwardLoss(m, {3}), InputError);
}

TEST_CASE("forward loss equals path enumeration") {
  std::mt19937 rng(4);
  for (int t = 1; t <= 4; t++) {
    for (int v = 2; v <= 4; v++) {
      LogProbMatrix m = RandomLogits(t, v, &rng);
      for (const TokenSeq &target : AllTargets(v, 3)) {
        double a = CtcForwardLoss(m, target), b = BruteForceLoss(m, target);
        if (std::isinf(b))
          CHECK(std::isinf(a));
        else
          CHECK(std::fabs(a - b) < 1e-9);
      }
    }
  }
}

TEST_CASE("greedy decode") {
  auto path = [](const TokenSeq &argmax, int v) {
    LogProbMatrix m(int(argmax.size()), v);
    for (int t = 0; t < m.steps; t++)
      for (int j = 0; j < v; j++)
        m.at(t, j) = std::log(j == argmax[t] ? 0.9 : 0.1 / (v - 1));
    return m;
  };
  CHECK(GreedyDecode(path({0, 1, 1, 0, 2}, 3)) == TokenSeq{1, 2});
  CHECK(GreedyDecode(path({0, 0, 0}, 3)).empty());
  CHECK(GreedyDecode(path({1, 0, 1}, 3)) == TokenSeq{1, 1});
}

TEST_CASE("greedy decode recovers a dominant path") {
  std::mt19937 rng(8);
  const double eps = 1e-3;
  for (int iter = 0; iter < 200; iter++) {
    int t = 1 + rng() % 12, v = 2 + rng() % 5;
    TokenSeq p;
    for (int i = 0; i < t; i++) p.push_back(rng() % v);
    LogProbMatrix m(t, v);
    for (int i = 0; i < t; i++)
      for (int j = 0; j < v; j++)
        m.at(i, j) = std::log(j == p[i] ? 1 - eps : eps / (v - 1));
    CHECK(GreedyDecode(m) == Collapse(p));
  }
}

TEST_CASE("logit validation") {
  LogProbMatrix m = Constant(3, 4, 0.5);
  CHECK_NOTHROW(m.Validate());
  m.at(1, 2) += 0.01;
  CHECK_THROWS_AS(m.Validate(), ValidationError);
  m.Renormalize();
  CHECK_NOTHROW(m.Validate());
  CHECK_THROWS_AS(LogProbMatrix(2, 1).Validate(), ValidationError);
}

TEST_CASE("level weights") {
  LevelWeights w;
  CHECK(w.weight("phonemes") == 0.4);
  CHECK(w.weight("ghonna") == 0.06);
  CHECK(std::fabs(w.Sum() - 1.0) <= 1e-12);
  std::map<std::string, double> m = w.map();
  m["phonemes"] = 0.5;
  CHECK_THROWS_AS(LevelWeights{m}, ValidationError);
  m.erase("phonemes");
  CHECK_THROWS_AS(LevelWeights{m}, ValidationError);
  m = w.map();
  m["phonemes"] = 0.46;
  m["itbaq"] = 0.0;
  CHECK_NOTHROW(LevelWeights{m});
}

TEST_CASE("multi-level loss") {
  std::mt19937 rng(9);
  // Losses are controlled through the blank probability of an empty target:
  // loss = -T log p_blank.
  auto level_with_loss = [](double loss) {
    LogProbMatrix m = Constant(1, 3, std::exp(-loss));
    m.at(0, 0) = -loss;  // exact, so the weighted sum is exact too
    return m;
  };
  auto build = [&](std::map<std::string, double> losses) {
    MultiLevelLogits m;
    std::map<std::string, TokenSeq> targets;
    for (const std::string &n : LevelNames()) {
      m.push_back({n, level_with_loss(losses.count(n) ? losses[n] : 0.0)});
      targets[n] = {};
    }
    return std::make_pair(m, targets);
  };
  auto [m1, t1] = build({{"phonemes", 1.0}});
  CHECK(MultiLevelLoss(m1, t1, LevelWeights()) == 0.4);
  auto [m2, t2] = build({{"phonemes", 1.0}, {"qalqla", 1.0}});
  CHECK(MultiLevelLoss(m2, t2, LevelWeights()) ==
        doctest::Approx(0.4 + 0.06).epsilon(1e-15));
  std::map<std::string, double> all;
  for (const std::string &n : LevelNames()) all[n] = 0.7;
  auto [m3, t3] = build(all);
  CHECK(MultiLevelLoss(m3, t3, LevelWeights()) ==
        doctest::Approx(0.7).epsilon(1e-12));

  MultiLevelLogits short_set(m1.begin(), m1.end() - 1);
  CHECK_THROWS_AS(MultiLevelLoss(short_set, t1, LevelWeights()), InputError);
  MultiLevelLogits renamed = m1;
  renamed[3].name = "colour";
  CHECK_THROWS_AS(MultiLevelLoss(renamed, t1, LevelWeights()), InputError);
  MultiLevelLogits ragged = m1;
  ragged[2].logits = RandomLogits(2, 3, &rng);
  CHECK_THROWS_AS(MultiLevelLoss(ragged, t1, LevelWeights()), InputError);
}

TEST_CASE("phoneme error rate") {
  CHECK(PhonemeErrorRate({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(PhonemeErrorRate({1, 2, 3, 4}, {}) == 1.0);
  TokenSeq ref = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, hyp = ref;
  hyp[4] = 42;
  CHECK(PhonemeErrorRate(ref, hyp) == 0.1);
  CHECK_THROWS_AS(PhonemeErrorRate({}, {1}), InputError);

  // Relabeling the alphabet does not change the rate.
  std::mt19937 rng(12);
  for (int i = 0; i < 100; i++) {
    TokenSeq a, b;
    for (int k = 1 + rng() % 8; k > 0; k--) a.push_back(1 + rng() % 4);
    for (int k = rng() % 8; k > 0; k--) b.push_back(1 + rng() % 4);
    auto relabel = [](TokenSeq s) {
      for (int &x : s) x = 100 - 7 * x;
      return s;
    };
    CHECK(PhonemeErrorRate(a, b) == PhonemeErrorRate(relabel(a), relabel(b)));
  }
}

TEST_CASE("per report") {
  std::map<std::string, std::vector<SeqPair>> pairs;
  for (const std::string &n : LevelNames())
    pairs[n] = {{{1, 2, 3}, {1, 2, 3}}, {{4, 5}, {4, 5}}};
  PerReport r = ComputePerReport(pairs);
  CHECK(r.average_per == 0.0);
  for (const auto &kv : r.per_level) CHECK(kv.second == 0.0);

  // Injected edits: 1 substitution and 1 deletion in 20 reference tokens.
  TokenSeq ref(12, 1), hyp(12, 1);
  hyp[3] = 2;
  TokenSeq ref2(8, 3), hyp2(7, 3);
  pairs["tikraar"] = {{ref, hyp}, {ref2, hyp2}};
  r = ComputePerReport(pairs);
  CHECK(r.per_level[7].first == "tikraar");
  CHECK(r.per_level[7].second == 2.0 / 20.0);
  CHECK(r.average_per == (2.0 / 20.0) / 11.0);

  pairs["ghonna"] = {};
  CHECK_THROWS_AS(ComputePerReport(pairs), InputError);
  pairs.erase("ghonna");
  CHECK_THROWS_AS(ComputePerReport(pairs), InputError);
}

}  // namespace qps
