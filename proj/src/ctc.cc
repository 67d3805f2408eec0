// src/ctc.cc

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
#include <limits>
#include <set>

#include "qps/base.h"
#include "qps/edit-distance.h"

namespace qps {

namespace {

const double kNegInf = -std::numeric_limits<double>::infinity();

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

}  // namespace

double LogSumExp(const double *v, int n) {
  double m = kNegInf;
  for (int i = 0; i < n; i++) m = std::max(m, v[i]);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (int i = 0; i < n; i++) s += std::exp(v[i] - m);
  return m + std::log(s);
}

void LogProbMatrix::Validate(double tol) const {
  if (steps < 1) throw ValidationError("logits need at least one step");
  if (vocab < 2) throw ValidationError("logits need a vocabulary of 2 or more");
  if (values.size() != size_t(steps) * vocab)
    throw ValidationError("logit grid size does not match T x V");
  for (int t = 0; t < steps; t++) {
    double lse = LogSumExp(&values[size_t(t) * vocab], vocab);
    if (!(std::fabs(lse) <= tol))
      throw ValidationError("row " + std::to_string(t) +
                            " is not normalized (log-sum-exp " +
                            std::to_string(lse) + ")");
  }
}

void LogProbMatrix::Renormalize() {
  for (int t = 0; t < steps; t++) {
    double *row = &values[size_t(t) * vocab];
    double lse = LogSumExp(row, vocab);
    for (int v = 0; v < vocab; v++) row[v] -= lse;
  }
}

double CtcForwardLoss(const LogProbMatrix &logits, const TokenSeq &target) {
  for (size_t i = 0; i < target.size(); i++)
    if (target[i] <= kCtcBlank || target[i] >= logits.vocab)
      throw InputError("target token " + std::to_string(target[i]) +
                           " is out of range",
                       static_cast<long>(i));
  const int T = logits.steps;
  const int S = 2 * static_cast<int>(target.size()) + 1;
  auto label = [&](int s) { return s % 2 == 0 ? kCtcBlank : target[s / 2]; };
  std::vector<double> alpha(S, kNegInf), next(S);
  alpha[0] = logits.at(0, kCtcBlank);
  if (S > 1) alpha[1] = logits.at(0, label(1));
  for (int t = 1; t < T; t++) {
    for (int s = 0; s < S; s++) {
      double a = alpha[s];
      if (s >= 1) a = LogAdd(a, alpha[s - 1]);
      if (s >= 2 && label(s) != kCtcBlank && label(s) != label(s - 2))
        a = LogAdd(a, alpha[s - 2]);
      next[s] = a == kNegInf ? kNegInf : a + logits.at(t, label(s));
    }
    std::swap(alpha, next);
  }
  double ll = alpha[S - 1];
  if (S > 1) ll = LogAdd(ll, alpha[S - 2]);
  if (ll == kNegInf) return std::numeric_limits<double>::infinity();
  return -ll;
}

TokenSeq GreedyDecode(const LogProbMatrix &logits) {
  TokenSeq out;
  int prev = -1;
  for (int t = 0; t < logits.steps; t++) {
    int best = 0;
    for (int v = 1; v < logits.vocab; v++)
      if (logits.at(t, v) > logits.at(t, best)) best = v;
    if (best != prev && best != kCtcBlank) out.push_back(best);
    prev = best;
  }
  return out;
}

const std::array<std::string, kNumLevels> &LevelNames() {
  static const std::array<std::string, kNumLevels> names = {
      "phonemes", "hams_or_jahr", "shidda_or_rakhawa", "tafkheem_or_taqeeq",
      "itbaq",    "safeer",       "qalqla",            "tikraar",
      "tafashie", "istitala",     "ghonna"};
  return names;
}

LevelWeights::LevelWeights() {
  for (const std::string &n : LevelNames())
    weights_[n] = n == "phonemes" ? 0.4 : 0.06;
}

LevelWeights::LevelWeights(const std::map<std::string, double> &weights) {
  if (weights.size() != kNumLevels)
    throw ValidationError("expected weights for 11 levels, got " +
                          std::to_string(weights.size()));
  for (const std::string &n : LevelNames()) {
    auto it = weights.find(n);
    if (it == weights.end())
      throw ValidationError("missing weight for level " + n);
    if (!(it->second >= 0.0))
      throw ValidationError("weight for level " + n + " is negative");
  }
  weights_ = weights;
  if (std::fabs(Sum() - 1.0) > 1e-12)
    throw ValidationError("level weights sum to " + std::to_string(Sum()) +
                          ", not 1");
}

double LevelWeights::weight(const std::string &level) const {
  auto it = weights_.find(level);
  if (it == weights_.end()) throw InputError("unknown level " + level);
  return it->second;
}

double LevelWeights::Sum() const {
  double s = 0.0;
  for (const std::string &n : LevelNames()) s += weights_.at(n);
  return s;
}

void CheckMultiLevel(const MultiLevelLogits &logits) {
  std::set<std::string> seen;
  for (const NamedLogits &l : logits) {
    if (!seen.insert(l.name).second)
      throw InputError("duplicate level " + l.name);
    if (l.logits.steps != logits.front().logits.steps)
      throw InputError("level " + l.name + " has a different T");
  }
  std::set<std::string> want(LevelNames().begin(), LevelNames().end());
  if (seen != want) throw InputError("logits do not cover exactly the 11 levels");
}

double MultiLevelLoss(const MultiLevelLogits &logits,
                      const std::map<std::string, TokenSeq> &targets,
                      const LevelWeights &weights) {
  CheckMultiLevel(logits);
  if (targets.size() != kNumLevels)
    throw InputError("targets do not cover exactly the 11 levels");
  double total = 0.0;
  for (const NamedLogits &l : logits) {
    auto it = targets.find(l.name);
    if (it == targets.end()) throw InputError("no target for level " + l.name);
    total += weights.weight(l.name) * CtcForwardLoss(l.logits, it->second);
  }
  return total;
}

double PhonemeErrorRate(const TokenSeq &reference, const TokenSeq &hypothesis) {
  if (reference.empty()) throw InputError("empty reference");
  return static_cast<double>(LevenshteinDistance(reference, hypothesis)) /
         static_cast<double>(reference.size());
}

PerReport ComputePerReport(
    const std::map<std::string, std::vector<SeqPair>> &pairs) {
  if (pairs.size() != kNumLevels)
    throw InputError("PER report needs exactly the 11 levels");
  PerReport report;
  double sum = 0.0;
  for (const std::string &n : LevelNames()) {
    auto it = pairs.find(n);
    if (it == pairs.end()) throw InputError("missing level " + n);
    if (it->second.empty()) throw InputError("level " + n + " is empty");
    int64_t dist = 0, len = 0;
    for (const SeqPair &p : it->second) {
      dist += LevenshteinDistance(p.reference, p.hypothesis);
      len += static_cast<int64_t>(p.reference.size());
    }
    if (len == 0) throw InputError("level " + n + " has empty references");
    double per = static_cast<double>(dist) / static_cast<double>(len);
    report.per_level.emplace_back(n, per);
    sum += per;
  }
  report.average_per = sum / kNumLevels;
  return report;
}

}  // namespace qps
