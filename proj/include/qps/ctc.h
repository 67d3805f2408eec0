// include/qps/ctc.h

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

#ifndef QPS_CTC_H_
#define QPS_CTC_H_

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qps {

typedef std::vector<int> TokenSeq;

constexpr int kCtcBlank = 0;

// T x V log-probabilities, time-major.
struct LogProbMatrix {
  int steps = 0;
  int vocab = 0;
  std::vector<double> values;

  LogProbMatrix() = default;
  LogProbMatrix(int t, int v) : steps(t), vocab(v), values(size_t(t) * v) {}

  double &at(int t, int v) { return values[size_t(t) * vocab + v]; }
  double at(int t, int v) const { return values[size_t(t) * vocab + v]; }

  // Throws ValidationError if the shape is wrong or a row's log-sum-exp is
  // further than tol from 0.
  void Validate(double tol = 1e-6) const;
  // Subtracts each row's log-sum-exp.
  void Renormalize();
};

double LogSumExp(const double *v, int n);

// -log P(target | logits) by the blank-augmented forward recursion.
// Returns +infinity when no alignment exists.  Throws InputError for a
// blank or out-of-range token in target.
double CtcForwardLoss(const LogProbMatrix &logits, const TokenSeq &target);

// Per-step argmax (lowest index on ties), collapse repeats, drop blanks.
TokenSeq GreedyDecode(const LogProbMatrix &logits);

constexpr int kNumLevels = 11;
// phonemes first, then the sifat levels.
const std::array<std::string, kNumLevels> &LevelNames();

class LevelWeights {
 public:
  // phonemes 0.4, every other level 0.06.
  LevelWeights();
  // Throws ValidationError unless exactly the 11 levels are given, all
  // weights are >= 0 and they sum to 1 within 1e-12.
  explicit LevelWeights(const std::map<std::string, double> &weights);

  double weight(const std::string &level) const;
  double Sum() const;
  const std::map<std::string, double> &map() const { return weights_; }

 private:
  std::map<std::string, double> weights_;
};

struct NamedLogits {
  std::string name;
  LogProbMatrix logits;
};
typedef std::vector<NamedLogits> MultiLevelLogits;

// Throws InputError unless the names are exactly the 11 levels and every
// level has the same T.
void CheckMultiLevel(const MultiLevelLogits &logits);

double MultiLevelLoss(const MultiLevelLogits &logits,
                      const std::map<std::string, TokenSeq> &targets,
                      const LevelWeights &weights);

// Throws InputError on an empty reference.
double PhonemeErrorRate(const TokenSeq &reference, const TokenSeq &hypothesis);

struct SeqPair {
  TokenSeq reference;
  TokenSeq hypothesis;
};

struct PerReport {
  std::vector<std::pair<std::string, double>> per_level;  // LevelNames order
  double average_per = 0.0;
};

// Corpus-level PER per level, then the unweighted mean over the 11 levels.
PerReport ComputePerReport(
    const std::map<std::string, std::vector<SeqPair>> &pairs);

}  // namespace qps

#endif  // QPS_CTC_H_
