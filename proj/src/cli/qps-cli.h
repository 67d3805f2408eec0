// src/cli/qps-cli.h

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

#ifndef QPS_CLI_QPS_CLI_H_
#define QPS_CLI_QPS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qps {
namespace cli {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

// Runs one invocation.  Records go to out; diagnostics (one line) to err.
int Run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

struct CommandFlags {
  std::string command;
  std::vector<std::string> flags;  // long names, e.g. "--sura"
  std::string help;                // the command's --help text
};

// Every registered flag of every command, taken from the parser itself.
std::vector<CommandFlags> DescribeFlags();

}  // namespace cli
}  // namespace qps

#endif  // QPS_CLI_QPS_CLI_H_
