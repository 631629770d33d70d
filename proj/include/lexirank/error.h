// Copyright 2026 The Lexirank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXIRANK_ERROR_H_
#define LEXIRANK_ERROR_H_

#include <stdexcept>
#include <string>

namespace lexirank {

enum class ErrorKind {
  kUsage,           // bad arguments or configuration
  kInput,           // missing or unreadable file
  kFormat,          // file does not follow the expected layout
  kIntegrity,       // dangling references between records
  kUnsupported,     // the knowledge base lacks something a method needs
  kNonConvergence,  // PageRank did not reach the tolerance
  kEvaluation,      // degenerate evaluation input
};

const char *ErrorKindName(ErrorKind kind);

// Maps an error kind onto the command line exit status:
// 1 usage, 2 input/format, 3 numerical non-convergence.
int ExitCodeFor(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &module, const std::string &message)
      : std::runtime_error(module + ": " + message),
        kind_(kind),
        module_(module) {}

  ErrorKind kind() const { return kind_; }
  const std::string &module() const { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

// Thrown by PageRank when max_iterations is exhausted.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string &message, double residual,
                      int iterations)
      : Error(ErrorKind::kNonConvergence, "ppv", message),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace lexirank

#endif  // LEXIRANK_ERROR_H_
