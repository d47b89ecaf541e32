// Copyright 2026 The Agatha Pipeline Authors.
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

#ifndef AGATHA_ERROR_H_
#define AGATHA_ERROR_H_

#include <stdexcept>
#include <string>

namespace agatha {

// Input error attributed to a pipeline module. what() reads
// "<module>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string &message);

  const std::string &module() const { return module_; }
  const std::string &message() const { return message_; }

 private:
  std::string module_;
  std::string message_;
};

// Broken internal invariant; a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace agatha

#endif  // AGATHA_ERROR_H_
