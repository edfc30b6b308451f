// Copyright 2026 The vulaug Authors
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

#ifndef VULAUG_SRC_SUBPROCESS_H_
#define VULAUG_SRC_SUBPROCESS_H_

#include <chrono>
#include <string>
#include <vector>

namespace vulaug::internal {

struct ProcessResult {
  int exit_code = 0;  // 128 + signal number for signaled children
  bool timed_out = false;
  bool spawn_failed = false;
  std::string out;
};

// Runs argv[0] with `stdin_path` (or /dev/null when empty) as standard
// input, capturing standard output and discarding standard error. The
// whole process group is killed after `timeout`.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::string& stdin_path,
                         std::chrono::milliseconds timeout);

// Single-quoted for /bin/sh.
std::string ShellQuote(const std::string& s);

// Private directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace vulaug::internal

#endif  // VULAUG_SRC_SUBPROCESS_H_
