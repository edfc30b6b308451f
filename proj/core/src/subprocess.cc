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

#include "subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace vulaug::internal {
namespace {

constexpr size_t kMaxCapture = 16 << 20;

}  // namespace

ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::string& stdin_path,
                         std::chrono::milliseconds timeout) {
  ProcessResult result;
  int pipe_fds[2];
  if (pipe(pipe_fds) != 0) {
    result.spawn_failed = true;
    return result;
  }
  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);
  const char* in_path = stdin_path.empty() ? "/dev/null" : stdin_path.c_str();

  pid_t pid = fork();
  if (pid < 0) {
    close(pipe_fds[0]);
    close(pipe_fds[1]);
    result.spawn_failed = true;
    return result;
  }
  if (pid == 0) {
    setpgid(0, 0);
    int in_fd = open(in_path, O_RDONLY);
    int null_fd = open("/dev/null", O_WRONLY);
    if (in_fd < 0 || null_fd < 0) _exit(127);
    dup2(in_fd, 0);
    dup2(pipe_fds[1], 1);
    dup2(null_fd, 2);
    close(pipe_fds[0]);
    close(pipe_fds[1]);
    close(in_fd);
    close(null_fd);
    execvp(args[0], args.data());
    _exit(127);
  }
  setpgid(pid, pid);
  close(pipe_fds[1]);
  int fd = pipe_fds[0];
  fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK);

  auto deadline = std::chrono::steady_clock::now() + timeout;
  bool open_pipe = true;
  char buf[8192];
  while (open_pipe) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      break;
    }
    pollfd pfd{fd, POLLIN, 0};
    int rc = poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 100)));
    if (rc < 0 && errno != EINTR) break;
    if (rc <= 0) continue;
    while (true) {
      ssize_t n = read(fd, buf, sizeof(buf));
      if (n > 0) {
        if (result.out.size() < kMaxCapture) result.out.append(buf, static_cast<size_t>(n));
        continue;
      }
      if (n == 0) open_pipe = false;
      break;
    }
  }
  int status = 0;
  if (!result.timed_out) {
    // Output closed; the child may still be running with a closed stdout.
    while (true) {
      pid_t w = waitpid(pid, &status, WNOHANG);
      if (w == pid) break;
      if (w < 0 && errno != EINTR) break;
      if (std::chrono::steady_clock::now() >= deadline) {
        result.timed_out = true;
        break;
      }
      usleep(1000);
    }
  }
  if (result.timed_out) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
    waitpid(pid, &status, 0);
  }
  close(fd);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

TempDir::TempDir() {
  std::string base = std::filesystem::temp_directory_path() / "vulaug-XXXXXX";
  std::vector<char> buf(base.begin(), base.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) {
    throw std::system_error(errno, std::generic_category(), "mkdtemp");
  }
  path_ = buf.data();
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace vulaug::internal
