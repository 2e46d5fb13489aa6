#pragma once

// Child processes for the end-to-end checks: a long-running provider whose
// first stdout line is read back, and one-shot CLI runs with captured output.

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace testing {

namespace detail {

inline pid_t spawn(const std::vector<std::string>& argv, int stdin_fd, int stdout_fd, int stderr_fd) {
    const pid_t pid = ::fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        if (stdin_fd >= 0) ::dup2(stdin_fd, STDIN_FILENO);
        if (stdout_fd >= 0) ::dup2(stdout_fd, STDOUT_FILENO);
        if (stderr_fd >= 0) ::dup2(stderr_fd, STDERR_FILENO);
        std::vector<char*> args;
        for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        ::execv(args[0], args.data());
        ::_exit(127);
    }
    return pid;
}

inline void read_all(int fd, std::string& into) {
    char buf[4096];
    for (ssize_t n; (n = ::read(fd, buf, sizeof buf)) > 0;) into.append(buf, static_cast<std::size_t>(n));
}

} // namespace detail

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Runs `argv` to completion with `input` on stdin; stderr is discarded.
inline RunResult run(const std::vector<std::string>& argv, const std::string& input = {}) {
    int in_pipe[2], out_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0) throw std::runtime_error("pipe failed");
    const int devnull = ::open("/dev/null", O_WRONLY | O_CLOEXEC);
    const pid_t pid = detail::spawn(argv, in_pipe[0], out_pipe[1], devnull);
    ::close(devnull);
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    if (!input.empty()) {
        [[maybe_unused]] auto n = ::write(in_pipe[1], input.data(), input.size());
    }
    ::close(in_pipe[1]);

    RunResult result;
    detail::read_all(out_pipe[0], result.out);
    ::close(out_pipe[0]);
    int status = 0;
    ::waitpid(pid, &status, 0);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// A background process whose first stdout line is its readiness banner.
class Daemon {
public:
    Daemon(const std::vector<std::string>& argv, std::chrono::milliseconds ready_timeout = std::chrono::seconds(5)) {
        int out_pipe[2];
        if (::pipe2(out_pipe, O_CLOEXEC) != 0) throw std::runtime_error("pipe failed");
        const int devnull = ::open("/dev/null", O_WRONLY | O_CLOEXEC);
        pid_ = detail::spawn(argv, -1, out_pipe[1], devnull);
        ::close(devnull);
        ::close(out_pipe[1]);
        out_ = out_pipe[0];

        const auto deadline = std::chrono::steady_clock::now() + ready_timeout;
        while (banner_.find('\n') == std::string::npos) {
            const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
            pollfd p{out_, POLLIN, 0};
            if (left.count() <= 0 || ::poll(&p, 1, static_cast<int>(left.count())) <= 0) {
                kill(SIGKILL);
                throw std::runtime_error("daemon did not report readiness: " + argv[0]);
            }
            char buf[256];
            const ssize_t n = ::read(out_, buf, sizeof buf);
            if (n <= 0) {
                kill(SIGKILL);
                throw std::runtime_error("daemon exited early: " + argv[0]);
            }
            banner_.append(buf, static_cast<std::size_t>(n));
        }
        banner_.resize(banner_.find('\n'));
    }
    ~Daemon() { kill(SIGKILL); }
    Daemon(const Daemon&) = delete;
    Daemon& operator=(const Daemon&) = delete;

    const std::string& banner() const { return banner_; }

    /// Sends `sig` and reaps the process; returns the raw wait status.
    std::optional<int> kill(int sig) {
        if (pid_ <= 0) return std::nullopt;
        ::kill(pid_, sig);
        int status = 0;
        ::waitpid(pid_, &status, 0);
        pid_ = -1;
        if (out_ >= 0) ::close(out_);
        out_ = -1;
        return status;
    }

private:
    pid_t pid_ = -1;
    int out_ = -1;
    std::string banner_;
};

} // namespace testing
