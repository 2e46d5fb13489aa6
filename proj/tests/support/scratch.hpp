#pragma once

// Scratch directories and in-process servers for the provider and coach tests.

#include "privacycoach/coach/client.hpp"
#include "privacycoach/provider/registry.hpp"
#include "privacycoach/provider/service.hpp"

#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

namespace testing {

class ScratchDir {
public:
    ScratchDir() {
        auto pattern = (std::filesystem::temp_directory_path() / "privacycoach-XXXXXX").string();
        if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
        path_ = pattern;
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

/// A string sink that may be written by the server thread while the test reads it.
class SyncStringBuf : public std::streambuf {
public:
    std::string snapshot() const {
        std::lock_guard lock(mutex_);
        return text_;
    }

protected:
    int_type overflow(int_type ch) override {
        if (ch == traits_type::eof()) return traits_type::not_eof(ch);
        std::lock_guard lock(mutex_);
        text_ += static_cast<char>(ch);
        return ch;
    }
    std::streamsize xsputn(const char* s, std::streamsize n) override {
        std::lock_guard lock(mutex_);
        text_.append(s, static_cast<std::size_t>(n));
        return n;
    }

private:
    mutable std::mutex mutex_;
    std::string text_;
};

/// Registry + HTTP service on 127.0.0.1 with an ephemeral port, served from a thread.
class RunningProvider {
public:
    explicit RunningProvider(const std::filesystem::path& storage,
                             std::string base = std::string(privacycoach::provider::kDefaultBasePath))
        : registry(storage), log(log_stream), service(registry, std::move(base), &log) {
        port = service.bind("127.0.0.1", 0);
        thread_ = std::thread([this] { service.serve(); });
        service.wait_until_ready();
    }
    ~RunningProvider() {
        service.stop();
        if (thread_.joinable()) thread_.join();
    }

    privacycoach::coach::CoachConfig config(const std::filesystem::path& profile = {}) const {
        privacycoach::coach::CoachConfig c;
        c.endpoint = privacycoach::coach::Endpoint{"127.0.0.1", port, service.base_path()};
        c.profile_path = profile;
        c.timeout = std::chrono::seconds(5);
        return c;
    }

    httplib::Client client() const {
        httplib::Client c("127.0.0.1", port);
        c.set_connection_timeout(std::chrono::seconds(5));
        return c;
    }

    std::string url(const std::string& suffix) const { return service.base_path() + suffix; }

    // The server logs after it has sent the response, so wait for `count` lines.
    std::vector<std::string> log_lines(std::size_t count = 0) const {
        const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(2);
        for (;;) {
            std::vector<std::string> lines;
            std::istringstream in(log_buf_.snapshot());
            for (std::string line; std::getline(in, line);) lines.push_back(line);
            if (lines.size() >= count || std::chrono::steady_clock::now() > deadline) return lines;
            std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
    }

private:
    SyncStringBuf log_buf_;
    std::ostream log_stream{&log_buf_};

public:
    privacycoach::provider::PolicyRegistry registry;
    privacycoach::provider::AccessLog log;
    privacycoach::provider::ProviderService service;
    int port = 0;

private:
    std::thread thread_;
};

/// What an HTTP server saw of one request.
struct RecordedRequest {
    std::string method;
    std::string target; // path plus query string, exactly as sent
    std::string path;
    std::size_t query_params = 0;
    std::string body;
    httplib::Headers headers;
};

/// An HTTP server that records every request and answers with a canned
/// provider response: the given policy documents by tag, 404 otherwise.
class RecordingStub {
public:
    explicit RecordingStub(std::map<std::string, std::string> documents, std::string base = "/PrivacyCoachService")
        : documents_(std::move(documents)), base_(std::move(base)) {
        server_.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
            {
                std::lock_guard lock(mutex_);
                requests_.push_back({req.method, req.target, req.path, req.params.size(), req.body, req.headers});
            }
            const std::string prefix = base_ + "/tagpolicy/";
            if (req.path.rfind(prefix, 0) == 0) {
                auto it = documents_.find(req.path.substr(prefix.size()));
                if (it != documents_.end()) {
                    res.status = 200;
                    res.set_content(it->second, "application/xml");
                    return httplib::Server::HandlerResponse::Handled;
                }
            }
            res.status = 404;
            res.set_content("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<error code=\"unknown-tag\"/>\n",
                            "application/xml");
            return httplib::Server::HandlerResponse::Handled;
        });
        port = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~RecordingStub() {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

    privacycoach::coach::CoachConfig config(const std::filesystem::path& profile = {}) const {
        privacycoach::coach::CoachConfig c;
        c.endpoint = privacycoach::coach::Endpoint{"127.0.0.1", port, base_};
        c.profile_path = profile;
        c.timeout = std::chrono::seconds(5);
        return c;
    }

    std::vector<RecordedRequest> requests() const {
        std::lock_guard lock(mutex_);
        return requests_;
    }

    int port = 0;

private:
    std::map<std::string, std::string> documents_;
    std::string base_;
    httplib::Server server_;
    mutable std::mutex mutex_;
    std::vector<RecordedRequest> requests_;
    std::thread thread_;
};

/// A port on which nothing listens (bound, then released).
inline int closed_port() {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    ::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
    socklen_t len = sizeof addr;
    ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
    ::close(fd);
    return ntohs(addr.sin_port);
}

} // namespace testing
