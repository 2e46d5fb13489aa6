#pragma once

#include "privacycoach/provider/registry.hpp"

#include <chrono>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>

namespace privacycoach::provider {

inline constexpr std::string_view kDefaultBasePath = "/PrivacyCoachService";

/// One line per request: `ISO8601-UTC method tagid status`. The tag id
/// field is "-" when the request names no valid tag. Nothing else about the
/// requester is ever written.
class AccessLog {
public:
    explicit AccessLog(std::ostream& sink) : sink_(&sink) {}

    void record(std::string_view method, std::string_view tag, int status);

    static std::string format_line(std::chrono::system_clock::time_point when, std::string_view method,
                                   std::string_view tag, int status);

private:
    std::mutex mutex_;
    std::ostream* sink_;
};

/**
 * HTTP front end of the Policy Provider.
 *
 *   GET    {base}/tagpolicy/{tagid}  200 policy | 404 unknown-tag | 400 invalid-tag-id
 *   PUT    {base}/tagpolicy/{tagid}  201 created | 200 replaced | 400 validation report
 *   DELETE {base}/tagpolicy/{tagid}  204 | 404
 *   GET    {base}/tags               200 <tags><tag id="..."/>...</tags>
 *
 * GET responses carry a permissive Access-Control-Allow-Origin header.
 */
class ProviderService {
public:
    ProviderService(PolicyRegistry& registry, std::string base_path, AccessLog* log = nullptr);
    ~ProviderService();

    ProviderService(const ProviderService&) = delete;
    ProviderService& operator=(const ProviderService&) = delete;

    /// Binds the listening socket; port 0 picks a free one. Returns the bound
    /// port. Throws std::runtime_error if binding fails.
    int bind(const std::string& host, int port);

    /// Serves until stop() is called. Requires a prior bind().
    void serve();

    void stop();
    /// Blocks until the server is accepting connections.
    void wait_until_ready() const;

    const std::string& base_path() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Normalizes a configured base path: leading slash, no trailing slash; "/" becomes "".
std::string normalize_base_path(std::string_view base);

} // namespace privacycoach::provider
