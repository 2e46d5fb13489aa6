#pragma once

#include "privacycoach/policy.hpp"
#include "privacycoach/tag_id.hpp"

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace privacycoach::coach {

/// Where the Policy Provider lives: http://host[:port][/base-path].
struct Endpoint {
    std::string host;
    int port = 80;
    std::string base_path; // normalized: leading slash, no trailing slash, may be empty

    /// Throws std::invalid_argument for anything but a well-formed http URL.
    static Endpoint parse(std::string_view url);

    std::string url() const;
};

struct CoachConfig {
    Endpoint endpoint;
    std::filesystem::path profile_path;
    std::chrono::milliseconds timeout{std::chrono::seconds(10)};

    /// Throws std::invalid_argument unless the timeout is positive and the
    /// endpoint names a host.
    void validate() const;
};

struct UnknownTag {};

struct TransportError {
    enum class Kind { connection, timeout, other };
    Kind kind;
    std::string message;
};

struct ProtocolError {
    std::string message;
};

using FetchOutcome = std::variant<PrivacyPolicy, UnknownTag, TransportError, ProtocolError>;

/// `GET {base}/tagpolicy/{tag}`. The request carries nothing but the tag
/// number: no body, no query, no cookies. A returned policy has passed the
/// fail-closed codec and names the requested tag. No retries.
FetchOutcome fetch_policy(const CoachConfig& config, const TagId& tag);

// ── Registrar side of the provider protocol ─────────────────────────────────

struct AdminResponse {
    int status = 0;       // 0 when no response was received
    std::string body;
    std::string error;    // transport failure description
};

AdminResponse put_policy(const CoachConfig& config, const TagId& tag, std::string_view document);
AdminResponse delete_policy(const CoachConfig& config, const TagId& tag);
AdminResponse get_tags(const CoachConfig& config);

/// Parses a `<tags>` listing. Throws ValidationError.
std::vector<TagId> parse_tag_list(std::string_view document);

} // namespace privacycoach::coach
