#include "privacycoach/coach/client.hpp"

#include "privacycoach/xml_codec.hpp"

#include "../core/xml_tree.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>

namespace privacycoach::coach {

namespace {

httplib::Client make_client(const CoachConfig& config) {
    httplib::Client client(config.endpoint.host, config.endpoint.port);
    client.set_connection_timeout(config.timeout);
    client.set_read_timeout(config.timeout);
    client.set_write_timeout(config.timeout);
    client.set_keep_alive(false);
    return client;
}

std::string policy_path(const CoachConfig& config, const TagId& tag) {
    return config.endpoint.base_path + "/tagpolicy/" + tag.str();
}

TransportError transport_error(const httplib::Result& result, std::chrono::steady_clock::duration elapsed,
                               std::chrono::milliseconds timeout) {
    const auto error = result.error();
    const auto text = httplib::to_string(error);
    if (error == httplib::Error::ConnectionTimeout || elapsed >= timeout)
        return {TransportError::Kind::timeout, "no response within " + std::to_string(timeout.count()) + " ms"};
    if (error == httplib::Error::Connection) return {TransportError::Kind::connection, "cannot connect: " + text};
    return {TransportError::Kind::other, text};
}

AdminResponse admin_response(const httplib::Result& result) {
    AdminResponse r;
    if (!result) {
        r.error = httplib::to_string(result.error());
        return r;
    }
    r.status = result->status;
    r.body = result->body;
    return r;
}

bool is_host_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '-';
}

} // namespace

Endpoint Endpoint::parse(std::string_view url) {
    constexpr std::string_view scheme = "http://";
    if (url.substr(0, scheme.size()) != scheme)
        throw std::invalid_argument("endpoint must be an http:// URL: '" + std::string(url) + "'");
    auto rest = url.substr(scheme.size());

    const auto slash = rest.find('/');
    auto authority = rest.substr(0, slash);
    const auto path = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash);

    Endpoint e;
    const auto colon = authority.find(':');
    e.host = std::string(authority.substr(0, colon));
    if (e.host.empty() || !std::all_of(e.host.begin(), e.host.end(), is_host_char))
        throw std::invalid_argument("endpoint has an invalid host: '" + std::string(url) + "'");
    if (colon != std::string_view::npos) {
        const auto port = authority.substr(colon + 1);
        if (port.empty() || port.size() > 5 ||
            !std::all_of(port.begin(), port.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("endpoint has an invalid port: '" + std::string(url) + "'");
        e.port = std::stoi(std::string(port));
        if (e.port < 1 || e.port > 65535)
            throw std::invalid_argument("endpoint port out of range: '" + std::string(url) + "'");
    }
    if (path.find_first_of("?#") != std::string_view::npos)
        throw std::invalid_argument("endpoint must not carry a query or fragment");

    e.base_path = std::string(path);
    while (!e.base_path.empty() && e.base_path.back() == '/') e.base_path.pop_back();
    return e;
}

std::string Endpoint::url() const {
    return "http://" + host + ":" + std::to_string(port) + base_path;
}

void CoachConfig::validate() const {
    if (endpoint.host.empty()) throw std::invalid_argument("endpoint host is empty");
    if (timeout.count() <= 0) throw std::invalid_argument("timeout must be positive");
}

FetchOutcome fetch_policy(const CoachConfig& config, const TagId& tag) {
    auto client = make_client(config);
    const auto start = std::chrono::steady_clock::now();
    auto result = client.Get(policy_path(config, tag));
    if (!result) return transport_error(result, std::chrono::steady_clock::now() - start, config.timeout);

    if (result->status == 200) {
        try {
            auto policy = policy_from_xml(result->body);
            if (policy.tag() != tag)
                return ProtocolError{"provider answered with the policy of tag " + policy.tag().str()};
            return policy;
        } catch (const ValidationError& e) {
            return ProtocolError{std::string("provider sent an invalid policy: ") + e.what()};
        }
    }
    if (result->status == 404) {
        try {
            const auto root = detail::parse_xml_tree(result->body);
            const auto* code = root.attribute("code");
            if (root.name == "error" && code && *code == "unknown-tag") return UnknownTag{};
        } catch (const ValidationError&) {
        }
        return ProtocolError{"provider answered 404 without an unknown-tag error"};
    }
    return ProtocolError{"provider answered with status " + std::to_string(result->status)};
}

AdminResponse put_policy(const CoachConfig& config, const TagId& tag, std::string_view document) {
    auto client = make_client(config);
    return admin_response(client.Put(policy_path(config, tag), std::string(document), "application/xml"));
}

AdminResponse delete_policy(const CoachConfig& config, const TagId& tag) {
    auto client = make_client(config);
    return admin_response(client.Delete(policy_path(config, tag)));
}

AdminResponse get_tags(const CoachConfig& config) {
    auto client = make_client(config);
    return admin_response(client.Get(config.endpoint.base_path + "/tags"));
}

std::vector<TagId> parse_tag_list(std::string_view document) {
    const auto root = detail::parse_xml_tree(document);
    auto fail = [](std::string message) {
        throw ValidationError(ValidationReport{{Issue{IssueCode::unknown_element, "tags", std::move(message)}}});
    };
    if (root.name != "tags") fail("expected <tags>");
    std::vector<TagId> tags;
    for (const auto& child : root.children) {
        const auto* id = child.attribute("id");
        if (child.name != "tag" || id == nullptr || TagId::check(*id)) fail("malformed <tag> entry");
        tags.push_back(TagId::parse(*id));
    }
    return tags;
}

} // namespace privacycoach::coach
